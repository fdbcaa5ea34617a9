#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tensalg/cli.hpp"

namespace golden {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

inline Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = tensalg::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

inline std::string space(const std::string& name) {
  return std::string(TEST_DATA_DIR) + "/spaces/" + name;
}

// Golden file layout: "# key: value" header lines, then the expected stdout.
//   # space: identity2.space
//   # args: eval --mode sym
//   # expr: e1 o e2          (optional trailing positional)
//   # exit: 0                (optional, default 0)
struct Golden {
  std::vector<std::string> args;
  std::string expr;
  int exit = 0;
  std::string expected;
};

inline Golden load(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  Golden g;
  std::string line, space_name;
  bool has_expr = false;
  std::ostringstream body;
  bool header = true;
  while (std::getline(in, line)) {
    if (header && line.rfind("# ", 0) == 0) {
      const auto colon = line.find(": ");
      if (colon == std::string::npos) throw std::runtime_error("bad header in " + path.string());
      const std::string key = line.substr(2, colon - 2), value = line.substr(colon + 2);
      if (key == "space") {
        space_name = value;
      } else if (key == "args") {
        std::istringstream words(value);
        for (std::string w; words >> w;) g.args.push_back(w);
      } else if (key == "expr") {
        g.expr = value;
        has_expr = true;
      } else if (key == "exit") {
        g.exit = std::stoi(value);
      }
      continue;
    }
    header = false;
    body << line << '\n';
  }
  g.args.push_back("--space");
  g.args.push_back(space(space_name));
  if (has_expr) g.args.push_back(g.expr);
  g.expected = body.str();
  return g;
}

inline std::vector<fs::path> files() {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(fs::path(TEST_DATA_DIR) / "golden")) {
    if (entry.path().extension() == ".txt") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace golden
