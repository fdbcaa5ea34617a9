#include "tensalg/space.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "tensalg/error.hpp"

namespace tensalg {

SpaceSpec make_space(std::size_t dim_u, std::size_t dim_v, GramMatrix gram, bool self_dual) {
  if (dim_u == 0 || dim_v == 0) {
    throw Error(ErrorKind::kDimension, "space dimensions must be positive");
  }
  if (self_dual && dim_u != dim_v) {
    throw Error(ErrorKind::kDimension, "self-dual space needs dim_u == dim_v");
  }
  if (gram.size() != dim_u) {
    throw Error(ErrorKind::kDimension, "gram has " + std::to_string(gram.size()) +
                                           " rows, expected " + std::to_string(dim_u));
  }
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (gram[i].size() != dim_v) {
      throw Error(ErrorKind::kDimension, "gram row " + std::to_string(i + 1) + " has " +
                                             std::to_string(gram[i].size()) +
                                             " entries, expected " + std::to_string(dim_v));
    }
  }
  return SpaceSpec(dim_u, dim_v, std::move(gram), self_dual);
}

const Scalar& pair_vectors(const SpaceSpec& spec, std::size_t i, std::size_t j) {
  if (i < 1 || i > spec.dim_u() || j < 1 || j > spec.dim_v()) {
    throw Error(ErrorKind::kIndexRange, "pairing index (" + std::to_string(i) + "," +
                                            std::to_string(j) + ") out of range");
  }
  return spec.entry(i, j);
}

SpaceSpec identity_space(std::size_t dim, bool self_dual) {
  GramMatrix gram(dim, std::vector<Scalar>(dim, Scalar(0)));
  for (std::size_t i = 0; i < dim; ++i) gram[i][i] = 1;
  return make_space(dim, dim, std::move(gram), self_dual);
}

namespace {

[[noreturn]] void fail_at(int line, const std::string& message) {
  throw Error(ErrorKind::kParse, "space file line " + std::to_string(line) + ": " + message);
}

std::size_t parse_dimension(std::istringstream& fields, int line) {
  std::string token;
  if (!(fields >> token)) fail_at(line, "missing dimension");
  std::size_t pos = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(token, &pos);
  } catch (const std::exception&) {
    fail_at(line, "bad dimension '" + token + "'");
  }
  if (pos != token.size() || value == 0) fail_at(line, "bad dimension '" + token + "'");
  return value;
}

}  // namespace

SpaceSpec parse_space(std::istream& in) {
  std::optional<std::size_t> dim_u;
  std::optional<std::size_t> dim_v;
  std::optional<bool> self_dual;
  GramMatrix gram;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream fields(raw);
    std::string key;
    if (!(fields >> key) || key.front() == '#') continue;

    if (key == "dim_u") {
      if (dim_u) fail_at(line, "duplicate dim_u");
      dim_u = parse_dimension(fields, line);
    } else if (key == "dim_v") {
      if (dim_v) fail_at(line, "duplicate dim_v");
      dim_v = parse_dimension(fields, line);
    } else if (key == "self_dual") {
      if (self_dual) fail_at(line, "duplicate self_dual");
      std::string flag;
      fields >> flag;
      if (flag == "true") {
        self_dual = true;
      } else if (flag == "false") {
        self_dual = false;
      } else {
        fail_at(line, "self_dual must be true or false");
      }
    } else if (key == "gram") {
      std::vector<Scalar> row;
      std::string entry;
      while (fields >> entry) {
        try {
          row.push_back(parse_scalar(entry));
        } catch (const Error& e) {
          fail_at(line, e.what());
        }
      }
      gram.push_back(std::move(row));
      continue;
    } else {
      fail_at(line, "unknown key '" + key + "'");
    }

    std::string extra;
    if (fields >> extra) fail_at(line, "unexpected trailing token '" + extra + "'");
  }

  if (!dim_u || !dim_v || !self_dual) {
    throw Error(ErrorKind::kParse, "space file needs dim_u, dim_v and self_dual");
  }
  return make_space(*dim_u, *dim_v, std::move(gram), *self_dual);
}

SpaceSpec load_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open space file '" + path + "'");
  return parse_space(in);
}

std::string format_space(const SpaceSpec& spec) {
  std::ostringstream out;
  out << "dim_u " << spec.dim_u() << "\n";
  out << "dim_v " << spec.dim_v() << "\n";
  out << "self_dual " << (spec.self_dual() ? "true" : "false") << "\n";
  for (const auto& row : spec.gram()) {
    out << "gram";
    for (const auto& entry : row) out << ' ' << to_string(entry);
    out << "\n";
  }
  return out.str();
}

}  // namespace tensalg
