// One line per acceptance criterion, exact rational comparisons throughout.
// Exit status is 0 only when every criterion passes.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "tensalg/checks.hpp"
#include "tensalg/laplace.hpp"
#include "tensalg/products.hpp"
#include "tensalg/space.hpp"
#include "tensalg/symmetry.hpp"

using namespace tensalg;

namespace {

struct Criterion {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
};

std::vector<SpaceSpec> default_spaces() {
  return {load_space(golden::space("identity2.space")),
          load_space(golden::space("rational2x3.space"))};
}

std::string space_label(const SpaceSpec& s) {
  return s.self_dual() ? "identity2" : "rational2x3";
}

void run_prefix(Criterion& c, const std::string& prefix, const CheckOptions& options) {
  for (const SpaceSpec& spec : default_spaces()) {
    std::size_t ran = 0;
    for (const auto& name : suite_names()) {
      if (name.rfind(prefix, 0) != 0) continue;
      const SuiteResult r = run_suite(name, spec, options);
      if (r.status == SuiteStatus::kSkip) continue;
      ++ran;
      if (r.status == SuiteStatus::kFail) {
        c.require(false, name + " on " + space_label(spec) + " (seed=" + std::to_string(r.seed) +
                             ", trial=" + std::to_string(r.failed_trial) + "): " +
                             r.counterexample);
      }
    }
    c.notes.push_back(std::to_string(ran) + " " + prefix + "* suites ran on " + space_label(spec));
  }
}

CheckOptions defaults() {
  CheckOptions o;
  o.seed = 42;
  o.trials = 100;
  o.max_grade = 5;
  return o;
}

Criterion hopf() {
  Criterion c;
  run_prefix(c, "hopf.", defaults());
  return c;
}

Criterion symmetry() {
  Criterion c;
  run_prefix(c, "symmetry.", defaults());
  return c;
}

Criterion laplace() {
  Criterion c;
  CheckOptions o = defaults();
  o.max_grade = 4;
  o.suite_trials["laplace.oracle"] = 200;
  run_prefix(c, "laplace.", o);

  for (const SpaceSpec& spec : default_spaces()) {
    const JointElement one = JointElement::unit();
    c.require(laplace_closed(one, one, spec) == 1, "(1|1) = 1");
    Sampler rng(42);
    for (int i = 0; i < 20; ++i) {
      const Element x = rng.vector(Side::kU, spec.dim_u());
      const Element y = rng.vector(Side::kV, spec.dim_v());
      const Scalar xy = duality(x, y, spec);
      const Scalar got = laplace_closed(embed(power(x, 2)), embed(power(y, 2)), spec);
      c.require(got == 2 * xy * xy, "(x^2|y^2) = 2<x,y>^2 for x = " + to_string(x));
      c.require(laplace_recursive(embed(power(x, 2)), embed(power(y, 2)), spec) == got,
                "recursive spot value");
    }
  }
  return c;
}

Criterion square_suite() {
  Criterion c;
  run_prefix(c, "square.", defaults());
  return c;
}

// x^y o z^w against the expansion printed with all-positive signs.
void four_vector_report(Criterion& c) {
  const SpaceSpec spec = identity_space(4);
  auto vec = [](std::initializer_list<std::pair<Letter, long>> terms) {
    Element out(Side::kU);
    for (auto [l, k] : terms) out.add(Word{l}, Scalar(k));
    return out;
  };
  const Element x = vec({{1, 1}, {2, 1}});
  const Element y = vec({{2, 1}, {3, 1}});
  const Element z = vec({{1, 1}, {3, 1}, {4, 1}});
  const Element w = vec({{2, 1}, {4, -1}});
  auto p = [&](const Element& a, const Element& b) { return self_dual_pairing(a, b, spec); };
  auto wedge = [](const Element& a, const Element& b) { return wedge_product(a, b); };

  const Element xy = wedge(x, y), zw = wedge(z, w);
  const Element oracle = antisymmetrize(square(xy, zw, spec));
  c.require(circle_antisym(xy, zw, spec) == oracle, "four-vector circle equals ASymm(u□v)");

  const Element top = wedge(xy, zw);
  const Element printed = wedge(y, w) * p(x, z) + wedge(y, z) * p(x, w) + wedge(x, w) * p(y, z) +
                          wedge(x, z) * p(y, w) + top;
  // Signs an antisymmetric Sweedler expansion would carry.
  const Element signed_form = wedge(y, w) * p(x, z) * -1 + wedge(y, z) * p(x, w) +
                              wedge(x, w) * p(y, z) + wedge(x, z) * p(y, w) * -1 + top;

  std::string grades;
  for (const auto& [g, part] : grade_parts(oracle)) grades += (grades.empty() ? "" : ",") + std::to_string(g);
  c.notes.push_back("four-vector expansion, identity Gram on dim 4: oracle has grades {" + grades +
                    "}");
  c.notes.push_back(std::string("four-vector expansion as printed (all + signs) matches oracle: ") +
                    (printed == oracle ? "yes" : "no"));
  c.notes.push_back(std::string("four-vector expansion with alternating signs matches oracle: ") +
                    (signed_form == oracle ? "yes" : "no"));
  c.notes.push_back("oracle - top wedge = " + to_string(oracle - top));
}

Criterion circle() {
  Criterion c;
  run_prefix(c, "circle.", defaults());
  four_vector_report(c);
  return c;
}

// Exact inverse by Gauss-Jordan; empty on a singular matrix.
std::vector<std::vector<Scalar>> invert(std::vector<std::vector<Scalar>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m[pivot][col])) ++pivot;
    if (pivot == n) return {};
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Scalar d = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(m[r][col])) continue;
      const Scalar f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Element apply_phi(const Element& a, PhiMode mode, const SpaceSpec& spec) {
  switch (mode) {
    case PhiMode::kTensor: return phi_tensor(a, spec);
    case PhiMode::kSymmetric: return phi_sym(a, spec);
    case PhiMode::kAntisymmetric: return phi_antisym(a, spec);
  }
  return a;
}

Criterion phi() {
  Criterion c;
  run_prefix(c, "phi.", defaults());

  const GramMatrix skew = {{Scalar(2), Scalar(1, 3), Scalar(0)},
                           {Scalar(1, 3), Scalar(-1), Scalar(1, 2)},
                           {Scalar(0), Scalar(1, 2), Scalar(3)}};
  std::size_t matrices = 0, round_trips = 0;
  Sampler rng(42);
  for (std::size_t dim = 1; dim <= 3; ++dim) {
    GramMatrix g(dim, std::vector<Scalar>(dim));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) g[i][j] = skew[i][j];
    for (const SpaceSpec& spec : {identity_space(dim), make_space(dim, dim, g, true)}) {
      for (PhiMode mode : {PhiMode::kTensor, PhiMode::kSymmetric, PhiMode::kAntisymmetric}) {
        for (std::size_t grade = 0; grade <= 4; ++grade) {
          const PhiMatrix m = phi_matrix(spec, mode, grade);
          ++matrices;
          const std::string tag = std::string(to_string(mode)) + " dim " + std::to_string(dim) +
                                  " grade " + std::to_string(grade);
          c.require(m.unit_triangular(), "unit triangular: " + tag);
          if (grade != 4) continue;
          const auto inv = invert(m.entries);
          c.require(!inv.empty(), "invertible: " + tag);
          if (inv.empty()) continue;
          for (int trial = 0; trial < 5; ++trial) {
            std::vector<Scalar> coords(m.basis.size());
            Element a(Side::kU);
            for (std::size_t j = 0; j < coords.size(); ++j) {
              if (rng.below(3) == 0) coords[j] = rng.coefficient();
              a += m.basis[j] * coords[j];
            }
            const std::vector<Scalar> image =
                basis_coordinates(apply_phi(a, mode, spec), mode, m.basis);
            std::vector<Scalar> back(coords.size());
            for (std::size_t i = 0; i < coords.size(); ++i)
              for (std::size_t j = 0; j < coords.size(); ++j) back[i] += inv[i][j] * image[j];
            c.require(back == coords, "round trip: " + tag + " on " + to_string(a));
            ++round_trips;
          }
        }
      }
    }
  }
  c.notes.push_back(std::to_string(matrices) + " phi matrices checked, " +
                    std::to_string(round_trips) + " inverse round trips");
  return c;
}

Criterion cli() {
  Criterion c;
  std::size_t count = 0;
  for (const auto& path : golden::files()) {
    const golden::Golden g = golden::load(path);
    const golden::Run r = golden::run(g.args);
    c.require(r.code == g.exit && r.out == g.expected, "golden " + path.filename().string());
    ++count;
  }
  c.notes.push_back(std::to_string(count) + " golden files compared");

  const std::string id = golden::space("identity2.space");
  const golden::Run parse = golden::run({"eval", "--space", id, "e1 @ @ e2"});
  c.require(parse.code == 2 && !parse.err.empty(), "parse error exits 2");
  const golden::Run type = golden::run({"eval", "--space", id, "dual(f1, e1)"});
  c.require(type.code == 2 && !type.err.empty(), "type error exits 2");

  for (const char* name : {"identity2.space", "rational2x3.space"}) {
    const std::vector<std::string> args = {"check", "--space", golden::space(name), "--seed", "42"};
    const golden::Run a = golden::run(args), b = golden::run(args);
    c.require(a.out == b.out && a.code == b.code, std::string("check report deterministic on ") + name);
  }
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* title;
    Criterion (*run)();
  };
  const Entry entries[] = {
      {"Hopf axioms on T(U) and the joint algebra", hopf},
      {"symmetric and antisymmetric projections", symmetry},
      {"Laplace pairing", laplace},
      {"square product", square_suite},
      {"circle products", circle},
      {"phi maps", phi},
      {"command line", cli},
  };
  bool all = true;
  int index = 1;
  for (const auto& e : entries) {
    Criterion c;
    try {
      c = e.run();
    } catch (const std::exception& ex) {
      c.require(false, std::string("exception: ") + ex.what());
    }
    all = all && c.pass;
    std::printf("criterion %d: %s  %s\n", index++, c.pass ? "PASS" : "FAIL", e.title);
    for (const auto& n : c.notes) std::printf("    %s\n", n.c_str());
  }
  std::fflush(stdout);
  return all ? 0 : 1;
}
