#include <doctest.h>

#include "support.hpp"
#include "tensalg/checks.hpp"
#include "tensalg/error.hpp"
#include "tensalg/laplace.hpp"
#include "tensalg/products.hpp"
#include "tensalg/symmetry.hpp"

using namespace testing;

namespace {

// sum (a1 | b1) a2 b2 with per-side coproducts from the oracle and the
// recursive pairing.
JointElement square_oracle(const JointElement& a, const JointElement& b, const SpaceSpec& spec) {
  auto legs = [](const JointWord& w) {
    std::vector<std::pair<std::array<JointWord, 2>, Scalar>> out;
    const TensorSquare du = coproduct_oracle(Element::word(Side::kU, w.u));
    const TensorSquare dv = coproduct_oracle(Element::word(Side::kV, w.v));
    for (const auto& [lu, cu] : du.terms)
      for (const auto& [lv, cv] : dv.terms)
        out.push_back({{JointWord{lu[0], lv[0]}, JointWord{lu[1], lv[1]}}, cu * cv});
    return out;
  };
  JointElement out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      for (const auto& [la, ka] : legs(wa)) {
        for (const auto& [lb, kb] : legs(wb)) {
          const Scalar p = laplace_recursive(JointElement::word(la[0].u, la[0].v),
                                             JointElement::word(lb[0].u, lb[0].v), spec);
          out.add(concat(la[1], lb[1]), ca * cb * ka * kb * p);
        }
      }
    }
  }
  return out;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kType;
}

const Element e1 = U({{{1}, 1}});
const Element e2 = U({{{2}, 1}});

}  // namespace

TEST_CASE("square product examples") {
  const SpaceSpec r = rational_space();
  CHECK(square(J({{{1}, {}, 1}}), J({{{}, {1}, 1}}), r) ==
        J({{{1}, {1}, 1}, {{}, {}, r.entry(1, 1)}}));
  const JointElement a = J({{{1, 2}, {3}, 2}, {{}, {1}, q(-1, 2)}});
  CHECK(square(JointElement::unit(), a, r) == a);
  CHECK(square(a, JointElement::unit(), r) == a);
  CHECK(square(J({{{1}, {}, 1}}), J({{{2}, {}, 1}}), r) == J({{{1, 2}, {}, 1}}));
}

TEST_CASE("square product agrees with the oracle") {
  for (const SpaceSpec& spec : {rational_space(), skew_self_dual()}) {
    Sampler rng(17);
    for (int i = 0; i < 25; ++i) {
      const JointElement a = rng.joint(spec.dim_u(), spec.dim_v(), 2, 2);
      const JointElement b = rng.joint(spec.dim_u(), spec.dim_v(), 2, 2);
      CHECK(square(a, b, spec) == square_oracle(a, b, spec));
    }
  }
}

TEST_CASE("square product on T(U)") {
  const SpaceSpec id = identity_space(2);
  CHECK(square(e1, e2, id) == U({{{1, 2}, 1}}));
  CHECK(square(e1, e1, id) == U({{{1, 1}, 1}, {{}, 1}}));
  const SpaceSpec s = skew_self_dual();
  CHECK(square(e1, e2, s) == U({{{1, 2}, 1}, {{}, s.entry(1, 2)}}));
  CHECK(kind_of([] { square(e1, e2, rational_space()); }) == ErrorKind::kSelfDualRequired);
}

TEST_CASE("symmetric circle examples") {
  const SpaceSpec id = identity_space(2);
  CHECK(circle_sym(e1, e2, id) == symmetrize(U({{{1, 2}, 1}})));
  CHECK(circle_sym(e1, e1, id) == U({{{1, 1}, 1}, {{}, 1}}));
  CHECK(circle_sym(Element::unit(Side::kU), symmetrize(U({{{1, 2}, 3}})), id) ==
        symmetrize(U({{{1, 2}, 3}})));
  CHECK(kind_of([&] { circle_sym(U({{{1, 2}, 1}}), e1, id); }) == ErrorKind::kNotProjected);
  CHECK(kind_of([] { circle_sym(e1, e1, rational_space()); }) == ErrorKind::kSelfDualRequired);
}

TEST_CASE("circle powers follow the binomial formula") {
  // x^m o x^n = sum_k k! C(m,k) C(n,k) <x,x>^k x^(m+n-2k).
  const SpaceSpec s = skew_self_dual();
  Sampler rng(2);
  for (int trial = 0; trial < 4; ++trial) {
    const Element x = rng.vector(Side::kU, 2);
    const Scalar xx = self_dual_pairing(x, x, s);
    for (unsigned m = 0; m <= 3; ++m) {
      for (unsigned n = 0; n <= 3; ++n) {
        Element expected(Side::kU);
        Scalar xxk = 1;
        for (unsigned k = 0; k <= std::min(m, n); ++k) {
          expected += power(x, m + n - 2 * k) * (factorial(k) * binomial(m, k) * binomial(n, k) * xxk);
          xxk *= xx;
        }
        CHECK(circle_sym(power(x, m), power(x, n), s) == expected);
      }
    }
  }
}

TEST_CASE("antisymmetric circle examples") {
  const SpaceSpec s = skew_self_dual();
  Sampler rng(6);
  for (int i = 0; i < 10; ++i) {
    const Element x = rng.vector(Side::kU, 2), y = rng.vector(Side::kU, 2);
    CHECK(circle_antisym(x, y, s) ==
          Element::unit(Side::kU, self_dual_pairing(x, y, s)) + wedge_product(x, y));
  }
  const SpaceSpec id = identity_space(2);
  const Element w = wedge_product(e1, e2);
  CHECK(circle_antisym(w, w, id) == asymm_oracle(square(w, w, id)));
  CHECK(kind_of([&] { circle_antisym(U({{{1, 2}, 1}}), e1, id); }) == ErrorKind::kNotProjected);
}

TEST_CASE("antisymmetric circle is not associative") {
  // (e1 o e1) o e2 = 1 o e2 = e2, but e1 o (e1 o e2) = e1 o (e1^e2) = 0:
  // e1^e2 is primitive for the unshuffle coproduct.
  const SpaceSpec id = identity_space(2);
  const Element left = circle_antisym(circle_antisym(e1, e1, id), e2, id);
  const Element right = circle_antisym(e1, circle_antisym(e1, e2, id), id);
  CHECK(left == e2);
  CHECK(right.is_zero());
}

TEST_CASE("phi examples") {
  const SpaceSpec id = identity_space(2);
  const SpaceSpec s = skew_self_dual();
  const Element one = Element::unit(Side::kU);
  CHECK(phi_tensor(e1, id) == e1);
  CHECK(phi_tensor(U({{{1, 2}, 1}}), s) == U({{{1, 2}, 1}, {{}, s.entry(1, 2)}}));
  CHECK(phi_tensor(one, id) == one);
  CHECK(phi_sym(power(e1, 2), id) == U({{{1, 1}, 1}, {{}, 1}}));
  CHECK(phi_sym(one, id) == one);
  CHECK(phi_antisym(wedge_product(e1, e2), s) == circle_antisym(e1, e2, s));
  CHECK(phi_antisym(wedge_product(e1, e2), s) ==
        Element::unit(Side::kU, s.entry(1, 2)) + wedge_product(e1, e2));
  CHECK(kind_of([&] { phi_sym(U({{{1, 2}, 1}}), id); }) == ErrorKind::kNotProjected);
  CHECK(kind_of([&] { phi_antisym(U({{{1, 2}, 1}}), id); }) == ErrorKind::kNotProjected);
}

TEST_CASE("phi_sym on powers is the circle power") {
  const SpaceSpec s = skew_self_dual();
  Sampler rng(13);
  for (int i = 0; i < 5; ++i) {
    const Element x = rng.vector(Side::kU, 2);
    Element expected = Element::unit(Side::kU);
    for (unsigned t = 0; t <= 4; ++t) {
      CHECK(phi_sym(power(x, t), s) == expected);
      expected = circle_sym(expected, x, s);
    }
  }
}

TEST_CASE("phi matrix examples") {
  const PhiMatrix t = phi_matrix(identity_space(1), PhiMode::kTensor, 2);
  REQUIRE(t.basis.size() == 3);
  CHECK(t.basis[2] == U({{{1, 1}, 1}}));
  CHECK(t.entries[0][2] == 1);
  CHECK(t.entries[1][2] == 0);
  CHECK(t.entries[2][2] == 1);
  CHECK(t.unit_triangular());

  const PhiMatrix a = phi_matrix(identity_space(2), PhiMode::kAntisymmetric, 2);
  REQUIRE(a.basis.size() == 4);
  CHECK(a.basis[3] == wedge_product(e1, e2));
  CHECK(a.unit_triangular());

  for (PhiMode mode : {PhiMode::kTensor, PhiMode::kSymmetric, PhiMode::kAntisymmetric}) {
    const PhiMatrix m = phi_matrix(skew_self_dual(), mode, 0);
    REQUIRE(m.entries.size() == 1);
    CHECK(m.entries[0][0] == 1);
  }
  CHECK(kind_of([] { phi_matrix(identity_space(2), PhiMode::kTensor, 9); }) ==
        ErrorKind::kCapExceeded);
}

TEST_CASE("phi matrix text") {
  const PhiMatrix m = phi_matrix(identity_space(2), PhiMode::kAntisymmetric, 2);
  CHECK(format_phi_matrix(m) ==
        "mode: asym\n"
        "max_grade: 2\n"
        "basis: 1 e1 e2 e1^e2\n"
        "row 1: 1 0 0 0\n"
        "row 2: 0 1 0 0\n"
        "row 3: 0 0 1 0\n"
        "row 4: 0 0 0 1\n"
        "triangular: yes\n");
}

TEST_CASE("canonical bases and coordinates") {
  CHECK(canonical_basis(2, PhiMode::kTensor, 2).size() == 7);
  CHECK(canonical_basis(2, PhiMode::kSymmetric, 2).size() == 6);
  CHECK(canonical_basis(3, PhiMode::kAntisymmetric, 3).size() == 8);
  CHECK(canonical_basis(3, PhiMode::kSymmetric, 3).size() == 20);

  Sampler rng(30);
  for (PhiMode mode : {PhiMode::kTensor, PhiMode::kSymmetric, PhiMode::kAntisymmetric}) {
    const auto basis = canonical_basis(2, mode, 3);
    for (int i = 0; i < 10; ++i) {
      Element a(Side::kU);
      std::vector<Scalar> coords(basis.size());
      for (std::size_t j = 0; j < basis.size(); ++j) {
        coords[j] = rng.below(2) ? rng.coefficient() : Scalar(0);
        a += basis[j] * coords[j];
      }
      CHECK(basis_coordinates(a, mode, basis) == coords);
    }
  }
  CHECK_THROWS_AS(basis_coordinates(U({{{1, 2}, 1}}), PhiMode::kSymmetric,
                                    canonical_basis(2, PhiMode::kSymmetric, 2)),
                  Error);
}

TEST_CASE("phi mode names") {
  CHECK(parse_phi_mode("tensor") == PhiMode::kTensor);
  CHECK(parse_phi_mode("sym") == PhiMode::kSymmetric);
  CHECK(parse_phi_mode("asym") == PhiMode::kAntisymmetric);
  CHECK_THROWS_AS(parse_phi_mode("wedge"), Error);
  CHECK(std::string(to_string(PhiMode::kSymmetric)) == "sym");
}
