#include "tensalg/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <sstream>

#include "tensalg/error.hpp"
#include "tensalg/expr.hpp"
#include "tensalg/hopf.hpp"
#include "tensalg/laplace.hpp"
#include "tensalg/products.hpp"
#include "tensalg/symmetry.hpp"

namespace tensalg {

// ---------------------------------------------------------------- sampling

Scalar Sampler::coefficient() {
  static const Scalar pool[] = {Scalar(-2), Scalar(-1), Scalar(-1, 2),
                                Scalar(1, 2), Scalar(1),  Scalar(2)};
  return pool[below(6)];
}

Word Sampler::word(std::size_t dim, std::size_t length) {
  Word w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(static_cast<Letter>(1 + below(dim)));
  return w;
}

Element Sampler::element(Side side, std::size_t dim, std::size_t max_grade) {
  Element out(side);
  const std::size_t terms = between(1, 4);
  for (std::size_t t = 0; t < terms; ++t) {
    const Word w = word(dim, between(0, max_grade));
    out.add(w, coefficient());
  }
  return out;
}

Element Sampler::homogeneous(Side side, std::size_t dim, std::size_t grade) {
  Element out(side);
  const std::size_t terms = between(1, 4);
  for (std::size_t t = 0; t < terms; ++t) out.add(word(dim, grade), coefficient());
  return out;
}

Element Sampler::vector(Side side, std::size_t dim) { return homogeneous(side, dim, 1); }

JointElement Sampler::joint(std::size_t dim_u, std::size_t dim_v, std::size_t max_u,
                            std::size_t max_v, std::size_t max_total) {
  JointElement out;
  const std::size_t terms = between(1, 4);
  for (std::size_t t = 0; t < terms; ++t) {
    const std::size_t lu = between(0, std::min(max_u, max_total));
    const std::size_t lv = between(0, std::min(max_v, max_total - lu));
    const Word u = word(dim_u, lu);
    const Word v = word(dim_v, lv);
    out.add(JointWord{u, v}, coefficient());
  }
  return out;
}

JointElement Sampler::partner(const JointElement& other, std::size_t dim_u, std::size_t dim_v) {
  JointElement out;
  if (other.is_zero()) return JointElement::unit(coefficient());
  std::vector<JointWord> keys;
  for (const auto& [w, c] : other.terms()) keys.push_back(w);
  const std::size_t terms = between(1, 4);
  for (std::size_t t = 0; t < terms; ++t) {
    const JointWord& k = keys[below(keys.size())];
    out.add(JointWord{word(dim_u, k.v.size()), word(dim_v, k.u.size())}, coefficient());
  }
  return out;
}

bool CheckReport::passed() const {
  return std::none_of(suites.begin(), suites.end(),
                      [](const SuiteResult& s) { return s.status == SuiteStatus::kFail; });
}

namespace {

using Outcome = std::optional<std::string>;

struct Context {
  const SpaceSpec& spec;
  Caps caps;
  std::size_t grade;  // max_grade of the run
  PairingHook pair;

  std::size_t du() const { return spec.dim_u(); }
  std::size_t dv() const { return spec.dim_v(); }
  std::size_t g(std::size_t limit) const { return std::min(grade, limit); }
};

using Trial = Outcome (*)(Sampler&, const Context&);

struct Suite {
  const char* name;
  Trial trial;
  bool needs_self_dual;
};

std::string str(const Scalar& s) { return to_string(s); }
std::string str(const Element& e) { return to_string(e); }
std::string str(const JointElement& e) { return to_string(e); }
std::string str(const TensorSquare& t) { return to_string(t); }
std::string str(const JointTensorSquare& t) { return to_string(t); }

template <class T>
std::string mismatch(const T& lhs, const T& rhs) {
  return "lhs = " + str(lhs) + "; rhs = " + str(rhs);
}

// a (x) b as a tensor square.
TensorSquare tensor_square(const Element& a, const Element& b) {
  TensorSquare out{a.side(), {}};
  for (const auto& [l, cl] : a.terms()) {
    for (const auto& [r, cr] : b.terms()) out.terms.add({l, r}, cl * cr);
  }
  return out;
}

// (D (x) I) t and (I (x) D) t for a linear map D given on words.
template <class Delta>
TensorCube expand_left(const TensorSquare& t, Delta&& delta) {
  TensorCube out;
  for (const auto& [legs, c] : t.terms) {
    for (const auto& [inner, ci] : delta(legs[0]).terms) {
      out.add({inner[0], inner[1], legs[1]}, c * ci);
    }
  }
  return out;
}

template <class Delta>
TensorCube expand_right(const TensorSquare& t, Delta&& delta) {
  TensorCube out;
  for (const auto& [legs, c] : t.terms) {
    for (const auto& [inner, ci] : delta(legs[1]).terms) {
      out.add({legs[0], inner[0], inner[1]}, c * ci);
    }
  }
  return out;
}

JointElement joint_of(const JointWord& w) { return JointElement::word(w.u, w.v); }

Scalar signed_unit(bool negative) { return Scalar(negative ? -1 : 1); }

// ------------------------------------------------------------------ space

Outcome field_axioms(Sampler& rng, const Context&) {
  auto draw = [&] {
    // Mix the coefficient pool with wider rationals.
    if (rng.below(2)) return rng.coefficient();
    const long num = static_cast<long>(rng.below(41)) - 20;
    const long den = static_cast<long>(rng.between(1, 12));
    return Scalar(Scalar(num) / Scalar(den));
  };
  const Scalar x = draw(), y = draw(), z = draw();
  const std::string args = "x = " + str(x) + ", y = " + str(y) + ", z = " + str(z);
  if ((x + y) + z != x + (y + z)) return "additive associativity: " + args;
  if ((x * y) * z != x * (y * z)) return "multiplicative associativity: " + args;
  if (x + y != y + x || x * y != y * x) return "commutativity: " + args;
  if (x * (y + z) != x * y + x * z) return "distributivity: " + args;
  if (x + 0 != x || x * 1 != x) return "identities: " + args;
  if (x + (-x) != 0) return "additive inverse: " + args;
  if (!is_zero(x) && x * (Scalar(1) / x) != 1) return "multiplicative inverse: " + args;
  return std::nullopt;
}

Outcome space_immutability(Sampler& rng, const Context& ctx) {
  const SpaceSpec copy = ctx.spec;
  const std::size_t i = rng.between(1, ctx.du());
  const std::size_t j = rng.between(1, ctx.dv());
  const Scalar first = pair_vectors(ctx.spec, i, j);
  const Scalar second = pair_vectors(ctx.spec, i, j);
  if (first != second || first != ctx.spec.entry(i, j)) {
    return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") changed between lookups";
  }
  if (!(copy == ctx.spec)) return "copy differs from original";
  return std::nullopt;
}

// ----------------------------------------------------------------- tensor

Outcome tensor_associativity(Sampler& rng, const Context& ctx) {
  const std::size_t g = ctx.g(4);
  const Element a = rng.element(Side::kU, ctx.du(), g);
  const Element b = rng.element(Side::kU, ctx.du(), g);
  const Element c = rng.element(Side::kU, ctx.du(), g);
  const Element lhs = concat_product(concat_product(a, b), c);
  const Element rhs = concat_product(a, concat_product(b, c));
  if (lhs == rhs) return std::nullopt;
  return "a = " + str(a) + "; b = " + str(b) + "; c = " + str(c) + "; " + mismatch(lhs, rhs);
}

Outcome tensor_grade_additivity(Sampler& rng, const Context& ctx) {
  const Element a = rng.element(Side::kU, ctx.du(), ctx.grade);
  const Element b = rng.element(Side::kU, ctx.du(), ctx.grade);
  const Element ab = concat_product(a, b);
  for (std::size_t g = 0; g <= 2 * ctx.grade; ++g) {
    Element expected(Side::kU);
    for (std::size_t g1 = 0; g1 <= g; ++g1) {
      expected += concat_product(grade_part(a, g1), grade_part(b, g - g1));
    }
    const Element got = grade_part(ab, g);
    if (!(got == expected)) {
      return "a = " + str(a) + "; b = " + str(b) + "; grade " + std::to_string(g) + ": " +
             mismatch(got, expected);
    }
  }
  return std::nullopt;
}

Outcome tensor_duality(Sampler& rng, const Context& ctx) {
  const std::size_t p = rng.between(0, ctx.grade);
  std::size_t q = rng.between(0, ctx.grade);
  if (q == p) q = (p + 1) % (ctx.grade + 1);
  const Element a = rng.homogeneous(Side::kU, ctx.du(), p);
  const Element b = rng.homogeneous(Side::kV, ctx.dv(), q);
  if (p != q && !is_zero(duality(a, b, ctx.spec))) {
    return "grades differ but <a,b> != 0: a = " + str(a) + "; b = " + str(b);
  }
  // Bilinearity in each slot.
  const Element a2 = rng.element(Side::kU, ctx.du(), ctx.grade);
  const Element b2 = rng.element(Side::kV, ctx.dv(), ctx.grade);
  const Element b3 = rng.element(Side::kV, ctx.dv(), ctx.grade);
  const Scalar s = rng.coefficient();
  const Scalar lhs = duality(a + a2 * s, b2, ctx.spec);
  const Scalar rhs = duality(a, b2, ctx.spec) + s * duality(a2, b2, ctx.spec);
  if (lhs != rhs) return "left linearity: a = " + str(a) + "; a2 = " + str(a2) + "; b = " + str(b2);
  const Scalar lhs2 = duality(a2, b2 + b3 * s, ctx.spec);
  const Scalar rhs2 = duality(a2, b2, ctx.spec) + s * duality(a2, b3, ctx.spec);
  if (lhs2 != rhs2) return "right linearity: a = " + str(a2) + "; b = " + str(b2);
  return std::nullopt;
}

Outcome tensor_joint_monoid(Sampler& rng, const Context& ctx) {
  const std::size_t g = ctx.g(3);
  const JointElement a = rng.joint(ctx.du(), ctx.dv(), g, g);
  const JointElement b = rng.joint(ctx.du(), ctx.dv(), g, g);
  const JointElement c = rng.joint(ctx.du(), ctx.dv(), g, g);
  const JointElement lhs = joint_product(joint_product(a, b), c);
  const JointElement rhs = joint_product(a, joint_product(b, c));
  if (!(lhs == rhs)) {
    return "a = " + str(a) + "; b = " + str(b) + "; c = " + str(c) + "; " + mismatch(lhs, rhs);
  }
  const JointElement one = JointElement::unit();
  if (!(joint_product(one, a) == a) || !(joint_product(a, one) == a)) {
    return "unit law fails for a = " + str(a);
  }
  return std::nullopt;
}

// ------------------------------------------------------------------- hopf

Element random_u(Sampler& rng, const Context& ctx, std::size_t max_grade) {
  return rng.element(Side::kU, ctx.du(), max_grade);
}

JointElement random_joint_total(Sampler& rng, const Context& ctx, std::size_t total) {
  return rng.joint(ctx.du(), ctx.dv(), total, total, total);
}

Outcome hopf_coassociativity(Sampler& rng, const Context& ctx) {
  const Element a = random_u(rng, ctx, ctx.grade);
  if (coproduct_left_twice(a, ctx.caps) == coproduct_right_twice(a, ctx.caps)) return std::nullopt;
  return "a = " + str(a);
}

Outcome hopf_cocommutativity(Sampler& rng, const Context& ctx) {
  const Element a = random_u(rng, ctx, ctx.grade);
  const TensorSquare d = coproduct(a, ctx.caps);
  if (flip(d) == d) return std::nullopt;
  return "a = " + str(a) + "; delta = " + str(d);
}

Outcome hopf_counit(Sampler& rng, const Context& ctx) {
  const Element a = random_u(rng, ctx, ctx.grade);
  const TensorSquare d = coproduct(a, ctx.caps);
  const Element left = counit_left(d);
  const Element right = counit_right(d);
  if (!(left == a)) return "a = " + str(a) + "; (eps (x) I) delta = " + str(left);
  if (!(right == a)) return "a = " + str(a) + "; (I (x) eps) delta = " + str(right);
  return std::nullopt;
}

Outcome hopf_antipode(Sampler& rng, const Context& ctx) {
  const Element a = random_u(rng, ctx, ctx.grade);
  const TensorSquare d = coproduct(a, ctx.caps);
  const Element expected = Element::unit(Side::kU, counit(a));
  const Element left = multiply_legs(antipode_left(d));
  const Element right = multiply_legs(antipode_right(d));
  if (!(left == expected)) return "a = " + str(a) + "; mu(S (x) I) delta = " + str(left);
  if (!(right == expected)) return "a = " + str(a) + "; mu(I (x) S) delta = " + str(right);
  return std::nullopt;
}

Outcome hopf_homomorphism(Sampler& rng, const Context& ctx) {
  const Element a = random_u(rng, ctx, ctx.grade);
  const std::size_t room = ctx.caps.grade - std::min(ctx.caps.grade, a.max_grade());
  const Element b = random_u(rng, ctx, std::min(ctx.grade, room));
  const TensorSquare lhs = coproduct(concat_product(a, b), ctx.caps);
  const TensorSquare rhs = square_product(coproduct(a, ctx.caps), coproduct(b, ctx.caps));
  if (lhs == rhs) return std::nullopt;
  return "a = " + str(a) + "; b = " + str(b);
}

Outcome joint_coassociativity(Sampler& rng, const Context& ctx) {
  const JointElement a = random_joint_total(rng, ctx, ctx.grade);
  if (joint_coproduct_left_twice(a, ctx.caps) == joint_coproduct_right_twice(a, ctx.caps)) {
    return std::nullopt;
  }
  return "a = " + str(a);
}

Outcome joint_cocommutativity(Sampler& rng, const Context& ctx) {
  const JointElement a = random_joint_total(rng, ctx, ctx.grade);
  const JointTensorSquare d = joint_coproduct(a, ctx.caps);
  if (flip(d) == d) return std::nullopt;
  return "a = " + str(a) + "; delta = " + str(d);
}

Outcome joint_counit(Sampler& rng, const Context& ctx) {
  const JointElement a = random_joint_total(rng, ctx, ctx.grade);
  const JointTensorSquare d = joint_coproduct(a, ctx.caps);
  const JointElement left = counit_left(d);
  const JointElement right = counit_right(d);
  if (!(left == a)) return "a = " + str(a) + "; (eps (x) I) delta = " + str(left);
  if (!(right == a)) return "a = " + str(a) + "; (I (x) eps) delta = " + str(right);
  return std::nullopt;
}

Outcome joint_antipode_law(Sampler& rng, const Context& ctx) {
  const JointElement a = random_joint_total(rng, ctx, ctx.grade);
  const JointTensorSquare d = joint_coproduct(a, ctx.caps);
  const JointElement expected = JointElement::unit(joint_counit(a));
  const JointElement left = multiply_legs(antipode_left(d));
  const JointElement right = multiply_legs(antipode_right(d));
  if (!(left == expected)) return "a = " + str(a) + "; mu(S (x) I) delta = " + str(left);
  if (!(right == expected)) return "a = " + str(a) + "; mu(I (x) S) delta = " + str(right);
  return std::nullopt;
}

Outcome joint_homomorphism(Sampler& rng, const Context& ctx) {
  const JointElement a = random_joint_total(rng, ctx, ctx.grade);
  const std::size_t room = ctx.caps.grade - std::min(ctx.caps.grade, a.max_side_grade());
  const std::size_t g = std::min(ctx.grade, room);
  const JointElement b = rng.joint(ctx.du(), ctx.dv(), g, g, ctx.grade);
  const JointTensorSquare lhs = joint_coproduct(joint_product(a, b), ctx.caps);
  const JointTensorSquare rhs =
      square_product(joint_coproduct(a, ctx.caps), joint_coproduct(b, ctx.caps));
  if (lhs == rhs) return std::nullopt;
  return "a = " + str(a) + "; b = " + str(b);
}

// --------------------------------------------------------------- symmetry

Outcome symmetry_projection(Sampler& rng, const Context& ctx) {
  const Caps& caps = ctx.caps;
  const Element a = random_u(rng, ctx, ctx.g(caps.permutation));
  const Element s = symmetrize(a, caps);
  const Element as = antisymmetrize(a, caps);
  if (!(symmetrize(s, caps) == s)) return "Symm not idempotent on a = " + str(a);
  if (!(antisymmetrize(as, caps) == as)) return "ASymm not idempotent on a = " + str(a);
  if (ctx.grade < 2) return std::nullopt;
  const Element h = rng.homogeneous(Side::kU, ctx.du(), rng.between(2, ctx.g(caps.permutation)));
  const Element sa = symmetrize(antisymmetrize(h, caps), caps);
  const Element as2 = antisymmetrize(symmetrize(h, caps), caps);
  if (!sa.is_zero()) return "Symm(ASymm(h)) = " + str(sa) + " for h = " + str(h);
  if (!as2.is_zero()) return "ASymm(Symm(h)) = " + str(as2) + " for h = " + str(h);
  return std::nullopt;
}

Outcome symmetry_quotient(Sampler& rng, const Context& ctx) {
  const Caps& caps = ctx.caps;
  const Element x = rng.vector(Side::kU, ctx.du());
  const Element y = rng.vector(Side::kU, ctx.du());
  const std::size_t room = ctx.g(caps.permutation) >= 2 ? (ctx.g(caps.permutation) - 2) / 2 : 0;
  const Element l = random_u(rng, ctx, room);
  const Element r = random_u(rng, ctx, room);
  const Element xy = concat_product(x, y);
  const Element yx = concat_product(y, x);
  auto sandwich = [&](const Element& m) { return concat_product(concat_product(l, m), r); };
  const Element s = symmetrize(sandwich(xy - yx), caps);
  if (!s.is_zero()) {
    return "Symm(l(xy - yx)r) = " + str(s) + "; x = " + str(x) + "; y = " + str(y) + "; l = " +
           str(l) + "; r = " + str(r);
  }
  const Element as = antisymmetrize(sandwich(xy + yx), caps);
  if (!as.is_zero()) {
    return "ASymm(l(xy + yx)r) = " + str(as) + "; x = " + str(x) + "; y = " + str(y) +
           "; l = " + str(l) + "; r = " + str(r);
  }
  return std::nullopt;
}

Outcome symmetry_anticommutativity(Sampler& rng, const Context& ctx) {
  const Caps& caps = ctx.caps;
  const std::size_t total = ctx.g(caps.permutation);
  const std::size_t p = rng.between(0, total);
  const std::size_t q = rng.between(0, total - p);
  const Element u = antisymmetrize(rng.homogeneous(Side::kU, ctx.du(), p), caps);
  const Element v = antisymmetrize(rng.homogeneous(Side::kU, ctx.du(), q), caps);
  const Element lhs = wedge_product(u, v, caps);
  const Element rhs = wedge_product(v, u, caps) * signed_unit((p * q) % 2 == 1);
  if (lhs == rhs) return std::nullopt;
  return "u = " + str(u) + "; v = " + str(v) + "; " + mismatch(lhs, rhs);
}

Outcome symmetry_homogeneous_coproduct(Sampler& rng, const Context& ctx) {
  const Element x = rng.vector(Side::kU, ctx.du());
  const std::size_t t = rng.between(0, ctx.g(5));
  const TensorSquare lhs = coproduct(power(x, t, ctx.caps), ctx.caps);
  TensorSquare rhs{Side::kU, {}};
  for (std::size_t k = 0; k <= t; ++k) {
    const TensorSquare piece =
        tensor_square(power(x, t - k, ctx.caps), power(x, k, ctx.caps));
    rhs.terms.add(piece.terms, binomial(static_cast<unsigned>(t), static_cast<unsigned>(k)));
  }
  if (lhs == rhs) return std::nullopt;
  return "x = " + str(x) + "; t = " + std::to_string(t) + "; " + mismatch(lhs, rhs);
}

Outcome symmetry_polarization(Sampler& rng, const Context& ctx) {
  const std::size_t t = rng.between(1, std::max<std::size_t>(1, ctx.g(5)));
  std::vector<Element> xs;
  Element product = Element::unit(Side::kU);
  for (std::size_t i = 0; i < t; ++i) {
    xs.push_back(rng.vector(Side::kU, ctx.du()));
    product = concat_product(product, xs.back());
  }
  const Element lhs = polarization_expansion(xs, ctx.caps);
  const Element rhs = symmetrize(product, ctx.caps);
  if (lhs == rhs) return std::nullopt;
  std::string args;
  for (const auto& x : xs) args += (args.empty() ? "" : ", ") + str(x);
  return "vectors [" + args + "]; " + mismatch(lhs, rhs);
}

Outcome symmetry_duality(Sampler& rng, const Context& ctx) {
  const Caps& caps = ctx.caps;
  const std::size_t n = rng.between(0, ctx.g(caps.permutation));
  const Element a = rng.homogeneous(Side::kU, ctx.du(), n);
  const Element b = rng.homogeneous(Side::kV, ctx.dv(), n);
  const SpaceSpec& spec = ctx.spec;
  const Element sa = symmetrize(a, caps), sb = symmetrize(b, caps);
  const Scalar s1 = duality(sa, b, spec), s2 = duality(a, sb, spec), s3 = duality(sa, sb, spec);
  if (s1 != s2 || s1 != s3) {
    return "Symm: a = " + str(a) + "; b = " + str(b) + "; values " + str(s1) + ", " + str(s2) +
           ", " + str(s3);
  }
  const Element aa = antisymmetrize(a, caps), ab = antisymmetrize(b, caps);
  const Scalar a1 = duality(aa, b, spec), a2 = duality(a, ab, spec), a3 = duality(aa, ab, spec);
  if (a1 != a2 || a1 != a3) {
    return "ASymm: a = " + str(a) + "; b = " + str(b) + "; values " + str(a1) + ", " + str(a2) +
           ", " + str(a3);
  }
  return std::nullopt;
}

template <class Projection>
Outcome projected_hopf(Sampler& rng, const Context& ctx, Projection project) {
  const Element x = project(random_u(rng, ctx, ctx.g(ctx.caps.permutation)));
  std::map<Word, TensorSquare> memo;
  auto delta = [&](const Word& w) -> const TensorSquare& {
    auto it = memo.find(w);
    if (it == memo.end()) {
      it = memo.emplace(w, project_legs(coproduct(Element::word(Side::kU, w), ctx.caps), project))
               .first;
    }
    return it->second;
  };
  const TensorSquare d = project_legs(coproduct(x, ctx.caps), project);
  if (!(flip(d) == d)) return "not cocommutative on x = " + str(x);
  if (!(expand_left(d, delta) == expand_right(d, delta))) {
    return "not coassociative on x = " + str(x);
  }
  return std::nullopt;
}

Outcome symmetry_projected_hopf_sym(Sampler& rng, const Context& ctx) {
  return projected_hopf(rng, ctx, [&](const Element& e) { return symmetrize(e, ctx.caps); });
}

Outcome symmetry_projected_hopf_asym(Sampler& rng, const Context& ctx) {
  return projected_hopf(rng, ctx, [&](const Element& e) { return antisymmetrize(e, ctx.caps); });
}

// ---------------------------------------------------------------- laplace

Outcome laplace_oracle(Sampler& rng, const Context& ctx) {
  const std::size_t g = ctx.g(4);
  const JointElement a = rng.joint(ctx.du(), ctx.dv(), g, g);
  JointElement b = rng.partner(a, ctx.du(), ctx.dv());
  if (rng.below(4) == 0) b = rng.joint(ctx.du(), ctx.dv(), g, g);
  const Scalar fast = ctx.pair(a, b);
  const Scalar slow = laplace_recursive(a, b, ctx.spec, ctx.caps);
  if (fast == slow) return std::nullopt;
  return "a = " + str(a) + "; b = " + str(b) + "; closed = " + str(fast) +
         "; recursive = " + str(slow);
}

Outcome laplace_splitting(Sampler& rng, const Context& ctx) {
  const std::size_t g = ctx.g(2);
  const JointElement b = rng.joint(ctx.du(), ctx.dv(), g, g);
  const JointElement c = rng.joint(ctx.du(), ctx.dv(), g, g);
  const JointElement a = rng.partner(joint_product(b, c), ctx.du(), ctx.dv());
  const Scalar lhs = ctx.pair(a, joint_product(b, c));
  Scalar rhs = 0;
  for (const auto& [legs, coef] : joint_coproduct(a, ctx.caps).terms) {
    rhs += coef * ctx.pair(joint_of(legs[0]), b) * ctx.pair(joint_of(legs[1]), c);
  }
  if (lhs == rhs) return std::nullopt;
  return "a = " + str(a) + "; b = " + str(b) + "; c = " + str(c) + "; " + mismatch(lhs, rhs);
}

Outcome laplace_symmetry(Sampler& rng, const Context& ctx) {
  const std::size_t g = ctx.g(4);
  const JointElement a = rng.joint(ctx.du(), ctx.dv(), g, g);
  const JointElement b = rng.partner(a, ctx.du(), ctx.dv());
  const Scalar ab = ctx.pair(a, b), ba = ctx.pair(b, a);
  if (ab == ba) return std::nullopt;
  return "a = " + str(a) + "; b = " + str(b) + "; (a|b) = " + str(ab) + "; (b|a) = " + str(ba);
}

Outcome laplace_orthogonality(Sampler& rng, const Context& ctx) {
  const std::size_t p = rng.between(0, ctx.grade);
  std::size_t q = rng.between(0, ctx.grade);
  if (q == p) q = (p + 1) % (ctx.grade + 1);
  const JointElement u = JointElement::word(rng.word(ctx.du(), p), Word{});
  const JointElement v = JointElement::word(Word{}, rng.word(ctx.dv(), q));
  if (p != q && (!is_zero(ctx.pair(u, v)) || !is_zero(ctx.pair(v, u)))) {
    return "u = " + str(u) + "; v = " + str(v) + " pair nonzero across grades";
  }
  // General words: (u;v | u';v') vanishes unless |u| = |v'| and |v| = |u'|.
  const std::size_t g = ctx.g(3);
  const JointWord w1{rng.word(ctx.du(), rng.between(0, g)), rng.word(ctx.dv(), rng.between(0, g))};
  const JointWord w2{rng.word(ctx.du(), rng.between(0, g)), rng.word(ctx.dv(), rng.between(0, g))};
  const bool matched = w1.u.size() == w2.v.size() && w1.v.size() == w2.u.size();
  if (!matched && !is_zero(ctx.pair(joint_of(w1), joint_of(w2)))) {
    return "grade-mismatched words pair nonzero: " + joint_word_text(w1) + " | " +
           joint_word_text(w2);
  }
  return std::nullopt;
}

Word permuted(Sampler& rng, const Word& w) {
  std::vector<Letter> letters(w.begin(), w.end());
  for (std::size_t i = letters.size(); i > 1; --i) std::swap(letters[i - 1], letters[rng.below(i)]);
  return Word(std::span<const Letter>(letters));
}

Outcome laplace_permutation(Sampler& rng, const Context& ctx) {
  const std::size_t n = rng.between(0, ctx.g(ctx.caps.permutation));
  const Word x = rng.word(ctx.du(), n);
  const Word y = rng.word(ctx.dv(), n);
  const Word px = permuted(rng, x);
  const Word py = permuted(rng, y);
  auto pairing = [&](const Word& u, const Word& v) {
    return ctx.pair(JointElement::word(u, Word{}), JointElement::word(Word{}, v));
  };
  const Scalar base = pairing(x, y);
  if (pairing(x, py) != base || pairing(px, y) != base) {
    return "x = " + word_text(Side::kU, x) + "; y = " + word_text(Side::kV, y) +
           "; permuted y = " + word_text(Side::kV, py) +
           "; permuted x = " + word_text(Side::kU, px);
  }
  return std::nullopt;
}

Outcome laplace_factorization(Sampler& rng, const Context& ctx) {
  const std::size_t g = ctx.g(3);
  const std::size_t p = rng.between(0, g), q = rng.between(0, g);
  const Element u1 = rng.homogeneous(Side::kU, ctx.du(), p);
  const Element v1 = rng.homogeneous(Side::kV, ctx.dv(), q);
  const Element u2 = rng.homogeneous(Side::kU, ctx.du(), q);
  const Element v2 = rng.homogeneous(Side::kV, ctx.dv(), p);
  const Scalar lhs = ctx.pair(tensor(u1, v1), tensor(u2, v2));
  const Scalar rhs = ctx.pair(embed(u1), embed(v2)) * ctx.pair(embed(v1), embed(u2));
  if (lhs == rhs) return std::nullopt;
  return "u1 = " + str(u1) + "; v1 = " + str(v1) + "; u2 = " + str(u2) + "; v2 = " + str(v2) +
         "; " + mismatch(lhs, rhs);
}

Outcome laplace_left_splitting(Sampler& rng, const Context& ctx) {
  const std::size_t g = ctx.g(2);
  const JointElement a = rng.joint(ctx.du(), ctx.dv(), g, g);
  const JointElement b = rng.joint(ctx.du(), ctx.dv(), g, g);
  const JointElement c = rng.partner(joint_product(a, b), ctx.du(), ctx.dv());
  const Scalar lhs = ctx.pair(joint_product(a, b), c);
  Scalar rhs = 0;
  for (const auto& [legs, coef] : joint_coproduct(c, ctx.caps).terms) {
    rhs += coef * ctx.pair(a, joint_of(legs[0])) * ctx.pair(b, joint_of(legs[1]));
  }
  if (lhs == rhs) return std::nullopt;
  return "a = " + str(a) + "; b = " + str(b) + "; c = " + str(c) + "; " + mismatch(lhs, rhs);
}

Outcome laplace_spot_values(Sampler& rng, const Context& ctx) {
  const JointElement one = JointElement::unit();
  if (ctx.pair(one, one) != 1) return "(1|1) = " + str(ctx.pair(one, one));
  const Element x = rng.vector(Side::kU, ctx.du());
  const Element y = rng.vector(Side::kV, ctx.dv());
  const Scalar xy = duality(x, y, ctx.spec);
  const JointElement x2 = embed(power(x, 2, ctx.caps));
  const JointElement y2 = embed(power(y, 2, ctx.caps));
  const Scalar expected = 2 * xy * xy;
  const Scalar got = ctx.pair(x2, y2);
  const Scalar slow = laplace_recursive(x2, y2, ctx.spec, ctx.caps);
  if (got != expected || slow != expected) {
    return "x = " + str(x) + "; y = " + str(y) + "; (x^2|y^2) = " + str(got) + " / " + str(slow) +
           ", expected " + str(expected);
  }
  return std::nullopt;
}

// ----------------------------------------------------------------- square

Outcome square_associativity(Sampler& rng, const Context& ctx) {
  const std::size_t g = ctx.g(3);
  const JointElement a = rng.joint(ctx.du(), ctx.dv(), g, g);
  const JointElement b = rng.joint(ctx.du(), ctx.dv(), g, g);
  const JointElement c = rng.joint(ctx.du(), ctx.dv(), g, g);
  const SpaceSpec& spec = ctx.spec;
  const JointElement lhs = square(square(a, b, spec, ctx.caps), c, spec, ctx.caps);
  const JointElement rhs = square(a, square(b, c, spec, ctx.caps), spec, ctx.caps);
  if (lhs == rhs) return std::nullopt;
  return "a = " + str(a) + "; b = " + str(b) + "; c = " + str(c) + "; " + mismatch(lhs, rhs);
}

Outcome square_unit(Sampler& rng, const Context& ctx) {
  const std::size_t g = ctx.g(4);
  const JointElement a = rng.joint(ctx.du(), ctx.dv(), g, g);
  const JointElement one = JointElement::unit();
  const JointElement left = square(one, a, ctx.spec, ctx.caps);
  const JointElement right = square(a, one, ctx.spec, ctx.caps);
  if (!(left == a)) return "1 @ a = " + str(left) + " for a = " + str(a);
  if (!(right == a)) return "a @ 1 = " + str(right) + " for a = " + str(a);
  return std::nullopt;
}

Outcome square_weak_commutativity(Sampler& rng, const Context& ctx) {
  const std::size_t g = ctx.g(2);
  const JointElement a = rng.joint(ctx.du(), ctx.dv(), g, g);
  const JointElement b = rng.joint(ctx.du(), ctx.dv(), g, g);
  const JointElement ab = square(a, b, ctx.spec, ctx.caps);
  JointElement c = rng.partner(ab, ctx.du(), ctx.dv());
  const Scalar lhs = ctx.pair(ab, c);
  const Scalar rhs = ctx.pair(a, square(b, c, ctx.spec, ctx.caps));
  if (lhs == rhs) return std::nullopt;
  return "a = " + str(a) + "; b = " + str(b) + "; c = " + str(c) + "; " + mismatch(lhs, rhs);
}

Outcome square_recovery(Sampler& rng, const Context& ctx) {
  const std::size_t g = ctx.g(2);
  const JointElement a = rng.joint(ctx.du(), ctx.dv(), g, g);
  const JointElement b = rng.joint(ctx.du(), ctx.dv(), g, g);
  const JointElement expected = joint_product(a, b);
  JointElement got;
  const JointTensorSquare da = joint_coproduct(a, ctx.caps);
  const JointTensorSquare db = joint_coproduct(b, ctx.caps);
  for (const auto& [la, ca] : da.terms) {
    const JointElement s = joint_antipode(joint_of(la[0]));
    for (const auto& [lb, cb] : db.terms) {
      const Scalar p = ctx.pair(s, joint_of(lb[0]));
      if (is_zero(p)) continue;
      got += square(joint_of(la[1]), joint_of(lb[1]), ctx.spec, ctx.caps) * (ca * cb * p);
    }
  }
  if (got == expected) return std::nullopt;
  return "a = " + str(a) + "; b = " + str(b) + "; " + mismatch(got, expected);
}

// ----------------------------------------------------------------- circle

Element random_symmetric(Sampler& rng, const Context& ctx, std::size_t g) {
  return symmetrize(random_u(rng, ctx, g), ctx.caps);
}

Element random_antisymmetric(Sampler& rng, const Context& ctx, std::size_t g) {
  return antisymmetrize(random_u(rng, ctx, g), ctx.caps);
}

Outcome circle_from_square_sym(Sampler& rng, const Context& ctx) {
  const Element u = random_symmetric(rng, ctx, ctx.g(3));
  const Element v = random_symmetric(rng, ctx, ctx.g(3));
  const Element lhs = symmetrize(square(u, v, ctx.spec, ctx.caps), ctx.caps);
  const Element rhs = circle_sym(u, v, ctx.spec, ctx.caps);
  if (lhs == rhs) return std::nullopt;
  return "u = " + str(u) + "; v = " + str(v) + "; " + mismatch(lhs, rhs);
}

Outcome circle_from_square_asym(Sampler& rng, const Context& ctx) {
  const Element u = random_antisymmetric(rng, ctx, ctx.g(3));
  const Element v = random_antisymmetric(rng, ctx, ctx.g(3));
  const Element lhs = antisymmetrize(square(u, v, ctx.spec, ctx.caps), ctx.caps);
  const Element rhs = circle_antisym(u, v, ctx.spec, ctx.caps);
  if (lhs == rhs) return std::nullopt;
  return "u = " + str(u) + "; v = " + str(v) + "; " + mismatch(lhs, rhs);
}

template <class Draw, class Circle>
Outcome circle_associativity(Sampler& rng, const Context& ctx, Draw draw, Circle circle) {
  const std::size_t g = ctx.g(2);
  const Element u = draw(rng, ctx, g), v = draw(rng, ctx, g), w = draw(rng, ctx, g);
  const Element lhs = circle(circle(u, v), w);
  const Element rhs = circle(u, circle(v, w));
  if (lhs == rhs) return std::nullopt;
  return "u = " + str(u) + "; v = " + str(v) + "; w = " + str(w) + "; " + mismatch(lhs, rhs);
}

Outcome circle_associativity_sym(Sampler& rng, const Context& ctx) {
  return circle_associativity(rng, ctx, random_symmetric, [&](const Element& x, const Element& y) {
    return circle_sym(x, y, ctx.spec, ctx.caps);
  });
}

Outcome circle_associativity_asym(Sampler& rng, const Context& ctx) {
  return circle_associativity(rng, ctx, random_antisymmetric,
                              [&](const Element& x, const Element& y) {
                                return circle_antisym(x, y, ctx.spec, ctx.caps);
                              });
}

Outcome circle_commutativity_sym(Sampler& rng, const Context& ctx) {
  const Element u = random_symmetric(rng, ctx, ctx.g(3));
  const Element v = random_symmetric(rng, ctx, ctx.g(3));
  const Element uv = circle_sym(u, v, ctx.spec, ctx.caps);
  const Element vu = circle_sym(v, u, ctx.spec, ctx.caps);
  if (uv == vu) return std::nullopt;
  return "u = " + str(u) + "; v = " + str(v) + "; " + mismatch(uv, vu);
}

Outcome circle_generator_formula(Sampler& rng, const Context& ctx) {
  const Element x = rng.vector(Side::kU, ctx.du());
  const Element y = rng.vector(Side::kU, ctx.du());
  const Element pairing = Element::unit(Side::kU, self_dual_pairing(x, y, ctx.spec, ctx.caps));
  const Element sym = circle_sym(x, y, ctx.spec, ctx.caps);
  const Element sym_expected = pairing + sym_product(x, y, ctx.caps);
  if (!(sym == sym_expected)) {
    return "symmetric: x = " + str(x) + "; y = " + str(y) + "; " + mismatch(sym, sym_expected);
  }
  const Element asym = circle_antisym(x, y, ctx.spec, ctx.caps);
  const Element asym_expected = pairing + wedge_product(x, y, ctx.caps);
  if (!(asym == asym_expected)) {
    return "antisymmetric: x = " + str(x) + "; y = " + str(y) + "; " +
           mismatch(asym, asym_expected);
  }
  return std::nullopt;
}

// -------------------------------------------------------------------- phi

Outcome phi_homomorphism_tensor(Sampler& rng, const Context& ctx) {
  const Element a = random_u(rng, ctx, ctx.g(3));
  const Element b = random_u(rng, ctx, ctx.g(3));
  const Element lhs = phi_tensor(concat_product(a, b), ctx.spec, ctx.caps);
  const Element rhs = square(phi_tensor(a, ctx.spec, ctx.caps), phi_tensor(b, ctx.spec, ctx.caps),
                             ctx.spec, ctx.caps);
  if (lhs == rhs) return std::nullopt;
  return "a = " + str(a) + "; b = " + str(b) + "; " + mismatch(lhs, rhs);
}

Outcome phi_homomorphism_sym(Sampler& rng, const Context& ctx) {
  const Element u = random_symmetric(rng, ctx, ctx.g(3));
  const Element v = random_symmetric(rng, ctx, ctx.g(3));
  const Element lhs = phi_sym(sym_product(u, v, ctx.caps), ctx.spec, ctx.caps);
  const Element rhs = circle_sym(phi_sym(u, ctx.spec, ctx.caps), phi_sym(v, ctx.spec, ctx.caps),
                                 ctx.spec, ctx.caps);
  if (lhs == rhs) return std::nullopt;
  return "u = " + str(u) + "; v = " + str(v) + "; " + mismatch(lhs, rhs);
}

Outcome phi_homomorphism_asym(Sampler& rng, const Context& ctx) {
  const Element u = random_antisymmetric(rng, ctx, ctx.g(3));
  const Element v = random_antisymmetric(rng, ctx, ctx.g(3));
  const Element lhs = phi_antisym(wedge_product(u, v, ctx.caps), ctx.spec, ctx.caps);
  const Element rhs = circle_antisym(phi_antisym(u, ctx.spec, ctx.caps),
                                     phi_antisym(v, ctx.spec, ctx.caps), ctx.spec, ctx.caps);
  if (lhs == rhs) return std::nullopt;
  return "u = " + str(u) + "; v = " + str(v) + "; " + mismatch(lhs, rhs);
}

Outcome phi_triangular(Sampler& rng, const Context& ctx, PhiMode mode) {
  const std::vector<Element> basis = canonical_basis(ctx.du(), mode, ctx.g(4), ctx.caps);
  const Element& b = basis[rng.below(basis.size())];
  const std::size_t t = b.max_grade();
  Element image(Side::kU);
  switch (mode) {
    case PhiMode::kTensor: image = phi_tensor(b, ctx.spec, ctx.caps); break;
    case PhiMode::kSymmetric: image = phi_sym(b, ctx.spec, ctx.caps); break;
    case PhiMode::kAntisymmetric: image = phi_antisym(b, ctx.spec, ctx.caps); break;
  }
  const Element rest = image - b;
  if (!rest.is_zero() && rest.max_grade() >= t) {
    return "phi(" + basis_label(b, mode) + ") - " + basis_label(b, mode) + " = " + str(rest);
  }
  return std::nullopt;
}

Outcome phi_triangular_tensor(Sampler& rng, const Context& ctx) {
  return phi_triangular(rng, ctx, PhiMode::kTensor);
}
Outcome phi_triangular_sym(Sampler& rng, const Context& ctx) {
  return phi_triangular(rng, ctx, PhiMode::kSymmetric);
}
Outcome phi_triangular_asym(Sampler& rng, const Context& ctx) {
  return phi_triangular(rng, ctx, PhiMode::kAntisymmetric);
}

Outcome phi_grade_one_pairing(Sampler& rng, const Context& ctx) {
  const std::size_t top = ctx.g(ctx.caps.permutation);
  if (top < 2) return std::nullopt;
  const std::size_t n = rng.between(2, top);
  const Element a = antisymmetrize(rng.homogeneous(Side::kU, ctx.du(), n), ctx.caps);
  const Element b = rng.homogeneous(Side::kV, ctx.dv(), n);
  const Scalar d = duality(symmetrize(a, ctx.caps), symmetrize(b, ctx.caps), ctx.spec);
  const Scalar p = ctx.pair(embed(a), embed(b));
  if (is_zero(d) && is_zero(p)) return std::nullopt;
  return "a = " + str(a) + "; b = " + str(b) + "; <Symm a, Symm b> = " + str(d) +
         "; (a;1|1;b) = " + str(p);
}

// -------------------------------------------------------------------- cli

ExprAst rational_node(const Scalar& value) {
  ExprAst node;
  node.kind = NodeKind::kRational;
  node.value = value;
  return node;
}

ExprAst generator_node(Side side, std::size_t index) {
  ExprAst node;
  node.kind = NodeKind::kGenerator;
  node.side = side;
  node.index = static_cast<Letter>(index);
  return node;
}

ExprAst call_node(const char* name, std::vector<ExprAst> children) {
  ExprAst node;
  node.kind = NodeKind::kCall;
  node.name = name;
  node.children = std::move(children);
  return node;
}

ExprAst binary_node(BinaryOp op, ExprAst lhs, ExprAst rhs) {
  ExprAst node;
  node.kind = NodeKind::kBinary;
  node.op = op;
  node.children.push_back(std::move(lhs));
  node.children.push_back(std::move(rhs));
  return node;
}

ExprAst negate_node(ExprAst child) {
  ExprAst node;
  node.kind = NodeKind::kNegate;
  node.children.push_back(std::move(child));
  return node;
}

// Expression generators by result sort. Grades stay small enough that the
// default caps are rarely hit.
class ExpressionMaker {
 public:
  ExpressionMaker(Sampler& rng, const SpaceSpec& spec) : rng_(rng), spec_(spec) {}

  ExprAst literal() {
    Scalar c = rng_.coefficient();
    return rational_node(c < 0 ? Scalar(-c) : c);
  }

  // Combination of generators, usable as a pow base.
  ExprAst vector(Side side) {
    const std::size_t dim = side == Side::kU ? spec_.dim_u() : spec_.dim_v();
    ExprAst out = generator_node(side, rng_.between(1, dim));
    if (rng_.below(2)) {
      out = binary_node(rng_.below(2) ? BinaryOp::kAdd : BinaryOp::kSub, std::move(out),
                        binary_node(BinaryOp::kProduct, literal(),
                                    generator_node(side, rng_.between(1, dim))));
    }
    return out;
  }

  ExprAst one_sided(Side side, int depth) {
    if (depth == 0) return rng_.below(4) == 0 ? literal() : vector(side);
    const bool self_dual = spec_.self_dual() && side == Side::kU;
    switch (rng_.below(self_dual ? 12 : 8)) {
      case 0: return negate_node(one_sided(side, depth - 1));
      case 1:
        return binary_node(rng_.below(2) ? BinaryOp::kAdd : BinaryOp::kSub,
                           one_sided(side, depth - 1), one_sided(side, depth - 1));
      case 2: return binary_node(BinaryOp::kProduct, one_sided(side, depth - 1), vector(side));
      case 3: return binary_node(BinaryOp::kWedge, vector(side), one_sided(side, depth - 1));
      case 4:
        return call_node(rng_.below(2) ? "symm" : "asymm", {one_sided(side, depth - 1)});
      case 5: return call_node("S", {one_sided(side, depth - 1)});
      case 6:
        return call_node("pow", {vector(side), rational_node(Scalar(long(rng_.below(4))))});
      case 7: return binary_node(BinaryOp::kProduct, literal(), one_sided(side, depth - 1));
      case 8: return binary_node(BinaryOp::kSquare, vector(side), one_sided(side, depth - 1));
      case 9: {
        const bool sym = rng_.below(2);
        const char* project = sym ? "symm" : "asymm";
        const BinaryOp op = rng_.below(3) == 0 ? BinaryOp::kCircle
                            : sym              ? BinaryOp::kCircleSym
                                               : BinaryOp::kCircleAntisym;
        return binary_node(op, call_node(project, {vector(side)}),
                           call_node(project, {one_sided(side, depth - 1)}));
      }
      case 10: return call_node("phi_t", {one_sided(side, depth - 1)});
      default: {
        const std::size_t pick = rng_.below(2);
        return call_node(pick ? "phi_s" : "phi_a",
                         {call_node(pick ? "symm" : "asymm", {one_sided(side, depth - 1)})});
      }
    }
  }

  ExprAst joint(int depth) {
    if (depth == 0) {
      return binary_node(BinaryOp::kJoint, one_sided(Side::kU, 0), one_sided(Side::kV, 0));
    }
    switch (rng_.below(6)) {
      case 0:
        return binary_node(BinaryOp::kJoint, one_sided(Side::kU, depth - 1),
                           one_sided(Side::kV, depth - 1));
      case 1: return binary_node(BinaryOp::kAdd, joint(depth - 1), one_sided(Side::kV, 0));
      case 2: return binary_node(BinaryOp::kProduct, joint(depth - 1), joint(depth - 1));
      case 3: return binary_node(BinaryOp::kSquare, joint(depth - 1), joint(0));
      case 4: return call_node("S", {joint(depth - 1)});
      default: return binary_node(BinaryOp::kSub, one_sided(Side::kU, 0), joint(depth - 1));
    }
  }

  ExprAst scalar(int depth) {
    depth = std::max(depth, 1);
    switch (rng_.below(4)) {
      case 0: return call_node("lap", {joint(depth - 1), joint(depth - 1)});
      case 1: return call_node("lap_slow", {joint(0), joint(0)});
      case 2:
        return call_node("dual", {one_sided(Side::kU, depth - 1), one_sided(Side::kV, depth - 1)});
      default: return call_node("eps", {one_sided(Side::kU, depth - 1)});
    }
  }

  // Any sort, including delta(...) results and occasional ill-typed trees.
  ExprAst any(int depth) {
    switch (rng_.below(8)) {
      case 0:
      case 1:
      case 2: return one_sided(Side::kU, depth);
      case 3: return one_sided(Side::kV, depth);
      case 4: return joint(depth);
      case 5: return scalar(depth);
      case 6:
        return call_node("delta", {rng_.below(2) ? one_sided(Side::kU, 1) : joint(1)});
      default: {
        static const BinaryOp ops[] = {BinaryOp::kJoint, BinaryOp::kSquare, BinaryOp::kCircle,
                                       BinaryOp::kWedge};
        return binary_node(ops[rng_.below(4)], one_sided(Side::kU, std::max(depth - 1, 0)),
                           one_sided(Side::kV, 0));
      }
    }
  }

 private:
  Sampler& rng_;
  const SpaceSpec& spec_;
};

// Result text, or the error kind and message for ill-typed expressions.
std::string run_text(const std::string& text, const Context& ctx) {
  try {
    EvalOptions options;
    options.caps = ctx.caps;
    return evaluate_text(text, ctx.spec, options);
  } catch (const Error& e) {
    return std::string("error[") + to_string(e.kind()) + "]: " + e.what();
  }
}

Outcome cli_round_trip(Sampler& rng, const Context& ctx) {
  const ExprAst ast = parse_expression(random_expression(rng, ctx.spec, 2));
  const std::string source = to_source(ast);
  ExprAst reparsed;
  try {
    reparsed = parse_expression(source);
  } catch (const ParseError& e) {
    return "printed source does not parse: " + source + " (" + e.what() + ")";
  }
  if (!(reparsed == ast)) return "source round trip changed the tree: " + source;

  EvalOptions options;
  options.caps = ctx.caps;
  Value value;
  try {
    value = evaluate(ast, ctx.spec, options);
  } catch (const Error&) {
    return std::nullopt;  // ill-typed; nothing printable to round-trip
  }
  if (std::holds_alternative<TensorSquare>(value) ||
      std::holds_alternative<JointTensorSquare>(value)) {
    return std::nullopt;
  }
  const std::string printed = to_string(value);
  const std::string again = run_text(printed, ctx);
  if (again != printed) {
    return "expression " + source + " prints " + printed + " which evaluates to " + again;
  }
  return std::nullopt;
}

Outcome cli_determinism(Sampler& rng, const Context& ctx) {
  const std::string source = random_expression(rng, ctx.spec, 2);
  const std::string first = run_text(source, ctx);
  const std::string second = run_text(source, ctx);
  if (first == second) return std::nullopt;
  return "expression " + source + " gave " + first + " then " + second;
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> table = {
      {"space.field_axioms", field_axioms, false},
      {"space.immutability", space_immutability, false},
      {"tensor.associativity", tensor_associativity, false},
      {"tensor.grade_additivity", tensor_grade_additivity, false},
      {"tensor.duality", tensor_duality, false},
      {"tensor.joint_monoid", tensor_joint_monoid, false},
      {"hopf.coassociativity", hopf_coassociativity, false},
      {"hopf.cocommutativity", hopf_cocommutativity, false},
      {"hopf.counit", hopf_counit, false},
      {"hopf.antipode", hopf_antipode, false},
      {"hopf.homomorphism", hopf_homomorphism, false},
      {"hopf.joint_coassociativity", joint_coassociativity, false},
      {"hopf.joint_cocommutativity", joint_cocommutativity, false},
      {"hopf.joint_counit", joint_counit, false},
      {"hopf.joint_antipode", joint_antipode_law, false},
      {"hopf.joint_homomorphism", joint_homomorphism, false},
      {"symmetry.projection", symmetry_projection, false},
      {"symmetry.quotient", symmetry_quotient, false},
      {"symmetry.anticommutativity", symmetry_anticommutativity, false},
      {"symmetry.homogeneous_coproduct", symmetry_homogeneous_coproduct, false},
      {"symmetry.polarization", symmetry_polarization, false},
      {"symmetry.duality", symmetry_duality, false},
      {"symmetry.projected_hopf_sym", symmetry_projected_hopf_sym, false},
      {"symmetry.projected_hopf_asym", symmetry_projected_hopf_asym, false},
      {"laplace.oracle", laplace_oracle, false},
      {"laplace.splitting", laplace_splitting, false},
      {"laplace.symmetry", laplace_symmetry, false},
      {"laplace.orthogonality", laplace_orthogonality, false},
      {"laplace.permutation", laplace_permutation, false},
      {"laplace.factorization", laplace_factorization, false},
      {"laplace.left_splitting", laplace_left_splitting, false},
      {"laplace.spot_values", laplace_spot_values, false},
      {"square.associativity", square_associativity, false},
      {"square.unit", square_unit, false},
      {"square.weak_commutativity", square_weak_commutativity, false},
      {"square.recovery", square_recovery, false},
      {"circle.from_square_sym", circle_from_square_sym, true},
      {"circle.from_square_asym", circle_from_square_asym, true},
      {"circle.associativity_sym", circle_associativity_sym, true},
      {"circle.associativity_asym", circle_associativity_asym, true},
      {"circle.commutativity_sym", circle_commutativity_sym, true},
      {"circle.generator_formula", circle_generator_formula, true},
      {"phi.homomorphism_tensor", phi_homomorphism_tensor, true},
      {"phi.homomorphism_sym", phi_homomorphism_sym, true},
      {"phi.homomorphism_asym", phi_homomorphism_asym, true},
      {"phi.triangular_tensor", phi_triangular_tensor, true},
      {"phi.triangular_sym", phi_triangular_sym, true},
      {"phi.triangular_asym", phi_triangular_asym, true},
      {"phi.grade_one_pairing", phi_grade_one_pairing, false},
      {"cli.round_trip", cli_round_trip, false},
      {"cli.determinism", cli_determinism, false},
  };
  return table;
}

// splitmix64 finalizer; decorrelates the per-suite streams.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_options(const CheckOptions& options) {
  if (options.max_grade > options.caps.grade) {
    throw Error(ErrorKind::kPrecondition, "max_grade " + std::to_string(options.max_grade) +
                                              " exceeds the grade cap " +
                                              std::to_string(options.caps.grade));
  }
}

SuiteResult run_one(std::size_t index, const SpaceSpec& spec, const CheckOptions& options) {
  const Suite& suite = suites()[index];
  SuiteResult result;
  result.name = suite.name;
  result.seed = mix(options.seed ^ mix(index + 1));
  auto it = options.suite_trials.find(suite.name);
  result.trials = it == options.suite_trials.end() ? options.trials : it->second;
  if (suite.needs_self_dual && !spec.self_dual()) {
    result.status = SuiteStatus::kSkip;
    result.note = "needs a self-dual space";
    return result;
  }

  Context ctx{spec, options.caps, options.max_grade, options.pairing};
  if (!ctx.pair) {
    ctx.pair = [&spec, caps = options.caps](const JointElement& a, const JointElement& b) {
      return laplace_closed(a, b, spec, caps);
    };
  }
  Sampler rng(result.seed);
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t trial = 0; trial < result.trials; ++trial) {
    Outcome outcome;
    try {
      outcome = suite.trial(rng, ctx);
    } catch (const Error& e) {
      outcome = std::string("error[") + to_string(e.kind()) + "]: " + e.what();
    }
    if (outcome) {
      result.status = SuiteStatus::kFail;
      result.failed_trial = trial;
      result.counterexample = *outcome;
      break;
    }
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

std::string random_expression(Sampler& rng, const SpaceSpec& spec, int depth) {
  return to_source(ExpressionMaker(rng, spec).any(depth));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SpaceSpec& spec,
                      const CheckOptions& options) {
  check_options(options);
  const auto& table = suites();
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (name == table[i].name) return run_one(i, spec, options);
  }
  throw Error(ErrorKind::kPrecondition, "unknown suite '" + name + "'");
}

CheckReport run_checks(const SpaceSpec& spec, const CheckOptions& options) {
  check_options(options);
  CheckReport report;
  if (options.trials == 0) return report;
  for (std::size_t i = 0; i < suites().size(); ++i) report.suites.push_back(run_one(i, spec, options));
  return report;
}

std::string format_report(const CheckReport& report, bool timing) {
  std::ostringstream out;
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto& s : report.suites) {
    const char* status = "PASS";
    switch (s.status) {
      case SuiteStatus::kPass: ++pass; break;
      case SuiteStatus::kFail: status = "FAIL"; ++fail; break;
      case SuiteStatus::kSkip: status = "SKIP"; ++skip; break;
    }
    char line[160];
    std::snprintf(line, sizeof line, "%-4s %-34s trials=%zu", status, s.name.c_str(), s.trials);
    out << line;
    if (timing) {
      std::snprintf(line, sizeof line, " time=%.3fs", s.seconds);
      out << line;
    }
    if (s.status == SuiteStatus::kSkip) out << " (" << s.note << ")";
    out << '\n';
    if (s.status == SuiteStatus::kFail) {
      out << "     counterexample (seed=" << s.seed << ", trial=" << s.failed_trial
          << "): " << s.counterexample << '\n';
    }
  }
  out << "summary: " << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
  return out.str();
}

}  // namespace tensalg
