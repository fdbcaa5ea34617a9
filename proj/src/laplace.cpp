#include "tensalg/laplace.hpp"

#include <bit>
#include <vector>

#include "tensalg/error.hpp"
#include "tensalg/hopf.hpp"

namespace tensalg {

Scalar symmetric_duality(const Word& u, const Word& v, const SpaceSpec& spec) {
  if (u.size() != v.size()) return Scalar(0);
  const std::size_t n = u.size();
  if (n > 20) throw Error(ErrorKind::kCapExceeded, "pairing of words longer than 20 letters");
  // dp[mask]: sum over injective assignments of the first popcount(mask)
  // letters of u onto the positions of v in mask.
  std::vector<Scalar> dp(std::size_t{1} << n, Scalar(0));
  dp[0] = 1;
  for (std::uint32_t mask = 0; mask + 1 < dp.size(); ++mask) {
    if (is_zero(dp[mask])) continue;
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (std::uint32_t{1} << col)) continue;
      const Scalar& g = pair_vectors(spec, u[row], v[col]);
      if (!is_zero(g)) dp[mask | (std::uint32_t{1} << col)] += dp[mask] * g;
    }
  }
  return dp.back();
}

Scalar laplace_words(const JointWord& a, const JointWord& b, const SpaceSpec& spec) {
  if (a.u.size() != b.v.size() || b.u.size() != a.v.size()) return Scalar(0);
  Scalar first = symmetric_duality(a.u, b.v, spec);
  if (is_zero(first)) return first;
  return first * symmetric_duality(b.u, a.v, spec);
}

namespace {

void check_pairing_caps(const JointElement& a, const Caps& caps) {
  check_grade_cap(a.max_side_grade(), caps, "laplace pairing");
}

}  // namespace

Scalar laplace_closed(const JointElement& a, const JointElement& b, const SpaceSpec& spec,
                      const Caps& caps) {
  check_pairing_caps(a, caps);
  check_pairing_caps(b, caps);
  Scalar total(0);
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      // Unequal grades pair to zero; skip before touching the Gram matrix.
      if (wa.u.size() != wb.v.size() || wb.u.size() != wa.v.size()) continue;
      total += ca * cb * laplace_words(wa, wb, spec);
    }
  }
  return total;
}

namespace {

class RecursivePairing {
 public:
  explicit RecursivePairing(const SpaceSpec& spec) : spec_(spec) {}

  Scalar eval(const JointWord& a, const JointWord& b) {
    if (b.empty()) {
      if (a.empty()) return Scalar(1);
      // (a | 1) = (1 | a), which peels a down to (1 | generator) = 0.
      return eval(b, a);
    }
    const auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    JointWord rest = b;
    JointWord last;
    if (!b.v.empty()) {
      last.v.push_back(b.v.back());
      rest.v = b.v.without_last();
    } else {
      last.u.push_back(b.u.back());
      rest.u = b.u.without_last();
    }

    Scalar value(0);
    if (rest.empty()) {
      if (a.grade() == 1) {
        value = generator_pair(a, last);
      } else if (!a.empty()) {
        // Pairing is symmetric; peel the longer word instead.
        value = eval(last, a);
      }
    } else {
      for_each_split(a, [&](const JointWord& a1, const JointWord& a2) {
        Scalar right = eval(a2, last);
        if (is_zero(right)) return;
        value += eval(a1, rest) * right;
      });
    }
    memo_.emplace(key, value);
    return value;
  }

 private:
  Scalar generator_pair(const JointWord& a, const JointWord& g) const {
    if (a.u.size() == 1 && g.v.size() == 1) return pair_vectors(spec_, a.u[0], g.v[0]);
    if (a.v.size() == 1 && g.u.size() == 1) return pair_vectors(spec_, g.u[0], a.v[0]);
    return Scalar(0);
  }

  const SpaceSpec& spec_;
  std::map<std::pair<JointWord, JointWord>, Scalar> memo_;
};

}  // namespace

Scalar laplace_recursive(const JointElement& a, const JointElement& b, const SpaceSpec& spec,
                         const Caps& caps) {
  check_pairing_caps(a, caps);
  check_pairing_caps(b, caps);
  RecursivePairing pairing(spec);
  Scalar total(0);
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) total += ca * cb * pairing.eval(wa, wb);
  }
  return total;
}

Scalar self_dual_pairing(const Element& u, const Element& v, const SpaceSpec& spec,
                         const Caps& caps) {
  if (!spec.self_dual()) {
    throw Error(ErrorKind::kSelfDualRequired, "pairing within T(U) needs a self-dual space");
  }
  if (u.side() != v.side()) {
    throw Error(ErrorKind::kSideMismatch, "self-dual pairing: operands on different sides");
  }
  check_grade_cap(u.max_grade(), caps, "laplace pairing");
  check_grade_cap(v.max_grade(), caps, "laplace pairing");
  Scalar total(0);
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      if (wu.size() == wv.size()) total += cu * cv * symmetric_duality(wu, wv, spec);
    }
  }
  return total;
}

const Scalar& PairingCache::words(const Word& u, const Word& v) {
  auto key = std::make_pair(u, v);
  auto it = words_.find(key);
  if (it == words_.end()) it = words_.emplace(key, symmetric_duality(u, v, spec_)).first;
  return it->second;
}

const Scalar& PairingCache::joint_words(const JointWord& a, const JointWord& b) {
  auto key = std::make_pair(a, b);
  auto it = joint_.find(key);
  if (it == joint_.end()) {
    Scalar value(0);
    if (a.u.size() == b.v.size() && b.u.size() == a.v.size()) {
      value = words(a.u, b.v);
      if (!is_zero(value)) value *= words(b.u, a.v);
    }
    it = joint_.emplace(key, value).first;
  }
  return it->second;
}

}  // namespace tensalg
