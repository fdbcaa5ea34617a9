#pragma once

#include <map>
#include <utility>

#include "tensalg/caps.hpp"
#include "tensalg/element.hpp"

namespace tensalg {

// n! <Symm(u), Symm(v)> for a U-word u and a V-word v of equal length n,
// i.e. the permanent of the Gram minor [gram[u_k][v_l]]. Zero when the
// lengths differ.
Scalar symmetric_duality(const Word& u, const Word& v, const SpaceSpec& spec);

// Closed form of the Laplace pairing on single joint words:
// (u;v | u';v') = |u|! <Symm u, Symm v'> * |u'|! <Symm u', Symm v>.
Scalar laplace_words(const JointWord& a, const JointWord& b, const SpaceSpec& spec);

// Laplace pairing from the closed form, extended bilinearly.
Scalar laplace_closed(const JointElement& a, const JointElement& b, const SpaceSpec& spec,
                      const Caps& caps = {});

// Laplace pairing evaluated only from the splitting identity
// (a | b c) = sum (a_(1) | b)(a_(2) | c) and the generator-level values:
// (1|1) = 1, (x;1 | 1;y) = (1;y | x;1) = <x,y>, same-side generators pair
// to 0, generator against unit pairs to 0. Independent of laplace_closed.
Scalar laplace_recursive(const JointElement& a, const JointElement& b, const SpaceSpec& spec,
                         const Caps& caps = {});

// Pairing of two elements of T(U) under self-duality: (u | v) := (u;1 | 1;v).
Scalar self_dual_pairing(const Element& u, const Element& v, const SpaceSpec& spec,
                         const Caps& caps = {});

// Memo of closed-form pairings on word pairs, for callers that evaluate many
// coproduct legs against each other.
class PairingCache {
 public:
  explicit PairingCache(const SpaceSpec& spec) : spec_(spec) {}

  const Scalar& words(const Word& u, const Word& v);
  const Scalar& joint_words(const JointWord& a, const JointWord& b);

 private:
  const SpaceSpec& spec_;
  std::map<std::pair<Word, Word>, Scalar> words_;
  std::map<std::pair<JointWord, JointWord>, Scalar> joint_;
};

}  // namespace tensalg
