#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "tensalg/caps.hpp"
#include "tensalg/element.hpp"

namespace tensalg {

// Sweedler components of a coproduct, materialized: sum of coef * (left (x) right).
struct TensorSquare {
  Side side = Side::kU;
  Sparse<std::array<Word, 2>> terms;

  friend bool operator==(const TensorSquare&, const TensorSquare&) = default;
};

struct JointTensorSquare {
  Sparse<std::array<JointWord, 2>> terms;

  friend bool operator==(const JointTensorSquare&, const JointTensorSquare&) = default;
};

// Three-leg combinations, used to compare the two iterated coproducts.
using TensorCube = Sparse<std::array<Word, 3>>;
using JointTensorCube = Sparse<std::array<JointWord, 3>>;

// Calls f(left, right) once per subset S of positions: (w_S, w_{complement}).
template <class F>
void for_each_split(const Word& w, F&& f) {
  const std::uint32_t count = std::uint32_t{1} << w.size();
  const std::uint32_t full = count - 1;
  for (std::uint32_t mask = 0; mask < count; ++mask) f(w.select(mask), w.select(full ^ mask));
}

template <class F>
void for_each_split(const JointWord& w, F&& f) {
  for_each_split(w.u, [&](const Word& u1, const Word& u2) {
    for_each_split(w.v, [&](const Word& v1, const Word& v2) {
      f(JointWord{u1, v1}, JointWord{u2, v2});
    });
  });
}

TensorSquare coproduct(const Element& a, const Caps& caps = {});
Element antipode(const Element& a);
Scalar counit(const Element& a);

JointTensorSquare joint_coproduct(const JointElement& a, const Caps& caps = {});
JointElement joint_antipode(const JointElement& a);
Scalar joint_counit(const JointElement& a);

// (Delta (x) I) Delta and (I (x) Delta) Delta.
TensorCube coproduct_left_twice(const Element& a, const Caps& caps = {});
TensorCube coproduct_right_twice(const Element& a, const Caps& caps = {});
JointTensorCube joint_coproduct_left_twice(const JointElement& a, const Caps& caps = {});
JointTensorCube joint_coproduct_right_twice(const JointElement& a, const Caps& caps = {});

// Leg swap.
TensorSquare flip(const TensorSquare& t);
JointTensorSquare flip(const JointTensorSquare& t);

// Componentwise product (a1 (x) a2)(b1 (x) b2) = a1 b1 (x) a2 b2.
TensorSquare square_product(const TensorSquare& a, const TensorSquare& b);
JointTensorSquare square_product(const JointTensorSquare& a, const JointTensorSquare& b);

// mu: multiply the two legs back together.
Element multiply_legs(const TensorSquare& t);
JointElement multiply_legs(const JointTensorSquare& t);

// Apply the antipode to one leg.
TensorSquare antipode_left(const TensorSquare& t);
TensorSquare antipode_right(const TensorSquare& t);
JointTensorSquare antipode_left(const JointTensorSquare& t);
JointTensorSquare antipode_right(const JointTensorSquare& t);

// Apply the counit to one leg and collapse: returns the other leg.
Element counit_left(const TensorSquare& t);
Element counit_right(const TensorSquare& t);
JointElement counit_left(const JointTensorSquare& t);
JointElement counit_right(const JointTensorSquare& t);

// (P (x) P) for a projection P, given as a function on Elements.
template <class Projection>
TensorSquare project_legs(const TensorSquare& t, Projection&& project) {
  TensorSquare out{t.side, {}};
  for (const auto& [legs, c] : t.terms) {
    const Element left = project(Element::word(t.side, legs[0]));
    const Element right = project(Element::word(t.side, legs[1]));
    for (const auto& [l, cl] : left.terms()) {
      for (const auto& [r, cr] : right.terms()) out.terms.add({l, r}, c * cl * cr);
    }
  }
  return out;
}

// Text `coef·(left | right) + ...` with legs as canonical words.
std::string to_string(const TensorSquare& t);
std::string to_string(const JointTensorSquare& t);

}  // namespace tensalg
