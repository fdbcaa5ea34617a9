#include "tensalg/hopf.hpp"

namespace tensalg {

namespace {

void check_caps(const Word& w, const Caps& caps) { check_grade_cap(w.size(), caps, "coproduct"); }

void check_caps(const JointWord& w, const Caps& caps) {
  check_grade_cap(w.u.size(), caps, "coproduct");
  check_grade_cap(w.v.size(), caps, "coproduct");
}

template <class Key>
Sparse<std::array<Key, 2>> coproduct_terms(const Sparse<Key>& a, const Caps& caps) {
  Sparse<std::array<Key, 2>> out;
  for (const auto& [w, c] : a) {
    check_caps(w, caps);
    for_each_split(w, [&](const Key& left, const Key& right) { out.add({left, right}, c); });
  }
  return out;
}

template <class Key>
Sparse<std::array<Key, 3>> coproduct_twice(const Sparse<Key>& a, bool split_left,
                                           const Caps& caps) {
  Sparse<std::array<Key, 3>> out;
  for (const auto& [legs, c] : coproduct_terms(a, caps)) {
    const Key& target = split_left ? legs[0] : legs[1];
    check_caps(target, caps);
    for_each_split(target, [&](const Key& x, const Key& y) {
      if (split_left) {
        out.add({x, y, legs[1]}, c);
      } else {
        out.add({legs[0], x, y}, c);
      }
    });
  }
  return out;
}

// S(x_1 ... x_n) = (-1)^n x_n ... x_1
std::pair<Word, int> antipode_word(const Word& w) {
  return {w.reversed(), w.size() % 2 ? -1 : 1};
}

std::pair<JointWord, int> antipode_word(const JointWord& w) {
  return {JointWord{w.u.reversed(), w.v.reversed()}, w.grade() % 2 ? -1 : 1};
}

template <class Key>
Sparse<Key> antipode_terms(const Sparse<Key>& a) {
  Sparse<Key> out;
  for (const auto& [w, c] : a) {
    auto [image, sign] = antipode_word(w);
    out.add(image, sign < 0 ? Scalar(-c) : c);
  }
  return out;
}

template <class Key>
Sparse<std::array<Key, 2>> flip_terms(const Sparse<std::array<Key, 2>>& t) {
  Sparse<std::array<Key, 2>> out;
  for (const auto& [legs, c] : t) out.add({legs[1], legs[0]}, c);
  return out;
}

template <class Key>
Sparse<std::array<Key, 2>> product_terms(const Sparse<std::array<Key, 2>>& a,
                                         const Sparse<std::array<Key, 2>>& b) {
  Sparse<std::array<Key, 2>> out;
  for (const auto& [la, ca] : a) {
    for (const auto& [lb, cb] : b) out.add({concat(la[0], lb[0]), concat(la[1], lb[1])}, ca * cb);
  }
  return out;
}

template <class Key>
Sparse<Key> multiply_terms(const Sparse<std::array<Key, 2>>& t) {
  Sparse<Key> out;
  for (const auto& [legs, c] : t) out.add(concat(legs[0], legs[1]), c);
  return out;
}

template <class Key>
Sparse<std::array<Key, 2>> antipode_leg(const Sparse<std::array<Key, 2>>& t, std::size_t leg) {
  Sparse<std::array<Key, 2>> out;
  for (const auto& [legs, c] : t) {
    auto [image, sign] = antipode_word(legs[leg]);
    auto moved = legs;
    moved[leg] = image;
    out.add(moved, sign < 0 ? Scalar(-c) : c);
  }
  return out;
}

template <class Key>
Sparse<Key> counit_leg(const Sparse<std::array<Key, 2>>& t, std::size_t leg) {
  Sparse<Key> out;
  for (const auto& [legs, c] : t) {
    if (legs[leg].empty()) out.add(legs[1 - leg], c);
  }
  return out;
}

template <class Terms, class LegText>
std::string square_text(const Terms& terms, LegText leg_text) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [legs, coef] : terms) {
    const bool negative = sgn(coef) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += to_string(Scalar(abs(coef))) + "\xC2\xB7(" + leg_text(legs[0]) + " | " +
           leg_text(legs[1]) + ")";
    first = false;
  }
  return out;
}

}  // namespace

TensorSquare coproduct(const Element& a, const Caps& caps) {
  return {a.side(), coproduct_terms(a.terms(), caps)};
}

Element antipode(const Element& a) { return Element(a.side(), antipode_terms(a.terms())); }

Scalar counit(const Element& a) { return a.coefficient(Word{}); }

JointTensorSquare joint_coproduct(const JointElement& a, const Caps& caps) {
  return {coproduct_terms(a.terms(), caps)};
}

JointElement joint_antipode(const JointElement& a) {
  return JointElement(antipode_terms(a.terms()));
}

Scalar joint_counit(const JointElement& a) { return a.coefficient(JointWord{}); }

TensorCube coproduct_left_twice(const Element& a, const Caps& caps) {
  return coproduct_twice(a.terms(), true, caps);
}

TensorCube coproduct_right_twice(const Element& a, const Caps& caps) {
  return coproduct_twice(a.terms(), false, caps);
}

JointTensorCube joint_coproduct_left_twice(const JointElement& a, const Caps& caps) {
  return coproduct_twice(a.terms(), true, caps);
}

JointTensorCube joint_coproduct_right_twice(const JointElement& a, const Caps& caps) {
  return coproduct_twice(a.terms(), false, caps);
}

TensorSquare flip(const TensorSquare& t) { return {t.side, flip_terms(t.terms)}; }
JointTensorSquare flip(const JointTensorSquare& t) { return {flip_terms(t.terms)}; }

TensorSquare square_product(const TensorSquare& a, const TensorSquare& b) {
  if (a.side != b.side) throw Error(ErrorKind::kSideMismatch, "square_product: side mismatch");
  return {a.side, product_terms(a.terms, b.terms)};
}

JointTensorSquare square_product(const JointTensorSquare& a, const JointTensorSquare& b) {
  return {product_terms(a.terms, b.terms)};
}

Element multiply_legs(const TensorSquare& t) { return Element(t.side, multiply_terms(t.terms)); }
JointElement multiply_legs(const JointTensorSquare& t) {
  return JointElement(multiply_terms(t.terms));
}

TensorSquare antipode_left(const TensorSquare& t) { return {t.side, antipode_leg(t.terms, 0)}; }
TensorSquare antipode_right(const TensorSquare& t) { return {t.side, antipode_leg(t.terms, 1)}; }
JointTensorSquare antipode_left(const JointTensorSquare& t) { return {antipode_leg(t.terms, 0)}; }
JointTensorSquare antipode_right(const JointTensorSquare& t) {
  return {antipode_leg(t.terms, 1)};
}

Element counit_left(const TensorSquare& t) { return Element(t.side, counit_leg(t.terms, 0)); }
Element counit_right(const TensorSquare& t) { return Element(t.side, counit_leg(t.terms, 1)); }
JointElement counit_left(const JointTensorSquare& t) {
  return JointElement(counit_leg(t.terms, 0));
}
JointElement counit_right(const JointTensorSquare& t) {
  return JointElement(counit_leg(t.terms, 1));
}

std::string to_string(const TensorSquare& t) {
  return square_text(t.terms, [&](const Word& w) { return word_text(t.side, w); });
}

std::string to_string(const JointTensorSquare& t) {
  return square_text(t.terms, [](const JointWord& w) { return joint_word_text(w); });
}

}  // namespace tensalg
