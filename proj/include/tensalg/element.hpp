#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tensalg/space.hpp"
#include "tensalg/sparse.hpp"
#include "tensalg/word.hpp"

namespace tensalg {

// Member of T(U) or T(V): a finite combination of words on one side.
// Scalars live in grade 0 as multiples of the empty word.
class Element {
 public:
  explicit Element(Side side = Side::kU) : side_(side) {}
  Element(Side side, Sparse<Word> terms) : side_(side), terms_(std::move(terms)) {}

  static Element unit(Side side, const Scalar& coef = Scalar(1)) {
    return Element(side, Sparse<Word>(Word{}, coef));
  }
  static Element generator(Side side, Letter index, const Scalar& coef = Scalar(1)) {
    return Element(side, Sparse<Word>(Word{index}, coef));
  }
  static Element word(Side side, const Word& w, const Scalar& coef = Scalar(1)) {
    return Element(side, Sparse<Word>(w, coef));
  }

  Side side() const { return side_; }
  const Sparse<Word>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Word& w) const { return terms_.coefficient(w); }
  void add(const Word& w, const Scalar& coef) { terms_.add(w, coef); }

  // Largest word length present; 0 for the zero element.
  std::size_t max_grade() const;
  bool is_homogeneous() const;

  Element operator-() const { return Element(side_, terms_.scaled(Scalar(-1))); }
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Scalar& s) {
    terms_ = terms_.scaled(s);
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.side_ == b.side_ && a.terms_ == b.terms_;
  }

 private:
  Side side_;
  Sparse<Word> terms_;
};

// Member of the joint algebra T(U) (x) T(V).
class JointElement {
 public:
  JointElement() = default;
  explicit JointElement(Sparse<JointWord> terms) : terms_(std::move(terms)) {}

  static JointElement unit(const Scalar& coef = Scalar(1)) {
    return JointElement(Sparse<JointWord>(JointWord{}, coef));
  }
  static JointElement word(const Word& u, const Word& v, const Scalar& coef = Scalar(1)) {
    return JointElement(Sparse<JointWord>(JointWord{u, v}, coef));
  }

  const Sparse<JointWord>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const JointWord& w) const { return terms_.coefficient(w); }
  void add(const JointWord& w, const Scalar& coef) { terms_.add(w, coef); }

  // Largest word length on either side.
  std::size_t max_side_grade() const;

  JointElement operator-() const { return JointElement(terms_.scaled(Scalar(-1))); }
  JointElement& operator+=(const JointElement& other) {
    terms_.add(other.terms_);
    return *this;
  }
  JointElement& operator-=(const JointElement& other) {
    terms_.add(other.terms_, Scalar(-1));
    return *this;
  }
  JointElement& operator*=(const Scalar& s) {
    terms_ = terms_.scaled(s);
    return *this;
  }

  friend JointElement operator+(JointElement a, const JointElement& b) { return a += b; }
  friend JointElement operator-(JointElement a, const JointElement& b) { return a -= b; }
  friend JointElement operator*(JointElement a, const Scalar& s) { return a *= s; }
  friend JointElement operator*(const Scalar& s, JointElement a) { return a *= s; }
  friend bool operator==(const JointElement&, const JointElement&) = default;

 private:
  Sparse<JointWord> terms_;
};

// Concatenation product on T(U) or T(V).
Element concat_product(const Element& a, const Element& b);

// (u1;v1)(u2;v2) = (u1 u2 ; v1 v2), extended bilinearly.
JointElement joint_product(const JointElement& a, const JointElement& b);

// u (x) v for u in T(U), v in T(V).
JointElement tensor(const Element& u, const Element& v);

// Places an element of T(U) as (u;1), of T(V) as (1;v).
JointElement embed(const Element& a);

// <a, b> extended to words: product of positional pairings on equal grades,
// zero across grades.
Scalar duality(const Element& a, const Element& b, const SpaceSpec& spec);

// Homogeneous components in increasing grade; zero parts omitted.
std::vector<std::pair<std::size_t, Element>> grade_parts(const Element& a);
Element grade_part(const Element& a, std::size_t grade);

// Throws kIndexRange when a letter exceeds its side's dimension.
void validate(const Element& a, const SpaceSpec& spec);
void validate(const JointElement& a, const SpaceSpec& spec);

// Canonical text. Element terms: `coef·e1*e3`, the unit term printed as the
// bare coefficient, negative terms joined with " - ". Joint terms:
// `coef·e1*e2;f1`, with an empty side printed `1`. Zero prints as `0`.
std::string word_text(Side side, const Word& w);
std::string joint_word_text(const JointWord& w);
std::string to_string(const Element& a);
std::string to_string(const JointElement& a);

}  // namespace tensalg
