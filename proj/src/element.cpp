#include "tensalg/element.hpp"

#include <algorithm>

#include "tensalg/caps.hpp"
#include "tensalg/error.hpp"

namespace tensalg {

void check_grade_cap(std::size_t grade, const Caps& caps, const char* what) {
  if (grade > caps.grade) {
    throw Error(ErrorKind::kCapExceeded, std::string(what) + ": grade " + std::to_string(grade) +
                                             " exceeds cap " + std::to_string(caps.grade));
  }
}

void check_permutation_cap(std::size_t grade, const Caps& caps, const char* what) {
  if (grade > caps.permutation) {
    throw Error(ErrorKind::kCapExceeded, std::string(what) + ": grade " + std::to_string(grade) +
                                             " exceeds cap " +
                                             std::to_string(caps.permutation));
  }
}

namespace {

void require_same_side(const Element& a, const Element& b, const char* what) {
  if (a.side() != b.side()) {
    throw Error(ErrorKind::kSideMismatch, std::string(what) + ": operands on different sides");
  }
}

}  // namespace

std::size_t Element::max_grade() const {
  std::size_t g = 0;
  // Graded order puts the longest words last.
  if (!terms_.empty()) g = std::prev(terms_.end())->first.size();
  return g;
}

bool Element::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.size() == max_grade();
}

Element& Element::operator+=(const Element& other) {
  require_same_side(*this, other, "addition");
  terms_.add(other.terms_);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_side(*this, other, "subtraction");
  terms_.add(other.terms_, Scalar(-1));
  return *this;
}

std::size_t JointElement::max_side_grade() const {
  std::size_t g = 0;
  for (const auto& [w, c] : terms_) g = std::max({g, w.u.size(), w.v.size()});
  return g;
}

Element concat_product(const Element& a, const Element& b) {
  require_same_side(a, b, "concat_product");
  Element out(a.side());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) out.add(concat(wa, wb), ca * cb);
  }
  return out;
}

JointElement joint_product(const JointElement& a, const JointElement& b) {
  JointElement out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) out.add(concat(wa, wb), ca * cb);
  }
  return out;
}

JointElement tensor(const Element& u, const Element& v) {
  if (u.side() != Side::kU || v.side() != Side::kV) {
    throw Error(ErrorKind::kSideMismatch, "tensor: expected a U-side and a V-side operand");
  }
  JointElement out;
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) out.add(JointWord{wu, wv}, cu * cv);
  }
  return out;
}

JointElement embed(const Element& a) {
  JointElement out;
  for (const auto& [w, c] : a.terms()) {
    out.add(a.side() == Side::kU ? JointWord{w, Word{}} : JointWord{Word{}, w}, c);
  }
  return out;
}

Scalar duality(const Element& a, const Element& b, const SpaceSpec& spec) {
  if (a.side() != Side::kU || b.side() != Side::kV) {
    throw Error(ErrorKind::kSideMismatch, "duality: expected a U-side and a V-side operand");
  }
  Scalar total(0);
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      if (wa.size() != wb.size()) continue;
      Scalar term = ca * cb;
      for (std::size_t k = 0; k < wa.size() && !is_zero(term); ++k) {
        term *= pair_vectors(spec, wa[k], wb[k]);
      }
      total += term;
    }
  }
  return total;
}

std::vector<std::pair<std::size_t, Element>> grade_parts(const Element& a) {
  std::vector<std::pair<std::size_t, Element>> parts;
  for (const auto& [w, c] : a.terms()) {
    if (parts.empty() || parts.back().first != w.size()) {
      parts.emplace_back(w.size(), Element(a.side()));
    }
    parts.back().second.add(w, c);
  }
  return parts;
}

Element grade_part(const Element& a, std::size_t grade) {
  Element out(a.side());
  for (const auto& [w, c] : a.terms()) {
    if (w.size() == grade) out.add(w, c);
  }
  return out;
}

namespace {

void validate_word(const Word& w, std::size_t dim, Side side) {
  for (Letter l : w) {
    if (l < 1 || l > dim) {
      throw Error(ErrorKind::kIndexRange, std::string(1, side_letter(side)) +
                                              std::to_string(l) + " outside dimension " +
                                              std::to_string(dim));
    }
  }
}

std::size_t side_dim(Side side, const SpaceSpec& spec) {
  return side == Side::kU ? spec.dim_u() : spec.dim_v();
}

const char* kDot = "\xC2\xB7";  // U+00B7 MIDDLE DOT

template <class Terms, class TermText>
std::string join_terms(const Terms& terms, TermText term_text) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, coef] : terms) {
    const bool negative = sgn(coef) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += term_text(key, Scalar(abs(coef)));
    first = false;
  }
  return out;
}

}  // namespace

void validate(const Element& a, const SpaceSpec& spec) {
  for (const auto& [w, c] : a.terms()) validate_word(w, side_dim(a.side(), spec), a.side());
}

void validate(const JointElement& a, const SpaceSpec& spec) {
  for (const auto& [w, c] : a.terms()) {
    validate_word(w.u, spec.dim_u(), Side::kU);
    validate_word(w.v, spec.dim_v(), Side::kV);
  }
}

std::string word_text(Side side, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += '*';
    out += side_letter(side);
    out += std::to_string(w[k]);
  }
  return out;
}

std::string joint_word_text(const JointWord& w) {
  return word_text(Side::kU, w.u) + ";" + word_text(Side::kV, w.v);
}

std::string to_string(const Element& a) {
  return join_terms(a.terms(), [&](const Word& w, const Scalar& c) {
    if (w.empty()) return to_string(c);
    return to_string(c) + kDot + word_text(a.side(), w);
  });
}

std::string to_string(const JointElement& a) {
  return join_terms(a.terms(), [](const JointWord& w, const Scalar& c) {
    return to_string(c) + kDot + joint_word_text(w);
  });
}

}  // namespace tensalg
