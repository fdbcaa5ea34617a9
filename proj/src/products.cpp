#include "tensalg/products.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tensalg/error.hpp"
#include "tensalg/hopf.hpp"
#include "tensalg/laplace.hpp"
#include "tensalg/symmetry.hpp"

namespace tensalg {

namespace {

void require_self_dual(const SpaceSpec& spec, const char* what) {
  if (!spec.self_dual()) {
    throw Error(ErrorKind::kSelfDualRequired, std::string(what) + " needs a self-dual space");
  }
}

void require_same_side(const Element& u, const Element& v, const char* what) {
  if (u.side() != v.side()) {
    throw Error(ErrorKind::kSideMismatch, std::string(what) + ": operands on different sides");
  }
}

// Groups coproduct terms by a key derived from the left leg so that only
// grade-compatible legs get paired.
template <class Legs, class KeyFn>
auto bucket_by(const Legs& terms, KeyFn key) {
  using Entry = typename Legs::Map::value_type;
  std::map<decltype(key(terms.begin()->first[0])), std::vector<const Entry*>> buckets;
  for (const auto& entry : terms) buckets[key(entry.first[0])].push_back(&entry);
  return buckets;
}

}  // namespace

JointElement square(const JointElement& a, const JointElement& b, const SpaceSpec& spec,
                    const Caps& caps) {
  JointElement out;
  if (a.is_zero() || b.is_zero()) return out;
  const JointTensorSquare da = joint_coproduct(a, caps);
  const JointTensorSquare db = joint_coproduct(b, caps);
  const auto buckets = bucket_by(db.terms, [](const JointWord& w) {
    return std::make_pair(w.u.size(), w.v.size());
  });
  PairingCache cache(spec);
  for (const auto& [la, ca] : da.terms) {
    // (a1 | b1) needs |b1.u| = |a1.v| and |b1.v| = |a1.u|.
    auto it = buckets.find(std::make_pair(la[0].v.size(), la[0].u.size()));
    if (it == buckets.end()) continue;
    for (const auto* entry : it->second) {
      const auto& [lb, cb] = *entry;
      const Scalar& p = cache.joint_words(la[0], lb[0]);
      if (!is_zero(p)) out.add(concat(la[1], lb[1]), ca * cb * p);
    }
  }
  return out;
}

namespace {

// sum (u_(1) | v_(1)) u_(2) v_(2), the shared core of square and circle.
template <class Sink>
void square_terms(const Element& u, const Element& v, const SpaceSpec& spec, const Caps& caps,
                  Sink&& sink) {
  if (u.is_zero() || v.is_zero()) return;
  const TensorSquare du = coproduct(u, caps);
  const TensorSquare dv = coproduct(v, caps);
  const auto buckets = bucket_by(dv.terms, [](const Word& w) { return w.size(); });
  PairingCache cache(spec);
  for (const auto& [lu, cu] : du.terms) {
    auto it = buckets.find(lu[0].size());
    if (it == buckets.end()) continue;
    for (const auto* entry : it->second) {
      const auto& [lv, cv] = *entry;
      const Scalar& p = cache.words(lu[0], lv[0]);
      if (!is_zero(p)) sink(concat(lu[1], lv[1]), cu * cv * p);
    }
  }
}

}  // namespace

Element square(const Element& u, const Element& v, const SpaceSpec& spec, const Caps& caps) {
  require_self_dual(spec, "square product on T(U)");
  require_same_side(u, v, "square");
  Element out(u.side());
  square_terms(u, v, spec, caps, [&](const Word& w, const Scalar& c) { out.add(w, c); });
  return out;
}

Element circle_sym(const Element& u, const Element& v, const SpaceSpec& spec,
                   const Caps& caps) {
  require_self_dual(spec, "symmetric circle product");
  require_same_side(u, v, "circle_sym");
  if (!is_symmetric(u, caps) || !is_symmetric(v, caps)) {
    throw Error(ErrorKind::kNotProjected, "circle_sym: operands must be symmetric");
  }
  // Symm(u_(2) v_(2)) depends only on the multiset of letters, so collect the
  // coefficients per multiset before symmetrizing.
  Element classes(u.side());
  square_terms(u, v, spec, caps,
               [&](const Word& w, const Scalar& c) { classes.add(w.sorted(), c); });
  return symmetrize(classes, caps);
}

Element circle_antisym(const Element& u, const Element& v, const SpaceSpec& spec,
                       const Caps& caps) {
  require_self_dual(spec, "antisymmetric circle product");
  require_same_side(u, v, "circle_antisym");
  if (!is_antisymmetric(u, caps) || !is_antisymmetric(v, caps)) {
    throw Error(ErrorKind::kNotProjected, "circle_antisym: operands must be antisymmetric");
  }
  return antisymmetrize(square(u, v, spec, caps), caps);
}

Element phi_tensor(const Element& a, const SpaceSpec& spec, const Caps& caps) {
  require_self_dual(spec, "phi_t");
  Element out(a.side());
  for (const auto& [w, c] : a.terms()) {
    check_grade_cap(w.size(), caps, "phi_t");
    Element image = Element::unit(a.side());
    for (Letter l : w) image = square(image, Element::generator(a.side(), l), spec, caps);
    out += image * c;
  }
  return out;
}

namespace {

Element circle_power(const Element& x, std::size_t n, const SpaceSpec& spec, const Caps& caps) {
  Element out = Element::unit(x.side());
  for (std::size_t k = 0; k < n; ++k) out = circle_sym(out, x, spec, caps);
  return out;
}

// phi(x_1 ... x_n) by polarization over the letters of a sorted word.
// Flipping every sign leaves each summand unchanged, so e_1 = +1 is fixed
// and the sum doubled.
Element phi_sym_monomial(Side side, const Word& letters, const SpaceSpec& spec,
                         const Caps& caps) {
  const std::size_t n = letters.size();
  if (n == 0) return Element::unit(side);
  check_permutation_cap(n, caps, "phi_s");
  std::map<std::string, Element> powers;
  Element total(side);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); mask += 2) {
    Element y(side);
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const bool negative = mask & (std::uint32_t{1} << i);
      y.add(Word{letters[i]}, Scalar(negative ? -1 : 1));
      if (negative) sign = -sign;
    }
    const std::string key = to_string(y);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, circle_power(y, n, spec, caps)).first;
    total += it->second * Scalar(sign);
  }
  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
  const Scalar scale =
      Scalar(2) / (Scalar(two_n) * factorial(static_cast<unsigned>(n)));
  return total * scale;
}

}  // namespace

Element phi_sym(const Element& a, const SpaceSpec& spec, const Caps& caps) {
  require_self_dual(spec, "phi_s");
  if (!is_symmetric(a, caps)) {
    throw Error(ErrorKind::kNotProjected, "phi_s: operand must be symmetric");
  }
  // A symmetric element is sum over multisets m of (sum of its coefficients
  // on the rearrangements of m) * Symm(m).
  std::map<Word, Scalar> classes;
  for (const auto& [w, c] : a.terms()) classes[w.sorted()] += c;
  Element out(a.side());
  for (const auto& [letters, d] : classes) {
    if (is_zero(d)) continue;
    out += phi_sym_monomial(a.side(), letters, spec, caps) * d;
  }
  return out;
}

Element phi_antisym(const Element& a, const SpaceSpec& spec, const Caps& caps) {
  require_self_dual(spec, "phi_a");
  if (!is_antisymmetric(a, caps)) {
    throw Error(ErrorKind::kNotProjected, "phi_a: operand must be antisymmetric");
  }
  // An antisymmetric element is sum over increasing words w of
  // (|w|! * coef(w)) * ASymm(w).
  Element out(a.side());
  for (const auto& [w, c] : a.terms()) {
    if (!std::is_sorted(w.begin(), w.end()) ||
        std::adjacent_find(w.begin(), w.end()) != w.end()) {
      continue;
    }
    Element image = Element::unit(a.side());
    for (Letter l : w) image = circle_antisym(image, Element::generator(a.side(), l), spec, caps);
    out += image * (factorial(static_cast<unsigned>(w.size())) * c);
  }
  return out;
}

PhiMode parse_phi_mode(const std::string& text) {
  if (text == "tensor") return PhiMode::kTensor;
  if (text == "sym" || text == "symmetric") return PhiMode::kSymmetric;
  if (text == "asym" || text == "antisymmetric") return PhiMode::kAntisymmetric;
  throw Error(ErrorKind::kParse, "unknown mode '" + text + "' (tensor, sym, asym)");
}

const char* to_string(PhiMode mode) {
  switch (mode) {
    case PhiMode::kTensor: return "tensor";
    case PhiMode::kSymmetric: return "sym";
    case PhiMode::kAntisymmetric: return "asym";
  }
  return "?";
}

namespace {

// Representative word of each basis element: the word itself (tensor), the
// sorted word (symmetric), the strictly increasing word (antisymmetric).
void enumerate_words(std::size_t dim, PhiMode mode, std::size_t grade, Word& prefix,
                     std::vector<Word>& out) {
  if (prefix.size() == grade) {
    out.push_back(prefix);
    return;
  }
  Letter start = 1;
  if (!prefix.empty() && mode == PhiMode::kSymmetric) start = prefix.back();
  if (!prefix.empty() && mode == PhiMode::kAntisymmetric) start = prefix.back() + 1;
  for (std::size_t l = start; l <= dim; ++l) {
    prefix.push_back(static_cast<Letter>(l));
    enumerate_words(dim, mode, grade, prefix, out);
    prefix = prefix.without_last();
  }
}

Word representative(const Element& b) {
  // Basis elements list their sorted representative first among words of
  // top grade, since the sorted rearrangement is lexicographically least.
  Word top;
  for (const auto& [w, c] : b.terms()) {
    if (w.size() == b.max_grade()) return w;
  }
  return top;
}

Element apply_phi(const Element& b, PhiMode mode, const SpaceSpec& spec, const Caps& caps) {
  switch (mode) {
    case PhiMode::kTensor: return phi_tensor(b, spec, caps);
    case PhiMode::kSymmetric: return phi_sym(b, spec, caps);
    case PhiMode::kAntisymmetric: return phi_antisym(b, spec, caps);
  }
  return b;
}

}  // namespace

std::vector<Element> canonical_basis(std::size_t dim, PhiMode mode, std::size_t max_grade,
                                     const Caps& caps) {
  check_grade_cap(max_grade, caps, "phi-matrix");
  std::vector<Element> basis;
  for (std::size_t g = 0; g <= max_grade; ++g) {
    std::vector<Word> words;
    Word prefix;
    enumerate_words(dim, mode, g, prefix, words);
    for (const Word& w : words) {
      const Element word = Element::word(Side::kU, w);
      switch (mode) {
        case PhiMode::kTensor: basis.push_back(word); break;
        case PhiMode::kSymmetric: basis.push_back(symmetrize(word, caps)); break;
        case PhiMode::kAntisymmetric: basis.push_back(antisymmetrize(word, caps)); break;
      }
    }
  }
  return basis;
}

std::vector<Scalar> basis_coordinates(const Element& a, PhiMode mode,
                                      const std::vector<Element>& basis) {
  std::map<Word, std::size_t> index;
  for (std::size_t j = 0; j < basis.size(); ++j) index.emplace(representative(basis[j]), j);

  std::vector<Scalar> coords(basis.size(), Scalar(0));
  for (const auto& [w, c] : a.terms()) {
    switch (mode) {
      case PhiMode::kTensor: {
        auto it = index.find(w);
        if (it == index.end()) throw Error(ErrorKind::kPrecondition, "word outside basis");
        coords[it->second] += c;
        break;
      }
      case PhiMode::kSymmetric: {
        auto it = index.find(w.sorted());
        if (it == index.end()) throw Error(ErrorKind::kPrecondition, "word outside basis");
        coords[it->second] += c;
        break;
      }
      case PhiMode::kAntisymmetric: {
        auto it = index.find(w);
        if (it != index.end()) {
          coords[it->second] += c * factorial(static_cast<unsigned>(w.size()));
        }
        break;
      }
    }
  }

  Element rebuilt(a.side());
  for (std::size_t j = 0; j < basis.size(); ++j) rebuilt += basis[j] * coords[j];
  if (rebuilt != a) {
    throw Error(ErrorKind::kPrecondition, "element is not in the span of the basis");
  }
  return coords;
}

bool PhiMatrix::unit_triangular() const {
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i == j) {
        if (entries[i][j] != 1) return false;
      } else if (grades[i] >= grades[j] && !is_zero(entries[i][j])) {
        return false;
      }
    }
  }
  return true;
}

PhiMatrix phi_matrix(const SpaceSpec& spec, PhiMode mode, std::size_t max_grade,
                     const Caps& caps) {
  require_self_dual(spec, "phi-matrix");
  PhiMatrix m{mode, max_grade, canonical_basis(spec.dim_u(), mode, max_grade, caps), {}, {}};
  const std::size_t n = m.basis.size();
  m.entries.assign(n, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t j = 0; j < n; ++j) {
    m.grades.push_back(m.basis[j].max_grade());
    const auto column = basis_coordinates(apply_phi(m.basis[j], mode, spec, caps), mode, m.basis);
    for (std::size_t i = 0; i < n; ++i) m.entries[i][j] = column[i];
  }
  return m;
}

std::string basis_label(const Element& b, PhiMode mode) {
  const Word w = representative(b);
  if (w.size() <= 1 || mode == PhiMode::kTensor) return word_text(Side::kU, w);
  if (mode == PhiMode::kSymmetric) return "symm(" + word_text(Side::kU, w) + ")";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += '^';
    out += "e" + std::to_string(w[k]);
  }
  return out;
}

std::string format_phi_matrix(const PhiMatrix& m) {
  std::ostringstream out;
  out << "mode: " << to_string(m.mode) << "\n";
  out << "max_grade: " << m.max_grade << "\n";
  out << "basis:";
  for (const auto& b : m.basis) out << ' ' << basis_label(b, m.mode);
  out << "\n";
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    out << "row " << i + 1 << ":";
    for (const auto& x : m.entries[i]) out << ' ' << to_string(x);
    out << "\n";
  }
  out << "triangular: " << (m.unit_triangular() ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace tensalg
