#include "tensalg/symmetry.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "tensalg/error.hpp"

namespace tensalg {

namespace {

// Every distinct rearrangement r of w appears prod(m_i!) times among the
// n! permutations, where m_i are the letter multiplicities.
void add_symmetrized(const Word& w, const Scalar& coef, Element& out) {
  Word letters = w.sorted();
  Scalar multiplicity(1);
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    multiplicity *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  const Scalar weight = coef * multiplicity / factorial(static_cast<unsigned>(w.size()));
  std::array<Letter, Word::kCapacity> buf{};
  std::copy(letters.begin(), letters.end(), buf.begin());
  const auto first = buf.begin();
  const auto last = buf.begin() + letters.size();
  do {
    out.add(Word(std::span<const Letter>(first, last)), weight);
  } while (std::next_permutation(first, last));
}

int permutation_sign(std::span<const std::size_t> p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  }
  return inversions % 2 ? -1 : 1;
}

void add_antisymmetrized(const Word& w, const Scalar& coef, Element& out) {
  const Word letters = w.sorted();
  if (std::adjacent_find(letters.begin(), letters.end()) != letters.end()) return;
  const Scalar weight = coef / factorial(static_cast<unsigned>(w.size()));
  std::array<std::size_t, Word::kCapacity> positions{};
  const auto first = positions.begin();
  const auto last = positions.begin() + w.size();
  std::iota(first, last, std::size_t{0});
  do {
    Word image;
    for (auto it = first; it != last; ++it) image.push_back(w[*it]);
    const int sign = permutation_sign(std::span<const std::size_t>(first, last));
    out.add(image, sign < 0 ? Scalar(-weight) : weight);
  } while (std::next_permutation(first, last));
}

void require_same_side(const Element& u, const Element& v, const char* what) {
  if (u.side() != v.side()) {
    throw Error(ErrorKind::kSideMismatch, std::string(what) + ": operands on different sides");
  }
}

}  // namespace

Element symmetrize(const Element& a, const Caps& caps) {
  Element out(a.side());
  for (const auto& [w, c] : a.terms()) {
    check_permutation_cap(w.size(), caps, "symm");
    add_symmetrized(w, c, out);
  }
  return out;
}

Element antisymmetrize(const Element& a, const Caps& caps) {
  Element out(a.side());
  for (const auto& [w, c] : a.terms()) {
    check_permutation_cap(w.size(), caps, "asymm");
    add_antisymmetrized(w, c, out);
  }
  return out;
}

bool is_symmetric(const Element& a, const Caps& caps) { return symmetrize(a, caps) == a; }

bool is_antisymmetric(const Element& a, const Caps& caps) {
  return antisymmetrize(a, caps) == a;
}

Element sym_product(const Element& u, const Element& v, const Caps& caps) {
  require_same_side(u, v, "sym_product");
  return symmetrize(concat_product(u, v), caps);
}

Element wedge_product(const Element& u, const Element& v, const Caps& caps) {
  require_same_side(u, v, "wedge_product");
  return antisymmetrize(concat_product(u, v), caps);
}

Element power(const Element& x, std::size_t t, const Caps& caps) {
  if (x.max_grade() > 1) {
    throw Error(ErrorKind::kPrecondition, "pow: base must have grade <= 1");
  }
  check_grade_cap(t, caps, "pow");
  Element out = Element::unit(x.side());
  for (std::size_t k = 0; k < t; ++k) out = concat_product(out, x);
  return out;
}

Element polarization_expansion(std::span<const Element> vectors, const Caps& caps) {
  const std::size_t t = vectors.size();
  if (t == 0) throw Error(ErrorKind::kPrecondition, "polarization needs at least one vector");
  check_permutation_cap(t, caps, "polarization");
  const Side side = vectors.front().side();
  for (const auto& x : vectors) {
    if (x.side() != side) throw Error(ErrorKind::kSideMismatch, "polarization: mixed sides");
  }

  Element total(side);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << t); ++mask) {
    Element combination(side);
    int sign = 1;
    for (std::size_t i = 0; i < t; ++i) {
      if (mask & (std::uint32_t{1} << i)) {
        combination -= vectors[i];
        sign = -sign;
      } else {
        combination += vectors[i];
      }
    }
    total += power(combination, t, caps) * Scalar(sign);
  }
  mpz_class two_t;
  mpz_ui_pow_ui(two_t.get_mpz_t(), 2, t);
  const Scalar scale = Scalar(1) / (Scalar(two_t) * factorial(static_cast<unsigned>(t)));
  return total * scale;
}

}  // namespace tensalg
