#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "tensalg/element.hpp"
#include "tensalg/hopf.hpp"
#include "tensalg/space.hpp"

namespace testing {

using namespace tensalg;

struct Term {
  Word word;
  Scalar coef;
};

inline Element U(std::initializer_list<Term> terms) {
  Element out(Side::kU);
  for (const auto& t : terms) out.add(t.word, t.coef);
  return out;
}

inline Element V(std::initializer_list<Term> terms) {
  Element out(Side::kV);
  for (const auto& t : terms) out.add(t.word, t.coef);
  return out;
}

struct JointTerm {
  Word u;
  Word v;
  Scalar coef;
};

inline JointElement J(std::initializer_list<JointTerm> terms) {
  JointElement out;
  for (const auto& t : terms) out.add(JointWord{t.u, t.v}, t.coef);
  return out;
}

inline Scalar q(long num, long den = 1) {
  Scalar out(num, den);
  out.canonicalize();
  return out;
}

inline SpaceSpec gram_space(GramMatrix gram, bool self_dual) {
  const std::size_t rows = gram.size();
  const std::size_t cols = gram.front().size();
  return make_space(rows, cols, std::move(gram), self_dual);
}

// 2x3 rational form used throughout for the non-self-dual configuration.
inline SpaceSpec rational_space() {
  return gram_space({{q(1), q(-1, 2), q(2)}, {q(3, 4), q(0), q(-1)}}, false);
}

// Symmetric but non-diagonal self-dual form.
inline SpaceSpec skew_self_dual() {
  return gram_space({{q(2), q(1, 3)}, {q(1, 3), q(-1)}}, true);
}

// ------------------------------------------------------------ oracles
// Independent of the library: straight from the defining formulas.

inline int inversion_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

// (1/n!) sum over all n! permutations, optionally signed.
inline Element permutation_average(const Element& a, bool signed_sum) {
  Element out(a.side());
  for (const auto& [w, c] : a.terms()) {
    std::vector<int> p(w.size());
    std::iota(p.begin(), p.end(), 0);
    Scalar count = 0;
    Element sum(a.side());
    do {
      Word moved;
      for (int i : p) moved.push_back(w[i]);
      sum.add(moved, Scalar(signed_sum ? inversion_sign(p) : 1));
      count += 1;
    } while (std::next_permutation(p.begin(), p.end()));
    out += sum * (c / count);
  }
  return out;
}

inline Element symm_oracle(const Element& a) { return permutation_average(a, false); }
inline Element asymm_oracle(const Element& a) { return permutation_average(a, true); }

// Permanent by expansion over all permutations.
inline Scalar permanent_oracle(const std::vector<std::vector<Scalar>>& m) {
  const std::size_t n = m.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Scalar total = 0;
  do {
    Scalar prod = 1;
    for (std::size_t i = 0; i < n; ++i) prod *= m[i][p[i]];
    total += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline std::vector<std::vector<Scalar>> gram_minor(const SpaceSpec& spec, const Word& u,
                                                   const Word& v) {
  std::vector<std::vector<Scalar>> m(u.size(), std::vector<Scalar>(v.size()));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m[i][j] = spec.entry(u[i], v[j]);
  return m;
}

// Delta built letter by letter from Delta(w x) = Delta(w) (1 (x) x + x (x) 1).
inline TensorSquare coproduct_oracle(const Element& a) {
  TensorSquare out{a.side(), {}};
  for (const auto& [w, c] : a.terms()) {
    Sparse<std::array<Word, 2>> acc({Word{}, Word{}}, Scalar(1));
    for (Letter x : w) {
      Sparse<std::array<Word, 2>> next;
      for (const auto& [legs, k] : acc) {
        Word left = legs[0], right = legs[1];
        right.push_back(x);
        next.add({legs[0], right}, k);
        left.push_back(x);
        next.add({left, legs[1]}, k);
      }
      acc = next;
    }
    out.terms.add(acc, c);
  }
  return out;
}

}  // namespace testing
