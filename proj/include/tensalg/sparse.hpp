#pragma once

#include <map>
#include <utility>

#include "tensalg/scalar.hpp"

namespace tensalg {

// Finite linear combination of basis keys with exact coefficients.
// Zero coefficients are never stored, so equality of two combinations is
// equality of their maps.
template <class Key>
class Sparse {
 public:
  using Map = std::map<Key, Scalar>;
  using const_iterator = typename Map::const_iterator;

  Sparse() = default;
  Sparse(const Key& key, const Scalar& coef) { add(key, coef); }

  void add(const Key& key, const Scalar& coef) {
    if (is_zero(coef)) return;
    auto [it, inserted] = terms_.try_emplace(key, coef);
    if (!inserted) {
      it->second += coef;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  void add(const Sparse& other, const Scalar& scale = Scalar(1)) {
    if (is_zero(scale)) return;
    for (const auto& [key, coef] : other.terms_) add(key, coef * scale);
  }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& map() const { return terms_; }

  Sparse scaled(const Scalar& s) const {
    Sparse out;
    if (is_zero(s)) return out;
    for (const auto& [key, coef] : terms_) out.terms_.emplace_hint(out.terms_.end(), key, coef * s);
    return out;
  }

  friend bool operator==(const Sparse&, const Sparse&) = default;

 private:
  Map terms_;
};

}  // namespace tensalg
