#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "tensalg/scalar.hpp"

namespace tensalg {

using GramMatrix = std::vector<std::vector<Scalar>>;

// A pair of finite-dimensional spaces U, V together with the bilinear form
// <e_i, f_j> = gram[i-1][j-1]. Basis indices are 1-based throughout.
// Self-duality identifies e_i with f_i, so the form becomes a form on U.
class SpaceSpec {
 public:
  std::size_t dim_u() const { return dim_u_; }
  std::size_t dim_v() const { return dim_v_; }
  bool self_dual() const { return self_dual_; }
  const GramMatrix& gram() const { return gram_; }

  // Unchecked lookup with 1-based indices.
  const Scalar& entry(std::size_t i, std::size_t j) const { return gram_[i - 1][j - 1]; }

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;

 private:
  friend SpaceSpec make_space(std::size_t, std::size_t, GramMatrix, bool);

  SpaceSpec(std::size_t dim_u, std::size_t dim_v, GramMatrix gram, bool self_dual)
      : dim_u_(dim_u), dim_v_(dim_v), gram_(std::move(gram)), self_dual_(self_dual) {}

  std::size_t dim_u_;
  std::size_t dim_v_;
  GramMatrix gram_;
  bool self_dual_;
};

SpaceSpec make_space(std::size_t dim_u, std::size_t dim_v, GramMatrix gram, bool self_dual);

// <e_i, f_j>, 1-based; throws on out-of-range indices.
const Scalar& pair_vectors(const SpaceSpec& spec, std::size_t i, std::size_t j);

SpaceSpec identity_space(std::size_t dim, bool self_dual = true);

// Line-based space file:
//   dim_u N
//   dim_v M
//   self_dual true|false
//   gram a_1 ... a_M        (N lines, entries INT or p/q)
// Blank lines and lines starting with '#' are ignored.
SpaceSpec parse_space(std::istream& in);
SpaceSpec load_space(const std::string& path);
std::string format_space(const SpaceSpec& spec);

}  // namespace tensalg
