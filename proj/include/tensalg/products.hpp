#pragma once

#include <string>
#include <vector>

#include "tensalg/caps.hpp"
#include "tensalg/element.hpp"

namespace tensalg {

// a □ b = sum (a_(1) | b_(1)) a_(2) b_(2) on the joint algebra.
JointElement square(const JointElement& a, const JointElement& b, const SpaceSpec& spec,
                    const Caps& caps = {});

// The same product on T(U) of a self-dual space, with (u | v) := (u;1 | 1;v).
Element square(const Element& u, const Element& v, const SpaceSpec& spec,
               const Caps& caps = {});

// Symmetric circle product sum (u_(1) | v_(1)) Symm(u_(2) v_(2)); operands
// must already be symmetric.
Element circle_sym(const Element& u, const Element& v, const SpaceSpec& spec,
                   const Caps& caps = {});

// Antisymmetric circle product ASymm(u □ v); operands must be antisymmetric.
Element circle_antisym(const Element& u, const Element& v, const SpaceSpec& spec,
                       const Caps& caps = {});

// x_1 ... x_n  ->  x_1 □ ... □ x_n, extended linearly.
Element phi_tensor(const Element& a, const SpaceSpec& spec, const Caps& caps = {});

// x^n -> x ∘ ... ∘ x on powers, extended to products of distinct vectors by
// polarization. Input must be symmetric.
Element phi_sym(const Element& a, const SpaceSpec& spec, const Caps& caps = {});

// x_1 ∧ ... ∧ x_n -> x_1 ∘ ... ∘ x_n. Input must be antisymmetric.
Element phi_antisym(const Element& a, const SpaceSpec& spec, const Caps& caps = {});

enum class PhiMode { kTensor, kSymmetric, kAntisymmetric };

PhiMode parse_phi_mode(const std::string& text);
const char* to_string(PhiMode mode);

// Matrix of phi on the canonical graded basis up to max_grade:
// words (tensor), Symm of sorted words (symmetric), ASymm of strictly
// increasing words (antisymmetric). Column j holds the coordinates of
// phi(basis[j]).
struct PhiMatrix {
  PhiMode mode;
  std::size_t max_grade;
  std::vector<Element> basis;
  std::vector<std::size_t> grades;
  std::vector<std::vector<Scalar>> entries;

  // phi(b) - b has only terms of lower grade, for every basis element b.
  bool unit_triangular() const;
};

PhiMatrix phi_matrix(const SpaceSpec& spec, PhiMode mode, std::size_t max_grade,
                     const Caps& caps = {});

// Canonical basis of the given mode, graded up to max_grade.
std::vector<Element> canonical_basis(std::size_t dim, PhiMode mode, std::size_t max_grade,
                                     const Caps& caps = {});

// Coordinates of a (which must lie in the span) in the canonical basis.
std::vector<Scalar> basis_coordinates(const Element& a, PhiMode mode,
                                      const std::vector<Element>& basis);

std::string basis_label(const Element& b, PhiMode mode);
std::string format_phi_matrix(const PhiMatrix& m);

}  // namespace tensalg
