#pragma once

#include <span>

#include "tensalg/caps.hpp"
#include "tensalg/element.hpp"

namespace tensalg {

// Symm: average over all rearrangements of each word's letters.
Element symmetrize(const Element& a, const Caps& caps = {});

// ASymm: sign-weighted average over all rearrangements.
Element antisymmetrize(const Element& a, const Caps& caps = {});

bool is_symmetric(const Element& a, const Caps& caps = {});
bool is_antisymmetric(const Element& a, const Caps& caps = {});

// Products of the symmetric and exterior algebras, realized inside T(U).
Element sym_product(const Element& u, const Element& v, const Caps& caps = {});
Element wedge_product(const Element& u, const Element& v, const Caps& caps = {});

// t-fold concatenation power of an element of grade <= 1.
Element power(const Element& x, std::size_t t, const Caps& caps = {});

// (1 / 2^t t!) sum over signs e_i = +-1 of e_1...e_t (e_1 x_1 + ... + e_t x_t)^t.
Element polarization_expansion(std::span<const Element> vectors, const Caps& caps = {});

}  // namespace tensalg
