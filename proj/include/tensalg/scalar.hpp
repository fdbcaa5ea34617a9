#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tensalg {

// Exact rational field element. gmpxx keeps arithmetic results canonical
// (reduced, positive denominator); values built from text are canonicalized
// by parse_scalar.
using Scalar = mpq_class;

// Accepts `INT` or `INT/INT` with an optional leading sign.
Scalar parse_scalar(std::string_view text);

// Canonical text: `p` when the denominator is 1, `p/q` otherwise.
std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

Scalar factorial(unsigned n);
Scalar binomial(unsigned n, unsigned k);

}  // namespace tensalg
