#include "tensalg/scalar.hpp"

#include <cctype>

#include "tensalg/error.hpp"

namespace tensalg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSideMismatch: return "side mismatch";
    case ErrorKind::kDimension: return "dimension mismatch";
    case ErrorKind::kIndexRange: return "index out of range";
    case ErrorKind::kCapExceeded: return "grade cap exceeded";
    case ErrorKind::kSelfDualRequired: return "self-duality required";
    case ErrorKind::kNotProjected: return "operand not projected";
    case ErrorKind::kPrecondition: return "precondition violated";
    case ErrorKind::kParse: return "syntax error";
    case ErrorKind::kType: return "type error";
  }
  return "error";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::kParse, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::kParse, "zero denominator in '" + std::string(text) + "'");
  }
  Scalar value(n, d);
  value.canonicalize();
  return negative ? Scalar(-value) : value;
}

std::string to_string(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Scalar factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return Scalar(out);
}

Scalar binomial(unsigned n, unsigned k) {
  if (k > n) return Scalar(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Scalar(out);
}

}  // namespace tensalg
