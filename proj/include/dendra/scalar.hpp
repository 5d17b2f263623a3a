#pragma once

// Exact rational scalars. Every coefficient in the library is a Scalar;
// there is no floating-point path.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dendra {

using Scalar = mpq_class;

/// Canonical rational num/den. Throws std::invalid_argument on den == 0.
Scalar make_scalar(long num, long den = 1);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Scalar& q);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Scalar parse_scalar(std::string_view text);

Scalar factorial(int n);
Scalar binomial(int n, int k);

inline int sign_power(int n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace dendra
