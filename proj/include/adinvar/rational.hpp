#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace adinvar {

/// Exact rational scalar. Every structure constant, metric entry and tensor
/// coefficient in the library is one of these; equality is exact.
using Scalar = mpq_class;

/// Parses "p/q", "p" or "-p/q" (surrounding whitespace allowed). Throws
/// Error(parse) on malformed text or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

}  // namespace adinvar
