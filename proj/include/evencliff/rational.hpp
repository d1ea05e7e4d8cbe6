#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace evencliff {

using Integer = mpz_class;

// gmpxx keeps every arithmetic result canonical: lowest terms, positive denominator.
using Rational = mpq_class;

/// Renders `q` as "p" when integral, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace evencliff
