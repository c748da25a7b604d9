#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bwl {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q". Throws bwl::Error on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& q);

}  // namespace bwl
