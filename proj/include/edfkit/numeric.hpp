#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edfkit/errors.hpp"

namespace edfkit {

// Exact integer and rational arithmetic. Weighted multiplicities scale with
// lcm(k_1..k_m), which overflows fixed-width integers already at modest block
// counts, so every count, lambda, and probability is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// lcm of a nonempty list of positive integers, exact.
BigInt lcm_list(const std::vector<std::int64_t>& values);

/// ceil(num / den) for positive den.
BigInt ceil_div(const BigInt& num, const BigInt& den);

/// "p/q" for proper fractions, bare "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p/q" or "p". Throws ParseError on malformed input.
Rational rational_from_string(const std::string& text);

/// The value as int64 when it fits, otherwise nullopt.
std::optional<std::int64_t> to_int64(const BigInt& v);

} // namespace edfkit
