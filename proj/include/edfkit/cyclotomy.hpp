#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edfkit/family.hpp"

namespace edfkit {

/// Deterministic primality test for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// (base^exp) mod modulus, modulus >= 1.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus);

/// Multiplicative order of g modulo prime q; throws NotPrime / InvalidInput.
std::int64_t element_order(std::int64_t g, std::int64_t q);

/// Smallest positive primitive root of the prime q.
std::int64_t smallest_primitive_root(std::int64_t q);

/**
 * Cyclotomic class D^e_i = { alpha^(e*t + i) : 0 <= t < (q-1)/e } in F_q,
 * with alpha a primitive root. Elements are sorted ascending.
 */
struct CyclotomicClass {
    std::int64_t q;
    std::int64_t e;
    std::int64_t i;
    std::int64_t alpha;
    std::vector<std::int64_t> elements;
};

/**
 * Computes D^e_i over the prime field F_q. Requires e | q - 1 and
 * 0 <= i < e. When alpha is omitted the smallest primitive root is used;
 * an explicit alpha must itself be a primitive root.
 */
CyclotomicClass cyclotomic_class(std::int64_t q, std::int64_t e, std::int64_t i,
                                 std::optional<std::int64_t> alpha = std::nullopt);

/// The candidate family {{0}, D^2_0, D^2_1} over Z_q, q an odd prime.
Family qr_family(std::int64_t q);

} // namespace edfkit
