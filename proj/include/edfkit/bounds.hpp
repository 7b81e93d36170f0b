#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edfkit/numeric.hpp"

namespace edfkit {

/// Partition enumeration beyond this total needs an explicit override.
inline constexpr std::int64_t kPartitionCap = 64;

/**
 * Closed-form bound evaluation for one parameter set. Per-K queries fill
 * lambda_floor / per_K / gap; per-a queries fill ps / improved / argmin_K.
 * All rationals are exact and fully reduced.
 */
struct BoundReport {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t a = 0;
    std::vector<std::int64_t> K;

    std::optional<Rational> ps;           // a(m-1) / (m(n-1))
    std::optional<BigInt> lambda_floor;   // ceil(k~ a (m-1) / (n-1)) for K
    std::optional<Rational> per_K;        // lambda_floor / (k~ m)
    std::optional<Rational> gap;          // 1 / (k~ m)
    std::optional<Rational> improved;     // min over partitions of a into m parts
    std::vector<std::int64_t> argmin_K;   // lexicographically first minimizer
    bool strict_improvement = false;      // improved > ps
    std::int64_t excluded_partitions = 0; // dropped because sum of parts > n
    std::optional<bool> divisibility;     // (n-1) | k~ a (m-1) for K
};

/// ceil(k~ a (m-1) / (n-1)); throws Infeasible when sum(K) > n.
BigInt lambda_lower_bound(std::int64_t n, const std::vector<std::int64_t>& K);

/// Necessary condition for an SWEDF/RWEDF with profile K to exist.
bool swedf_divisibility(std::int64_t n, const std::vector<std::int64_t>& K);

/// a(m-1) / (m(n-1)), exact.
Rational ps_bound(std::int64_t n, std::int64_t m, std::int64_t a);

/**
 * All multisets of m positive integers summing to a, as non-decreasing
 * tuples in lexicographic order. Totals above kPartitionCap are refused
 * unless allow_large is set.
 */
std::vector<std::vector<std::int64_t>> partitions(std::int64_t a, std::int64_t m,
                                                  bool allow_large = false);

/// lambda_lower_bound(n, K) / (k~ m), the rho floor for one profile.
Rational per_k_rho_floor(std::int64_t n, const std::vector<std::int64_t>& K);

/// min over partitions K of a into m parts of per_k_rho_floor(n, K).
BoundReport improved_bound(std::int64_t n, std::int64_t m, std::int64_t a,
                           bool allow_large = false);

/// 1 / (k~ m): guaranteed ceiling on rho_(n,m,K) - rho_(n,m,a).
Rational rho_gap_bound(std::int64_t n, const std::vector<std::int64_t>& K);

/// Full per-K report: lambda_floor, per_K, gap, divisibility.
BoundReport bound_report_for_K(std::int64_t n, const std::vector<std::int64_t>& K);

} // namespace edfkit
