#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edfkit/family.hpp"
#include "edfkit/numeric.hpp"

namespace edfkit {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

/**
 * Ground truth from exhaustive search over Z_n. Per-K runs fill
 * minimal_lambda; per-a runs fill minimal_rho as well. `exhausted` false
 * means the node budget ran out and the values are best-so-far only.
 */
struct SearchResult {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t a = 0;
    std::vector<std::int64_t> K; // profile searched, or the winning profile per-a

    std::optional<BigInt> minimal_lambda;
    std::optional<Rational> minimal_rho;
    std::optional<Family> witness; // lexicographically smallest optimum found
    std::uint64_t nodes_explored = 0;
    bool exhausted = false;
};

/**
 * Minimal BSWEDF lambda over Z_n for the fixed size profile K, exhaustive
 * modulo translation: the first block in (size, min-element) order is pinned
 * to contain 0. With unit_reduction the first block is additionally
 * restricted to the lexicographically least set in its multiplier orbit;
 * the minimal value is unchanged, the witness may differ.
 */
SearchResult min_lambda_search(std::int64_t n, std::vector<std::int64_t> K,
                               std::uint64_t budget = kDefaultSearchBudget,
                               bool unit_reduction = false);

/**
 * rho_(n,m,a): minimum over all partitions K of a into m parts of
 * minimal-lambda(K) / (k~ m). Partitions whose rho floor cannot beat the
 * best value found so far are skipped; ties keep the earlier partition.
 */
SearchResult strongly_optimal_search(std::int64_t n, std::int64_t m, std::int64_t a,
                                     std::uint64_t budget = kDefaultSearchBudget,
                                     bool unit_reduction = false);

} // namespace edfkit
