#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "edfkit/family.hpp"
#include "edfkit/numeric.hpp"
#include "edfkit/search.hpp"

namespace edfkit {

enum class TriState { yes, no, unknown };

/// Optimality verdicts for the code induced by one family.
struct OptimalityFlags {
    bool ps_R_optimal = false;      // rho equals a(m-1)/(m(n-1))
    bool meets_per_K_floor = false; // lambda equals the per-K lower bound
    TriState strongly_optimal = TriState::unknown;
    std::string strongly_optimal_basis; // bound-certificate | exhaustive-search |
                                        // search-counterexample | empty when unknown
};

/**
 * Exact analysis of the tampering game for one family: blocks are the valid
 * encoding sets, sources are equiprobable, the encoder picks uniformly
 * inside a block. Probabilities are exact rationals throughout.
 */
struct AmdProfile {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t a = 0;
    std::vector<std::int64_t> K;
    BigInt k_tilde;

    std::vector<std::pair<GroupElement, Rational>> rho_by_delta; // lex delta order
    Rational rho;
    std::vector<GroupElement> best_deltas; // all argmax offsets, lex order
    BigInt lambda;                         // BSWEDF parameter of the family
    OptimalityFlags classification;
};

/**
 * Success probability of the fixed offset delta, computed two independent
 * ways (direct game sum and weighted-multiset count over k~ m) that are
 * required to agree. Throws InvalidDelta on delta = 0.
 */
Rational rho_delta(const Family& fam, const GroupElement& delta);

/// rho_delta for every nonzero delta plus the maximum. Randomized adversary
/// strategies are convex combinations of fixed offsets, so the maximum over
/// deltas is the game value.
AmdProfile rho_profile(const Family& fam);

/// True iff rho * k~ * m equals the BSWEDF lambda of the family, exactly.
bool bridge_check(const Family& fam);

/**
 * Fills the classification flags. Strong optimality uses the improved bound
 * as a certificate first; otherwise exhaustive search over Z_n (the family
 * is CRT-flattened if needed) decides within the node budget, else the
 * verdict stays unknown.
 */
AmdProfile classify_optimality(const Family& fam,
                               std::uint64_t search_budget = kDefaultSearchBudget);

/// Outcome of a seeded simulation of the tampering game.
struct McResult {
    std::uint64_t trials = 0;
    std::uint64_t wins = 0;
    Rational rate; // wins / trials
};

/**
 * Plays the game `trials` times with the fixed offset delta: uniform source,
 * uniform element of its block, win when the shifted element lands in a
 * different block. Bit-exact reproducible from the seed.
 */
McResult monte_carlo_attack(const Family& fam, const GroupElement& delta,
                            std::uint64_t trials, std::uint64_t seed);

} // namespace edfkit
