#include "edfkit/amd.hpp"

#include "edfkit/bounds.hpp"
#include "edfkit/errors.hpp"
#include "edfkit/multiset.hpp"
#include "edfkit/prng.hpp"
#include "edfkit/verify.hpp"

namespace edfkit {

namespace {

void check_game_input(const Family& fam) {
    if (fam.block_count() < 2) {
        throw InvalidInput("the tampering game needs at least two sources");
    }
}

// Direct game sum: sum over sources s of Pr(s) * Pr(g) * [g + delta lands in
// another block].
Rational game_sum(const Family& fam, const GroupElement& delta) {
    const std::int64_t m = static_cast<std::int64_t>(fam.block_count());
    Rational rho = 0;
    for (std::size_t s = 0; s < fam.block_count(); ++s) {
        std::int64_t hits = 0;
        for (const GroupElement& g : fam.block(s)) {
            std::int64_t b = fam.block_of(fam.group().add(g, delta));
            if (b >= 0 && b != static_cast<std::int64_t>(s)) {
                ++hits;
            }
        }
        rho += Rational(hits, m * static_cast<std::int64_t>(fam.block(s).size()));
    }
    return rho;
}

Rational multiset_rho(const Family& fam, const DiffMultiset& weighted,
                      const GroupElement& delta) {
    BigInt denom = fam.k_tilde() * static_cast<std::int64_t>(fam.block_count());
    return Rational(weighted.count(delta), denom);
}

} // namespace

Rational rho_delta(const Family& fam, const GroupElement& delta) {
    check_game_input(fam);
    if (delta == fam.group().zero()) {
        throw InvalidDelta("delta must be nonzero");
    }
    Rational direct = game_sum(fam, delta);
    Rational via_multiset = multiset_rho(fam, weighted_external_union(fam), delta);
    if (direct != via_multiset) {
        throw Error("internal: game sum and multiset rho disagree at delta " +
                    element_to_string(delta));
    }
    return direct;
}

AmdProfile rho_profile(const Family& fam) {
    check_game_input(fam);
    AmdProfile p;
    p.n = fam.group().order();
    p.m = static_cast<std::int64_t>(fam.block_count());
    p.a = fam.total_size();
    p.K = fam.sizes();
    p.k_tilde = fam.k_tilde();

    DiffMultiset weighted = weighted_external_union(fam);
    const GroupSpec& g = fam.group();
    p.rho = 0;
    for (std::int64_t rank = 1; rank < g.order(); ++rank) {
        GroupElement delta = g.element_at(rank);
        Rational direct = game_sum(fam, delta);
        if (direct != multiset_rho(fam, weighted, delta)) {
            throw Error("internal: game sum and multiset rho disagree at delta " +
                        element_to_string(delta));
        }
        if (direct > p.rho) {
            p.rho = direct;
            p.best_deltas.clear();
        }
        if (direct == p.rho && direct > 0) {
            p.best_deltas.push_back(delta);
        }
        p.rho_by_delta.emplace_back(std::move(delta), std::move(direct));
    }
    VerificationReport c = classify_bswedf(fam);
    p.lambda = *c.lambda;
    p.classification.ps_R_optimal = p.rho == ps_bound(p.n, p.m, p.a);
    p.classification.meets_per_K_floor = p.lambda == lambda_lower_bound(p.n, p.K);
    return p;
}

bool bridge_check(const Family& fam) {
    AmdProfile p = rho_profile(fam);
    Rational lhs = p.rho * Rational(p.k_tilde * p.m);
    return lhs == Rational(p.lambda);
}

AmdProfile classify_optimality(const Family& fam, std::uint64_t search_budget) {
    AmdProfile p = rho_profile(fam);
    BoundReport ib = improved_bound(p.n, p.m, p.a);
    if (p.rho == *ib.improved) {
        // Attaining a lower bound of rho_(n,m,a) certifies the minimum.
        p.classification.strongly_optimal = TriState::yes;
        p.classification.strongly_optimal_basis = "bound-certificate";
        return p;
    }
    if (search_budget == 0) {
        return p;
    }
    // Search ground truth is scoped to Z_n; use the CRT image when possible.
    if (fam.group().arity() > 1 && !fam.group().factors_pairwise_coprime()) {
        return p;
    }
    SearchResult sr = strongly_optimal_search(p.n, p.m, p.a, search_budget);
    if (!sr.minimal_rho) {
        return p;
    }
    if (sr.exhausted) {
        p.classification.strongly_optimal =
            p.rho == *sr.minimal_rho ? TriState::yes : TriState::no;
        p.classification.strongly_optimal_basis = "exhaustive-search";
    } else if (*sr.minimal_rho < p.rho) {
        // Any found family already beats this one; truncation cannot undo that.
        p.classification.strongly_optimal = TriState::no;
        p.classification.strongly_optimal_basis = "search-counterexample";
    }
    return p;
}

McResult monte_carlo_attack(const Family& fam, const GroupElement& delta,
                            std::uint64_t trials, std::uint64_t seed) {
    check_game_input(fam);
    if (delta == fam.group().zero()) {
        throw InvalidDelta("delta must be nonzero");
    }
    if (trials < 1) {
        throw InvalidInput("at least one trial required");
    }
    SplitMix64 rng(seed);
    const std::uint64_t m = fam.block_count();
    std::uint64_t wins = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::size_t s = static_cast<std::size_t>(rng.below(m));
        const Block& block = fam.block(s);
        const GroupElement& g = block[static_cast<std::size_t>(rng.below(block.size()))];
        std::int64_t b = fam.block_of(fam.group().add(g, delta));
        if (b >= 0 && b != static_cast<std::int64_t>(s)) {
            ++wins;
        }
    }
    return McResult{trials, wins, Rational(wins, trials)};
}

} // namespace edfkit
