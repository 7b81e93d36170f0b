#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edfkit/family.hpp"
#include "edfkit/multiset.hpp"
#include "edfkit/numeric.hpp"

namespace edfkit {

/// One size class of a PEDF test: c_t blocks of size w_t, target count lambda_t.
struct PedfBucket {
    std::int64_t block_count = 0;
    std::int64_t block_size = 0;
    BigInt lambda;
    bool uniform = false;
};

/**
 * Outcome of one verifier run. `holds` is the verdict; the remaining fields
 * carry whichever parameters the tested property defines. When holds is
 * false, `witness` (and for per-block tests `witness_block`) pinpoints the
 * violation. Witnesses are deterministic: constancy checks report the
 * lexicographically smallest delta whose count disagrees with the first
 * nonzero delta, per-block checks report the smallest failing block index
 * first, and the bimodal check scans deltas before blocks.
 */
struct VerificationReport {
    std::string kind;
    bool holds = false;
    std::string reason; // empty when holds

    std::optional<BigInt> lambda;           // df, pdf, edf, bedf, bswedf
    std::optional<BigInt> target;           // bedf target
    std::vector<BigInt> lambdas;            // gsedf constants, bgsedf per-block maxima
    std::vector<BigInt> targets;            // bgsedf targets
    std::vector<PedfBucket> buckets;        // pedf size classes, ascending w_t
    std::optional<bool> is_swedf;           // bswedf classification
    std::optional<Rational> d;              // rwedf index
    std::optional<GroupElement> witness;    // extremal or violating delta
    std::optional<std::size_t> witness_block; // 0-based block index (gsedf, bimodal)
    std::optional<std::int64_t> witness_count; // bimodal N_i(delta) at the witness

    /// Per-delta counts of the multiset the verdict was computed from.
    std::vector<std::pair<GroupElement, BigInt>> counts;
    /// N_i(delta) for every nonzero delta (lex order) and block i.
    std::vector<std::pair<GroupElement, std::vector<std::int64_t>>> n_table;
};

/// Internal differences, union over blocks, constant on nonzero elements.
VerificationReport verify_df(const Family& fam);

/// DF whose blocks additionally partition the group.
VerificationReport verify_pdf(const Family& fam);

/// Unweighted external union constant on nonzero elements.
VerificationReport verify_edf(const Family& fam);

/// Bounded EDF: max count <= target; also reports the minimal feasible value.
VerificationReport verify_bedf(const Family& fam, const BigInt& target);

/// Per-block unions D(B_i, B_j), j != i, each constant; reports the vector.
VerificationReport verify_gsedf(const Family& fam);

/// Bounded GSEDF against per-block targets; reports per-block maxima.
VerificationReport verify_bgsedf(const Family& fam, const std::vector<BigInt>& targets);

/// Per size class: union of block unions over blocks of that size, constant.
VerificationReport verify_pedf(const Family& fam);

/**
 * Extracts the BSWEDF parameter: lambda = max(1, max weighted count), and
 * flags whether the family is an SWEDF (weighted union exactly constant).
 * Holds for every disjoint family with m >= 2; the witness attains lambda.
 */
VerificationReport classify_bswedf(const Family& fam);

/// SWEDF verdict: classify_bswedf with holds = is_swedf.
VerificationReport verify_swedf(const Family& fam);

/**
 * RWEDF test: d(delta) = sum_i N_i(delta)/k_i must be delta-independent.
 * Fills the full N table; reports the exact rational d when it holds.
 */
VerificationReport rwedf_profile(const Family& fam);

/// Bimodal test: every N_i(delta) lies in {0, k_i}.
VerificationReport bimodal_check(const Family& fam);

} // namespace edfkit
