#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "edfkit/family.hpp"
#include "edfkit/numeric.hpp"
#include "edfkit/verify.hpp"

namespace edfkit {

/// Parameters a construction theorem promises for its output.
struct PredictedParams {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::vector<std::int64_t> K;
    std::int64_t a = 0;
    BigInt lambda;
};

/**
 * A constructed family in product form, together with the theorem-predicted
 * parameters and the verification that reproduced them. Construction
 * routines throw if the re-verification disagrees with the prediction, so a
 * returned result is always a checked theorem instance.
 */
struct ConstructionResult {
    Family family;
    PredictedParams predicted;
    VerificationReport verified;    // BSWEDF classification of the output
    bool optimal_certificate = false; // lambda equals its closed-form floor
};

/**
 * Blocks over Z_2 x F_q for prime q = 4k+1 with k odd:
 * {(0,0),(1,0)}, {0}xD4_0 u {1}xD4_2, {0}xD4_1 u {0}xD4_3.
 * Predicted: (2q, 3, (2,2k,2k), 4k+2, 2k+1), optimal.
 */
ConstructionResult construct_a(std::int64_t q);

/**
 * Blocks over Z_2 x Z_n1 for an odd prime n1 = 2k+1 whose quadratic-residue
 * family {{0}, D2_0, D2_1} verifies as an (n1, (1,k,k), k-1)-PDF:
 * {(1,0)}, {0}xD2_0, {0}xD2_1. Predicted: (2n1, 3, (1,k,k), 2k+1, k+1).
 */
ConstructionResult construct_b(std::int64_t n1);

/**
 * Blocks over Z_3 x F_q for prime q = 4k+1 with k odd:
 * {(1,0)}, {(2,0)}, {0}xD2_0, {0}xD2_1.
 * Predicted: (3q, 4, (1,1,2k,2k), 4k+2, 2k+1), optimal.
 */
ConstructionResult construct_c(std::int64_t q);

/**
 * SWEDF from a ((k-1)(tk+1), (k,...,k,k-1), k-1)-PDF over Z_{k-1} x Z_{tk+1}
 * whose last block is Z_{k-1} x {0}: keeps the size-k blocks and appends the
 * singletons {(j,0)}, j = 1..k-2. The input may be given in flattened Z_n
 * form; it is lifted through the CRT. Predicted lambda (t+1)k^2 - (t+3)k;
 * the output is additionally required to be an SWEDF, an RWEDF with
 * d = (t+1)k - t - 3, and not bimodal.
 */
ConstructionResult construct_d(const Family& pdf, std::int64_t k, std::int64_t t);

/// Built-in verified PDFs: the Z_15 example in product and flattened form,
/// and quadratic-residue PDFs for small primes. Every entry is re-verified.
std::vector<std::pair<std::string, Family>> builtin_pdf_catalog();

} // namespace edfkit
