#pragma once

// The implication lemmas tying the plain families to the weighted one, as a
// reusable checker: returns human-readable violations, empty when everything
// that should follow does. Callers feed it any family with at least two
// blocks.

#include <algorithm>
#include <string>
#include <vector>

#include "edfkit/bounds.hpp"
#include "edfkit/multiset.hpp"
#include "edfkit/verify.hpp"

namespace checks {

inline std::vector<std::string> implication_violations(const edfkit::Family& fam) {
    using edfkit::BigInt;
    std::vector<std::string> bad;
    auto fail = [&](const std::string& what) { bad.push_back(what); };

    const std::vector<std::int64_t> K = fam.sizes();
    const bool regular = std::all_of(K.begin(), K.end(),
                                     [&](std::int64_t k) { return k == K[0]; });
    const BigInt kt = fam.k_tilde();
    edfkit::VerificationReport cls = edfkit::classify_bswedf(fam);
    if (!cls.holds || !cls.lambda || !cls.is_swedf) {
        fail("classify_bswedf did not produce a classification");
        return bad;
    }

    // (a) regular EDF => SWEDF with the same lambda.
    edfkit::VerificationReport edf = edfkit::verify_edf(fam);
    if (edf.holds && regular) {
        if (!*cls.is_swedf) {
            fail("(a): regular EDF but not SWEDF");
        } else if (*cls.lambda != *edf.lambda) {
            fail("(a): regular EDF lambda differs from SWEDF lambda");
        }
    }

    // (b) GSEDF (lambda_i) => SWEDF with lambda = sum lambda_i k~/k_i.
    edfkit::VerificationReport gs = edfkit::verify_gsedf(fam);
    if (gs.holds) {
        BigInt sum = 0;
        for (std::size_t i = 0; i < K.size(); ++i) {
            sum += gs.lambdas[i] * (kt / K[i]);
        }
        if (!*cls.is_swedf) {
            fail("(b): GSEDF but not SWEDF");
        } else if (*cls.lambda != sum) {
            fail("(b): GSEDF lambda formula mismatch");
        }
    }

    // (c) PEDF (lambda_t, w_t) => SWEDF with lambda = sum lambda_t k~/w_t.
    edfkit::VerificationReport pe = edfkit::verify_pedf(fam);
    if (pe.holds) {
        BigInt sum = 0;
        for (const edfkit::PedfBucket& b : pe.buckets) {
            sum += b.lambda * (kt / b.block_size);
        }
        if (!*cls.is_swedf) {
            fail("(c): PEDF but not SWEDF");
        } else if (*cls.lambda != sum) {
            fail("(c): PEDF lambda formula mismatch");
        }
    }

    // (d) regular BEDF bound lambda => BSWEDF lambda_1 <= lambda. Use the
    // tightest feasible bound, the attained unweighted maximum.
    if (regular) {
        BigInt attained = edfkit::external_union(fam).max_count_nonzero();
        if (attained == 0) {
            attained = 1;
        }
        edfkit::VerificationReport be = edfkit::verify_bedf(fam, attained);
        if (!be.holds) {
            fail("(d): BEDF rejects its own attained maximum");
        } else if (*cls.lambda > attained) {
            fail("(d): BSWEDF lambda exceeds the regular BEDF bound");
        }
    }

    // (e) BGSEDF (lambda_i) => BSWEDF lambda <= sum lambda_i k~/k_i, again
    // with the attained per-block maxima as the tightest targets.
    {
        std::vector<BigInt> targets;
        BigInt cap = 0;
        for (std::size_t i = 0; i < K.size(); ++i) {
            BigInt t = edfkit::external_diffs_from(fam, i).max_count_nonzero();
            cap += t * (kt / K[i]);
            targets.push_back(std::move(t));
        }
        edfkit::VerificationReport bg = edfkit::verify_bgsedf(fam, targets);
        if (!bg.holds) {
            fail("(e): BGSEDF rejects its own attained maxima");
        } else if (*cls.lambda > cap) {
            fail("(e): BSWEDF lambda exceeds the BGSEDF cap");
        }
    }

    // SWEDF arithmetic: divisibility and the closed-form lambda.
    if (*cls.is_swedf) {
        const std::int64_t n = fam.group().order();
        const BigInt m = fam.block_count();
        const BigInt a = fam.total_size();
        if (!edfkit::swedf_divisibility(n, K)) {
            fail("swedf: (n-1) does not divide k~ a (m-1)");
        } else if (*cls.lambda != kt * a * (m - 1) / (n - 1)) {
            fail("swedf: lambda differs from k~ a (m-1) / (n-1)");
        }
    }
    return bad;
}

} // namespace checks
