#pragma once

// Brute-force reference implementations the tests pin expected values against.
// Everything is computed straight from the definitions with plain loops and
// exact arithmetic, sharing none of the library's counting or bounding paths.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "edfkit/family.hpp"
#include "edfkit/numeric.hpp"

namespace oracle {

// N_i(delta): elements of block i that land in a *different* block under
// translation by delta.
inline std::vector<std::int64_t> n_row(const edfkit::Family& fam,
                                       const edfkit::GroupElement& delta) {
    std::vector<std::int64_t> row;
    for (std::size_t i = 0; i < fam.block_count(); ++i) {
        std::int64_t hits = 0;
        for (const edfkit::GroupElement& y : fam.block(i)) {
            const edfkit::GroupElement shifted = fam.group().add(y, delta);
            for (std::size_t j = 0; j < fam.block_count(); ++j) {
                if (j == i) {
                    continue;
                }
                const edfkit::Block& b = fam.block(j);
                if (std::find(b.begin(), b.end(), shifted) != b.end()) {
                    ++hits;
                    break;
                }
            }
        }
        row.push_back(hits);
    }
    return row;
}

// lambda(delta) = sum_i (k_tilde / k_i) N_i(delta), the weighted external count.
inline edfkit::BigInt weighted_count(const edfkit::Family& fam,
                                     const edfkit::GroupElement& delta) {
    const edfkit::BigInt kt = fam.k_tilde();
    const std::vector<std::int64_t> row = n_row(fam, delta);
    edfkit::BigInt total = 0;
    for (std::size_t i = 0; i < fam.block_count(); ++i) {
        total += (kt / fam.block(i).size()) * row[i];
    }
    return total;
}

// max_{delta != 0} lambda(delta); the bounded parameter is max(1, this).
inline edfkit::BigInt max_weighted_count(const edfkit::Family& fam) {
    edfkit::BigInt best = 0;
    for (std::int64_t rank = 1; rank < fam.group().order(); ++rank) {
        best = std::max(best, weighted_count(fam, fam.group().element_at(rank)));
    }
    return best;
}

// Tampering game, played out literally: the source s is uniform over m blocks,
// the encoding g uniform over A_s, and the adversary wins when g + delta
// decodes to a different source.
inline edfkit::Rational rho_delta_game(const edfkit::Family& fam,
                                       const edfkit::GroupElement& delta) {
    const std::vector<std::int64_t> row = n_row(fam, delta);
    edfkit::Rational p = 0;
    for (std::size_t i = 0; i < fam.block_count(); ++i) {
        p += edfkit::Rational(row[i], fam.block(i).size());
    }
    return p / edfkit::Rational(fam.block_count());
}

inline edfkit::Rational rho_game(const edfkit::Family& fam) {
    edfkit::Rational best = 0;
    for (std::int64_t rank = 1; rank < fam.group().order(); ++rank) {
        best = std::max(best, rho_delta_game(fam, fam.group().element_at(rank)));
    }
    return best;
}

// Number of partitions of a into exactly m positive parts, via the standard
// recurrence p(a, m) = p(a-1, m-1) + p(a-m, m).
inline std::int64_t partition_count(std::int64_t a, std::int64_t m) {
    if (m <= 0) {
        return a == 0 ? 1 : 0;
    }
    if (a < m) {
        return 0;
    }
    return partition_count(a - 1, m - 1) + partition_count(a - m, m);
}

// Multiplicative order of x mod p by repeated multiplication.
inline std::int64_t order_brute(std::int64_t x, std::int64_t p) {
    std::int64_t acc = x % p;
    std::int64_t ord = 1;
    while (acc != 1) {
        acc = (acc * x) % p;
        ++ord;
    }
    return ord;
}

inline bool prime_trial(std::int64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

} // namespace oracle
