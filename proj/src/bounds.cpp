#include "edfkit/bounds.hpp"

#include <string>

#include "edfkit/errors.hpp"

namespace edfkit {

namespace {

// Shared validation: n >= 2, m >= 2, every part >= 1, parts fit in n.
void check_profile(std::int64_t n, const std::vector<std::int64_t>& K) {
    if (n < 2) {
        throw InvalidInput("group order must be >= 2");
    }
    if (K.size() < 2) {
        throw InvalidInput("at least two blocks required");
    }
    std::int64_t a = 0;
    for (std::int64_t k : K) {
        if (k < 1) {
            throw InvalidInput("block sizes must be >= 1");
        }
        a += k;
    }
    if (a > n) {
        throw Infeasible("blocks of total size " + std::to_string(a) +
                         " cannot be disjoint in a group of order " + std::to_string(n));
    }
}

void check_nma(std::int64_t n, std::int64_t m, std::int64_t a) {
    if (n < 2 || m < 2) {
        throw InvalidInput("need n >= 2 and m >= 2");
    }
    if (m > a || a > n) {
        throw Infeasible("need m <= a <= n");
    }
}

std::int64_t sum_of(const std::vector<std::int64_t>& K) {
    std::int64_t a = 0;
    for (std::int64_t k : K) {
        a += k;
    }
    return a;
}

} // namespace

BigInt lambda_lower_bound(std::int64_t n, const std::vector<std::int64_t>& K) {
    check_profile(n, K);
    const std::int64_t m = static_cast<std::int64_t>(K.size());
    BigInt num = lcm_list(K) * sum_of(K) * (m - 1);
    return ceil_div(num, BigInt(n - 1));
}

bool swedf_divisibility(std::int64_t n, const std::vector<std::int64_t>& K) {
    check_profile(n, K);
    const std::int64_t m = static_cast<std::int64_t>(K.size());
    BigInt num = lcm_list(K) * sum_of(K) * (m - 1);
    return num % (n - 1) == 0;
}

Rational ps_bound(std::int64_t n, std::int64_t m, std::int64_t a) {
    check_nma(n, m, a);
    return Rational(BigInt(a) * (m - 1), BigInt(m) * (n - 1));
}

std::vector<std::vector<std::int64_t>> partitions(std::int64_t a, std::int64_t m,
                                                  bool allow_large) {
    if (m < 1 || a < 1) {
        throw InvalidInput("partitions need a >= 1 and m >= 1");
    }
    if (m > a) {
        throw Infeasible("cannot split " + std::to_string(a) + " into " + std::to_string(m) +
                         " positive parts");
    }
    if (a > kPartitionCap && !allow_large) {
        throw Infeasible("partition enumeration capped at a <= " +
                         std::to_string(kPartitionCap) + "; pass the override to exceed it");
    }
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur(static_cast<std::size_t>(m));
    // Non-decreasing parts generated depth-first yield lexicographic order.
    auto rec = [&](auto&& self, std::size_t idx, std::int64_t minimum,
                   std::int64_t remaining) -> void {
        const std::int64_t slots = m - static_cast<std::int64_t>(idx);
        if (slots == 0) {
            if (remaining == 0) {
                out.push_back(cur);
            }
            return;
        }
        // Parts stay non-decreasing, so each of the `slots` parts is >= v.
        for (std::int64_t v = minimum; v * slots <= remaining; ++v) {
            cur[idx] = v;
            self(self, idx + 1, v, remaining - v);
        }
    };
    rec(rec, 0, 1, a);
    return out;
}

Rational per_k_rho_floor(std::int64_t n, const std::vector<std::int64_t>& K) {
    BigInt floor = lambda_lower_bound(n, K);
    return Rational(floor, lcm_list(K) * static_cast<std::int64_t>(K.size()));
}

BoundReport improved_bound(std::int64_t n, std::int64_t m, std::int64_t a, bool allow_large) {
    check_nma(n, m, a);
    BoundReport r;
    r.n = n;
    r.m = m;
    r.a = a;
    r.ps = ps_bound(n, m, a);
    for (const std::vector<std::int64_t>& K : partitions(a, m, allow_large)) {
        if (sum_of(K) > n) { // unreachable given a <= n; kept as a guard
            ++r.excluded_partitions;
            continue;
        }
        Rational candidate = per_k_rho_floor(n, K);
        if (!r.improved || candidate < *r.improved) {
            r.improved = candidate;
            r.argmin_K = K;
        }
    }
    r.strict_improvement = *r.improved > *r.ps;
    return r;
}

Rational rho_gap_bound(std::int64_t n, const std::vector<std::int64_t>& K) {
    check_profile(n, K);
    return Rational(1, lcm_list(K) * static_cast<std::int64_t>(K.size()));
}

BoundReport bound_report_for_K(std::int64_t n, const std::vector<std::int64_t>& K) {
    BoundReport r;
    r.n = n;
    r.m = static_cast<std::int64_t>(K.size());
    r.a = sum_of(K);
    r.K = K;
    r.lambda_floor = lambda_lower_bound(n, K);
    r.per_K = per_k_rho_floor(n, K);
    r.gap = rho_gap_bound(n, K);
    r.divisibility = swedf_divisibility(n, K);
    r.ps = ps_bound(n, r.m, r.a);
    return r;
}

} // namespace edfkit
