#include "edfkit/search.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "edfkit/bounds.hpp"
#include "edfkit/errors.hpp"
#include "edfkit/verify.hpp"

namespace edfkit {

namespace {

// Depth-first enumeration of canonical families over Z_n with a fixed sorted
// size profile: blocks in non-decreasing size order, same-size blocks in
// increasing order of their minimum, elements increasing inside a block, and
// 0 pinned into the first block. Every family over Z_n is a translate of an
// enumerated one. Counts are weighted incrementally; a branch dies as soon
// as some difference already reaches the best complete value.
class Searcher {
  public:
    Searcher(std::int64_t n, std::vector<std::int64_t> K, std::uint64_t budget,
             bool unit_reduction)
        : n_(n), K_(std::move(K)), budget_(budget) {
        m_ = static_cast<std::int64_t>(K_.size());
        std::int64_t a = std::accumulate(K_.begin(), K_.end(), std::int64_t{0});
        BigInt kt = lcm_list(K_);
        // Counts live in plain int64 for speed; cap the scale so the largest
        // possible count k~*a*(m-1) cannot overflow.
        auto kt64 = to_int64(kt);
        if (!kt64 || *kt64 > std::numeric_limits<std::int64_t>::max() / (a * m_)) {
            throw Infeasible("search scale k~*a*m exceeds the 64-bit fast path");
        }
        ktilde_ = *kt64;
        weight_.resize(static_cast<std::size_t>(m_));
        for (std::int64_t i = 0; i < m_; ++i) {
            weight_[static_cast<std::size_t>(i)] = ktilde_ / K_[static_cast<std::size_t>(i)];
        }
        floor_lambda_ = lambda_lower_bound(n_, K_); // validates the profile
        blocks_.assign(static_cast<std::size_t>(m_), {});
        used_.assign(static_cast<std::size_t>(n_), 0);
        cnt_.assign(static_cast<std::size_t>(n_), 0);
        if (unit_reduction) {
            for (std::int64_t u = 2; u < n_; ++u) {
                if (std::gcd(u, n_) == 1) {
                    units_.push_back(u);
                }
            }
        }
    }

    void run() {
        place_block(0);
    }

    std::optional<std::vector<std::vector<std::int64_t>>> best_blocks() const {
        if (best_ == kUnset) {
            return std::nullopt;
        }
        return best_blocks_;
    }
    std::int64_t best_lambda() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return !out_of_budget_; }

    static constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::max();

  private:
    void place_block(std::int64_t i) {
        if (stop_ || out_of_budget_) {
            return;
        }
        if (i == m_) {
            if (partial_max_ < best_) {
                best_ = partial_max_;
                best_blocks_ = blocks_;
                if (best_ == floor_lambda_) {
                    stop_ = true; // closed-form floor reached, nothing can beat it
                }
            }
            return;
        }
        place_element(i, 0, first_candidate(i));
    }

    std::int64_t first_candidate(std::int64_t i) const {
        if (i == 0) {
            return 0; // translation pin: 0 opens the first block
        }
        const auto ui = static_cast<std::size_t>(i);
        if (K_[ui] == K_[ui - 1]) {
            return blocks_[ui - 1].front() + 1; // same size: minima increase
        }
        return 1;
    }

    void place_element(std::int64_t i, std::int64_t pos, std::int64_t from) {
        if (stop_ || out_of_budget_) {
            return;
        }
        const auto ui = static_cast<std::size_t>(i);
        if (pos == K_[ui]) {
            if (i == 0 && !units_.empty() && !first_block_orbit_least()) {
                return; // a unit multiple of this block enumerates earlier
            }
            place_block(i + 1);
            return;
        }
        const std::int64_t hi = i == 0 && pos == 0 ? 1 : n_; // pin only 0 at the root
        for (std::int64_t e = from; e < hi; ++e) {
            if (used_[static_cast<std::size_t>(e)]) {
                continue;
            }
            if (++nodes_ >= budget_) {
                out_of_budget_ = true;
                return;
            }
            const std::int64_t saved_max = partial_max_;
            if (add_element(i, e)) {
                place_element(i, pos + 1, e + 1);
            }
            remove_element(i, e);
            partial_max_ = saved_max;
            if (stop_ || out_of_budget_) {
                return;
            }
        }
    }

    // Applies the cross differences of e against all earlier blocks. Returns
    // false (with the update fully applied) when a count already reaches the
    // current best, meaning the branch cannot strictly improve.
    bool add_element(std::int64_t i, std::int64_t e) {
        const auto ui = static_cast<std::size_t>(i);
        used_[static_cast<std::size_t>(e)] = 1;
        blocks_[ui].push_back(e);
        bool viable = true;
        for (std::size_t j = 0; j < ui; ++j) {
            const std::int64_t wi = weight_[ui];
            const std::int64_t wj = weight_[j];
            for (std::int64_t y : blocks_[j]) {
                std::int64_t d1 = e - y;
                if (d1 < 0) {
                    d1 += n_;
                }
                std::int64_t& c1 = cnt_[static_cast<std::size_t>(d1)];
                c1 += wj; // pair (x=e in B_i, y in B_j), weight of the subtrahend j
                if (c1 > partial_max_) {
                    partial_max_ = c1;
                }
                std::int64_t& c2 = cnt_[static_cast<std::size_t>(d1 == 0 ? 0 : n_ - d1)];
                c2 += wi; // pair (x in B_j, y=e in B_i)
                if (c2 > partial_max_) {
                    partial_max_ = c2;
                }
            }
        }
        if (partial_max_ >= best_) {
            viable = false;
        }
        return viable;
    }

    void remove_element(std::int64_t i, std::int64_t e) {
        const auto ui = static_cast<std::size_t>(i);
        blocks_[ui].pop_back();
        used_[static_cast<std::size_t>(e)] = 0;
        for (std::size_t j = 0; j < ui; ++j) {
            for (std::int64_t y : blocks_[j]) {
                std::int64_t d1 = e - y;
                if (d1 < 0) {
                    d1 += n_;
                }
                cnt_[static_cast<std::size_t>(d1)] -= weight_[j];
                cnt_[static_cast<std::size_t>(d1 == 0 ? 0 : n_ - d1)] -= weight_[ui];
            }
        }
    }

    // True when no unit multiple of the finished first block sorts strictly
    // lower. Scaling by a unit is an automorphism of Z_n, so it permutes the
    // difference counts and leaves the minimal lambda unchanged.
    bool first_block_orbit_least() const {
        const std::vector<std::int64_t>& b0 = blocks_[0];
        std::vector<std::int64_t> scaled(b0.size());
        for (std::int64_t u : units_) {
            for (std::size_t p = 0; p < b0.size(); ++p) {
                scaled[p] = (b0[p] * u) % n_;
            }
            std::sort(scaled.begin(), scaled.end());
            if (scaled < b0) {
                return false;
            }
        }
        return true;
    }

    std::int64_t n_;
    std::vector<std::int64_t> K_;
    std::int64_t m_ = 0;
    std::int64_t ktilde_ = 1;
    std::vector<std::int64_t> weight_;
    std::uint64_t budget_;
    std::vector<std::int64_t> units_;

    std::vector<std::vector<std::int64_t>> blocks_;
    std::vector<char> used_;
    std::vector<std::int64_t> cnt_;
    std::int64_t partial_max_ = 0;
    std::uint64_t nodes_ = 0;
    bool out_of_budget_ = false;
    bool stop_ = false;

    std::int64_t best_ = kUnset;
    BigInt floor_lambda_;
    std::vector<std::vector<std::int64_t>> best_blocks_;
};

Family family_from_residues(std::int64_t n,
                            const std::vector<std::vector<std::int64_t>>& blocks) {
    GroupSpec g = make_group({n});
    std::vector<Block> bs;
    bs.reserve(blocks.size());
    for (const auto& b : blocks) {
        Block nb;
        nb.reserve(b.size());
        for (std::int64_t e : b) {
            nb.push_back(GroupElement{e});
        }
        bs.push_back(std::move(nb));
    }
    return Family(std::move(g), std::move(bs));
}

} // namespace

SearchResult min_lambda_search(std::int64_t n, std::vector<std::int64_t> K,
                               std::uint64_t budget, bool unit_reduction) {
    std::sort(K.begin(), K.end());
    if (K.size() < 2) {
        throw InvalidInput("search needs at least two blocks");
    }
    Searcher s(n, K, budget, unit_reduction);
    s.run();

    SearchResult r;
    r.n = n;
    r.m = static_cast<std::int64_t>(K.size());
    r.a = std::accumulate(K.begin(), K.end(), std::int64_t{0});
    r.K = K;
    r.nodes_explored = s.nodes();
    r.exhausted = s.exhausted();
    if (auto blocks = s.best_blocks()) {
        r.minimal_lambda = BigInt(s.best_lambda());
        r.minimal_rho =
            Rational(*r.minimal_lambda, lcm_list(K) * static_cast<std::int64_t>(K.size()));
        r.witness = family_from_residues(n, *blocks);
        VerificationReport check = classify_bswedf(*r.witness);
        if (!check.lambda || *check.lambda != *r.minimal_lambda) {
            throw Error("internal: search witness does not re-verify to its lambda");
        }
    }
    return r;
}

SearchResult strongly_optimal_search(std::int64_t n, std::int64_t m, std::int64_t a,
                                     std::uint64_t budget, bool unit_reduction) {
    if (n < 2 || m < 2) {
        throw InvalidInput("need n >= 2 and m >= 2");
    }
    if (m > a || a > n) {
        throw Infeasible("need m <= a <= n");
    }
    SearchResult r;
    r.n = n;
    r.m = m;
    r.a = a;
    r.exhausted = true;
    std::uint64_t remaining = budget;
    for (const std::vector<std::int64_t>& K : partitions(a, m)) {
        // A partition whose rho floor cannot beat an attained value is settled.
        if (r.minimal_rho && per_k_rho_floor(n, K) >= *r.minimal_rho) {
            continue;
        }
        if (remaining == 0) {
            r.exhausted = false;
            break;
        }
        SearchResult sub = min_lambda_search(n, K, remaining, unit_reduction);
        r.nodes_explored += sub.nodes_explored;
        remaining -= std::min<std::uint64_t>(remaining, sub.nodes_explored);
        if (!sub.exhausted) {
            r.exhausted = false;
        }
        if (sub.minimal_rho && (!r.minimal_rho || *sub.minimal_rho < *r.minimal_rho)) {
            r.minimal_rho = sub.minimal_rho;
            r.minimal_lambda = sub.minimal_lambda;
            r.witness = sub.witness;
            r.K = sub.K;
        }
    }
    return r;
}

} // namespace edfkit
