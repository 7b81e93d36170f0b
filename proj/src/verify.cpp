#include "edfkit/verify.hpp"

#include <algorithm>
#include <map>

#include "edfkit/errors.hpp"

namespace edfkit {

namespace {

// Result of a constancy scan over the nonzero group elements.
struct Constancy {
    bool constant = true;
    BigInt value;         // count at the lex-smallest nonzero element
    GroupElement base;    // that element
    GroupElement witness; // first element whose count differs
    BigInt witness_count;
};

// Walks every nonzero element in lexicographic order; entries are sparse,
// absent elements count as zero.
Constancy scan_constant(const DiffMultiset& u) {
    const GroupSpec& g = u.group();
    Constancy r;
    auto ent = u.entries();
    std::size_t p = 0;
    if (p < ent.size() && ent[p].first == g.zero()) {
        ++p;
    }
    const std::int64_t n = g.order();
    for (std::int64_t rank = 1; rank < n; ++rank) {
        GroupElement e = g.element_at(rank);
        BigInt c = 0;
        if (p < ent.size() && ent[p].first == e) {
            c = ent[p].second;
            ++p;
        }
        if (rank == 1) {
            r.value = c;
            r.base = e;
            continue;
        }
        if (c != r.value) {
            r.constant = false;
            r.witness = std::move(e);
            r.witness_count = c;
            return r;
        }
    }
    return r;
}

std::string nonconstant_reason(const Constancy& s) {
    return "count(" + element_to_string(s.witness) + ")=" + s.witness_count.str() +
           " differs from count(" + element_to_string(s.base) + ")=" + s.value.str();
}

bool require_two_blocks(const Family& fam, VerificationReport& r) {
    if (fam.block_count() < 2) {
        r.holds = false;
        r.reason = "m<2";
        return false;
    }
    return true;
}

// N_i(delta) for every nonzero delta in lex order; N_i counts y in B_i with
// y + delta landing in a different block.
std::vector<std::pair<GroupElement, std::vector<std::int64_t>>> compute_n_table(
    const Family& fam) {
    const GroupSpec& g = fam.group();
    const std::size_t m = fam.block_count();
    std::vector<std::pair<GroupElement, std::vector<std::int64_t>>> table;
    table.reserve(static_cast<std::size_t>(g.order() - 1));
    for (std::int64_t rank = 1; rank < g.order(); ++rank) {
        GroupElement delta = g.element_at(rank);
        std::vector<std::int64_t> row(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            for (const GroupElement& y : fam.block(i)) {
                std::int64_t b = fam.block_of(g.add(y, delta));
                if (b >= 0 && b != static_cast<std::int64_t>(i)) {
                    ++row[i];
                }
            }
        }
        table.emplace_back(std::move(delta), std::move(row));
    }
    return table;
}

} // namespace

VerificationReport verify_df(const Family& fam) {
    VerificationReport r;
    r.kind = "df";
    DiffMultiset u(fam.group());
    for (const Block& b : fam.blocks()) {
        for (const GroupElement& x : b) {
            for (const GroupElement& y : b) {
                if (x != y) {
                    u.add(fam.group().sub(x, y));
                }
            }
        }
    }
    r.counts = u.entries();
    Constancy s = scan_constant(u);
    if (s.constant) {
        r.holds = true;
        r.lambda = s.value;
    } else {
        r.holds = false;
        r.reason = nonconstant_reason(s);
        r.witness = s.witness;
    }
    return r;
}

VerificationReport verify_pdf(const Family& fam) {
    const GroupSpec& g = fam.group();
    for (std::int64_t rank = 0; rank < g.order(); ++rank) {
        GroupElement e = g.element_at(rank);
        if (fam.block_of(e) < 0) {
            VerificationReport r;
            r.kind = "pdf";
            r.holds = false;
            r.reason = "element " + element_to_string(e) + " not covered by any block";
            r.witness = std::move(e);
            return r;
        }
    }
    VerificationReport r = verify_df(fam);
    r.kind = "pdf";
    return r;
}

VerificationReport verify_edf(const Family& fam) {
    VerificationReport r;
    r.kind = "edf";
    if (!require_two_blocks(fam, r)) {
        return r;
    }
    DiffMultiset u = external_union(fam);
    r.counts = u.entries();
    Constancy s = scan_constant(u);
    if (s.constant) {
        r.holds = true;
        r.lambda = s.value;
    } else {
        r.holds = false;
        r.reason = nonconstant_reason(s);
        r.witness = s.witness;
    }
    return r;
}

VerificationReport verify_bedf(const Family& fam, const BigInt& target) {
    VerificationReport r;
    r.kind = "bedf";
    r.target = target;
    if (target < 0) {
        throw InvalidInput("bedf target must be >= 0");
    }
    if (!require_two_blocks(fam, r)) {
        return r;
    }
    DiffMultiset u = external_union(fam);
    r.counts = u.entries();
    GroupElement argmax = fam.group().zero();
    BigInt mx = u.max_count_nonzero(&argmax);
    r.lambda = mx; // minimal feasible bound
    if (mx > 0) {
        r.witness = argmax;
    }
    if (mx <= target) {
        r.holds = true;
    } else {
        r.holds = false;
        r.reason = "max count " + mx.str() + " exceeds target " + target.str();
    }
    return r;
}

VerificationReport verify_gsedf(const Family& fam) {
    VerificationReport r;
    r.kind = "gsedf";
    if (!require_two_blocks(fam, r)) {
        return r;
    }
    std::vector<BigInt> values;
    for (std::size_t i = 0; i < fam.block_count(); ++i) {
        DiffMultiset u = external_diffs_from(fam, i);
        Constancy s = scan_constant(u);
        if (!s.constant) {
            r.holds = false;
            r.reason = "block " + std::to_string(i) + " union not constant: " +
                       nonconstant_reason(s);
            r.witness = s.witness;
            r.witness_block = i;
            r.counts = u.entries();
            return r;
        }
        values.push_back(s.value);
    }
    r.holds = true;
    r.lambdas = std::move(values);
    return r;
}

VerificationReport verify_bgsedf(const Family& fam, const std::vector<BigInt>& targets) {
    VerificationReport r;
    r.kind = "bgsedf";
    r.targets = targets;
    if (targets.size() != fam.block_count()) {
        throw InvalidInput("bgsedf needs one target per block");
    }
    for (const BigInt& t : targets) {
        if (t < 0) {
            throw InvalidInput("bgsedf targets must be >= 0");
        }
    }
    if (!require_two_blocks(fam, r)) {
        return r;
    }
    r.holds = true;
    for (std::size_t i = 0; i < fam.block_count(); ++i) {
        DiffMultiset u = external_diffs_from(fam, i);
        GroupElement argmax = fam.group().zero();
        BigInt mx = u.max_count_nonzero(&argmax);
        r.lambdas.push_back(mx);
        if (r.holds && mx > targets[i]) {
            r.holds = false;
            r.reason = "block " + std::to_string(i) + " max count " + mx.str() +
                       " exceeds target " + targets[i].str();
            r.witness = argmax;
            r.witness_block = i;
        }
    }
    return r;
}

VerificationReport verify_pedf(const Family& fam) {
    VerificationReport r;
    r.kind = "pedf";
    if (!require_two_blocks(fam, r)) {
        return r;
    }
    std::map<std::int64_t, std::vector<std::size_t>> by_size;
    for (std::size_t i = 0; i < fam.block_count(); ++i) {
        by_size[static_cast<std::int64_t>(fam.block(i).size())].push_back(i);
    }
    r.holds = true;
    for (const auto& [w, idxs] : by_size) {
        DiffMultiset u(fam.group());
        for (std::size_t i : idxs) {
            for (std::size_t j = 0; j < fam.block_count(); ++j) {
                if (j == i) {
                    continue;
                }
                for (const GroupElement& x : fam.block(i)) {
                    for (const GroupElement& y : fam.block(j)) {
                        u.add(fam.group().sub(x, y));
                    }
                }
            }
        }
        Constancy s = scan_constant(u);
        PedfBucket bucket;
        bucket.block_count = static_cast<std::int64_t>(idxs.size());
        bucket.block_size = w;
        bucket.uniform = s.constant;
        bucket.lambda = s.constant ? s.value : u.max_count_nonzero();
        if (!s.constant && r.holds) {
            r.holds = false;
            r.reason = "size-" + std::to_string(w) + " bucket not constant: " +
                       nonconstant_reason(s);
            r.witness = s.witness;
        }
        r.buckets.push_back(std::move(bucket));
    }
    return r;
}

VerificationReport classify_bswedf(const Family& fam) {
    VerificationReport r;
    r.kind = "bswedf";
    if (!require_two_blocks(fam, r)) {
        return r;
    }
    DiffMultiset u = weighted_external_union(fam);
    r.counts = u.entries();
    GroupElement argmax = fam.group().zero();
    BigInt mx = u.max_count_nonzero(&argmax);
    // Definition asks for the smallest positive bound, hence the floor of 1.
    BigInt lambda = mx > 0 ? mx : BigInt(1);
    r.holds = true;
    r.lambda = lambda;
    r.is_swedf = u.constant_on_nonzero(lambda);
    if (mx > 0) {
        r.witness = argmax;
    }
    return r;
}

VerificationReport verify_swedf(const Family& fam) {
    VerificationReport r;
    r.kind = "swedf";
    if (!require_two_blocks(fam, r)) {
        return r;
    }
    DiffMultiset u = weighted_external_union(fam);
    r.counts = u.entries();
    Constancy s = scan_constant(u);
    if (s.constant && s.value > 0) {
        r.holds = true;
        r.lambda = s.value;
        r.is_swedf = true;
        return r;
    }
    r.holds = false;
    r.is_swedf = false;
    BigInt mx = u.max_count_nonzero();
    r.lambda = mx > 0 ? mx : BigInt(1);
    if (!s.constant) {
        r.reason = nonconstant_reason(s);
        r.witness = s.witness;
    } else {
        r.reason = "weighted external union is empty";
    }
    return r;
}

VerificationReport rwedf_profile(const Family& fam) {
    VerificationReport r;
    r.kind = "rwedf";
    if (!require_two_blocks(fam, r)) {
        return r;
    }
    r.n_table = compute_n_table(fam);
    const std::vector<std::int64_t> sizes = fam.sizes();
    bool first = true;
    Rational d0;
    GroupElement base;
    r.holds = true;
    for (const auto& [delta, row] : r.n_table) {
        Rational d = 0;
        for (std::size_t i = 0; i < row.size(); ++i) {
            d += Rational(row[i], sizes[i]);
        }
        if (first) {
            d0 = d;
            base = delta;
            first = false;
            continue;
        }
        if (r.holds && d != d0) {
            r.holds = false;
            r.reason = "d(" + element_to_string(delta) + ")=" + to_string(d) +
                       " differs from d(" + element_to_string(base) + ")=" + to_string(d0);
            r.witness = delta;
        }
    }
    if (r.holds) {
        r.d = d0;
    }

    // The reciprocal-weight sum is the weighted count divided by k~, so this
    // verdict must coincide with the SWEDF classification.
    VerificationReport c = classify_bswedf(fam);
    bool sw = c.is_swedf.value_or(false);
    if (r.holds != sw) {
        throw Error("internal: RWEDF verdict disagrees with SWEDF classification");
    }
    if (r.holds && *r.d != Rational(*c.lambda) / Rational(fam.k_tilde())) {
        throw Error("internal: RWEDF index d differs from lambda/k~");
    }
    return r;
}

VerificationReport bimodal_check(const Family& fam) {
    VerificationReport r;
    r.kind = "bimodal";
    if (!require_two_blocks(fam, r)) {
        return r;
    }
    r.n_table = compute_n_table(fam);
    const std::vector<std::int64_t> sizes = fam.sizes();
    r.holds = true;
    for (const auto& [delta, row] : r.n_table) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] != 0 && row[i] != sizes[i]) {
                r.holds = false;
                r.reason = "N[" + std::to_string(i) + "](" + element_to_string(delta) +
                           ")=" + std::to_string(row[i]) + " outside {0," +
                           std::to_string(sizes[i]) + "}";
                r.witness = delta;
                r.witness_block = i;
                r.witness_count = row[i];
                return r;
            }
        }
    }
    return r;
}

} // namespace edfkit
