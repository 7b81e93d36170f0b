#include "edfkit/multiset.hpp"

#include "edfkit/errors.hpp"

namespace edfkit {

DiffMultiset::DiffMultiset(GroupSpec group) : group_(std::move(group)), total_(0) {}

void DiffMultiset::add(const GroupElement& g, const BigInt& times) {
    if (times < 0) {
        throw InvalidInput("multiset multiplicities cannot be negative");
    }
    if (times == 0) {
        return;
    }
    counts_[group_.index_of(g)] += times;
    total_ += times;
}

BigInt DiffMultiset::count(const GroupElement& g) const {
    auto it = counts_.find(group_.index_of(g));
    return it == counts_.end() ? BigInt(0) : it->second;
}

DiffMultiset DiffMultiset::scaled(const BigInt& c) const {
    if (c < 0) {
        throw InvalidInput("multiset scale factor cannot be negative");
    }
    DiffMultiset out(group_);
    if (c == 0) {
        return out;
    }
    for (const auto& [rank, n] : counts_) {
        out.counts_[rank] = n * c;
    }
    out.total_ = total_ * c;
    return out;
}

BigInt DiffMultiset::max_count_nonzero(GroupElement* argmax) const {
    BigInt best = 0;
    std::int64_t best_rank = -1;
    // map iteration is rank order, which is lexicographic element order.
    for (const auto& [rank, n] : counts_) {
        if (rank == 0) {
            continue; // rank 0 is the identity
        }
        if (n > best) {
            best = n;
            best_rank = rank;
        }
    }
    if (argmax != nullptr && best_rank >= 0) {
        *argmax = group_.element_at(best_rank);
    }
    return best;
}

bool DiffMultiset::constant_on_nonzero(const BigInt& c) const {
    if (c == 0) {
        for (const auto& [rank, n] : counts_) {
            if (rank != 0 && n != 0) {
                return false;
            }
        }
        return true;
    }
    // All n - 1 nonzero elements must carry count c, nothing more.
    BigInt nonzero_total = total_;
    auto it = counts_.find(0);
    if (it != counts_.end()) {
        nonzero_total -= it->second;
    }
    if (nonzero_total != c * (group_.order() - 1)) {
        return false;
    }
    for (const auto& [rank, n] : counts_) {
        if (rank != 0 && n != c) {
            return false;
        }
    }
    return true;
}

std::vector<std::pair<GroupElement, BigInt>> DiffMultiset::entries() const {
    std::vector<std::pair<GroupElement, BigInt>> out;
    out.reserve(counts_.size());
    for (const auto& [rank, n] : counts_) {
        if (n != 0) {
            out.emplace_back(group_.element_at(rank), n);
        }
    }
    return out;
}

DiffMultiset internal_diffs(const GroupSpec& group, const Block& b) {
    DiffMultiset out(group);
    for (const GroupElement& x : b) {
        for (const GroupElement& y : b) {
            if (x != y) {
                out.add(group.sub(x, y));
            }
        }
    }
    return out;
}

DiffMultiset external_diffs(const GroupSpec& group, const Block& b1, const Block& b2) {
    DiffMultiset out(group);
    for (const GroupElement& x : b1) {
        for (const GroupElement& y : b2) {
            out.add(group.sub(x, y));
        }
    }
    return out;
}

DiffMultiset external_diffs_into(const Family& fam, std::size_t i) {
    if (i >= fam.block_count()) {
        throw InvalidInput("block index out of range");
    }
    DiffMultiset out(fam.group());
    for (std::size_t j = 0; j < fam.block_count(); ++j) {
        if (j == i) {
            continue;
        }
        for (const GroupElement& x : fam.block(j)) {
            for (const GroupElement& y : fam.block(i)) {
                out.add(fam.group().sub(x, y));
            }
        }
    }
    return out;
}

DiffMultiset external_diffs_from(const Family& fam, std::size_t i) {
    if (i >= fam.block_count()) {
        throw InvalidInput("block index out of range");
    }
    DiffMultiset out(fam.group());
    for (std::size_t j = 0; j < fam.block_count(); ++j) {
        if (j == i) {
            continue;
        }
        for (const GroupElement& x : fam.block(i)) {
            for (const GroupElement& y : fam.block(j)) {
                out.add(fam.group().sub(x, y));
            }
        }
    }
    return out;
}

WeightedBlock weighted_block(const Family& fam, std::size_t i) {
    if (i >= fam.block_count()) {
        throw InvalidInput("block index out of range");
    }
    BigInt w = fam.k_tilde() / static_cast<std::int64_t>(fam.block(i).size());
    return WeightedBlock{fam.block(i), w};
}

DiffMultiset weighted_external_union(const Family& fam) {
    const std::size_t m = fam.block_count();
    DiffMultiset out(fam.group());
    BigInt ktilde = fam.k_tilde();
    for (std::size_t i = 0; i < m; ++i) {
        BigInt w = ktilde / static_cast<std::int64_t>(fam.block(i).size());
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) {
                continue;
            }
            for (const GroupElement& x : fam.block(j)) {
                for (const GroupElement& y : fam.block(i)) {
                    out.add(fam.group().sub(x, y), w);
                }
            }
        }
    }
    if (out.count(fam.group().zero()) != 0) {
        throw Error("weighted external union contains zero; blocks not disjoint");
    }
    BigInt expected = ktilde * fam.total_size() * (static_cast<std::int64_t>(m) - 1);
    if (out.total() != expected) {
        throw Error("weighted external union has wrong total");
    }
    return out;
}

DiffMultiset external_union(const Family& fam) {
    DiffMultiset out(fam.group());
    for (std::size_t i = 0; i < fam.block_count(); ++i) {
        for (std::size_t j = 0; j < fam.block_count(); ++j) {
            if (j == i) {
                continue;
            }
            for (const GroupElement& x : fam.block(j)) {
                for (const GroupElement& y : fam.block(i)) {
                    out.add(fam.group().sub(x, y));
                }
            }
        }
    }
    return out;
}

} // namespace edfkit
