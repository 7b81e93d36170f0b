#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "edfkit/family.hpp"
#include "edfkit/group.hpp"
#include "edfkit/numeric.hpp"

namespace edfkit {

/**
 * Multiset over the elements of one group, held sparsely as rank -> count.
 * Counts are exact big integers so weighted unions never overflow.
 */
class DiffMultiset {
  public:
    explicit DiffMultiset(GroupSpec group);

    const GroupSpec& group() const { return group_; }

    void add(const GroupElement& g, const BigInt& times = 1);
    BigInt count(const GroupElement& g) const;
    /// Sum of all multiplicities.
    const BigInt& total() const { return total_; }

    /// Same support with every multiplicity multiplied by c.
    DiffMultiset scaled(const BigInt& c) const;

    /// Largest multiplicity over the nonzero elements (0 when none occur),
    /// plus the lexicographically smallest element attaining it.
    BigInt max_count_nonzero(GroupElement* argmax = nullptr) const;

    /// True when every nonzero group element has multiplicity exactly c.
    bool constant_on_nonzero(const BigInt& c) const;

    /// Elements of nonzero multiplicity in lexicographic order.
    std::vector<std::pair<GroupElement, BigInt>> entries() const;

    bool operator==(const DiffMultiset& other) const {
        return group_ == other.group_ && counts_ == other.counts_;
    }

  private:
    GroupSpec group_;
    std::map<std::int64_t, BigInt> counts_; // keyed by element rank
    BigInt total_;
};

/// D(B) = { x - y : x, y in B, x != y }.
DiffMultiset internal_diffs(const GroupSpec& group, const Block& b);

/// D(B1, B2) = { x - y : x in B1, y in B2 }; the blocks may overlap.
DiffMultiset external_diffs(const GroupSpec& group, const Block& b1, const Block& b2);

/// Union of D(B_j, B_i) over all j != i, for one fixed i.
DiffMultiset external_diffs_into(const Family& fam, std::size_t i);

/// Union of D(B_i, B_j) over all j != i, for one fixed i.
DiffMultiset external_diffs_from(const Family& fam, std::size_t i);

/// Block with an integer weight attached: w (*) B counts each element w times.
struct WeightedBlock {
    Block elements;
    BigInt weight;
};

/// (k~ / k_i) (*) B_i, the weight that equalizes block contributions.
WeightedBlock weighted_block(const Family& fam, std::size_t i);

/**
 * Multiset union over i of (k~/k_i) (*) D(union_{j != i} B_j, B_i).
 *
 * Zero never occurs (blocks are disjoint) and the total is always
 * k~ * a * (m - 1); both invariants are rechecked here.
 */
DiffMultiset weighted_external_union(const Family& fam);

/// Plain union over i of D(union_{j != i} B_j, B_i), no weights.
DiffMultiset external_union(const Family& fam);

} // namespace edfkit
