#pragma once

#include <cstdint>
#include <vector>

#include "edfkit/group.hpp"
#include "edfkit/numeric.hpp"

namespace edfkit {

/// Sorted, duplicate-free set of group elements.
using Block = std::vector<GroupElement>;

/**
 * A family of pairwise-disjoint nonempty blocks over one group.
 *
 * Block order is preserved as given (per-block parameters are positional);
 * elements inside a block are kept sorted. Disjointness is checked on
 * construction and never rechecked afterwards.
 */
class Family {
  public:
    Family(GroupSpec group, std::vector<Block> blocks);

    const GroupSpec& group() const { return group_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    const Block& block(std::size_t i) const { return blocks_[i]; }
    std::size_t block_count() const { return blocks_.size(); }

    /// Size profile K = (k_1, ..., k_m) in block order.
    std::vector<std::int64_t> sizes() const;
    /// a = sum of block sizes.
    std::int64_t total_size() const;
    /// k~ = lcm(k_1, ..., k_m).
    BigInt k_tilde() const;

    /// Index of the block containing g, or -1 when g lies in no block.
    std::int64_t block_of(const GroupElement& g) const;

    /// Blocks reordered by (size, lexicographic elements); group unchanged.
    Family canonical() const;

    /// Every block translated by g; parameters are unchanged by construction.
    Family translated(const GroupElement& g) const;

    /// CRT image over Z_n; requires pairwise coprime factors.
    Family flattened() const;

    bool operator==(const Family& other) const {
        return group_ == other.group_ && blocks_ == other.blocks_;
    }

  private:
    GroupSpec group_;
    std::vector<Block> blocks_;
    std::vector<std::int64_t> membership_; // element index -> block index, -1 outside
};

} // namespace edfkit
