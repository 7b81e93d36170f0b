#include "edfkit/family.hpp"

#include <algorithm>
#include <string>

#include "edfkit/errors.hpp"

namespace edfkit {

Family::Family(GroupSpec group, std::vector<Block> blocks)
    : group_(std::move(group)), blocks_(std::move(blocks)) {
    if (blocks_.empty()) {
        throw InvalidInput("family needs at least one block");
    }
    membership_.assign(static_cast<std::size_t>(group_.order()), -1);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        Block& b = blocks_[i];
        if (b.empty()) {
            throw InvalidInput("block " + std::to_string(i) + " is empty");
        }
        std::sort(b.begin(), b.end());
        auto dup = std::adjacent_find(b.begin(), b.end());
        if (dup != b.end()) {
            throw InvalidInput("block " + std::to_string(i) + " repeats element " +
                               element_to_string(*dup));
        }
        for (const GroupElement& g : b) {
            std::int64_t idx = group_.index_of(g); // validates membership
            if (membership_[static_cast<std::size_t>(idx)] >= 0) {
                throw NotDisjoint("element " + element_to_string(g) + " appears in blocks " +
                                  std::to_string(membership_[static_cast<std::size_t>(idx)]) +
                                  " and " + std::to_string(i));
            }
            membership_[static_cast<std::size_t>(idx)] = static_cast<std::int64_t>(i);
        }
    }
}

std::vector<std::int64_t> Family::sizes() const {
    std::vector<std::int64_t> out;
    out.reserve(blocks_.size());
    for (const Block& b : blocks_) {
        out.push_back(static_cast<std::int64_t>(b.size()));
    }
    return out;
}

std::int64_t Family::total_size() const {
    std::int64_t a = 0;
    for (const Block& b : blocks_) {
        a += static_cast<std::int64_t>(b.size());
    }
    return a;
}

BigInt Family::k_tilde() const {
    return lcm_list(sizes());
}

std::int64_t Family::block_of(const GroupElement& g) const {
    return membership_[static_cast<std::size_t>(group_.index_of(g))];
}

Family Family::canonical() const {
    std::vector<Block> ordered = blocks_;
    std::stable_sort(ordered.begin(), ordered.end(), [](const Block& x, const Block& y) {
        if (x.size() != y.size()) {
            return x.size() < y.size();
        }
        return x < y;
    });
    return Family(group_, std::move(ordered));
}

Family Family::translated(const GroupElement& g) const {
    std::vector<Block> moved;
    moved.reserve(blocks_.size());
    for (const Block& b : blocks_) {
        Block nb;
        nb.reserve(b.size());
        for (const GroupElement& x : b) {
            nb.push_back(group_.add(x, g));
        }
        moved.push_back(std::move(nb));
    }
    return Family(group_, std::move(moved));
}

Family Family::flattened() const {
    GroupSpec flat = make_group({group_.order()});
    std::vector<Block> image;
    image.reserve(blocks_.size());
    for (const Block& b : blocks_) {
        Block nb;
        nb.reserve(b.size());
        for (const GroupElement& x : b) {
            nb.push_back(GroupElement{group_.crt_flatten(x)});
        }
        image.push_back(std::move(nb));
    }
    return Family(std::move(flat), std::move(image));
}

} // namespace edfkit
