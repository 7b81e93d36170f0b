#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edfkit/errors.hpp"
#include "edfkit/numeric.hpp"

namespace edfkit {

/// Element of a direct product of cyclic groups: one reduced residue per factor.
using GroupElement = std::vector<std::int64_t>;

/**
 * Finite abelian group presented as Z_{n1} x ... x Z_{nr}.
 *
 * Elements are canonical residue tuples; equality is structural. All
 * operations are pure, so a GroupSpec can be shared freely across threads.
 */
class GroupSpec {
  public:
    /// Factors must all be >= 2. Throws InvalidGroup otherwise.
    explicit GroupSpec(std::vector<std::int64_t> factors);

    const std::vector<std::int64_t>& factors() const { return factors_; }
    std::int64_t order() const { return order_; }
    std::size_t arity() const { return factors_.size(); }

    GroupElement zero() const;
    bool contains(const GroupElement& g) const;

    GroupElement add(const GroupElement& g, const GroupElement& h) const;
    GroupElement neg(const GroupElement& g) const;
    GroupElement sub(const GroupElement& g, const GroupElement& h) const;

    /// All `order()` elements in lexicographic coordinate order, zero first.
    std::vector<GroupElement> enumerate() const;

    /// Lexicographic rank of an element, the inverse of element_at.
    std::int64_t index_of(const GroupElement& g) const;
    GroupElement element_at(std::int64_t index) const;

    bool factors_pairwise_coprime() const;

    /// CRT isomorphism onto Z_n. Requires pairwise coprime factors.
    std::int64_t crt_flatten(const GroupElement& g) const;
    /// Inverse of crt_flatten for x in [0, n).
    GroupElement crt_lift(std::int64_t x) const;

    bool operator==(const GroupSpec& other) const { return factors_ == other.factors_; }

    std::string describe() const;

  private:
    void check_member(const GroupElement& g, const char* op) const;

    std::vector<std::int64_t> factors_;
    std::int64_t order_;
};

GroupSpec make_group(std::vector<std::int64_t> factors);

std::string element_to_string(const GroupElement& g);

} // namespace edfkit
