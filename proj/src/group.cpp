#include "edfkit/group.hpp"

#include <numeric>
#include <sstream>

namespace edfkit {

namespace {

constexpr std::int64_t kMaxOrder = 1'000'000'000; // desk scale guard

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    // extended Euclid; caller guarantees gcd(a, m) == 1
    std::int64_t old_r = a % m, r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
}

} // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) {
        throw InvalidGroup("group: at least one cyclic factor required");
    }
    order_ = 1;
    for (std::int64_t f : factors_) {
        if (f < 2) {
            throw InvalidGroup("group: every factor must be >= 2, got " + std::to_string(f));
        }
        if (order_ > kMaxOrder / f) {
            throw InvalidGroup("group: order exceeds supported scale");
        }
        order_ *= f;
    }
}

GroupElement GroupSpec::zero() const {
    return GroupElement(arity(), 0);
}

bool GroupSpec::contains(const GroupElement& g) const {
    if (g.size() != arity()) return false;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] < 0 || g[i] >= factors_[i]) return false;
    }
    return true;
}

void GroupSpec::check_member(const GroupElement& g, const char* op) const {
    if (!contains(g)) {
        throw GroupMismatch(std::string(op) + ": element " + element_to_string(g) +
                            " does not belong to " + describe());
    }
}

GroupElement GroupSpec::add(const GroupElement& g, const GroupElement& h) const {
    check_member(g, "add");
    check_member(h, "add");
    GroupElement out(arity());
    for (std::size_t i = 0; i < arity(); ++i) {
        std::int64_t v = g[i] + h[i];
        if (v >= factors_[i]) v -= factors_[i];
        out[i] = v;
    }
    return out;
}

GroupElement GroupSpec::neg(const GroupElement& g) const {
    check_member(g, "neg");
    GroupElement out(arity());
    for (std::size_t i = 0; i < arity(); ++i) {
        out[i] = g[i] == 0 ? 0 : factors_[i] - g[i];
    }
    return out;
}

GroupElement GroupSpec::sub(const GroupElement& g, const GroupElement& h) const {
    check_member(g, "sub");
    check_member(h, "sub");
    GroupElement out(arity());
    for (std::size_t i = 0; i < arity(); ++i) {
        std::int64_t v = g[i] - h[i];
        if (v < 0) v += factors_[i];
        out[i] = v;
    }
    return out;
}

std::vector<GroupElement> GroupSpec::enumerate() const {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (std::int64_t idx = 0; idx < order_; ++idx) {
        out.push_back(element_at(idx));
    }
    return out;
}

std::int64_t GroupSpec::index_of(const GroupElement& g) const {
    check_member(g, "index_of");
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < arity(); ++i) {
        idx = idx * factors_[i] + g[i];
    }
    return idx;
}

GroupElement GroupSpec::element_at(std::int64_t index) const {
    if (index < 0 || index >= order_) {
        throw InvalidInput("element_at: index out of range");
    }
    GroupElement out(arity());
    for (std::size_t i = arity(); i-- > 0;) {
        out[i] = index % factors_[i];
        index /= factors_[i];
    }
    return out;
}

bool GroupSpec::factors_pairwise_coprime() const {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        for (std::size_t j = i + 1; j < factors_.size(); ++j) {
            if (std::gcd(factors_[i], factors_[j]) != 1) return false;
        }
    }
    return true;
}

std::int64_t GroupSpec::crt_flatten(const GroupElement& g) const {
    check_member(g, "crt_flatten");
    if (!factors_pairwise_coprime()) {
        throw NotCoprime("crt_flatten: factors of " + describe() + " are not pairwise coprime");
    }
    // x = sum_i g_i * M_i * (M_i^{-1} mod n_i)  (mod n)
    __int128 acc = 0;
    for (std::size_t i = 0; i < arity(); ++i) {
        const std::int64_t ni = factors_[i];
        const std::int64_t big_m = order_ / ni;
        const std::int64_t inv = mod_inverse(big_m % ni, ni);
        acc += static_cast<__int128>(g[i]) * ((static_cast<__int128>(big_m) * inv) % order_);
        acc %= order_;
    }
    return static_cast<std::int64_t>(acc);
}

GroupElement GroupSpec::crt_lift(std::int64_t x) const {
    if (!factors_pairwise_coprime()) {
        throw NotCoprime("crt_lift: factors of " + describe() + " are not pairwise coprime");
    }
    if (x < 0 || x >= order_) {
        throw InvalidInput("crt_lift: value out of range [0, n)");
    }
    GroupElement out(arity());
    for (std::size_t i = 0; i < arity(); ++i) {
        out[i] = x % factors_[i];
    }
    return out;
}

std::string GroupSpec::describe() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << "x";
        os << "Z" << factors_[i];
    }
    return os.str();
}

GroupSpec make_group(std::vector<std::int64_t> factors) {
    return GroupSpec(std::move(factors));
}

std::string element_to_string(const GroupElement& g) {
    if (g.size() == 1) {
        return std::to_string(g[0]);
    }
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) os << ",";
        os << g[i];
    }
    os << ")";
    return os.str();
}

} // namespace edfkit
