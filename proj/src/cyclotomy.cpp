#include "edfkit/cyclotomy.hpp"

#include <algorithm>
#include <string>

#include "edfkit/errors.hpp"

namespace edfkit {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

// One strong-pseudoprime round; n odd, n - 1 = d * 2^r.
bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
    std::uint64_t x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

// Prime factors of n without multiplicity; trial division is enough at desk scale.
std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

} // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) {
    if (modulus == 0) {
        throw InvalidInput("pow_mod modulus cannot be zero");
    }
    if (modulus == 1) {
        return 0;
    }
    std::uint64_t result = 1;
    base %= modulus;
    while (exp > 0) {
        if (exp & 1u) {
            result = mul_mod(result, base, modulus);
        }
        base = mul_mod(base, base, modulus);
        exp >>= 1u;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++r;
    }
    // This base set is deterministic for all 64-bit n.
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (!miller_rabin_round(n, a, d, r)) {
            return false;
        }
    }
    return true;
}

std::int64_t element_order(std::int64_t g, std::int64_t q) {
    if (q < 2 || !is_prime(static_cast<std::uint64_t>(q))) {
        throw NotPrime("element_order needs a prime modulus, got " + std::to_string(q));
    }
    std::int64_t r = ((g % q) + q) % q;
    if (r == 0) {
        throw InvalidInput("element_order of zero is undefined");
    }
    std::int64_t order = q - 1;
    for (std::int64_t p : prime_factors(q - 1)) {
        while (order % p == 0 &&
               pow_mod(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(order / p),
                       static_cast<std::uint64_t>(q)) == 1) {
            order /= p;
        }
    }
    return order;
}

std::int64_t smallest_primitive_root(std::int64_t q) {
    if (q < 2 || !is_prime(static_cast<std::uint64_t>(q))) {
        throw NotPrime("primitive root needs a prime modulus, got " + std::to_string(q));
    }
    if (q == 2) {
        return 1;
    }
    std::vector<std::int64_t> factors = prime_factors(q - 1);
    for (std::int64_t g = 2; g < q; ++g) {
        bool primitive = true;
        for (std::int64_t p : factors) {
            if (pow_mod(static_cast<std::uint64_t>(g), static_cast<std::uint64_t>((q - 1) / p),
                        static_cast<std::uint64_t>(q)) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            return g;
        }
    }
    throw Error("no primitive root found for prime " + std::to_string(q));
}

CyclotomicClass cyclotomic_class(std::int64_t q, std::int64_t e, std::int64_t i,
                                 std::optional<std::int64_t> alpha) {
    if (!is_prime(static_cast<std::uint64_t>(q))) {
        throw NotPrime("cyclotomic classes need an odd prime q, got " + std::to_string(q));
    }
    if (q == 2) {
        throw InvalidCyclotomy("cyclotomic classes need an odd prime q, got 2");
    }
    if (e < 1 || (q - 1) % e != 0) {
        throw InvalidCyclotomy("order " + std::to_string(e) + " does not divide q - 1 = " +
                               std::to_string(q - 1));
    }
    if (i < 0 || i >= e) {
        throw InvalidCyclotomy("class index " + std::to_string(i) + " outside [0, " +
                               std::to_string(e) + ")");
    }
    std::int64_t a = alpha.value_or(smallest_primitive_root(q));
    if (a < 1 || a >= q || element_order(a, q) != q - 1) {
        throw InvalidCyclotomy(std::to_string(a) + " is not a primitive root mod " +
                               std::to_string(q));
    }
    std::int64_t f = (q - 1) / e;
    std::vector<std::int64_t> elems;
    elems.reserve(static_cast<std::size_t>(f));
    std::uint64_t step = pow_mod(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(e),
                                 static_cast<std::uint64_t>(q));
    std::uint64_t cur = pow_mod(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(i),
                                static_cast<std::uint64_t>(q));
    for (std::int64_t t = 0; t < f; ++t) {
        elems.push_back(static_cast<std::int64_t>(cur));
        cur = mul_mod(cur, step, static_cast<std::uint64_t>(q));
    }
    std::sort(elems.begin(), elems.end());
    return CyclotomicClass{q, e, i, a, std::move(elems)};
}

Family qr_family(std::int64_t q) {
    CyclotomicClass d0 = cyclotomic_class(q, 2, 0);
    CyclotomicClass d1 = cyclotomic_class(q, 2, 1);
    GroupSpec zq = make_group({q});
    auto lift = [](const std::vector<std::int64_t>& xs) {
        Block b;
        b.reserve(xs.size());
        for (std::int64_t x : xs) {
            b.push_back(GroupElement{x});
        }
        return b;
    };
    return Family(zq, {Block{zq.zero()}, lift(d0.elements), lift(d1.elements)});
}

} // namespace edfkit
