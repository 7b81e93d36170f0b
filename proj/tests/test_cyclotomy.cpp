#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <set>

#include "edfkit/cyclotomy.hpp"
#include "edfkit/errors.hpp"
#include "edfkit/verify.hpp"
#include "oracles.hpp"

using namespace edfkit;

TEST_CASE("primality agrees with trial division up to 20000") {
    for (std::int64_t n = 0; n <= 20000; ++n) {
        CHECK(is_prime(n) == oracle::prime_trial(n));
    }
}

TEST_CASE("primality on adversarial composites and large primes") {
    // Carmichael numbers and strong-pseudoprime favorites.
    for (std::int64_t n : {561LL, 1105LL, 1729LL, 41041LL, 825265LL, 3215031751LL}) {
        CHECK(!is_prime(n));
    }
    CHECK(is_prime(2147483647));            // 2^31 - 1
    CHECK(is_prime(1000000007));
    CHECK(!is_prime(1000000007LL * 1000000009LL)); // semiprime near 10^18
    CHECK(is_prime(9223372036854775783LL)); // largest prime below 2^63
    CHECK(!is_prime(9223372036854775807LL));
}

TEST_CASE("modular exponentiation") {
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(pow_mod(3, 0, 7) == 1);
    std::int64_t acc = 1;
    for (int i = 0; i < 117; ++i) {
        acc = acc * 5 % 13;
    }
    CHECK(pow_mod(5, 117, 13) == acc);
    // Near the 64-bit edge: (p-1)^2 must not overflow inside.
    const std::int64_t p = 9223372036854775783LL;
    CHECK(pow_mod(p - 1, 2, p) == 1);
}

TEST_CASE("smallest primitive root matches brute-force order search") {
    for (std::int64_t p = 3; p <= 300; ++p) {
        if (!oracle::prime_trial(p)) {
            continue;
        }
        std::int64_t expected = 0;
        for (std::int64_t g = 1; g < p; ++g) {
            if (oracle::order_brute(g, p) == p - 1) {
                expected = g;
                break;
            }
        }
        CHECK(smallest_primitive_root(p) == expected);
    }
}

TEST_CASE("element order divides p-1 and is exact") {
    for (std::int64_t x = 1; x < 41; ++x) {
        CHECK(element_order(x, 41) == oracle::order_brute(x, 41));
    }
}

TEST_CASE("cyclotomic classes of F_13 with e=4") {
    CyclotomicClass d0 = cyclotomic_class(13, 4, 0);
    CHECK(d0.alpha == 2);
    CHECK(d0.elements == std::vector<std::int64_t>{1, 3, 9});
    CHECK(cyclotomic_class(13, 4, 1).elements == std::vector<std::int64_t>{2, 5, 6});
    CHECK(cyclotomic_class(13, 4, 2).elements == std::vector<std::int64_t>{4, 10, 12});
    CHECK(cyclotomic_class(13, 4, 3).elements == std::vector<std::int64_t>{7, 8, 11});
}

TEST_CASE("classes partition the multiplicative group") {
    for (std::int64_t q : {13, 17, 29, 37, 41}) {
        for (std::int64_t e : {2, 4}) {
            std::set<std::int64_t> seen;
            for (std::int64_t i = 0; i < e; ++i) {
                CyclotomicClass c = cyclotomic_class(q, e, i);
                CHECK(static_cast<std::int64_t>(c.elements.size()) == (q - 1) / e);
                for (std::int64_t x : c.elements) {
                    CHECK(seen.insert(x).second);
                }
            }
            CHECK(static_cast<std::int64_t>(seen.size()) == q - 1);
        }
    }
}

TEST_CASE("explicit alpha is validated") {
    // 6 is a primitive root of 13; 3 has order 3.
    CHECK(cyclotomic_class(13, 4, 0, 6).alpha == 6);
    CHECK_THROWS_AS(cyclotomic_class(13, 4, 0, 3), InvalidCyclotomy);
    CHECK_THROWS_AS(cyclotomic_class(13, 4, 0, 0), InvalidCyclotomy);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(cyclotomic_class(12, 4, 0), NotPrime);
    CHECK_THROWS_AS(cyclotomic_class(13, 5, 0), InvalidCyclotomy); // 5 does not divide 12
    CHECK_THROWS_AS(cyclotomic_class(13, 4, 4), InvalidCyclotomy); // i out of range
    CHECK_THROWS_AS(cyclotomic_class(2, 2, 0), InvalidCyclotomy);
    CHECK_THROWS_AS(qr_family(9), NotPrime);
}

TEST_CASE("quadratic-residue family layout") {
    Family f = qr_family(11);
    REQUIRE(f.block_count() == 3);
    CHECK(f.block(0) == Block{{0}});
    CHECK(f.block(1) == Block{{1}, {3}, {4}, {5}, {9}});
    CHECK(f.block(2) == Block{{2}, {6}, {7}, {8}, {10}});
}

TEST_CASE("qr family is a partitioned difference family for odd primes") {
    // Paley: both residue cases work out to a (q,(1,k,k),k-1)-PDF.
    for (std::int64_t q : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        VerificationReport r = verify_pdf(qr_family(q));
        CHECK(r.holds);
        CHECK(*r.lambda == (q - 3) / 2);
    }
}
