#include "edfkit/constructions.hpp"

#include <numeric>
#include <string>

#include "edfkit/bounds.hpp"
#include "edfkit/cyclotomy.hpp"
#include "edfkit/errors.hpp"

namespace edfkit {

namespace {

// {c} x S as a block of the two-factor group.
Block prefix_block(std::int64_t c, const std::vector<std::int64_t>& s) {
    Block b;
    b.reserve(s.size());
    for (std::int64_t x : s) {
        b.push_back(GroupElement{c, x});
    }
    return b;
}

void append(Block& dst, const Block& src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

// Shared tail: classify, compare against the prediction, attach the
// optimality certificate. A mismatch is an implementation fault, not input.
ConstructionResult finish(Family family, PredictedParams predicted, const char* name) {
    VerificationReport verified = classify_bswedf(family);
    if (family.group().order() != predicted.n ||
        static_cast<std::int64_t>(family.block_count()) != predicted.m ||
        family.sizes() != predicted.K || family.total_size() != predicted.a) {
        throw Error(std::string("internal: construction ") + name +
                    " produced wrong shape");
    }
    if (!verified.lambda || *verified.lambda != predicted.lambda) {
        throw Error(std::string("internal: construction ") + name +
                    " failed to reproduce its lambda");
    }
    bool optimal = predicted.lambda == lambda_lower_bound(predicted.n, predicted.K);
    return ConstructionResult{std::move(family), std::move(predicted), std::move(verified),
                              optimal};
}

std::int64_t require_4k_plus_1_odd_k(std::int64_t q, const char* name) {
    if (q < 2 || !is_prime(static_cast<std::uint64_t>(q))) {
        throw NotPrime(std::string(name) + " needs a prime q, got " + std::to_string(q));
    }
    if (q % 4 != 1) {
        throw PreconditionUnmet(std::string(name) + " needs q = 4k+1, got q = " +
                                std::to_string(q));
    }
    std::int64_t k = (q - 1) / 4;
    if (k % 2 == 0) {
        throw PreconditionUnmet(std::string(name) + " needs odd k, got k = " +
                                std::to_string(k));
    }
    return k;
}

} // namespace

ConstructionResult construct_a(std::int64_t q) {
    std::int64_t k = require_4k_plus_1_odd_k(q, "construction A");
    GroupSpec g = make_group({2, q});
    Block s1{GroupElement{0, 0}, GroupElement{1, 0}};
    Block s2 = prefix_block(0, cyclotomic_class(q, 4, 0).elements);
    append(s2, prefix_block(1, cyclotomic_class(q, 4, 2).elements));
    Block s3 = prefix_block(0, cyclotomic_class(q, 4, 1).elements);
    append(s3, prefix_block(0, cyclotomic_class(q, 4, 3).elements));
    Family fam(std::move(g), {std::move(s1), std::move(s2), std::move(s3)});

    PredictedParams p;
    p.n = 2 * q;
    p.m = 3;
    p.K = {2, 2 * k, 2 * k};
    p.a = 4 * k + 2;
    p.lambda = 2 * k + 1;
    return finish(std::move(fam), std::move(p), "A");
}

ConstructionResult construct_b(std::int64_t n1) {
    if (n1 < 2 || !is_prime(static_cast<std::uint64_t>(n1))) {
        throw NotPrime("construction B needs a prime n1, got " + std::to_string(n1));
    }
    if (n1 % 2 == 0) {
        throw PreconditionUnmet("construction B needs an odd prime n1");
    }
    std::int64_t k = (n1 - 1) / 2;
    // Needs {{0}, D2_0, D2_1} to be an (n1, (1,k,k), k-1)-PDF; that is
    // checked here, never assumed from a congruence condition.
    Family qr = qr_family(n1);
    VerificationReport pdf = verify_pdf(qr);
    if (!pdf.holds || !pdf.lambda || *pdf.lambda != k - 1) {
        std::string detail = pdf.holds
                                 ? "lambda " + pdf.lambda->str() + " instead of " +
                                       std::to_string(k - 1)
                                 : pdf.reason;
        throw PreconditionUnmet("construction B: quadratic-residue family over Z_" +
                                std::to_string(n1) + " is not a (" + std::to_string(n1) +
                                ",(1," + std::to_string(k) + "," + std::to_string(k) + ")," +
                                std::to_string(k - 1) + ")-PDF: " + detail);
    }

    GroupSpec g = make_group({2, n1});
    Block w1{GroupElement{1, 0}};
    Block w2 = prefix_block(0, cyclotomic_class(n1, 2, 0).elements);
    Block w3 = prefix_block(0, cyclotomic_class(n1, 2, 1).elements);
    Family fam(std::move(g), {std::move(w1), std::move(w2), std::move(w3)});

    PredictedParams p;
    p.n = 2 * n1;
    p.m = 3;
    p.K = {1, k, k};
    p.a = 2 * k + 1;
    p.lambda = k + 1;
    return finish(std::move(fam), std::move(p), "B");
}

ConstructionResult construct_c(std::int64_t q) {
    std::int64_t k = require_4k_plus_1_odd_k(q, "construction C");
    GroupSpec g = make_group({3, q});
    Block u1{GroupElement{1, 0}};
    Block u2{GroupElement{2, 0}};
    Block u3 = prefix_block(0, cyclotomic_class(q, 2, 0).elements);
    Block u4 = prefix_block(0, cyclotomic_class(q, 2, 1).elements);
    Family fam(std::move(g), {std::move(u1), std::move(u2), std::move(u3), std::move(u4)});

    PredictedParams p;
    p.n = 3 * q;
    p.m = 4;
    p.K = {1, 1, 2 * k, 2 * k};
    p.a = 4 * k + 2;
    p.lambda = 2 * k + 1;
    return finish(std::move(fam), std::move(p), "C");
}

ConstructionResult construct_d(const Family& pdf, std::int64_t k, std::int64_t t) {
    if (k < 3 || t < 1) {
        throw PreconditionUnmet("construction D needs k >= 3 and t >= 1");
    }
    const std::int64_t f1 = k - 1;
    const std::int64_t f2 = t * k + 1;
    if (std::gcd(f1, f2) != 1) {
        throw NotCoprime("construction D needs gcd(k-1, tk+1) = 1");
    }
    const std::int64_t n = f1 * f2;
    const std::int64_t l = t * f1 + 1; // block count of the input PDF

    // Accept the PDF over Z_{k-1} x Z_{tk+1} or in flattened Z_n form.
    GroupSpec product = make_group({f1, f2});
    Family lifted = [&]() {
        if (pdf.group() == product) {
            return pdf;
        }
        if (pdf.group().arity() == 1 && pdf.group().order() == n) {
            std::vector<Block> blocks;
            blocks.reserve(pdf.block_count());
            for (const Block& b : pdf.blocks()) {
                Block nb;
                nb.reserve(b.size());
                for (const GroupElement& e : b) {
                    nb.push_back(product.crt_lift(e[0]));
                }
                blocks.push_back(std::move(nb));
            }
            return Family(product, std::move(blocks));
        }
        throw PreconditionUnmet("construction D: PDF must live over Z_" +
                                std::to_string(f1) + "xZ_" + std::to_string(f2) +
                                " or Z_" + std::to_string(n));
    }();

    if (static_cast<std::int64_t>(lifted.block_count()) != l) {
        throw PreconditionUnmet("construction D: PDF must have " + std::to_string(l) +
                                " blocks, got " + std::to_string(lifted.block_count()));
    }
    std::vector<std::int64_t> want_sizes(static_cast<std::size_t>(l), k);
    want_sizes.back() = k - 1;
    if (lifted.sizes() != want_sizes) {
        throw PreconditionUnmet(
            "construction D: PDF needs blocks of size (k,...,k,k-1)");
    }
    Block last_want;
    for (std::int64_t j = 0; j < f1; ++j) {
        last_want.push_back(GroupElement{j, 0});
    }
    if (lifted.block(static_cast<std::size_t>(l - 1)) != last_want) {
        throw PreconditionUnmet("construction D: last PDF block must be Z_{k-1} x {0}");
    }
    VerificationReport pdf_report = verify_pdf(lifted);
    if (!pdf_report.holds || !pdf_report.lambda || *pdf_report.lambda != k - 1) {
        std::string detail = pdf_report.holds && pdf_report.lambda
                                 ? "lambda " + pdf_report.lambda->str()
                                 : pdf_report.reason;
        throw PreconditionUnmet("construction D: input does not verify as a (" +
                                std::to_string(n) + ",(k,...,k,k-1)," +
                                std::to_string(k - 1) + ")-PDF: " + detail);
    }

    std::vector<Block> blocks(lifted.blocks().begin(), lifted.blocks().end() - 1);
    for (std::int64_t j = 1; j <= k - 2; ++j) {
        blocks.push_back(Block{GroupElement{j % f1, 0}});
    }
    Family fam(product, std::move(blocks));

    PredictedParams p;
    p.n = n;
    p.m = t * f1 + k - 2;
    p.K.assign(static_cast<std::size_t>(t * f1), k);
    p.K.insert(p.K.end(), static_cast<std::size_t>(k - 2), 1);
    p.a = n - 1;
    p.lambda = BigInt(t + 1) * k * k - BigInt(t + 3) * k;
    ConstructionResult result = finish(std::move(fam), std::move(p), "D");

    // The construction guarantees more than the BSWEDF parameter; check all of it.
    if (!result.verified.is_swedf.value_or(false)) {
        throw Error("internal: construction D output is not an SWEDF");
    }
    VerificationReport rw = rwedf_profile(result.family);
    Rational want_d(BigInt(t + 1) * k - t - 3);
    if (!rw.holds || !rw.d || *rw.d != want_d) {
        throw Error("internal: construction D output is not a d=(t+1)k-t-3 RWEDF");
    }
    if (bimodal_check(result.family).holds) {
        throw Error("internal: construction D output unexpectedly bimodal");
    }
    return result;
}

std::vector<std::pair<std::string, Family>> builtin_pdf_catalog() {
    std::vector<std::pair<std::string, Family>> out;

    // The (15,(4,4,4,3),3)-PDF over Z_3 x Z_5, last block Z_3 x {0}.
    GroupSpec z3z5 = make_group({3, 5});
    std::vector<std::vector<std::int64_t>> flat_blocks = {
        {6, 9, 2, 8}, {11, 14, 7, 13}, {1, 4, 12, 3}, {0, 5, 10}};
    std::vector<Block> product_blocks;
    for (const auto& fb : flat_blocks) {
        Block b;
        for (std::int64_t x : fb) {
            b.push_back(z3z5.crt_lift(x));
        }
        product_blocks.push_back(std::move(b));
    }
    Family z15_product(z3z5, std::move(product_blocks));
    out.emplace_back("z15", z15_product);
    out.emplace_back("z15-flat", z15_product.flattened());

    for (std::int64_t p : {5, 7, 11, 13}) {
        out.emplace_back("qr-" + std::to_string(p), qr_family(p));
    }

    for (const auto& [name, fam] : out) {
        VerificationReport r = verify_pdf(fam);
        if (!r.holds) {
            throw Error("internal: built-in PDF " + name + " failed verification: " +
                        r.reason);
        }
    }
    return out;
}

} // namespace edfkit
