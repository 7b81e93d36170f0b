#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>

#include "edfkit/errors.hpp"
#include "edfkit/io.hpp"

using namespace edfkit;

namespace {

Family z10_family() {
    return Family(make_group({10}), {{{5}}, {{2}}, {{0}, {4}, {6}}});
}

Family z15_family() {
    return Family(make_group({15}), {{{2}, {6}, {8}, {9}},
                                     {{7}, {11}, {13}, {14}},
                                     {{1}, {3}, {4}, {12}},
                                     {{10}},
                                     {{5}}});
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("edfkit-io-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

} // namespace

TEST_CASE("parses the compact interchange form") {
    Family fam = parse_family(R"({"group":{"factors":[10]},"blocks":[[5],[2],[0,4,6]]})");
    CHECK(fam == z10_family());
}

TEST_CASE("round-trips product groups, metadata, and block order") {
    Family prod(make_group({3, 5}), {{{0, 1}, {2, 4}}, {{1, 0}}});
    Json meta = Json{{"note", "fixture"}, {"tags", Json::array({"x", "y"})}};
    FamilyDocument doc = parse_family_document(render_family(prod, meta));
    CHECK(doc.family == prod);
    CHECK(doc.metadata == meta);

    // Rendering a parsed canonical document reproduces it byte for byte.
    std::string text = render_family(z15_family());
    CHECK(render_family(parse_family(text)) == text);
}

TEST_CASE("bare integers only fit single-factor groups") {
    CHECK_THROWS_AS(parse_family(R"({"group":{"factors":[2,5]},"blocks":[[3]]})"),
                    ParseError);
    Family fam = parse_family(R"({"group":{"factors":[2,5]},"blocks":[[[1,3]],[[0,2]]]})");
    CHECK(fam.block(0) == Block{{1, 3}});
}

TEST_CASE("schema violations carry the offending field") {
    using Case = std::pair<std::string, std::string>;
    for (const auto& [text, needle] : {
             Case{"[1,2]", "root"},
             Case{"{\"blocks\":[[1]]}", "group"},
             Case{R"({"group":{"factors":"x"},"blocks":[[1]]})", "group.factors"},
             Case{R"({"group":{"factors":[10]},"blocks":4})", "blocks"},
             Case{R"({"group":{"factors":[10]},"blocks":[3]})", "blocks[0]"},
             Case{R"({"group":{"factors":[10]},"blocks":[[true]]})", "blocks[0][0]"},
             Case{R"({"group":{"factors":[10]},"blocks":[[11]]})", "blocks[0][0]"},
             Case{R"({"group":{"factors":[10]},"blocks":[[-1]]})", "blocks[0][0]"},
             Case{R"({"group":{"factors":[10]},"blocks":[[[1,2]]]})", "blocks[0][0]"},
             Case{R"({"group":{"factors":[10]},"blocks":[[1]],"extra":0})", "extra"},
             Case{R"({"format_version":2,"group":{"factors":[10]},"blocks":[[1]]})",
                  "format_version"},
             Case{R"({"group":{"factors":[10]},"blocks":[[1]],"metadata":7})",
                  "metadata"},
             Case{"{not json", "JSON"},
         }) {
        try {
            parse_family_document(text);
            FAIL_CHECK("no ParseError for ", text);
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    }
}

TEST_CASE("duplicates and overlaps are located errors") {
    CHECK_THROWS_AS(parse_family(R"({"group":{"factors":[10]},"blocks":[[1],[1]]})"),
                    NotDisjoint);
    CHECK_THROWS_AS(parse_family(R"({"group":{"factors":[10]},"blocks":[[2,2]]})"),
                    InvalidInput);
    try {
        parse_family(R"({"group":{"factors":[10]},"blocks":[[3],[5,3]]})");
        FAIL_CHECK("overlap accepted");
    } catch (const NotDisjoint& e) {
        std::string what = e.what();
        CHECK(what.find("0") != std::string::npos);
        CHECK(what.find("1") != std::string::npos);
    }
}

TEST_CASE("family digests are stable and content sensitive") {
    CHECK(family_digest(z10_family()) == family_digest(z10_family()));
    CHECK(family_digest(z10_family()) != family_digest(z15_family()));
}

TEST_CASE("reports serialize rationals as strings") {
    Family fam = z10_family();
    Json profile = profile_json(fam.group(), rho_profile(fam));
    CHECK(profile["rho"] == "4/9");
    CHECK(profile["rho_by_delta"]["6"] == "1/9");
    CHECK(profile["k_tilde"] == 3);

    Json report = report_json(fam.group(), classify_bswedf(fam));
    CHECK(report["lambda"] == 4);
    CHECK(report["is_swedf"] == false);
    CHECK(report["witness"] == 1);

    Json bounds = bound_json(improved_bound(10, 3, 5));
    CHECK(bounds["improved_bound"] == "4/9");
    CHECK(bounds["ps_bound"] == "10/27");
}

TEST_CASE("huge counts become decimal strings, not doubles") {
    VerificationReport r;
    r.kind = "bedf";
    r.holds = true;
    r.lambda = BigInt("123456789012345678901234567890");
    Json big = report_json(make_group({10}), r);
    CHECK(big["lambda"] == "123456789012345678901234567890");
}

TEST_CASE("catalog add, list, load, verify-all") {
    TempDir tmp;
    CatalogStore store(tmp.path);
    CatalogStore::Entry e =
        store.add("z15", z15_family(), "swedf", Json{{"source", "fixture"}});
    CHECK(e.kind == "swedf");
    CHECK(e.lambda == "16");

    store.add("z10", z10_family(), "bswedf", Json::object());
    auto entries = store.list();
    REQUIRE(entries.size() == 2);

    FamilyDocument doc = store.load("z15");
    CHECK(doc.family == z15_family());
    CHECK(doc.metadata["source"] == "fixture");

    auto verified = store.verify_all();
    CHECK(verified.size() == 2);
}

TEST_CASE("catalog rejects bad input") {
    TempDir tmp;
    CatalogStore store(tmp.path);
    CHECK_THROWS_AS(store.add("../evil", z10_family(), "bswedf", Json::object()),
                    InvalidInput);
    CHECK_THROWS_AS(store.add("z10", z10_family(), "swedf", Json::object()),
                    InvalidInput); // not an SWEDF
    CHECK_THROWS_AS(store.add("z10", z10_family(), "nonsense", Json::object()),
                    InvalidInput);
    CHECK_THROWS_AS(store.load("missing"), InvalidInput);
}

TEST_CASE("catalog detects tampering") {
    TempDir tmp;
    CatalogStore store(tmp.path);
    store.add("z15", z15_family(), "swedf", Json::object());

    // Swap one element of the stored family.
    std::ifstream in(tmp.path / "z15.json");
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    in.close();
    std::size_t pos = text.find("13");
    REQUIRE(pos != std::string::npos);
    text[pos] = '1';
    text[pos + 1] = '0';
    std::ofstream(tmp.path / "z15.json", std::ios::trunc) << text;

    CHECK_THROWS_AS(store.load("z15"), CatalogCorrupt);
    CHECK_THROWS_AS(store.verify_all(), CatalogCorrupt);
}

TEST_CASE("rational strings round-trip") {
    CHECK(to_string(Rational(4, 9)) == "4/9");
    CHECK(to_string(Rational(3)) == "3");
    CHECK(rational_from_string("4/9") == Rational(4, 9));
    CHECK(rational_from_string("-7/3") == Rational(-7, 3));
    CHECK(rational_from_string("12") == Rational(12));
    CHECK_THROWS_AS(rational_from_string("4/"), ParseError);
    CHECK_THROWS_AS(rational_from_string("x"), ParseError);
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
}
