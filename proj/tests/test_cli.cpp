#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

// EDFKIT_BIN is injected by the build: absolute path of the CLI executable.

namespace {

using nlohmann::json;

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run(const std::string& args) {
    const std::string cmd = std::string(EDFKIT_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, n);
    }
    int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("edfkit-cli-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

std::filesystem::path write_z10(const TempDir& tmp) {
    auto p = tmp.path / "z10.json";
    std::ofstream(p) << R"({"group":{"factors":[10]},"blocks":[[5],[2],[0,4,6]]})";
    return p;
}

} // namespace

TEST_CASE("rho on the Z10 document") {
    TempDir tmp;
    CliResult r = run("rho " + write_z10(tmp).string());
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["rho"] == "4/9");
    CHECK(j["lambda"] == 4);
    CHECK(j["best_deltas"][0] == 1);
}

TEST_CASE("rho for a fixed delta with monte carlo") {
    TempDir tmp;
    auto z10 = write_z10(tmp).string();
    CliResult a = run("rho " + z10 + " --delta 6 --trials 2000 --seed 17");
    CHECK(a.exit_code == 0);
    json ja = json::parse(a.out);
    CHECK(ja["rho_delta"] == "1/9");
    CHECK(ja["monte_carlo"]["trials"] == 2000);
    CliResult b = run("rho " + z10 + " --delta 6 --trials 2000 --seed 17");
    CHECK(json::parse(b.out)["monte_carlo"]["wins"] == ja["monte_carlo"]["wins"]);
}

TEST_CASE("verify exit codes follow the verdict") {
    TempDir tmp;
    auto z10 = write_z10(tmp).string();
    CHECK(run("verify " + z10 + " --kind bswedf").exit_code == 0);
    CHECK(run("verify " + z10 + " --kind swedf").exit_code == 1);
    // The unweighted external union of this family peaks at count 2.
    CHECK(run("verify " + z10 + " --kind bedf --lambda 2").exit_code == 0);
    CHECK(run("verify " + z10 + " --kind bedf --lambda 1").exit_code == 1);
    CHECK(run("verify " + z10 + " --kind nonsense").exit_code == 3);
    CHECK(run("verify /nonexistent.json --kind df").exit_code == 3);
}

TEST_CASE("construct maps domain errors to exit 3") {
    CliResult bad = run("construct a --q 12");
    CHECK(bad.exit_code == 3);
    CliResult good = run("construct a --q 13 --flatten");
    CHECK(good.exit_code == 0);
    json j = json::parse(good.out);
    CHECK(j["family"]["group"]["factors"][0] == 26);
    CHECK(j["verified"]["lambda"] == 7);
    CHECK(j["optimal_certificate"] == true);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("bogus-subcommand").exit_code == 2);
    CHECK(run("rho").exit_code == 2);
    CHECK(run("bound --n 10").exit_code == 2);
    CHECK(run("search --n 10").exit_code == 2);
    CHECK(run("construct d --k 4 --t 1").exit_code == 2);
}

TEST_CASE("bound and search report the worked values") {
    json b = json::parse(run("bound --n 10 --m 3 --a 5").out);
    CHECK(b["improved_bound"] == "4/9");
    CHECK(b["argmin_K"] == json::array({1, 1, 3}));
    json s = json::parse(run("search --n 10 --K 1,2,2").out);
    CHECK(s["minimal_lambda"] == 3);
    CHECK(s["exhausted"] == true);
}

TEST_CASE("human mode renders text, in any flag position") {
    TempDir tmp;
    auto z10 = write_z10(tmp).string();
    CliResult pre = run("--human rho " + z10);
    CliResult post = run("rho " + z10 + " --human");
    CHECK(pre.exit_code == 0);
    CHECK(post.exit_code == 0);
    CHECK(pre.out == post.out);
    CHECK(pre.out.find("rho: 4/9") != std::string::npos);
    CHECK(pre.out.front() != '{');
}

TEST_CASE("catalog lifecycle through the CLI") {
    TempDir tmp;
    auto z10 = write_z10(tmp).string();
    auto dir = (tmp.path / "cat").string();
    CHECK(run("catalog add " + z10 + " --name z10 --kind bswedf --dir " + dir)
              .exit_code == 0);
    json listed = json::parse(run("catalog list --dir " + dir).out);
    REQUIRE(listed["entries"].size() == 1);
    CHECK(listed["entries"][0]["name"] == "z10");
    CHECK(run("catalog verify-all --dir " + dir).exit_code == 0);

    // Flip a byte and the store refuses to serve the entry.
    std::ofstream(tmp.path / "cat" / "z10.json", std::ios::app) << "\n";
    CHECK(run("catalog verify-all --dir " + dir).exit_code == 3);
}

TEST_CASE("cyclotomy subcommand") {
    json j = json::parse(run("cyclotomy --p 13 --e 4 --i 0").out);
    CHECK(j["alpha"] == 2);
    CHECK(j["elements"] == json::array({1, 3, 9}));
    json all = json::parse(run("cyclotomy --p 13 --e 2").out);
    CHECK(all["classes"].size() == 2);
    CHECK(run("cyclotomy --p 12 --e 4").exit_code == 3);
}

TEST_CASE("construct --out writes a loadable document") {
    TempDir tmp;
    auto out = (tmp.path / "b11.json").string();
    CHECK(run("construct b --n1 11 --flatten --out " + out).exit_code == 0);
    CHECK(run("verify " + out + " --kind bswedf").exit_code == 0);
    json doc = json::parse(std::ifstream(out));
    CHECK(doc["metadata"]["construction"] == "b");
    CHECK(doc["metadata"]["n1"] == 11);
}

TEST_CASE("config file via environment variable") {
    TempDir tmp;
    auto z10 = write_z10(tmp).string();
    auto cfg = tmp.path / "edfkit.ini";
    std::ofstream(cfg) << "human=true\n";
    CliResult r = run("rho " + z10); // no env: JSON
    CHECK(r.out.front() == '{');
    CliResult human = [&] {
        const std::string cmd = "EDFKIT_CONFIG=" + cfg.string() + " " +
                                std::string(EDFKIT_BIN) + " rho " + z10 +
                                " 2>/dev/null";
        FILE* pipe = ::popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        CliResult res;
        char buf[4096];
        std::size_t n;
        while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
            res.out.append(buf, n);
        }
        res.exit_code = WEXITSTATUS(::pclose(pipe));
        return res;
    }();
    CHECK(human.exit_code == 0);
    CHECK(human.out.find("rho: 4/9") != std::string::npos);
}
