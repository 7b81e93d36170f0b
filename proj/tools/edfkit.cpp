// Command-line front end. All subcommands print JSON to stdout (or key/value
// text with --human) and map outcomes to a stable exit-code contract:
//   0 success / property holds
//   1 property does not hold, or a search produced no witness
//   2 usage error
//   3 domain error (bad precondition, parse failure, corrupt catalog, ...)

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edfkit/io.hpp"
#include "edfkit/prng.hpp"

namespace {

using edfkit::Json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw edfkit::InvalidInput("cannot read " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

edfkit::GroupElement parse_delta(const edfkit::GroupSpec& group, const std::string& text) {
    edfkit::GroupElement g;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            g.push_back(std::stoll(part));
        } catch (const std::exception&) {
            throw edfkit::InvalidInput("cannot parse delta coordinate \"" + part + "\"");
        }
    }
    if (!group.contains(g)) {
        throw edfkit::InvalidInput("delta " + text + " is not a reduced element of " +
                                   group.describe());
    }
    return g;
}

bool is_scalar(const Json& j) {
    return !j.is_object() && !j.is_array();
}

std::string scalar_text(const Json& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
}

// Plain nested key/value rendering for --human; arrays of scalars inline.
void print_human(const Json& j, std::ostream& os, int indent) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (is_scalar(value)) {
                os << pad << key << ": " << scalar_text(value) << "\n";
            } else if (value.is_array() &&
                       std::all_of(value.begin(), value.end(), is_scalar)) {
                os << pad << key << ":";
                for (const Json& v : value) {
                    os << " " << scalar_text(v);
                }
                os << "\n";
            } else {
                os << pad << key << ":\n";
                print_human(value, os, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const Json& v : j) {
            if (is_scalar(v)) {
                os << pad << "- " << scalar_text(v) << "\n";
            } else {
                os << pad << "-\n";
                print_human(v, os, indent + 2);
            }
        }
    } else {
        os << pad << scalar_text(j) << "\n";
    }
}

void emit(const Json& j, bool human) {
    if (human) {
        print_human(j, std::cout, 0);
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

struct Options {
    bool human = false;

    std::string file;
    std::string kind;
    std::string lambda;
    std::vector<std::string> lambdas;

    std::int64_t q = 0;
    std::int64_t n1 = 0;
    std::int64_t k = 0;
    std::int64_t t = 0;
    std::string pdf_file;
    std::string builtin;
    bool flatten = false;
    std::string out;

    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t a = 0;
    std::vector<std::int64_t> K;
    bool allow_large = false;

    std::string delta;
    bool classify = false;
    std::uint64_t budget = edfkit::kDefaultSearchBudget;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    bool unit_reduction = false;

    std::string dir = "catalog";
    std::string name;
};

int run_construct(const std::string& which, const Options& opt) {
    edfkit::ConstructionResult result = [&] {
        if (which == "a") return edfkit::construct_a(opt.q);
        if (which == "b") return edfkit::construct_b(opt.n1);
        if (which == "c") return edfkit::construct_c(opt.q);
        // d
        if (!opt.builtin.empty()) {
            for (const auto& [name, fam] : edfkit::builtin_pdf_catalog()) {
                if (name == opt.builtin) {
                    return edfkit::construct_d(fam, opt.k, opt.t);
                }
            }
            std::string known;
            for (const auto& [name, fam] : edfkit::builtin_pdf_catalog()) {
                known += (known.empty() ? "" : ", ") + name;
            }
            throw edfkit::InvalidInput("unknown builtin PDF \"" + opt.builtin +
                                       "\" (available: " + known + ")");
        }
        return edfkit::construct_d(edfkit::parse_family(slurp(opt.pdf_file)), opt.k, opt.t);
    }();

    if (!opt.out.empty()) {
        Json meta = Json{{"construction", which}};
        if (which == "a" || which == "c") meta["q"] = opt.q;
        if (which == "b") meta["n1"] = opt.n1;
        if (which == "d") { meta["k"] = opt.k; meta["t"] = opt.t; }
        const edfkit::Family presented =
            opt.flatten ? result.family.flattened() : result.family;
        std::ofstream f(opt.out, std::ios::binary | std::ios::trunc);
        f << edfkit::render_family(presented, meta);
        if (!f) {
            throw edfkit::InvalidInput("cannot write " + opt.out);
        }
    }
    emit(edfkit::construction_json(result, opt.flatten), opt.human);
    return 0;
}

int run_verify(const Options& opt) {
    edfkit::Family fam = edfkit::parse_family(slurp(opt.file));
    edfkit::VerificationReport report = [&] {
        if (opt.kind == "bedf") {
            if (opt.lambda.empty()) {
                throw edfkit::InvalidInput("--kind bedf needs --lambda");
            }
            return edfkit::verify_bedf(fam, edfkit::BigInt(opt.lambda));
        }
        if (opt.kind == "bgsedf") {
            if (opt.lambdas.empty()) {
                throw edfkit::InvalidInput("--kind bgsedf needs --lambdas");
            }
            std::vector<edfkit::BigInt> targets;
            for (const std::string& s : opt.lambdas) {
                targets.emplace_back(s);
            }
            return edfkit::verify_bgsedf(fam, targets);
        }
        if (opt.kind == "df") return edfkit::verify_df(fam);
        if (opt.kind == "pdf") return edfkit::verify_pdf(fam);
        if (opt.kind == "edf") return edfkit::verify_edf(fam);
        if (opt.kind == "gsedf") return edfkit::verify_gsedf(fam);
        if (opt.kind == "pedf") return edfkit::verify_pedf(fam);
        if (opt.kind == "bswedf") return edfkit::classify_bswedf(fam);
        if (opt.kind == "swedf") return edfkit::verify_swedf(fam);
        if (opt.kind == "rwedf") return edfkit::rwedf_profile(fam);
        if (opt.kind == "bimodal") return edfkit::bimodal_check(fam);
        throw edfkit::InvalidInput("unknown --kind \"" + opt.kind + "\"");
    }();
    emit(edfkit::report_json(fam.group(), report), opt.human);
    return report.holds ? 0 : 1;
}

int run_bound(const Options& opt) {
    edfkit::BoundReport report =
        opt.K.empty() ? edfkit::improved_bound(opt.n, opt.m, opt.a, opt.allow_large)
                      : edfkit::bound_report_for_K(opt.n, opt.K);
    emit(edfkit::bound_json(report), opt.human);
    return 0;
}

int run_rho(const Options& opt) {
    edfkit::Family fam = edfkit::parse_family(slurp(opt.file));
    if (!opt.delta.empty()) {
        edfkit::GroupElement delta = parse_delta(fam.group(), opt.delta);
        Json j;
        j["delta"] = edfkit::element_json(fam.group(), delta);
        j["rho_delta"] = edfkit::to_string(edfkit::rho_delta(fam, delta));
        if (opt.trials > 0) {
            j["monte_carlo"] =
                edfkit::mc_json(edfkit::monte_carlo_attack(fam, delta, opt.trials, opt.seed));
        }
        emit(j, opt.human);
        return 0;
    }
    edfkit::AmdProfile profile = opt.classify
                                     ? edfkit::classify_optimality(fam, opt.budget)
                                     : edfkit::rho_profile(fam);
    emit(edfkit::profile_json(fam.group(), profile), opt.human);
    return 0;
}

int run_search(const Options& opt, bool have_K) {
    edfkit::SearchResult result =
        have_K ? edfkit::min_lambda_search(opt.n, opt.K, opt.budget, opt.unit_reduction)
               : edfkit::strongly_optimal_search(opt.n, opt.m, opt.a, opt.budget,
                                                 opt.unit_reduction);
    emit(edfkit::search_json(result), opt.human);
    return result.witness ? 0 : 1;
}

Json entry_json(const edfkit::CatalogStore::Entry& e) {
    return Json{{"name", e.name}, {"kind", e.kind}, {"holds", e.holds},
                {"lambda", e.lambda}, {"digest", e.digest}};
}

int run_catalog(const std::string& action, const Options& opt) {
    edfkit::CatalogStore store{opt.dir};
    if (action == "add") {
        edfkit::FamilyDocument doc = edfkit::parse_family_document(slurp(opt.file));
        edfkit::CatalogStore::Entry entry =
            store.add(opt.name, doc.family, opt.kind, doc.metadata);
        emit(entry_json(entry), opt.human);
        return 0;
    }
    std::vector<edfkit::CatalogStore::Entry> entries =
        action == "list" ? store.list() : store.verify_all();
    Json arr = Json::array();
    for (const auto& e : entries) {
        arr.push_back(entry_json(e));
    }
    emit(Json{{"entries", arr}}, opt.human);
    return 0;
}

int run_cyclotomy(const Options& opt, bool have_i, bool have_alpha) {
    std::optional<std::int64_t> alpha;
    if (have_alpha) {
        alpha = opt.a;
    }
    if (have_i) {
        emit(edfkit::cyclotomy_json(edfkit::cyclotomic_class(opt.q, opt.n1, opt.m, alpha)),
             opt.human);
        return 0;
    }
    Json arr = Json::array();
    for (std::int64_t i = 0; i < opt.n1; ++i) {
        arr.push_back(
            edfkit::cyclotomy_json(edfkit::cyclotomic_class(opt.q, opt.n1, i, alpha)));
    }
    emit(Json{{"classes", arr}}, opt.human);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, verify, and analyze bounded standard weighted EDFs "
                 "and the weak AMD codes they induce"};
    app.require_subcommand(1);
    app.set_config("--config")->envname("EDFKIT_CONFIG");

    Options opt;
    app.add_flag("--human", opt.human, "key/value text instead of JSON");

    CLI::App* construct = app.add_subcommand("construct", "run a named construction");
    construct->require_subcommand(1);
    CLI::App* ca = construct->add_subcommand("a", "Z2 x F_q, q = 4k+1 prime, k odd");
    ca->add_option("--q", opt.q, "prime q = 4k+1 with k odd")->required();
    CLI::App* cb = construct->add_subcommand("b", "Z2 x Z_n1, QR-PDF primes n1");
    cb->add_option("--n1", opt.n1, "odd prime n1 whose QR family is a PDF")->required();
    CLI::App* cc = construct->add_subcommand("c", "Z3 x F_q, q = 4k+1 prime, k odd");
    cc->add_option("--q", opt.q, "prime q = 4k+1 with k odd")->required();
    CLI::App* cd = construct->add_subcommand("d", "singleton extension of a PDF");
    cd->add_option("--pdf", opt.pdf_file, "family document holding the input PDF");
    cd->add_option("--builtin", opt.builtin, "named PDF from the built-in catalog");
    cd->add_option("--k", opt.k, "block size k of the input PDF")->required();
    cd->add_option("--t", opt.t, "parameter t (PDF has t(k-1)+1 blocks)")->required();
    for (CLI::App* c : {ca, cb, cc, cd}) {
        c->add_flag("--flatten", opt.flatten, "emit the CRT-flattened cyclic presentation");
        c->add_option("--out", opt.out, "also write the family document to this file");
    }

    CLI::App* verify = app.add_subcommand("verify", "verify a family document");
    verify->add_option("file", opt.file, "family document")->required();
    verify->add_option("--kind", opt.kind,
                       "df|pdf|edf|bedf|gsedf|bgsedf|pedf|bswedf|swedf|rwedf|bimodal")
        ->required();
    verify->add_option("--lambda", opt.lambda, "target lambda (bedf)");
    verify->add_option("--lambdas", opt.lambdas, "per-block targets (bgsedf)")
        ->delimiter(',');

    CLI::App* bound = app.add_subcommand("bound", "lower bounds for (n, m, a) or fixed K");
    bound->add_option("--n", opt.n, "group order")->required();
    bound->add_option("--m", opt.m, "number of blocks");
    bound->add_option("--a", opt.a, "total family size");
    bound->add_option("--K", opt.K, "fixed block sizes")->delimiter(',');
    bound->add_flag("--allow-large-partitions", opt.allow_large,
                    "lift the partition-count safety cap on a");

    CLI::App* rho = app.add_subcommand("rho", "adversary success probabilities");
    rho->add_option("file", opt.file, "family document")->required();
    rho->add_option("--delta", opt.delta, "single offset (comma-separated coordinates)");
    rho->add_flag("--classify", opt.classify, "attempt the strong-optimality verdict");
    rho->add_option("--budget", opt.budget, "node budget for --classify");
    rho->add_option("--trials", opt.trials, "Monte Carlo trials (with --delta)");
    rho->add_option("--seed", opt.seed, "Monte Carlo seed");

    CLI::App* search = app.add_subcommand("search", "exhaustive minimum-lambda search");
    search->add_option("--n", opt.n, "cyclic group order")->required();
    CLI::Option* optK = search->add_option("--K", opt.K, "block sizes")->delimiter(',');
    search->add_option("--m", opt.m, "number of blocks (with --a)")->excludes(optK);
    search->add_option("--a", opt.a, "total size (with --m)")->excludes(optK);
    search->add_option("--budget", opt.budget, "node budget");
    search->add_flag("--unit-reduction", opt.unit_reduction,
                     "quotient the first block by the unit group");

    CLI::App* catalog = app.add_subcommand("catalog", "verified family store");
    catalog->require_subcommand(1);
    CLI::App* cat_add = catalog->add_subcommand("add", "verify and store a document");
    cat_add->add_option("file", opt.file, "family document")->required();
    cat_add->add_option("--name", opt.name, "entry name")->required();
    cat_add->add_option("--kind", opt.kind, "verification kind to record")->required();
    CLI::App* cat_list = catalog->add_subcommand("list", "list the index");
    CLI::App* cat_verify = catalog->add_subcommand("verify-all", "re-verify every entry");
    for (CLI::App* c : {cat_add, cat_list, cat_verify}) {
        c->add_option("--dir", opt.dir, "catalog directory (default: catalog)");
    }

    CLI::App* cyclotomy = app.add_subcommand("cyclotomy", "cyclotomic classes of F_p");
    cyclotomy->add_option("--p", opt.q, "odd prime p")->required();
    cyclotomy->add_option("--e", opt.n1, "index e dividing p-1")->required();
    CLI::Option* opt_i = cyclotomy->add_option("--i", opt.m, "class index (default: all)");
    CLI::Option* opt_alpha =
        cyclotomy->add_option("--alpha", opt.a, "primitive root (default: smallest)");

    // Let options given after a subcommand name (notably --human) match the
    // root app as well.
    for (CLI::App* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands(nullptr)) {
            nested->fallthrough();
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) {
            for (const std::string which : {"a", "b", "c", "d"}) {
                if (construct->get_subcommand(which)->parsed()) {
                    if (which == "d" && opt.pdf_file.empty() == opt.builtin.empty()) {
                        std::cerr << "construct d: exactly one of --pdf / --builtin\n";
                        return 2;
                    }
                    return run_construct(which, opt);
                }
            }
        }
        if (verify->parsed()) return run_verify(opt);
        if (bound->parsed()) {
            if (opt.K.empty() && (opt.m == 0 || opt.a == 0)) {
                std::cerr << "bound: need --K or both --m and --a\n";
                return 2;
            }
            return run_bound(opt);
        }
        if (rho->parsed()) return run_rho(opt);
        if (search->parsed()) {
            const bool have_K = !opt.K.empty();
            if (!have_K && (opt.m == 0 || opt.a == 0)) {
                std::cerr << "search: need --K or both --m and --a\n";
                return 2;
            }
            return run_search(opt, have_K);
        }
        if (catalog->parsed()) {
            for (const std::string action : {"add", "list", "verify-all"}) {
                if (catalog->get_subcommand(action)->parsed()) {
                    return run_catalog(action, opt);
                }
            }
        }
        if (cyclotomy->parsed()) {
            return run_cyclotomy(opt, static_cast<bool>(*opt_i),
                                 static_cast<bool>(*opt_alpha));
        }
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const edfkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
