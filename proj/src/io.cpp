#include "edfkit/io.hpp"

#include <fstream>
#include <sstream>

#include "edfkit/errors.hpp"

namespace edfkit {

namespace {

constexpr int kFormatVersion = 1;

// Integers that fit in int64 stay JSON numbers; anything larger becomes a
// decimal string so no consumer ever sees a rounded value.
Json big_json(const BigInt& v) {
    if (auto small = to_int64(v)) {
        return *small;
    }
    return v.str();
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) {
        os << ((h >> shift) & 0xF);
    }
    return os.str();
}

GroupElement parse_element(const GroupSpec& group, const Json& j, std::size_t block_idx,
                           std::size_t elem_idx) {
    const std::string where =
        "blocks[" + std::to_string(block_idx) + "][" + std::to_string(elem_idx) + "]";
    GroupElement g;
    if (j.is_number_integer()) {
        if (group.arity() != 1) {
            throw ParseError(where + ": bare integers need a one-factor group");
        }
        g.push_back(j.get<std::int64_t>());
    } else if (j.is_array()) {
        if (j.size() != group.arity()) {
            throw ParseError(where + ": expected " + std::to_string(group.arity()) +
                             " coordinates, got " + std::to_string(j.size()));
        }
        for (const Json& c : j) {
            if (!c.is_number_integer()) {
                throw ParseError(where + ": coordinates must be integers");
            }
            g.push_back(c.get<std::int64_t>());
        }
    } else {
        throw ParseError(where + ": element must be an integer or an array");
    }
    if (!group.contains(g)) {
        throw ParseError(where + ": " + element_to_string(g) + " is not a reduced element of " +
                         group.describe());
    }
    return g;
}

Json counts_json(const GroupSpec& group, ///< keys are rendered elements
                 const std::vector<std::pair<GroupElement, BigInt>>& counts) {
    Json obj = Json::object();
    for (const auto& [e, c] : counts) {
        obj[element_to_string(e)] = big_json(c);
    }
    (void)group;
    return obj;
}

} // namespace

Json element_json(const GroupSpec& group, const GroupElement& g) {
    if (group.arity() == 1) {
        return g[0];
    }
    Json arr = Json::array();
    for (std::int64_t c : g) {
        arr.push_back(c);
    }
    return arr;
}

Json family_json(const Family& fam, const Json& metadata) {
    Json doc;
    doc["format_version"] = kFormatVersion;
    doc["group"] = Json{{"factors", fam.group().factors()}};
    Json blocks = Json::array();
    for (const Block& b : fam.blocks()) {
        Json jb = Json::array();
        for (const GroupElement& e : b) {
            jb.push_back(element_json(fam.group(), e));
        }
        blocks.push_back(std::move(jb));
    }
    doc["blocks"] = std::move(blocks);
    if (!metadata.empty()) {
        doc["metadata"] = metadata;
    }
    return doc;
}

std::string render_family(const Family& fam, const Json& metadata) {
    return family_json(fam, metadata).dump(2) + "\n";
}

FamilyDocument parse_family_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError("invalid JSON: " + std::string(e.what()));
    }
    if (!doc.is_object()) {
        throw ParseError("document root must be an object");
    }
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "format_version" && key != "group" && key != "blocks" &&
            key != "metadata") {
            throw ParseError("unknown field \"" + key + "\"");
        }
    }
    if (doc.contains("format_version")) {
        if (!doc["format_version"].is_number_integer() ||
            doc["format_version"].get<int>() != kFormatVersion) {
            throw ParseError("format_version: only version " +
                             std::to_string(kFormatVersion) + " is supported");
        }
    }
    if (!doc.contains("group") || !doc["group"].is_object() ||
        !doc["group"].contains("factors") || !doc["group"]["factors"].is_array()) {
        throw ParseError("group.factors: required array of cyclic orders");
    }
    std::vector<std::int64_t> factors;
    for (const Json& f : doc["group"]["factors"]) {
        if (!f.is_number_integer()) {
            throw ParseError("group.factors: entries must be integers");
        }
        factors.push_back(f.get<std::int64_t>());
    }
    GroupSpec group = make_group(std::move(factors));

    if (!doc.contains("blocks") || !doc["blocks"].is_array()) {
        throw ParseError("blocks: required array of blocks");
    }
    std::vector<Block> blocks;
    std::size_t bi = 0;
    for (const Json& jb : doc["blocks"]) {
        if (!jb.is_array()) {
            throw ParseError("blocks[" + std::to_string(bi) + "]: must be an array");
        }
        Block b;
        std::size_t ei = 0;
        for (const Json& je : jb) {
            b.push_back(parse_element(group, je, bi, ei));
            ++ei;
        }
        blocks.push_back(std::move(b));
        ++bi;
    }

    Json metadata = Json::object();
    if (doc.contains("metadata")) {
        if (!doc["metadata"].is_object()) {
            throw ParseError("metadata: must be an object");
        }
        metadata = doc["metadata"];
    }
    return FamilyDocument{Family(std::move(group), std::move(blocks)), std::move(metadata)};
}

Family parse_family(const std::string& text) {
    return parse_family_document(text).family;
}

Json report_json(const GroupSpec& group, const VerificationReport& report) {
    Json j;
    j["kind"] = report.kind;
    j["holds"] = report.holds;
    if (!report.reason.empty()) {
        j["reason"] = report.reason;
    }
    if (report.lambda) {
        j["lambda"] = big_json(*report.lambda);
    }
    if (report.target) {
        j["target"] = big_json(*report.target);
    }
    if (!report.lambdas.empty()) {
        Json arr = Json::array();
        for (const BigInt& v : report.lambdas) {
            arr.push_back(big_json(v));
        }
        j["lambdas"] = std::move(arr);
    }
    if (!report.targets.empty()) {
        Json arr = Json::array();
        for (const BigInt& v : report.targets) {
            arr.push_back(big_json(v));
        }
        j["targets"] = std::move(arr);
    }
    if (!report.buckets.empty()) {
        Json arr = Json::array();
        for (const PedfBucket& b : report.buckets) {
            arr.push_back(Json{{"blocks", b.block_count},
                               {"size", b.block_size},
                               {"lambda", big_json(b.lambda)},
                               {"uniform", b.uniform}});
        }
        j["buckets"] = std::move(arr);
    }
    if (report.is_swedf) {
        j["is_swedf"] = *report.is_swedf;
    }
    if (report.d) {
        j["d"] = to_string(*report.d);
    }
    if (report.witness) {
        j["witness"] = element_json(group, *report.witness);
    }
    if (report.witness_block) {
        j["witness_block"] = *report.witness_block;
    }
    if (report.witness_count) {
        j["witness_count"] = *report.witness_count;
    }
    if (!report.counts.empty()) {
        j["counts"] = counts_json(group, report.counts);
    }
    if (!report.n_table.empty()) {
        Json table = Json::object();
        for (const auto& [delta, row] : report.n_table) {
            table[element_to_string(delta)] = row;
        }
        j["n_table"] = std::move(table);
    }
    return j;
}

Json bound_json(const BoundReport& report) {
    Json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["a"] = report.a;
    if (!report.K.empty()) {
        j["K"] = report.K;
    }
    if (report.ps) {
        j["ps_bound"] = to_string(*report.ps);
    }
    if (report.lambda_floor) {
        j["lambda_floor"] = big_json(*report.lambda_floor);
    }
    if (report.per_K) {
        j["per_K_bound"] = to_string(*report.per_K);
    }
    if (report.gap) {
        j["rho_gap_bound"] = to_string(*report.gap);
    }
    if (report.divisibility) {
        j["swedf_divisibility"] = *report.divisibility;
    }
    if (report.improved) {
        j["improved_bound"] = to_string(*report.improved);
        j["argmin_K"] = report.argmin_K;
        j["strict_improvement"] = report.strict_improvement;
        j["excluded_partitions"] = report.excluded_partitions;
    }
    return j;
}

Json profile_json(const GroupSpec& group, const AmdProfile& profile) {
    Json j;
    j["n"] = profile.n;
    j["m"] = profile.m;
    j["a"] = profile.a;
    j["K"] = profile.K;
    j["k_tilde"] = big_json(profile.k_tilde);
    j["rho"] = to_string(profile.rho);
    Json by_delta = Json::object();
    for (const auto& [delta, value] : profile.rho_by_delta) {
        by_delta[element_to_string(delta)] = to_string(value);
    }
    j["rho_by_delta"] = std::move(by_delta);
    Json best = Json::array();
    for (const GroupElement& d : profile.best_deltas) {
        best.push_back(element_json(group, d));
    }
    j["best_deltas"] = std::move(best);
    j["lambda"] = big_json(profile.lambda);
    const char* strong = nullptr;
    switch (profile.classification.strongly_optimal) {
    case TriState::yes: strong = "yes"; break;
    case TriState::no: strong = "no"; break;
    case TriState::unknown: strong = "unknown"; break;
    }
    j["classification"] = Json{{"ps_R_optimal", profile.classification.ps_R_optimal},
                               {"meets_per_K_floor", profile.classification.meets_per_K_floor},
                               {"strongly_optimal", strong},
                               {"basis", profile.classification.strongly_optimal_basis}};
    return j;
}

Json search_json(const SearchResult& result) {
    Json j;
    j["n"] = result.n;
    j["m"] = result.m;
    j["a"] = result.a;
    j["K"] = result.K;
    if (result.minimal_lambda) {
        j["minimal_lambda"] = big_json(*result.minimal_lambda);
    }
    if (result.minimal_rho) {
        j["minimal_rho"] = to_string(*result.minimal_rho);
    }
    if (result.witness) {
        j["witness"] = family_json(*result.witness);
    }
    j["nodes_explored"] = result.nodes_explored;
    j["exhausted"] = result.exhausted;
    return j;
}

Json construction_json(const ConstructionResult& result, bool flatten) {
    const Family presented = flatten ? result.family.flattened() : result.family;
    Json j;
    j["family"] = family_json(presented);
    j["predicted"] = Json{{"n", result.predicted.n},
                          {"m", result.predicted.m},
                          {"K", result.predicted.K},
                          {"a", result.predicted.a},
                          {"lambda", big_json(result.predicted.lambda)}};
    j["verified"] = report_json(presented.group(), result.verified);
    j["optimal_certificate"] = result.optimal_certificate;
    return j;
}

Json mc_json(const McResult& result) {
    return Json{{"trials", result.trials}, {"wins", result.wins},
                {"rate", to_string(result.rate)}};
}

Json cyclotomy_json(const CyclotomicClass& cls) {
    return Json{{"q", cls.q}, {"e", cls.e}, {"i", cls.i}, {"alpha", cls.alpha},
                {"elements", cls.elements}};
}

std::string family_digest(const Family& fam) {
    return fnv1a_hex(render_family(fam));
}

namespace {

VerificationReport verify_by_kind(const Family& fam, const std::string& kind) {
    if (kind == "df") return verify_df(fam);
    if (kind == "pdf") return verify_pdf(fam);
    if (kind == "edf") return verify_edf(fam);
    if (kind == "gsedf") return verify_gsedf(fam);
    if (kind == "pedf") return verify_pedf(fam);
    if (kind == "bswedf") return classify_bswedf(fam);
    if (kind == "swedf") return verify_swedf(fam);
    if (kind == "rwedf") return rwedf_profile(fam);
    if (kind == "bimodal") return bimodal_check(fam);
    throw InvalidInput("unknown verification kind \"" + kind +
                       "\" (bounded kinds need explicit targets)");
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidInput("cannot read " + path.string());
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

CatalogStore::CatalogStore(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path CatalogStore::index_path() const {
    return dir_ / "index.json";
}

Json CatalogStore::read_index() const {
    if (!std::filesystem::exists(index_path())) {
        return Json{{"entries", Json::object()}};
    }
    Json idx;
    try {
        idx = Json::parse(read_file(index_path()));
    } catch (const Json::parse_error& e) {
        throw CatalogCorrupt("index.json is not valid JSON: " + std::string(e.what()));
    }
    if (!idx.is_object() || !idx.contains("entries") || !idx["entries"].is_object()) {
        throw CatalogCorrupt("index.json has no entries object");
    }
    return idx;
}

void CatalogStore::write_index(const Json& index) const {
    std::ofstream out(index_path(), std::ios::binary | std::ios::trunc);
    out << index.dump(2) << "\n";
    if (!out) {
        throw InvalidInput("cannot write " + index_path().string());
    }
}

CatalogStore::Entry CatalogStore::add(const std::string& name, const Family& fam,
                                      const std::string& kind, const Json& metadata) {
    if (name.empty() ||
        name.find_first_not_of(
            "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789-_") !=
            std::string::npos) {
        throw InvalidInput("catalog names are limited to [A-Za-z0-9_-]");
    }
    VerificationReport report = verify_by_kind(fam, kind);
    if (!report.holds) {
        throw InvalidInput("family does not verify as " + kind + ": " + report.reason);
    }
    std::string text = render_family(fam, metadata);
    std::ofstream out(dir_ / (name + ".json"), std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) {
        throw InvalidInput("cannot write " + (dir_ / (name + ".json")).string());
    }
    out.close();

    Entry entry;
    entry.name = name;
    entry.kind = kind;
    entry.holds = report.holds;
    entry.lambda = report.lambda ? report.lambda->str() : "";
    entry.digest = fnv1a_hex(text);

    Json idx = read_index();
    idx["entries"][name] = Json{{"file", name + ".json"},
                                {"kind", entry.kind},
                                {"holds", entry.holds},
                                {"lambda", entry.lambda},
                                {"digest", entry.digest}};
    write_index(idx);
    return entry;
}

std::vector<CatalogStore::Entry> CatalogStore::list() const {
    std::vector<Entry> out;
    Json idx = read_index();
    for (const auto& [name, e] : idx["entries"].items()) {
        Entry entry;
        entry.name = name;
        entry.kind = e.value("kind", "");
        entry.holds = e.value("holds", false);
        entry.lambda = e.value("lambda", "");
        entry.digest = e.value("digest", "");
        out.push_back(std::move(entry));
    }
    return out;
}

FamilyDocument CatalogStore::load(const std::string& name) const {
    Json idx = read_index();
    if (!idx["entries"].contains(name)) {
        throw InvalidInput("no catalog entry named \"" + name + "\"");
    }
    const Json& e = idx["entries"][name];
    std::string text = read_file(dir_ / e.value("file", name + ".json"));
    if (fnv1a_hex(text) != e.value("digest", "")) {
        throw CatalogCorrupt("entry \"" + name + "\": stored document no longer matches "
                             "its recorded digest");
    }
    return parse_family_document(text);
}

std::vector<CatalogStore::Entry> CatalogStore::verify_all() const {
    std::vector<Entry> entries = list();
    for (Entry& entry : entries) {
        FamilyDocument doc = load(entry.name); // digest check happens here
        VerificationReport report = verify_by_kind(doc.family, entry.kind);
        std::string lambda = report.lambda ? report.lambda->str() : "";
        if (report.holds != entry.holds || lambda != entry.lambda) {
            throw CatalogCorrupt("entry \"" + entry.name +
                                 "\": verification drifted from the recorded parameters");
        }
    }
    return entries;
}

} // namespace edfkit
