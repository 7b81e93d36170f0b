#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "edfkit/amd.hpp"
#include "edfkit/bounds.hpp"
#include "edfkit/constructions.hpp"
#include "edfkit/cyclotomy.hpp"
#include "edfkit/family.hpp"
#include "edfkit/search.hpp"
#include "edfkit/verify.hpp"

namespace edfkit {

using Json = nlohmann::json;

/// A family plus free-form provenance notes, as stored on disk.
struct FamilyDocument {
    Family family;
    Json metadata; // object; empty when absent
};

/**
 * Parses the interchange format:
 *   {"format_version":1, "group":{"factors":[10]},
 *    "blocks":[[5],[2],[0,4,6]], "metadata":{...}}
 * Elements are bare integers for one-factor groups, arrays otherwise.
 * format_version and metadata are optional on input.
 * Throws ParseError naming the offending field; block overlap and duplicate
 * elements surface as NotDisjoint / InvalidInput with block indices.
 */
FamilyDocument parse_family_document(const std::string& text);
Family parse_family(const std::string& text);

Json family_json(const Family& fam, const Json& metadata = Json::object());
std::string render_family(const Family& fam, const Json& metadata = Json::object());

/// Lossless element rendering: bare integer or coordinate array.
Json element_json(const GroupSpec& group, const GroupElement& g);

Json report_json(const GroupSpec& group, const VerificationReport& report);
Json bound_json(const BoundReport& report);
Json profile_json(const GroupSpec& group, const AmdProfile& profile);
Json search_json(const SearchResult& result);
Json construction_json(const ConstructionResult& result, bool flatten);
Json mc_json(const McResult& result);
Json cyclotomy_json(const CyclotomicClass& cls);

/**
 * Directory of verified family documents with an index recording, per entry,
 * the verification kind, its parameters, and a digest of the stored
 * document. Loads fail with CatalogCorrupt when a file no longer matches
 * its recorded digest or no longer verifies to the recorded parameters.
 */
class CatalogStore {
  public:
    explicit CatalogStore(std::filesystem::path dir);

    struct Entry {
        std::string name;
        std::string kind;
        bool holds = false;
        std::string lambda; // decimal string; empty when the kind has none
        std::string digest;
    };

    /// Verifies with `kind`, refuses families that do not hold, writes the
    /// document and updates the index.
    Entry add(const std::string& name, const Family& fam, const std::string& kind,
              const Json& metadata = Json::object());

    std::vector<Entry> list() const;

    /// Digest-checked load.
    FamilyDocument load(const std::string& name) const;

    /// Re-verifies every entry; throws CatalogCorrupt on the first drift.
    std::vector<Entry> verify_all() const;

    const std::filesystem::path& directory() const { return dir_; }

  private:
    std::filesystem::path index_path() const;
    Json read_index() const;
    void write_index(const Json& index) const;

    std::filesystem::path dir_;
};

/// FNV-1a over the canonical document rendering; hex string.
std::string family_digest(const Family& fam);

} // namespace edfkit
