#pragma once

#include <string>
#include <vector>

#include "charzero/chartab.hpp"
#include "charzero/constructions.hpp"
#include "charzero/group.hpp"
#include "charzero/invariants.hpp"
#include "charzero/structure.hpp"

namespace charzero {

/// Group files: {"name": string (optional), "degree": int,
/// "generators": [1-based cycle strings]}.  All malformed input surfaces as
/// SchemaError naming the offending field.
std::string group_to_json(const Group& g);
Group group_from_json(const std::string& text);
Group group_from_file(const std::string& path);

/// Writes the group file; from_file(to_file(g)) reproduces the generators.
void to_file(const Group& g, const std::string& path);
CorpusEntry from_file(const std::string& path);

/// Character table serialization: class data plus one row per character with
/// values as sparse coefficient maps over powers of zeta_e.
std::string table_to_json(const CharacterTable& table);

std::string flags_to_json(const ClassificationFlags& flags);

/// Invariant report with exact rationals as {"num", "den", "display"}.
std::string report_to_json(const InvariantReport& rep);

/// Manifests: a JSON array of entries, each either
///   {"construct": name, "params": [ints]} or {"file": path},
/// optionally annotated with "expected_order" and "expected_anz" /
/// "expected_acd" (a "16/11" string or {"num", "den"}).
std::vector<ManifestEntry> manifest_from_json(const std::string& text);
std::vector<ManifestEntry> load_manifest(const std::string& path);
std::string manifest_to_json(const std::vector<ManifestEntry>& entries);

/// Realizes either entry kind; relative file paths resolve against base_dir
/// (the manifest's directory) when it is non-empty.
CorpusEntry realize_entry(const ManifestEntry& entry, const std::string& base_dir = "");

}  // namespace charzero
