#include "charzero/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "charzero/errors.hpp"

namespace charzero {

namespace {

using nlohmann::json;

json parse_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(what + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write file: " + path);
  out << text;
  if (!out) throw SchemaError("write failed: " + path);
}

long long require_int(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw SchemaError("field '" + field + "' must be an integer");
  return j[field].get<long long>();
}

json rational_to_json(const Rational& r) {
  return json{{"num", r.num()}, {"den", r.den()}, {"display", r.str()}};
}

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(s));
      return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw SchemaError("field '" + field + "': cannot parse rational '" + s + "'");
    }
  }
  if (j.is_object() && j.contains("num") && j.contains("den"))
    return Rational(require_int(j, "num"), require_int(j, "den"));
  throw SchemaError("field '" + field +
                    "' must be a rational: \"a/b\", an integer, or {num, den}");
}

json group_to_json_value(const Group& g) {
  json out;
  if (!g.name().empty()) out["name"] = g.name();
  out["degree"] = g.degree();
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_cycles());
  out["generators"] = std::move(gens);
  return out;
}

Group group_from_json_value(const json& j) {
  if (!j.is_object()) throw SchemaError("group file: top level must be an object");
  const long long degree = require_int(j, "degree");
  if (degree < 1 || degree > 1'000'000)
    throw SchemaError("field 'degree' out of range: " + std::to_string(degree));
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw SchemaError("field 'name' must be a string");
    name = j["name"].get<std::string>();
  }
  if (!j.contains("generators") || !j["generators"].is_array())
    throw SchemaError("field 'generators' must be an array of cycle strings");
  std::vector<Permutation> gens;
  for (const auto& item : j["generators"]) {
    if (!item.is_string())
      throw SchemaError("field 'generators' must contain only strings");
    try {
      gens.push_back(Permutation::from_cycles(item.get<std::string>(),
                                              static_cast<int>(degree)));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(std::string("field 'generators': ") + e.what());
    }
  }
  return Group(static_cast<int>(degree), std::move(gens), std::move(name));
}

ManifestEntry entry_from_json(const json& j, std::size_t index) {
  const std::string where = "manifest entry " + std::to_string(index);
  if (!j.is_object()) throw SchemaError(where + ": must be an object");
  ManifestEntry e;
  if (j.contains("file")) {
    if (j.contains("construct"))
      throw SchemaError(where + ": 'file' and 'construct' are mutually exclusive");
    if (!j["file"].is_string()) throw SchemaError(where + ": 'file' must be a string");
    e.name = "file";
    e.path = j["file"].get<std::string>();
  } else if (j.contains("construct")) {
    if (!j["construct"].is_string())
      throw SchemaError(where + ": 'construct' must be a string");
    e.name = j["construct"].get<std::string>();
    if (j.contains("params")) {
      if (!j["params"].is_array())
        throw SchemaError(where + ": 'params' must be an array of integers");
      for (const auto& p : j["params"]) {
        if (!p.is_number_integer())
          throw SchemaError(where + ": 'params' must be an array of integers");
        e.params.push_back(p.get<long long>());
      }
    }
  } else {
    throw SchemaError(where + ": needs either 'construct' or 'file'");
  }
  if (j.contains("expected_order")) e.expected_order = require_int(j, "expected_order");
  if (j.contains("expected_anz"))
    e.expected_anz = rational_from_json(j["expected_anz"], "expected_anz");
  if (j.contains("expected_acd"))
    e.expected_acd = rational_from_json(j["expected_acd"], "expected_acd");
  return e;
}

json entry_to_json(const ManifestEntry& e) {
  json out;
  if (e.name == "file") {
    out["file"] = e.path;
  } else {
    out["construct"] = e.name;
    if (!e.params.empty()) out["params"] = e.params;
  }
  if (e.expected_order) out["expected_order"] = *e.expected_order;
  if (e.expected_anz) out["expected_anz"] = e.expected_anz->str();
  if (e.expected_acd) out["expected_acd"] = e.expected_acd->str();
  return out;
}

}  // namespace

std::string group_to_json(const Group& g) { return group_to_json_value(g).dump(2) + "\n"; }

Group group_from_json(const std::string& text) {
  return group_from_json_value(parse_text(text, "group json"));
}

Group group_from_file(const std::string& path) {
  return group_from_json_value(read_json_file(path));
}

void to_file(const Group& g, const std::string& path) {
  write_text_file(path, group_to_json(g));
}

CorpusEntry from_file(const std::string& path) {
  CorpusEntry out;
  out.group = group_from_file(path);
  out.provenance = path;
  return out;
}

std::string table_to_json(const CharacterTable& table) {
  json out;
  out["group"] = table.classes.group().name();
  out["order"] = table.order();
  out["exponent"] = table.exponent;
  out["dixon_prime"] = table.prime;
  json classes = json::array();
  for (int j = 0; j < table.k(); ++j) {
    classes.push_back(json{{"rep", table.classes.rep(j).to_cycles()},
                           {"size", table.classes.size(j)},
                           {"element_order", table.classes.element_order(j)}});
  }
  out["classes"] = std::move(classes);
  json chars = json::array();
  for (int i = 0; i < table.k(); ++i) {
    json values = json::array();
    for (int j = 0; j < table.k(); ++j) {
      const Cyclotomic& v = table.value(i, j);
      json coeffs = json::object();
      for (std::size_t t = 0; t < v.coeffs().size(); ++t)
        if (v.coeffs()[t] != 0) coeffs[std::to_string(t)] = v.coeffs()[t];
      values.push_back(json{{"e", v.conductor()}, {"coeffs", std::move(coeffs)}});
    }
    chars.push_back(json{{"degree", table.degrees[i]}, {"values", std::move(values)}});
  }
  out["characters"] = std::move(chars);
  return out.dump(2) + "\n";
}

std::string flags_to_json(const ClassificationFlags& flags) {
  json out{{"abelian", flags.abelian},
           {"nilpotent", flags.nilpotent},
           {"supersolvable", flags.supersolvable},
           {"solvable", flags.solvable},
           {"odd_order", flags.odd_order}};
  return out.dump(2) + "\n";
}

std::string report_to_json(const InvariantReport& rep) {
  json out;
  out["group"] = rep.group_name;
  out["order"] = rep.order;
  out["num_classes"] = rep.num_classes;
  out["degree_sum"] = rep.degree_sum;
  out["zero_count"] = rep.zero_count;
  out["anz"] = rational_to_json(rep.anz);
  out["acd"] = rational_to_json(rep.acd);
  json per = json::array();
  for (const auto& pc : rep.per_character) {
    per.push_back(json{{"degree", pc.degree},
                       {"vanish_count", pc.vanish_count},
                       {"vanishing_classes", pc.vanishing_classes}});
  }
  out["per_character"] = std::move(per);
  out["flags"] = json{{"abelian", rep.flags.abelian},
                      {"nilpotent", rep.flags.nilpotent},
                      {"supersolvable", rep.flags.supersolvable},
                      {"solvable", rep.flags.solvable},
                      {"odd_order", rep.flags.odd_order}};
  return out.dump(2) + "\n";
}

std::vector<ManifestEntry> manifest_from_json(const std::string& text) {
  const json doc = parse_text(text, "manifest");
  if (!doc.is_array()) throw SchemaError("manifest: top level must be an array");
  std::vector<ManifestEntry> out;
  for (std::size_t i = 0; i < doc.size(); ++i) out.push_back(entry_from_json(doc[i], i));
  return out;
}

std::vector<ManifestEntry> load_manifest(const std::string& path) {
  const json doc = read_json_file(path);
  if (!doc.is_array()) throw SchemaError(path + ": manifest top level must be an array");
  std::vector<ManifestEntry> out;
  for (std::size_t i = 0; i < doc.size(); ++i) out.push_back(entry_from_json(doc[i], i));
  return out;
}

std::string manifest_to_json(const std::vector<ManifestEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries) out.push_back(entry_to_json(e));
  return out.dump(2) + "\n";
}

CorpusEntry realize_entry(const ManifestEntry& entry, const std::string& base_dir) {
  if (entry.name != "file") return realize_constructed(entry);
  std::filesystem::path p(entry.path);
  if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
  CorpusEntry out = from_file(p.string());
  out.expected_order = entry.expected_order;
  out.expected_anz = entry.expected_anz;
  out.expected_acd = entry.expected_acd;
  return out;
}

}  // namespace charzero
