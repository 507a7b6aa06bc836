#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "charzero/errors.hpp"
#include "charzero/json_io.hpp"
#include "charzero/version.hpp"

namespace charzero {

namespace {

using nlohmann::json;

struct CommonOpts {
  std::string format = "json";
  std::string out_path;
  unsigned long long seed = 42;
  long long cap_order = ChartabOptions{}.order_cap;
  int cap_classes = ChartabOptions{}.class_cap;
  std::string manifest_path;
};

void add_output_opts(CLI::App* sub, CommonOpts& o) {
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  sub->add_option("--out", o.out_path, "write the primary output to this file");
}

void add_compute_opts(CLI::App* sub, CommonOpts& o) {
  sub->add_option("--seed", o.seed, "seed for randomized fallbacks")
      ->envname("CHARZERO_SEED")
      ->capture_default_str();
  sub->add_option("--cap-order", o.cap_order, "largest group order accepted")
      ->capture_default_str();
  sub->add_option("--cap-classes", o.cap_classes, "largest class count accepted")
      ->capture_default_str();
}

ChartabOptions chartab_options(const CommonOpts& o) {
  ChartabOptions opts;
  opts.order_cap = o.cap_order;
  opts.class_cap = o.cap_classes;
  opts.seed = o.seed;
  return opts;
}

int emit(const std::string& text, const CommonOpts& o, std::ostream& out,
         std::ostream& err) {
  if (o.out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(o.out_path);
  if (!f) {
    err << "error: cannot write file: " << o.out_path << "\n";
    return 2;
  }
  f << text;
  if (!f) {
    err << "error: write failed: " << o.out_path << "\n";
    return 2;
  }
  return 0;
}

json tool_header(const CommonOpts& o) {
  return json{{"tool", kToolName}, {"version", kToolVersion}, {"seed", o.seed}};
}

std::string flags_text(const ClassificationFlags& f) {
  std::string s;
  auto tag = [&s](bool v, const char* name) {
    if (!v) return;
    if (!s.empty()) s += " ";
    s += name;
  };
  tag(f.abelian, "abelian");
  tag(f.nilpotent, "nilpotent");
  tag(f.supersolvable, "supersolvable");
  tag(f.solvable, "solvable");
  tag(f.odd_order, "odd");
  if (s.empty()) s = "nonsolvable";
  return s;
}

std::string render_table_text(const CharacterTable& t) {
  std::ostringstream os;
  const int k = t.k();
  os << "group: " << t.classes.group().name() << "\n"
     << "order: " << t.order() << "  classes: " << k << "  exponent: " << t.exponent
     << "  dixon prime: " << t.prime << "\n";
  std::vector<std::vector<std::string>> cells(k + 2, std::vector<std::string>(k + 1));
  cells[0][0] = "size";
  cells[1][0] = "ord";
  for (int j = 0; j < k; ++j) {
    cells[0][j + 1] = std::to_string(t.classes.size(j));
    cells[1][j + 1] = std::to_string(t.classes.element_order(j));
  }
  for (int i = 0; i < k; ++i) {
    cells[i + 2][0] = "X" + std::to_string(i + 1);
    for (int j = 0; j < k; ++j) cells[i + 2][j + 1] = t.value(i, j).str();
  }
  std::vector<std::size_t> width(k + 1, 0);
  for (const auto& row : cells)
    for (int j = 0; j <= k; ++j) width[j] = std::max(width[j], row[j].size());
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (int j = 0; j <= k; ++j)
      os << (j ? "  " : "") << std::setw(static_cast<int>(width[j])) << cells[r][j];
    os << "\n";
    if (r == 1) os << "\n";
  }
  return os.str();
}

std::string render_report_text(const InvariantReport& rep) {
  std::ostringstream os;
  os << "group: " << rep.group_name << "\n"
     << "order: " << rep.order << "\n"
     << "classes: " << rep.num_classes << "\n"
     << "degree sum: " << rep.degree_sum << "\n"
     << "zero entries: " << rep.zero_count << "\n"
     << "anz: " << rep.anz.str() << "\n"
     << "acd: " << rep.acd.str() << "\n"
     << "flags: " << flags_text(rep.flags) << "\n";
  os << "per character (degree: zero classes):";
  for (const auto& pc : rep.per_character) os << " " << pc.degree << ":" << pc.vanish_count;
  os << "\n";
  return os.str();
}

int cmd_construct(const std::string& name, const std::vector<long long>& params,
                  const CommonOpts& o, std::ostream& out, std::ostream& err) {
  const Group g = construct_by_name(name, params);
  if (o.format == "text") {
    std::ostringstream os;
    os << g.name() << ": order " << g.order() << ", degree " << g.degree() << ", "
       << g.generators().size() << " generator(s)\n";
    return emit(os.str(), o, out, err);
  }
  return emit(group_to_json(g), o, out, err);
}

int cmd_table(const std::string& path, const CommonOpts& o, std::ostream& out,
              std::ostream& err) {
  const Group g = group_from_file(path);
  const CharacterTable t = character_table(g, chartab_options(o));
  return emit(o.format == "text" ? render_table_text(t) : table_to_json(t), o, out, err);
}

int cmd_invariants(const std::string& path, const CommonOpts& o, std::ostream& out,
                   std::ostream& err) {
  const Group g = group_from_file(path);
  const InvariantReport rep = invariant_report(g, chartab_options(o));
  if (o.format == "text") return emit(render_report_text(rep), o, out, err);
  json j = json::parse(report_to_json(rep));
  j.update(tool_header(o));
  return emit(j.dump(2) + "\n", o, out, err);
}

int cmd_classify(const std::string& path, const CommonOpts& o, std::ostream& out,
                 std::ostream& err) {
  const Group g = group_from_file(path);
  const ClassificationFlags f = classify(g);
  if (o.format == "text") {
    return emit((g.name().empty() ? std::string("group") : g.name()) + ": " +
                    flags_text(f) + "\n",
                o, out, err);
  }
  json j = json::parse(flags_to_json(f));
  j["group"] = g.name();
  j.update(tool_header(o));
  return emit(j.dump(2) + "\n", o, out, err);
}

std::vector<ManifestEntry> load_entries(const CommonOpts& o, std::string& base_dir) {
  if (o.manifest_path.empty()) return builtin_manifest();
  base_dir = std::filesystem::path(o.manifest_path).parent_path().string();
  return load_manifest(o.manifest_path);
}

struct CorpusComputation {
  CorpusEntry entry;
  CharacterTable table;
  InvariantReport report;
};

CorpusComputation compute_entry(const ManifestEntry& e, const std::string& base_dir,
                                const ChartabOptions& opts) {
  CorpusComputation c{realize_entry(e, base_dir), {}, {}};
  c.table = character_table(c.entry.group, opts);
  c.report = invariant_report(c.table);
  if (c.report.group_name.empty()) c.report.group_name = c.entry.provenance;
  return c;
}

int cmd_verify(const CommonOpts& o, std::ostream& out, std::ostream& err) {
  std::string base_dir;
  const auto entries = load_entries(o, base_dir);
  json summary = tool_header(o);
  summary["groups"] = entries.size();
  json violations = json::array();

  std::ostringstream table;
  table << std::left << std::setw(30) << "group" << std::right << std::setw(9) << "order"
        << std::setw(4) << "k" << std::setw(8) << "anz" << std::setw(8) << "acd"
        << "  status\n";

  for (const auto& e : entries) {
    const CorpusComputation c = compute_entry(e, base_dir, chartab_options(o));
    std::vector<std::string> problems;

    if (c.entry.expected_order && c.entry.group.order() != *c.entry.expected_order) {
      std::ostringstream msg;
      msg << "order " << c.entry.group.order() << " != expected " << *c.entry.expected_order;
      problems.push_back(msg.str());
    }
    if (c.entry.expected_anz && c.report.anz != *c.entry.expected_anz)
      problems.push_back("anz " + c.report.anz.str() + " != expected " +
                         c.entry.expected_anz->str());
    if (c.entry.expected_acd && c.report.acd != *c.entry.expected_acd)
      problems.push_back("acd " + c.report.acd.str() + " != expected " +
                         c.entry.expected_acd->str());
    const OrthogonalityReport orth = verify_orthogonality(c.table);
    if (!orth.ok()) problems.push_back("orthogonality: " + orth.detail);
    for (const auto& v : theorem_violations(c.report)) problems.push_back(v);

    table << std::left << std::setw(30) << c.report.group_name << std::right
          << std::setw(9) << c.report.order << std::setw(4) << c.report.num_classes
          << std::setw(8) << c.report.anz.str() << std::setw(8) << c.report.acd.str()
          << "  " << (problems.empty() ? "ok" : "VIOLATION: " + problems.front()) << "\n";
    for (const auto& p : problems)
      violations.push_back(json{{"group", c.report.group_name}, {"message", p}});
  }

  summary["violations"] = violations;
  summary["status"] = violations.empty() ? "ok" : "violations";
  if (entries.empty()) table << "0 groups\n";

  std::string text = table.str();
  if (o.format == "json") text += summary.dump(2) + "\n";
  const int rc = emit(text, o, out, err);
  if (rc != 0) return rc;
  if (!violations.empty()) {
    err << "verification failed: " << violations.size() << " violation(s)\n";
    return 1;
  }
  return 0;
}

int cmd_probe_conjecture(const CommonOpts& o, std::ostream& out, std::ostream& err) {
  std::string base_dir;
  const auto entries = load_entries(o, base_dir);
  std::vector<InvariantReport> reports;
  reports.reserve(entries.size());
  for (const auto& e : entries)
    reports.push_back(compute_entry(e, base_dir, chartab_options(o)).report);
  const ConjectureFindings f = probe_conjecture(reports);

  if (o.format == "text") {
    std::ostringstream os;
    os << "odd-order groups scanned: " << f.odd_scanned << "\n"
       << "even-order groups skipped: " << f.even_skipped << "\n";
    os << "counterexamples (odd, non-supersolvable, anz < 16/11):";
    if (f.counterexamples.empty()) os << " none";
    for (const auto& n : f.counterexamples) os << " " << n;
    os << "\nboundary witnesses (anz = 16/11):";
    if (f.boundary_witnesses.empty()) os << " none";
    for (const auto& n : f.boundary_witnesses) os << " " << n;
    os << "\n";
    return emit(os.str(), o, out, err);
  }
  json j = tool_header(o);
  j["bound"] = json{{"num", 16}, {"den", 11}, {"display", "16/11"}};
  j["odd_scanned"] = f.odd_scanned;
  j["even_skipped"] = f.even_skipped;
  j["counterexamples"] = f.counterexamples;
  j["boundary_witnesses"] = f.boundary_witnesses;
  return emit(j.dump(2) + "\n", o, out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{std::string(kToolName) +
               ": exact character tables and character-zero statistics"};
  app.require_subcommand(1);

  CommonOpts o;

  auto* construct = app.add_subcommand("construct", "build a named group, write its file");
  std::string construct_name;
  std::vector<long long> construct_params;
  construct->add_option("name", construct_name, "constructor name")->required();
  construct->add_option("params", construct_params, "integer parameters");
  add_output_opts(construct, o);

  std::string group_path;
  auto* table = app.add_subcommand("table", "character table of a group file");
  table->add_option("groupfile", group_path, "group file (JSON)")->required();
  add_output_opts(table, o);
  add_compute_opts(table, o);

  auto* invariants = app.add_subcommand("invariants", "zero statistics of a group file");
  invariants->add_option("groupfile", group_path, "group file (JSON)")->required();
  add_output_opts(invariants, o);
  add_compute_opts(invariants, o);

  auto* classify_cmd = app.add_subcommand("classify", "structure flags of a group file");
  classify_cmd->add_option("groupfile", group_path, "group file (JSON)")->required();
  add_output_opts(classify_cmd, o);

  auto* verify = app.add_subcommand("verify", "run the verification suites over a corpus");
  verify->add_option("--manifest", o.manifest_path, "manifest file (default: built-in corpus)");
  add_output_opts(verify, o);
  add_compute_opts(verify, o);

  auto* probe = app.add_subcommand("probe-conjecture", "scan odd-order groups against 16/11");
  probe->add_option("--manifest", o.manifest_path, "manifest file (default: built-in corpus)");
  add_output_opts(probe, o);
  add_compute_opts(probe, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(construct))
      return cmd_construct(construct_name, construct_params, o, out, err);
    if (app.got_subcommand(table)) return cmd_table(group_path, o, out, err);
    if (app.got_subcommand(invariants)) return cmd_invariants(group_path, o, out, err);
    if (app.got_subcommand(classify_cmd)) return cmd_classify(group_path, o, out, err);
    if (app.got_subcommand(verify)) return cmd_verify(o, out, err);
    if (app.got_subcommand(probe)) return cmd_probe_conjecture(o, out, err);
    err << "error: no command\n";
    return 2;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace charzero
