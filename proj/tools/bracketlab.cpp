// bracketlab: command-line front end for biquandle brackets and their
// homology. Every command prints one JSON document (or tables with
// --pretty). Exit status: 0 success, 1 verification failure, 2 bad input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bracketlab/biquandle.hpp"
#include "bracketlab/bracket.hpp"
#include "bracketlab/cocycle.hpp"
#include "bracketlab/corpus.hpp"
#include "bracketlab/errors.hpp"
#include "bracketlab/homology.hpp"
#include "bracketlab/json_io.hpp"
#include "pretty.hpp"

namespace bl = bracketlab;
using bl::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;

struct Options {
  bool pretty = false;
  bool literal_axioms = false;
  int x0 = 1;
  std::vector<int> coloring;
};

struct Result {
  json doc;
  int status = exit_ok;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bl::InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return bl::parse_json(buf.str(), path);
}

// Biquandle tables from a biquandle file, or from the "biquandle" member of
// a bracket or cocycle file.
bl::BiquandleTables tables_from_file(const std::string& path) {
  const auto j = read_json_file(path);
  return bl::biquandle_tables_from_json(j.is_object() && j.contains("biquandle") ? j["biquandle"] : j);
}

bl::OrientedDiagram diagram_from_file(const std::string& path) { return bl::diagram_from_json(read_json_file(path)); }

bl::AxiomForm axiom_form(const Options& o) { return o.literal_axioms ? bl::AxiomForm::literal : bl::AxiomForm::corrected; }

bl::Bracket bracket_from_file(const std::string& path, const Options& o) {
  return bl::make_bracket(bl::bracket_data_from_json(read_json_file(path)), axiom_form(o));
}

void check_x0(const bl::Bracket& beta, const Options& o) {
  if (o.x0 < 1 || o.x0 > beta.biquandle().size()) {
    throw bl::InputError("--x0 must lie between 1 and " + std::to_string(beta.biquandle().size()));
  }
}

// The colorings a command should run over: the one given by --coloring, or
// all of them.
std::vector<bl::Coloring> selected_colorings(const bl::Biquandle& X, const bl::OrientedDiagram& d, const Options& o) {
  if (o.coloring.empty()) return bl::enumerate_colorings(X, d);
  bl::Coloring f{o.coloring};
  if (f.colors.size() != d.arc_count()) {
    throw bl::InputError("--coloring needs " + std::to_string(d.arc_count()) + " colors (edges in label order, then free circles)");
  }
  for (int c : f.colors) {
    if (c < 1 || c > X.size()) throw bl::InputError("coloring color " + std::to_string(c) + " is out of range");
  }
  if (!bl::is_valid_coloring(X, d, f)) throw bl::InputError("--coloring is not a valid coloring of the diagram");
  return {f};
}

json report_doc(const bl::VerificationReport& r) { return bl::to_json(r); }

Result verify_biquandle_cmd(const std::string& path) {
  const auto t = tables_from_file(path);
  const auto r = bl::verify_biquandle(t.under, t.over);
  auto doc = report_doc(r);
  doc["n"] = t.under.size();
  return {doc, r.ok() ? exit_ok : exit_failed};
}

Result verify_bracket_cmd(const std::string& path, const Options& o) {
  const auto data = bl::bracket_data_from_json(read_json_file(path));
  auto r = bl::verify_biquandle(data.biquandle.under, data.biquandle.over);
  json doc;
  if (!r.ok()) {
    doc = report_doc(r);
    doc["stage"] = "biquandle";
  } else {
    const bl::Biquandle X(data.biquandle.under, data.biquandle.over);
    r = bl::verify_bracket(X, *data.ring, data.A, data.B, axiom_form(o));
    doc = report_doc(r);
    doc["stage"] = "bracket";
    if (r.ok()) {
      const bl::Bracket beta(X, data.ring, data.A, data.B, axiom_form(o));
      doc["delta"] = bl::element_to_json(beta.ring(), beta.delta());
      doc["w"] = bl::element_to_json(beta.ring(), beta.w());
    }
  }
  doc["axiom_form"] = o.literal_axioms ? "literal" : "corrected";
  return {doc, r.ok() ? exit_ok : exit_failed};
}

Result verify_cocycle_cmd(const std::string& path) {
  auto data = bl::cocycle_data_from_json(read_json_file(path));
  auto r = bl::verify_biquandle(data.biquandle.under, data.biquandle.over);
  if (r.ok()) {
    const bl::Cocycle c{bl::Biquandle(data.biquandle.under, data.biquandle.over), data.target, data.phi};
    r = bl::verify_cocycle(c);
  }
  return {report_doc(r), r.ok() ? exit_ok : exit_failed};
}

Result colorings_cmd(const std::string& structure, const std::string& diagram) {
  const auto t = tables_from_file(structure);
  const bl::Biquandle X(t.under, t.over);
  const auto d = diagram_from_file(diagram);
  json list = json::array();
  for (const auto& f : bl::enumerate_colorings(X, d)) list.push_back({{"colors", f.colors}});
  json labels = d.edge_labels();
  return {{{"count", list.size()}, {"edge_labels", labels}, {"free_circles", d.free_circles()}, {"colorings", list}}};
}

Result bracket_value_cmd(const std::string& bracket, const std::string& diagram, const Options& o) {
  const auto beta = bracket_from_file(bracket, o);
  const auto d = diagram_from_file(diagram);
  const auto counts = bl::state_circle_counts(d);
  json list = json::array();
  for (const auto& f : selected_colorings(beta.biquandle(), d, o)) {
    list.push_back({{"colors", f.colors}, {"value", bl::element_to_json(beta.ring(), bl::bracket_value(beta, d, f, counts))}});
  }
  return {{{"values", list}}};
}

Result bracket_invariant_cmd(const std::string& bracket, const std::string& diagram, const Options& o) {
  const auto beta = bracket_from_file(bracket, o);
  const auto d = diagram_from_file(diagram);
  const auto inv = bl::bracket_invariant(beta, d);
  return {{{"colorings", bl::multiset_size(inv)},
           {"invariant", bl::multiset_to_json(inv, [&](const bl::RingElement& v) { return bl::element_to_json(beta.ring(), v); })}}};
}

Result canonical_cocycle_cmd(const std::string& bracket, const Options& o) {
  const auto beta = bracket_from_file(bracket, o);
  check_x0(beta, o);
  const auto c = bl::canonical_cocycle(beta, o.x0);
  json phi = json::array();
  for (const auto& row : c.phi.phi) {
    json r = json::array();
    for (const auto& v : row) r.push_back(bl::cocycle_value_to_json(c.phi.target, v));
    phi.push_back(r);
  }
  return {{{"x0", c.x0},
           {"q", bl::element_to_json(beta.ring(), c.q)},
           {"G", bl::subgroup_to_json(*c.G)},
           {"phi", phi}}};
}

Result z_invariant_cmd(const std::string& bracket, const std::string& diagram, const Options& o) {
  const auto beta = bracket_from_file(bracket, o);
  check_x0(beta, o);
  const auto d = diagram_from_file(diagram);
  json list = json::array();
  for (const auto& f : selected_colorings(beta.biquandle(), d, o)) {
    list.push_back({{"colors", f.colors},
                    {"shift", bl::element_to_json(beta.ring(), bl::z_shift(beta, d, f, o.x0))},
                    {"coset", bl::coset_to_json(bl::z_invariant(beta, d, f, o.x0))}});
  }
  const auto multiset = bl::z_invariant_multiset(beta, d, o.x0);
  return {{{"G", bl::subgroup_to_json(*bl::grading_subgroup(beta, o.x0))},
           {"per_coloring", list},
           {"invariant", bl::multiset_to_json(multiset, [](const bl::Coset& c) { return bl::coset_to_json(c); })}}};
}

Result khovanov_cmd(const std::string& diagram) {
  const auto d = diagram_from_file(diagram);
  const auto table = bl::khovanov_classical(d);
  auto doc = bl::to_json(table);
  doc["euler"] = bl::formal_sum_to_json(table.group, bl::graded_euler_characteristic(table));
  return {doc};
}

Result bh_cmd(const std::string& bracket, const std::string& diagram, const Options& o) {
  const auto beta = bracket_from_file(bracket, o);
  check_x0(beta, o);
  const auto d = diagram_from_file(diagram);
  json list = json::array();
  for (const auto& f : selected_colorings(beta.biquandle(), d, o)) {
    auto table = bl::to_json(bl::bh_invariant(beta, d, f, o.x0));
    list.push_back({{"colors", f.colors}, {"entries", table["entries"]}});
  }
  return {{{"G", bl::subgroup_to_json(*bl::grading_subgroup(beta, o.x0))}, {"colorings", list}}};
}

Result check_theorem_cmd(const std::string& bracket, const std::string& diagram, const Options& o) {
  const auto beta = bracket_from_file(bracket, o);
  check_x0(beta, o);
  const auto d = diagram_from_file(diagram);
  const auto kh = bl::khovanov_classical(d);
  json list = json::array();
  bool all = true;
  for (const auto& f : selected_colorings(beta.biquandle(), d, o)) {
    const auto c = bl::check_theorem(beta, d, f, kh, o.x0);
    all = all && c.equal;
    json item{{"colors", f.colors}, {"z", bl::element_to_json(beta.ring(), c.z)}, {"equal", c.equal}};
    if (!c.equal) {
      item["direct"] = bl::to_json(c.direct)["entries"];
      item["predicted"] = bl::to_json(c.predicted)["entries"];
    }
    list.push_back(item);
  }
  return {{{"passed", all}, {"checks", list}}, all ? exit_ok : exit_failed};
}

Result check_euler_cmd(const std::string& bracket, const std::string& diagram, const Options& o) {
  const auto beta = bracket_from_file(bracket, o);
  check_x0(beta, o);
  const auto d = diagram_from_file(diagram);
  const auto& R = beta.ring();
  json list = json::array();
  bool all = true;
  for (const auto& f : selected_colorings(beta.biquandle(), d, o)) {
    const auto c = bl::check_euler_identity(beta, d, f, o.x0);
    all = all && c.equal;
    list.push_back({{"colors", f.colors},
                    {"chi", bl::element_to_json(R, c.chi)},
                    {"bracket", bl::element_to_json(R, c.bracket_value)},
                    {"g_sum", bl::element_to_json(R, c.g_sum)},
                    {"expected", bl::element_to_json(R, c.expected)},
                    {"equal", c.equal}});
  }
  return {{{"passed", all}, {"checks", list}}, all ? exit_ok : exit_failed};
}

Result check_all_cmd(const std::optional<std::string>& manifest) {
  bl::CheckAllReport report;
  if (manifest) {
    const std::filesystem::path path(*manifest);
    const bl::DirectorySource source(path.has_parent_path() ? path.parent_path() : std::filesystem::path("."));
    report = bl::check_all(source, path.filename().string());
  } else {
    report = bl::check_all(bl::EmbeddedSource{});
  }
  return {bl::to_json(report), report.ok() ? exit_ok : exit_failed};
}

Result from_braid_cmd(int strands, const std::vector<int>& word) {
  return {bl::to_json(bl::braid_closure(strands, word))};
}

void emit(const Result& r, const Options& o) {
  if (o.pretty) {
    bracketlab::cli::render_pretty(std::cout, r.doc);
  } else {
    std::cout << r.doc.dump(2) << '\n';
  }
}

void emit_error(const std::string& kind, const std::string& message, const Options& o, const json& extra = {}) {
  json doc{{"error", kind}, {"message", message}};
  if (!extra.is_null()) doc["details"] = extra;
  emit({doc}, o);
  std::cerr << "bracketlab: " << message << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biquandle brackets, cocycle enhancements and their homology"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON output (default)");
  app.add_flag("--pretty", o.pretty, "Aligned tables instead of JSON");
  auto* format = app.get_option("--pretty");
  app.get_option("--json")->excludes(format);

  std::string structure, diagram;
  std::optional<std::string> manifest;
  int strands = 0;
  std::vector<int> word;
  std::function<Result()> action;

  auto literal = [&](CLI::App* cmd) {
    cmd->add_flag("--literal-axioms", o.literal_axioms, "Check the bracket axioms in their literal form");
  };
  auto x0 = [&](CLI::App* cmd) { cmd->add_option("--x0", o.x0, "Base color for the canonical cocycle")->capture_default_str(); };
  auto coloring = [&](CLI::App* cmd) {
    cmd->add_option("--coloring", o.coloring, "Colors of the edges in label order, then free circles")->delimiter(',');
  };
  auto bracket_and_diagram = [&](CLI::App* cmd) {
    cmd->add_option("bracket", structure, "Bracket JSON file")->required()->check(CLI::ExistingFile);
    cmd->add_option("diagram", diagram, "Diagram JSON file")->required()->check(CLI::ExistingFile);
    literal(cmd);
  };

  auto* vb = app.add_subcommand("verify-biquandle", "Check the biquandle axioms");
  vb->add_option("file", structure)->required()->check(CLI::ExistingFile);
  vb->callback([&] { action = [&] { return verify_biquandle_cmd(structure); }; });

  auto* vbr = app.add_subcommand("verify-bracket", "Check the biquandle bracket axioms");
  vbr->add_option("file", structure)->required()->check(CLI::ExistingFile);
  literal(vbr);
  vbr->callback([&] { action = [&] { return verify_bracket_cmd(structure, o); }; });

  auto* vc = app.add_subcommand("verify-cocycle", "Check the 2-cocycle conditions");
  vc->add_option("file", structure)->required()->check(CLI::ExistingFile);
  vc->callback([&] { action = [&] { return verify_cocycle_cmd(structure); }; });

  auto* col = app.add_subcommand("colorings", "Enumerate biquandle colorings of a diagram");
  col->add_option("biquandle", structure, "Biquandle, bracket or cocycle JSON file")->required()->check(CLI::ExistingFile);
  col->add_option("diagram", diagram)->required()->check(CLI::ExistingFile);
  col->callback([&] { action = [&] { return colorings_cmd(structure, diagram); }; });

  auto* bv = app.add_subcommand("bracket-value", "State-sum value per coloring");
  bracket_and_diagram(bv);
  coloring(bv);
  bv->callback([&] { action = [&] { return bracket_value_cmd(structure, diagram, o); }; });

  auto* bi = app.add_subcommand("bracket-invariant", "Multiset of bracket values");
  bracket_and_diagram(bi);
  bi->callback([&] { action = [&] { return bracket_invariant_cmd(structure, diagram, o); }; });

  auto* cc = app.add_subcommand("canonical-cocycle", "Cocycle induced by a bracket");
  cc->add_option("bracket", structure)->required()->check(CLI::ExistingFile);
  literal(cc);
  x0(cc);
  cc->callback([&] { action = [&] { return canonical_cocycle_cmd(structure, o); }; });

  auto* zi = app.add_subcommand("z-invariant", "Z shift per coloring and its multiset");
  bracket_and_diagram(zi);
  x0(zi);
  coloring(zi);
  zi->callback([&] { action = [&] { return z_invariant_cmd(structure, diagram, o); }; });

  auto* kh = app.add_subcommand("khovanov", "Integral Khovanov homology");
  kh->add_option("diagram", diagram)->required()->check(CLI::ExistingFile);
  kh->callback([&] { action = [&] { return khovanov_cmd(diagram); }; });

  auto* bh = app.add_subcommand("bh", "Bracket homology per coloring");
  bracket_and_diagram(bh);
  x0(bh);
  coloring(bh);
  bh->callback([&] { action = [&] { return bh_cmd(structure, diagram, o); }; });

  auto* ct = app.add_subcommand("check-theorem", "Compare bracket homology with shifted Khovanov homology");
  bracket_and_diagram(ct);
  x0(ct);
  coloring(ct);
  ct->callback([&] { action = [&] { return check_theorem_cmd(structure, diagram, o); }; });

  auto* ce = app.add_subcommand("check-euler", "Compare the Euler characteristic with the bracket value");
  bracket_and_diagram(ce);
  x0(ce);
  coloring(ce);
  ce->callback([&] { action = [&] { return check_euler_cmd(structure, diagram, o); }; });

  auto* ca = app.add_subcommand("check-all", "Run every check over a corpus");
  ca->add_option("--manifest", manifest, "Corpus manifest (default: the bundled corpus)")->check(CLI::ExistingFile);
  ca->callback([&] { action = [&] { return check_all_cmd(manifest); }; });

  auto* fb = app.add_subcommand("from-braid", "Print the PD diagram of a braid closure");
  fb->add_option("--strands", strands)->required()->check(CLI::PositiveNumber);
  fb->add_option("--word", word, "Generators, e.g. 1,1,-2")->delimiter(',')->allow_extra_args(false);
  fb->callback([&] { action = [&] { return from_braid_cmd(strands, word); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    const auto result = action();
    emit(result, o);
    return result.status;
  } catch (const bl::VerificationError& e) {
    emit_error("verification", e.what(), o, bl::to_json(e.report()));
    return exit_failed;
  } catch (const bl::InternalError& e) {
    emit_error("internal", e.what(), o);
    return exit_failed;
  } catch (const bl::InputError& e) {
    emit_error("input", e.what(), o);
    return exit_input;
  } catch (const json::exception& e) {
    emit_error("input", e.what(), o);
    return exit_input;
  }
}
