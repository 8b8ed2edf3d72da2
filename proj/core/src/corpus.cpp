#include "bracketlab/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "bracketlab/errors.hpp"
#include "bracketlab/homology.hpp"
#include "bracketlab/json_io.hpp"

namespace bracketlab {

std::string DirectorySource::read(const std::string& relative_path) const {
  const auto path = root_ / relative_path;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string EmbeddedSource::read(const std::string& relative_path) const {
  const auto& files = embedded_corpus_files();
  const auto it = files.find(relative_path);
  if (it == files.end()) throw InputError("embedded corpus has no file " + relative_path);
  return it->second;
}

std::size_t CheckAllReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.passed ? 0 : 1;
  return n;
}

namespace {

std::string string_field(const json& j, const char* key, const std::string& what) {
  if (!j.contains(key) || !j[key].is_string()) throw InputError(what + " needs a string \"" + key + "\"");
  return j[key].get<std::string>();
}

std::vector<StructureEntry> structure_list(const json& m, const char* key) {
  std::vector<StructureEntry> out;
  if (!m.contains(key)) return out;
  if (!m[key].is_array()) throw InputError(std::string("manifest \"") + key + "\" must be an array");
  for (const auto& e : m[key]) {
    StructureEntry s;
    s.name = string_field(e, "name", key);
    s.file = string_field(e, "file", key);
    const auto expected = e.value("expected_verification", std::string("pass"));
    if (expected != "pass" && expected != "fail") throw InputError("expected_verification must be pass or fail");
    s.expect_valid = expected == "pass";
    s.note = e.value("note", std::string());
    s.expectations = e.value("expect", json::object());
    out.push_back(std::move(s));
  }
  return out;
}

std::string witness_text(const VerificationReport& r) {
  if (r.ok()) return "valid";
  const auto& f = r.failures.front();
  std::string w;
  for (int v : f.witness) w += (w.empty() ? "" : ",") + std::to_string(v);
  return "fails axiom " + f.axiom + " at (" + w + ")" + (f.detail.empty() ? "" : ": " + f.detail) + " [" +
         std::to_string(r.failures.size()) + " failure(s)]";
}

std::string coloring_text(const Coloring& f) {
  std::string s;
  for (int c : f.colors) s += (s.empty() ? "" : ",") + std::to_string(c);
  return "(" + s + ")";
}

template <class T>
bool all_equal(const std::vector<T>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] == v[0])) return false;
  }
  return true;
}

class Runner {
 public:
  Runner(const CorpusSource& source, const CorpusManifest& manifest) : source_(source), manifest_(manifest) {}

  CheckAllReport run() {
    report_.source = source_.describe();
    load_diagrams();
    verify_biquandles();
    verify_brackets();
    verify_cocycles();
    invariance();
    cocycle_expectations();
    canonical_cocycles();
    khovanov_structure();
    bracket_complexes();
    return std::move(report_);
  }

 private:
  void add(std::string kind, std::string subject, bool passed, std::string detail = {}) {
    report_.results.push_back({std::move(kind), std::move(subject), passed, std::move(detail)});
  }

  json read_json(const std::string& file) { return parse_json(source_.read(file), file); }

  void load_diagrams() {
    for (const auto& e : manifest_.diagrams) diagrams_.emplace(e.name, diagram_from_json(read_json(e.file)));
  }

  void verify_biquandles() {
    for (const auto& e : manifest_.biquandles) {
      const auto tables = biquandle_tables_from_json(read_json(e.file));
      const auto report = verify_biquandle(tables.under, tables.over);
      add("verify", "biquandle " + e.name, report.ok() == e.expect_valid,
          witness_text(report) + (e.expect_valid ? "" : " (expected to fail)"));
      if (report.ok()) biquandles_.emplace_back(e.name, Biquandle(tables.under, tables.over));
    }
  }

  void verify_brackets() {
    for (const auto& e : manifest_.brackets) {
      const auto data = bracket_data_from_json(read_json(e.file));
      VerificationReport report = verify_biquandle(data.biquandle.under, data.biquandle.over);
      std::string literal;
      if (report.ok()) {
        const Biquandle X(data.biquandle.under, data.biquandle.over);
        report = verify_bracket(X, *data.ring, data.A, data.B, AxiomForm::corrected);
        const auto lit = verify_bracket(X, *data.ring, data.A, data.B, AxiomForm::literal);
        literal = std::string("; literal axiom form: ") + (lit.ok() ? "valid" : "invalid");
      }
      add("verify", "bracket " + e.name, report.ok() == e.expect_valid,
          witness_text(report) + literal + (e.expect_valid ? "" : " (expected to fail)"));
      if (report.ok()) brackets_.emplace_back(e.name, make_bracket(data));
      expectations_[e.name] = e.expectations;
    }
  }

  void verify_cocycles() {
    for (const auto& e : manifest_.cocycles) {
      auto data = cocycle_data_from_json(read_json(e.file));
      VerificationReport report = verify_biquandle(data.biquandle.under, data.biquandle.over);
      if (report.ok()) {
        Cocycle c{Biquandle(data.biquandle.under, data.biquandle.over), data.target, data.phi};
        report = verify_cocycle(c);
        if (report.ok()) cocycles_.emplace_back(e.name, std::move(c));
      }
      add("verify", "cocycle " + e.name, report.ok() == e.expect_valid,
          witness_text(report) + (e.expect_valid ? "" : " (expected to fail)"));
      expectations_[e.name] = e.expectations;
    }
  }

  // Equivalence classes of diagrams with at least two members.
  std::vector<std::vector<std::string>> classes() const {
    std::map<std::string, std::string> parent;
    for (const auto& e : manifest_.diagrams) parent[e.name] = e.name;
    std::function<std::string(const std::string&)> find = [&](const std::string& a) {
      return parent[a] == a ? a : parent[a] = find(parent[a]);
    };
    for (const auto& e : manifest_.diagrams) {
      if (e.equivalent_to) parent[find(e.name)] = find(*e.equivalent_to);
    }
    std::map<std::string, std::vector<std::string>> groups;
    for (const auto& e : manifest_.diagrams) groups[find(e.name)].push_back(e.name);
    std::vector<std::vector<std::string>> out;
    for (auto& [root, members] : groups) {
      if (members.size() > 1) out.push_back(members);
    }
    return out;
  }

  static std::string join(const std::vector<std::string>& names) {
    std::string s;
    for (const auto& n : names) s += (s.empty() ? "" : " ~ ") + n;
    return s;
  }

  template <class F>
  void invariance_check(const std::vector<std::string>& members, const std::string& what, F&& compute) {
    using Value = decltype(compute(diagrams_.at(members[0])));
    std::vector<Value> values;
    for (const auto& m : members) values.push_back(compute(diagrams_.at(m)));
    add("invariance", join(members) + " / " + what, all_equal(values));
  }

  void invariance() {
    for (const auto& members : classes()) {
      for (const auto& [name, X] : biquandles_) {
        invariance_check(members, name + " counting", [&](const OrientedDiagram& d) { return counting_invariant(X, d); });
      }
      for (const auto& [name, beta] : brackets_) {
        invariance_check(members, name + " bracket", [&](const OrientedDiagram& d) { return bracket_invariant(beta, d); });
        invariance_check(members, name + " Z", [&](const OrientedDiagram& d) { return z_invariant_multiset(beta, d); });
        invariance_check(members, name + " Bh", [&](const OrientedDiagram& d) { return bh_multiset(beta, d); });
      }
      for (const auto& [name, c] : cocycles_) {
        invariance_check(members, name + " cocycle", [&](const OrientedDiagram& d) { return cocycle_invariant(c, d); });
      }
    }
  }

  void cocycle_expectations() {
    for (const auto& [name, c] : cocycles_) {
      const auto& ex = expectations_[name];
      if (!ex.contains("invariants")) continue;
      for (const auto& [diagram, expected] : ex["invariants"].items()) {
        const auto it = diagrams_.find(diagram);
        if (it == diagrams_.end()) throw InputError("cocycle expectation names unknown diagram " + diagram);
        const auto actual = multiset_to_json(cocycle_invariant(c, it->second),
                                             [&](const CocycleValue& v) { return cocycle_value_to_json(c.target, v); });
        add("cocycle-invariant", name + " on " + diagram, actual == expected, actual.dump());
      }
    }
  }

  void canonical_cocycles() {
    for (const auto& [name, beta] : brackets_) {
      const int n = beta.biquandle().size();
      std::optional<CanonicalCocycle> base;
      try {
        base = canonical_cocycle(beta, 1);
        add("canonical-cocycle", name + " is a 2-cocycle", true, "|G| = " + std::to_string(base->G->order()));
      } catch (const InternalError& e) {
        add("canonical-cocycle", name + " is a 2-cocycle", false, e.what());
        continue;
      }
      bool independent = true;
      for (int x0 = 2; x0 <= n; ++x0) {
        const auto other = canonical_cocycle(beta, x0);
        independent = independent && *other.G == *base->G && other.phi.phi == base->phi.phi;
      }
      add("canonical-cocycle", name + " is independent of x0", independent);

      const auto& ex = expectations_[name];
      if (ex.contains("phi_trivial")) {
        bool trivial = true;
        for (const auto& row : base->phi.phi) {
          for (const auto& v : row) trivial = trivial && base->phi.target.is_identity(v);
        }
        add("canonical-cocycle", name + (ex["phi_trivial"].get<bool>() ? " is trivial" : " is nontrivial"),
            trivial == ex["phi_trivial"].get<bool>());
      }
      if (ex.contains("phi_matches")) {
        const auto& spec = ex["phi_matches"];
        const auto target = string_field(spec, "cocycle", "phi_matches");
        const auto it = std::find_if(cocycles_.begin(), cocycles_.end(), [&](const auto& p) { return p.first == target; });
        if (it == cocycles_.end()) throw InputError("phi_matches names unknown or invalid cocycle " + target);
        std::map<std::string, RingElement> images;
        for (const auto& [sym, v] : spec.at("images").items()) images.emplace(sym, element_from_json(beta.ring(), v));
        const auto pushed = push_forward(it->second, images, base->G);
        add("canonical-cocycle", name + " reproduces " + target, pushed.phi == base->phi.phi);
      }
    }
  }

  void khovanov_structure() {
    for (const auto& e : manifest_.diagrams) {
      const auto& d = diagrams_.at(e.name);
      const auto cube = classical_cube(d);
      const auto complex = assemble(cube);
      VerificationReport r = check_d_squared(complex);
      for (auto* extra : {&r}) (void)extra;
      auto faces = check_anticommuting_faces(cube);
      r.failures.insert(r.failures.end(), faces.failures.begin(), faces.failures.end());
      auto deg = check_degree_preserving(complex);
      r.failures.insert(r.failures.end(), deg.failures.begin(), deg.failures.end());
      if (r.ok()) {
        const auto table = cohomology(complex);
        auto eu = check_euler_of_complex(complex, table);
        r.failures.insert(r.failures.end(), eu.failures.begin(), eu.failures.end());
        khovanov_.emplace(e.name, table);
      }
      add("structure", "khovanov " + e.name, r.ok(), witness_text(r));
    }
  }

  void bracket_complexes() {
    for (const auto& [name, beta] : brackets_) {
      for (const auto& e : manifest_.diagrams) {
        const auto& d = diagrams_.at(e.name);
        const auto colorings = enumerate_colorings(beta.biquandle(), d);
        const auto kh = khovanov_.find(e.name);
        bool theorem_ok = kh != khovanov_.end(), euler_ok = true;
        std::string theorem_detail, euler_detail;
        VerificationReport structure;
        const auto counts = state_circle_counts(d);
        const Ring& R = beta.ring();
        RingElement g_sum = R.zero();
        const auto G = grading_subgroup(beta);
        for (const auto& g : G->elements()) g_sum = R.add(g_sum, g);
        for (const auto& f : colorings) {
          const auto cube = bracket_cube(beta, d, f);
          const auto complex = assemble(cube);
          VerificationReport r = check_d_squared(complex);
          for (const auto& part : {check_degree_preserving(complex), check_anticommuting_faces(cube),
                                   check_h_membership(beta, complex)}) {
            r.failures.insert(r.failures.end(), part.failures.begin(), part.failures.end());
          }
          if (!r.ok()) {
            structure.failures.insert(structure.failures.end(), r.failures.begin(), r.failures.end());
            theorem_ok = euler_ok = false;
            continue;
          }
          const auto table = cohomology(complex);
          auto eu = check_euler_of_complex(complex, table);
          structure.failures.insert(structure.failures.end(), eu.failures.begin(), eu.failures.end());

          if (kh != khovanov_.end()) {
            const auto predicted = predicted_bh(beta, kh->second, z_shift(beta, d, f));
            if (!(predicted == table)) {
              theorem_ok = false;
              if (theorem_detail.empty()) theorem_detail = "mismatch at coloring " + coloring_text(f);
            }
          }
          const auto chi = evaluate_formal_sum(table.group, graded_euler_characteristic(table));
          const auto expected = R.mul(g_sum, bracket_value(beta, d, f, counts));
          if (chi != expected) {
            euler_ok = false;
            if (euler_detail.empty()) {
              euler_detail = "coloring " + coloring_text(f) + ": chi = " + R.to_string(chi) +
                             ", expected " + R.to_string(expected);
            }
          }
        }
        const std::string subject = name + " x " + e.name;
        const std::string count = std::to_string(colorings.size()) + " coloring(s)";
        add("structure", subject, structure.ok(), structure.ok() ? count : witness_text(structure));
        add("theorem", subject, theorem_ok, theorem_detail.empty() ? count : theorem_detail);
        add("euler", subject, euler_ok, euler_detail.empty() ? count : euler_detail);
      }
    }
  }

  const CorpusSource& source_;
  const CorpusManifest& manifest_;
  CheckAllReport report_;
  std::map<std::string, OrientedDiagram> diagrams_;
  std::map<std::string, HomologyTable> khovanov_;
  std::vector<std::pair<std::string, Biquandle>> biquandles_;
  std::vector<std::pair<std::string, Bracket>> brackets_;
  std::vector<std::pair<std::string, Cocycle>> cocycles_;
  std::map<std::string, json> expectations_;
};

}  // namespace

CorpusManifest load_manifest(const CorpusSource& source, const std::string& manifest_path) {
  const json m = parse_json(source.read(manifest_path), manifest_path);
  if (!m.is_object()) throw InputError("manifest must be a JSON object");
  CorpusManifest out;
  if (m.contains("diagrams")) {
    if (!m["diagrams"].is_array()) throw InputError("manifest \"diagrams\" must be an array");
    for (const auto& e : m["diagrams"]) {
      DiagramEntry d;
      d.name = string_field(e, "name", "diagram entry");
      d.file = string_field(e, "file", "diagram entry");
      if (e.contains("equivalent_to")) d.equivalent_to = string_field(e, "equivalent_to", "diagram entry");
      out.diagrams.push_back(std::move(d));
    }
  }
  out.biquandles = structure_list(m, "biquandles");
  out.brackets = structure_list(m, "brackets");
  out.cocycles = structure_list(m, "cocycles");

  std::set<std::string> names;
  auto claim = [&](const std::string& name) {
    if (!names.insert(name).second) throw InputError("duplicate manifest name " + name);
  };
  std::set<std::string> diagram_names;
  for (const auto& d : out.diagrams) {
    claim(d.name);
    diagram_names.insert(d.name);
  }
  for (const auto* list : {&out.biquandles, &out.brackets, &out.cocycles}) {
    for (const auto& s : *list) claim(s.name);
  }
  for (const auto& d : out.diagrams) {
    if (d.equivalent_to && !diagram_names.count(*d.equivalent_to)) {
      throw InputError("diagram " + d.name + " is equivalent to unknown diagram " + *d.equivalent_to);
    }
  }
  // Every referenced file must exist and parse.
  for (const auto& d : out.diagrams) parse_json(source.read(d.file), d.file);
  for (const auto* list : {&out.biquandles, &out.brackets, &out.cocycles}) {
    for (const auto& s : *list) parse_json(source.read(s.file), s.file);
  }
  return out;
}

CheckAllReport check_all(const CorpusSource& source, const std::string& manifest_path) {
  const auto manifest = load_manifest(source, manifest_path);
  return Runner(source, manifest).run();
}

json to_json(const CheckAllReport& report) {
  json checks = json::array();
  for (const auto& r : report.results) {
    checks.push_back({{"kind", r.kind}, {"subject", r.subject}, {"passed", r.passed}, {"detail", r.detail}});
  }
  return {{"source", report.source},
          {"checks", checks},
          {"total", report.results.size()},
          {"failed", report.failures()},
          {"passed", report.ok()}};
}

}  // namespace bracketlab
