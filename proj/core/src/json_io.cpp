#include "bracketlab/json_io.hpp"

#include <cctype>

#include "bracketlab/errors.hpp"

namespace bracketlab {

namespace {

const json& field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object()) throw InputError(what + " must be a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(what + " is missing \"" + key + "\"");
  return *it;
}

std::int64_t as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + " must be an integer");
  return j.get<std::int64_t>();
}

// Parses "1+t^2", "3*t", "t" and similar; terms joined by '+'.
RingElement element_from_text(const Ring& ring, const std::string& text) {
  std::vector<std::int64_t> coeffs(1, 0);
  std::size_t pos = 0;
  auto fail = [&] { throw InputError("cannot parse ring element \"" + text + "\""); };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> std::int64_t {
    const std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && text[start] == '-')) fail();
    return std::stoll(text.substr(start, pos - start));
  };
  do {
    skip();
    std::int64_t c = 1;
    std::size_t power = 0;
    bool has_number = false;
    if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '-')) {
      c = number();
      has_number = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      }
    }
    if (pos < text.size() && (text[pos] == 't' || text[pos] == 's' || text[pos] == 'x')) {
      ++pos;
      power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        const auto p = number();
        if (p < 0) fail();
        power = static_cast<std::size_t>(p);
      }
    } else if (!has_number) {
      fail();
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1, 0);
    coeffs[power] += c;
    skip();
    if (pos == text.size()) break;
    if (text[pos] != '+') fail();
    ++pos;
  } while (true);
  if (ring.descriptor().kind == RingDescriptor::Kind::zmod && coeffs.size() > 1) fail();
  return ring.reduce(std::move(coeffs));
}

OperationTable table_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of rows");
  OperationTable t;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError(what + " rows must be arrays");
    auto& out = t.emplace_back();
    for (const auto& v : row) out.push_back(static_cast<int>(as_int(v, what + " entry")));
  }
  return t;
}

ElementMatrix element_matrix_from_json(const Ring& ring, const json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of rows");
  ElementMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError(what + " rows must be arrays");
    auto& out = m.emplace_back();
    for (const auto& v : row) out.push_back(element_from_json(ring, v));
  }
  return m;
}

json table_to_json(const OperationTable& t) { return t; }

}  // namespace

json parse_json(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(what + " is not valid JSON: " + e.what());
  }
}

RingDescriptor ring_descriptor_from_json(const json& j) {
  const auto kind = field(j, "kind", "ring").get<std::string>();
  if (kind == "zmod") return RingDescriptor::zmod(as_int(field(j, "n", "ring"), "ring n"));
  if (kind == "poly_quotient") {
    const auto& mod = field(j, "modulus", "ring");
    if (!mod.is_array()) throw InputError("ring modulus must be a coefficient list");
    std::vector<std::int64_t> coeffs;
    for (const auto& c : mod) coeffs.push_back(as_int(c, "modulus coefficient"));
    return RingDescriptor::poly_quotient(as_int(field(j, "base_n", "ring"), "ring base_n"), std::move(coeffs));
  }
  throw InputError("unknown ring kind \"" + kind + "\"");
}

json to_json(const RingDescriptor& d) {
  if (d.kind == RingDescriptor::Kind::zmod) return {{"kind", "zmod"}, {"n", d.modulus_n}};
  return {{"kind", "poly_quotient"}, {"base_n", d.modulus_n}, {"modulus", d.modulus_poly}};
}

RingElement element_from_json(const Ring& ring, const json& j) {
  if (j.is_number_integer()) return ring.from_integer(j.get<std::int64_t>());
  if (j.is_string()) return element_from_text(ring, j.get<std::string>());
  if (j.is_array()) {
    std::vector<std::int64_t> coeffs;
    for (const auto& c : j) coeffs.push_back(as_int(c, "element coefficient"));
    if (coeffs.size() > ring.width()) throw InputError("element has more coefficients than the ring allows");
    if (coeffs.empty()) coeffs.push_back(0);
    return ring.reduce(std::move(coeffs));
  }
  throw InputError("ring element must be an integer, a coefficient list or a string");
}

json element_to_json(const Ring& ring, const RingElement& e) {
  if (ring.descriptor().kind == RingDescriptor::Kind::zmod) return e.coefficients()[0];
  return e.coefficients();
}

BiquandleTables biquandle_tables_from_json(const json& j) {
  BiquandleTables t{table_from_json(field(j, "under", "biquandle"), "under"),
                    table_from_json(field(j, "over", "biquandle"), "over")};
  if (j.contains("n") && as_int(j["n"], "biquandle n") != static_cast<std::int64_t>(t.under.size())) {
    throw InputError("biquandle n does not match the table size");
  }
  return t;
}

json to_json(const Biquandle& X) {
  return {{"n", X.size()}, {"under", table_to_json(X.under_table())}, {"over", table_to_json(X.over_table())}};
}

OrientedDiagram diagram_from_json(const json& j) {
  if (j.is_object() && j.contains("braid")) {
    const auto& b = j["braid"];
    std::vector<int> word;
    for (const auto& g : field(b, "word", "braid")) word.push_back(static_cast<int>(as_int(g, "braid generator")));
    return braid_closure(static_cast<int>(as_int(field(b, "strands", "braid"), "braid strands")), word);
  }
  const auto& list = field(j, "crossings", "diagram");
  if (!list.is_array()) throw InputError("diagram crossings must be an array");
  std::vector<CrossingRecord> crossings;
  for (const auto& c : list) {
    CrossingRecord r;
    r.sign = static_cast<int>(as_int(field(c, "sign", "crossing"), "crossing sign"));
    r.under_in = static_cast<int>(as_int(field(c, "under_in", "crossing"), "under_in"));
    r.over_in = static_cast<int>(as_int(field(c, "over_in", "crossing"), "over_in"));
    r.under_out = static_cast<int>(as_int(field(c, "under_out", "crossing"), "under_out"));
    r.over_out = static_cast<int>(as_int(field(c, "over_out", "crossing"), "over_out"));
    crossings.push_back(r);
  }
  const int free = j.contains("free_circles") ? static_cast<int>(as_int(j["free_circles"], "free_circles")) : 0;
  return OrientedDiagram(std::move(crossings), free);
}

OrientedDiagram parse_diagram(std::string_view json_text) { return diagram_from_json(parse_json(json_text, "diagram")); }

json to_json(const OrientedDiagram& d) {
  json crossings = json::array();
  for (const auto& c : d.crossings()) {
    crossings.push_back({{"sign", c.sign},
                         {"under_in", c.under_in},
                         {"over_in", c.over_in},
                         {"under_out", c.under_out},
                         {"over_out", c.over_out}});
  }
  return {{"crossings", crossings}, {"free_circles", d.free_circles()}};
}

BracketData bracket_data_from_json(const json& j) {
  BracketData data;
  data.ring = make_ring(ring_descriptor_from_json(field(j, "ring", "bracket")));
  data.biquandle = biquandle_tables_from_json(field(j, "biquandle", "bracket"));
  data.A = element_matrix_from_json(*data.ring, field(j, "A", "bracket"), "A");
  data.B = element_matrix_from_json(*data.ring, field(j, "B", "bracket"), "B");
  return data;
}

Bracket make_bracket(const BracketData& data, AxiomForm form) {
  Biquandle X(data.biquandle.under, data.biquandle.over);
  return Bracket(std::move(X), data.ring, data.A, data.B, form);
}

CocycleData cocycle_data_from_json(const json& j) {
  CocycleData data;
  data.biquandle = biquandle_tables_from_json(field(j, "biquandle", "cocycle"));
  const auto& target = field(j, "target", "cocycle");
  const auto kind = field(target, "kind", "cocycle target").get<std::string>();
  const auto& phi = field(j, "phi", "cocycle");
  if (!phi.is_array()) throw InputError("cocycle phi must be an array of rows");
  if (kind == "free_abelian") {
    data.target = CocycleTarget::free_abelian(field(target, "symbols", "cocycle target").get<std::vector<std::string>>());
    for (const auto& row : phi) {
      auto& out = data.phi.emplace_back();
      for (const auto& v : row) {
        if (v.is_number_integer() && v.get<int>() == 1) {
          out.push_back(data.target.identity());
        } else if (v.is_string()) {
          out.push_back(data.target.parse_word(v.get<std::string>()));
        } else {
          throw InputError("free abelian cocycle entries must be strings");
        }
      }
    }
  } else if (kind == "unit_quotient") {
    auto ring = make_ring(ring_descriptor_from_json(field(target, "ring", "cocycle target")));
    std::vector<RingElement> gens;
    if (target.contains("subgroup")) {
      for (const auto& g : target["subgroup"]) gens.push_back(element_from_json(*ring, g));
    }
    auto G = std::make_shared<const UnitSubgroup>(UnitSubgroup::generate(ring, std::move(gens)));
    data.target = CocycleTarget::unit_quotient(G);
    for (const auto& row : phi) {
      auto& out = data.phi.emplace_back();
      for (const auto& v : row) out.emplace_back(Coset(G, element_from_json(*ring, v)));
    }
  } else {
    throw InputError("unknown cocycle target kind \"" + kind + "\"");
  }
  return data;
}

json cocycle_value_to_json(const CocycleTarget& t, const CocycleValue& v) { return t.to_string(v); }

json to_json(const VerificationReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"axiom", f.axiom}, {"witness", f.witness}, {"detail", f.detail}});
  }
  return {{"valid", r.ok()}, {"failures", failures}};
}

json to_json(const Coloring& f, const OrientedDiagram& d) {
  json arcs = json::object();
  for (std::size_t e = 0; e < d.edge_count(); ++e) arcs[std::to_string(d.edge_labels()[e])] = f.colors[e];
  json free = json::array();
  for (std::size_t k = d.edge_count(); k < f.colors.size(); ++k) free.push_back(f.colors[k]);
  return {{"edges", arcs}, {"free_circles", free}};
}

json degree_to_json(const GradingGroup& g, const Degree& d) {
  if (g.kind() == GradingGroup::Kind::infinite_cyclic) return std::get<std::int64_t>(d);
  return g.to_string(d);
}

json to_json(const HomologyTable& t) {
  json entries = json::array();
  for (const auto& [key, e] : t.entries) {
    json torsion = json::array();
    for (const auto& f : e.torsion) torsion.push_back(f.str());
    entries.push_back({{"i", key.first}, {"degree", degree_to_json(t.group, key.second)}, {"rank", e.rank},
                       {"torsion", torsion}});
  }
  return {{"grading", t.group.kind() == GradingGroup::Kind::infinite_cyclic ? "integer" : "units"},
          {"entries", entries}};
}

json formal_sum_to_json(const GradingGroup& g, const FormalSum& s) {
  json terms = json::array();
  for (const auto& [d, c] : s) terms.push_back({{"degree", degree_to_json(g, d)}, {"coefficient", c.str()}});
  return terms;
}

json coset_to_json(const Coset& c) { return c.subgroup()->ring().to_string(c.representative()); }

json subgroup_to_json(const UnitSubgroup& G) {
  json out = json::array();
  for (const auto& g : G.elements()) out.push_back(G.ring().to_string(g));
  return out;
}

}  // namespace bracketlab
