#pragma once

#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "bracketlab/biquandle.hpp"
#include "bracketlab/bracket.hpp"
#include "bracketlab/cocycle.hpp"
#include "bracketlab/finite_ring.hpp"
#include "bracketlab/graded_algebra.hpp"
#include "bracketlab/link_diagram.hpp"
#include "bracketlab/report.hpp"

namespace bracketlab {

using json = nlohmann::json;

/// Parses text, turning syntax errors into InputError.
json parse_json(std::string_view text, const std::string& what = "input");

RingDescriptor ring_descriptor_from_json(const json& j);
json to_json(const RingDescriptor& d);
/// Integer (zmod or constant term) or coefficient list, constant first.
RingElement element_from_json(const Ring& ring, const json& j);
json element_to_json(const Ring& ring, const RingElement& e);

struct BiquandleTables {
  OperationTable under;
  OperationTable over;
};
BiquandleTables biquandle_tables_from_json(const json& j);
json to_json(const Biquandle& X);

OrientedDiagram diagram_from_json(const json& j);
json to_json(const OrientedDiagram& d);

/// Unverified bracket data; turn into a Bracket with make_bracket.
struct BracketData {
  RingPtr ring;
  BiquandleTables biquandle;
  ElementMatrix A;
  ElementMatrix B;
};
BracketData bracket_data_from_json(const json& j);
/// Throws VerificationError when either the biquandle or the bracket fails.
Bracket make_bracket(const BracketData& data, AxiomForm form = AxiomForm::corrected);

/// Unverified cocycle data. For unit_quotient targets the JSON carries
/// "ring" and "subgroup" (the element list or generators of G).
struct CocycleData {
  BiquandleTables biquandle;
  CocycleTarget target;
  CocycleMatrix phi;
};
CocycleData cocycle_data_from_json(const json& j);
json cocycle_value_to_json(const CocycleTarget& t, const CocycleValue& v);

json to_json(const VerificationReport& r);
json to_json(const Coloring& f, const OrientedDiagram& d);
json to_json(const HomologyTable& t);
json formal_sum_to_json(const GradingGroup& g, const FormalSum& s);
json degree_to_json(const GradingGroup& g, const Degree& d);
json coset_to_json(const Coset& c);
json subgroup_to_json(const UnitSubgroup& G);

/// [{"value": ..., "multiplicity": k}, ...]
template <class T, class F>
json multiset_to_json(const Multiset<T>& m, F&& value_to_json) {
  json out = json::array();
  for (const auto& [value, count] : m) out.push_back({{"value", value_to_json(value)}, {"multiplicity", count}});
  return out;
}

}  // namespace bracketlab
