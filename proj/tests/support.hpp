#pragma once

#include <string>

#include "bracketlab/corpus.hpp"
#include "bracketlab/json_io.hpp"

namespace support {

inline bracketlab::json corpus_json(const std::string& path) {
  return bracketlab::parse_json(bracketlab::EmbeddedSource{}.read(path), path);
}

inline bracketlab::OrientedDiagram diagram(const std::string& name) {
  return bracketlab::diagram_from_json(corpus_json("diagrams/" + name + ".json"));
}

inline bracketlab::BracketData bracket_data(const std::string& name) {
  return bracketlab::bracket_data_from_json(corpus_json("brackets/" + name + ".json"));
}

inline bracketlab::Bracket bracket(const std::string& name) { return bracketlab::make_bracket(bracket_data(name)); }

inline bracketlab::BiquandleTables biquandle_tables(const std::string& name) {
  return bracketlab::biquandle_tables_from_json(corpus_json("biquandles/" + name + ".json"));
}

inline bracketlab::Biquandle biquandle(const std::string& name) {
  const auto t = biquandle_tables(name);
  return bracketlab::Biquandle(t.under, t.over);
}

inline bracketlab::Cocycle cocycle(const std::string& name) {
  auto data = bracketlab::cocycle_data_from_json(corpus_json("cocycles/" + name + ".json"));
  return {bracketlab::Biquandle(data.biquandle.under, data.biquandle.over), data.target, data.phi};
}

/// Every diagram in the bundled manifest.
inline std::vector<std::string> diagram_names() {
  std::vector<std::string> out;
  for (const auto& d : bracketlab::load_manifest(bracketlab::EmbeddedSource{}).diagrams) out.push_back(d.name);
  return out;
}

inline std::vector<std::string> valid_bracket_names() {
  std::vector<std::string> out;
  for (const auto& b : bracketlab::load_manifest(bracketlab::EmbeddedSource{}).brackets) {
    if (b.expect_valid) out.push_back(b.name);
  }
  return out;
}

}  // namespace support
