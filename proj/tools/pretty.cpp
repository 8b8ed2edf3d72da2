#include "pretty.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace bracketlab::cli {

namespace {

using nlohmann::json;

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string joined;
    for (const auto& e : v) joined += (joined.empty() ? "" : " ") + cell(e);
    return joined.empty() ? "-" : joined;
  }
  return v.dump();
}

bool is_flat(const json& v);

// Arrays of objects whose fields are all flat; anything deeper renders as
// one section per element.
bool is_table(const json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& e) {
           return e.is_object() && std::all_of(e.begin(), e.end(), [](const json& f) { return is_flat(f); });
         });
}

void render_table(std::ostream& out, const json& rows, const std::string& indent) {
  std::vector<std::string> columns;
  for (const auto& row : rows) {
    for (const auto& [key, value] : row.items()) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(c.size());
  for (const auto& row : rows) {
    auto& line = cells.emplace_back();
    for (std::size_t k = 0; k < columns.size(); ++k) {
      line.push_back(row.contains(columns[k]) ? cell(row[columns[k]]) : "");
      width[k] = std::max(width[k], line.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string text = indent;
    for (std::size_t k = 0; k < line.size(); ++k) {
      text += line[k];
      if (k + 1 < line.size()) text += std::string(width[k] - line[k].size() + 2, ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  };
  // Narrow columns first so long free text ends up on the right.
  std::vector<std::size_t> order(columns.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return width[a] < width[b]; });
  auto permute = [&](std::vector<std::string> line) {
    std::vector<std::string> out;
    for (auto k : order) out.push_back(std::move(line[k]));
    return out;
  };
  columns = permute(columns);
  for (auto& line : cells) line = permute(line);
  std::vector<std::size_t> sorted_width;
  for (auto k : order) sorted_width.push_back(width[k]);
  width = sorted_width;
  emit(columns);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  emit(rule);
  for (const auto& line : cells) emit(line);
}

// Scalars and arrays of scalars print on one line.
bool is_flat(const json& v) {
  if (!v.is_structured()) return true;
  return v.is_array() && std::none_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); });
}

void render(std::ostream& out, const json& doc, const std::string& indent) {
  if (is_table(doc)) {
    render_table(out, doc, indent);
    return;
  }
  if (!doc.is_object()) {
    out << indent << cell(doc) << '\n';
    return;
  }
  std::size_t key_width = 0;
  for (const auto& [key, value] : doc.items()) {
    if (is_flat(value)) key_width = std::max(key_width, key.size());
  }
  for (const auto& [key, value] : doc.items()) {
    if (is_flat(value)) out << indent << key << ':' << std::string(key_width - key.size() + 1, ' ') << cell(value) << '\n';
  }
  for (const auto& [key, value] : doc.items()) {
    if (is_flat(value)) continue;
    out << indent << key << ":\n";
    if (value.is_array() && !is_table(value)) {
      for (const auto& e : value) render(out, e, indent + "  ");
    } else {
      render(out, value, indent + "  ");
    }
  }
}

}  // namespace

void render_pretty(std::ostream& out, const json& doc) { render(out, doc, ""); }

}  // namespace bracketlab::cli
