#include "bracketlab/link_diagram.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "bracketlab/errors.hpp"

namespace bracketlab {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Numbers the classes of a union-find in order of their smallest member.
std::vector<int> class_ids(UnionFind& uf, std::size_t n, int& count) {
  std::vector<int> id(n, -1);
  std::vector<int> root_id(n, -1);
  count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = uf.find(i);
    if (root_id[r] < 0) root_id[r] = count++;
    id[i] = root_id[r];
  }
  return id;
}

}  // namespace

OrientedDiagram::OrientedDiagram(std::vector<CrossingRecord> crossings, int free_circles)
    : crossings_(std::move(crossings)), free_circles_(free_circles) {
  if (free_circles_ < 0) throw InputError("free_circles must be non-negative");
  std::map<int, std::pair<int, int>> uses;  // label -> (incoming, outgoing)
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    const auto& c = crossings_[i];
    if (c.sign != 1 && c.sign != -1) {
      throw InputError("crossing " + std::to_string(i) + " has sign " + std::to_string(c.sign) + "; expected 1 or -1");
    }
    for (int label : {c.under_in, c.over_in, c.under_out, c.over_out}) {
      if (label <= 0) throw InputError("crossing " + std::to_string(i) + " has non-positive edge label");
    }
    ++uses[c.under_in].first;
    ++uses[c.over_in].first;
    ++uses[c.under_out].second;
    ++uses[c.over_out].second;
  }
  for (const auto& [label, count] : uses) {
    if (count.first != 1 || count.second != 1) {
      throw InputError("edge " + std::to_string(label) + " is used " + std::to_string(count.first) +
                       " time(s) as incoming and " + std::to_string(count.second) +
                       " time(s) as outgoing; expected once each");
    }
    labels_.push_back(label);
  }

  UnionFind uf(labels_.size());
  for (const auto& c : crossings_) {
    uf.unite(edge_index(c.under_in), edge_index(c.under_out));
    uf.unite(edge_index(c.over_in), edge_index(c.over_out));
  }
  arc_component_ = class_ids(uf, labels_.size(), component_count_);
  for (int k = 0; k < free_circles_; ++k) arc_component_.push_back(component_count_++);

  for (const auto& c : crossings_) (c.sign > 0 ? n_plus_ : n_minus_)++;
}

std::size_t OrientedDiagram::edge_index(int label) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) throw InputError("unknown edge label " + std::to_string(label));
  return static_cast<std::size_t>(it - labels_.begin());
}

int OrientedDiagram::under_component(std::size_t crossing) const {
  return arc_component_[edge_index(crossings_[crossing].under_in)];
}

int OrientedDiagram::over_component(std::size_t crossing) const {
  return arc_component_[edge_index(crossings_[crossing].over_in)];
}

int OrientedDiagram::linking_number(int a, int b) const {
  if (a == b) throw InputError("linking number needs two distinct components");
  if (a < 0 || b < 0 || a >= component_count_ || b >= component_count_) {
    throw InputError("component index out of range");
  }
  int total = 0;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    const int u = under_component(i), o = over_component(i);
    if ((u == a && o == b) || (u == b && o == a)) total += crossings_[i].sign;
  }
  if (total % 2 != 0) throw InputError("odd crossing sum between components; diagram is not closed");
  return total / 2;
}

OrientedDiagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw InputError("braid needs at least one strand");
  std::vector<int> position(static_cast<std::size_t>(strands));
  std::iota(position.begin(), position.end(), 1);
  std::vector<bool> touched(position.size(), false);
  int next_label = strands + 1;
  std::vector<CrossingRecord> crossings;
  for (int g : word) {
    const int i = std::abs(g);
    if (g == 0 || i >= strands) throw InputError("braid generator " + std::to_string(g) + " out of range");
    auto& left = position[static_cast<std::size_t>(i - 1)];
    auto& right = position[static_cast<std::size_t>(i)];
    touched[static_cast<std::size_t>(i - 1)] = touched[static_cast<std::size_t>(i)] = true;
    CrossingRecord c;
    c.sign = g > 0 ? 1 : -1;
    const int sw = next_label++, se = next_label++;
    if (g > 0) {
      c.under_in = left;
      c.over_in = right;
      c.over_out = sw;
      c.under_out = se;
    } else {
      c.over_in = left;
      c.under_in = right;
      c.under_out = sw;
      c.over_out = se;
    }
    left = sw;
    right = se;
    crossings.push_back(c);
  }

  std::map<int, int> rename;
  int free_circles = 0;
  for (std::size_t p = 0; p < position.size(); ++p) {
    if (touched[p]) {
      rename[position[p]] = static_cast<int>(p) + 1;
    } else {
      ++free_circles;
    }
  }
  std::map<int, int> compact;
  auto fix = [&](int& label) {
    if (auto it = rename.find(label); it != rename.end()) label = it->second;
    auto [it, inserted] = compact.emplace(label, static_cast<int>(compact.size()) + 1);
    label = it->second;
  };
  for (auto& c : crossings) {
    fix(c.under_in);
    fix(c.over_in);
    fix(c.under_out);
    fix(c.over_out);
  }
  return OrientedDiagram(std::move(crossings), free_circles);
}

SmoothingState resolve_state(const OrientedDiagram& d, std::uint64_t resolution) {
  const std::size_t m = d.edge_count();
  UnionFind uf(m);
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const auto& c = d.crossings()[i];
    const int bit = static_cast<int>((resolution >> i) & 1U);
    if (is_oriented_smoothing(c.sign, bit)) {
      uf.unite(d.edge_index(c.under_in), d.edge_index(c.over_out));
      uf.unite(d.edge_index(c.over_in), d.edge_index(c.under_out));
    } else {
      uf.unite(d.edge_index(c.under_in), d.edge_index(c.over_in));
      uf.unite(d.edge_index(c.under_out), d.edge_index(c.over_out));
    }
  }
  SmoothingState s;
  s.resolution = resolution;
  s.weight = std::popcount(resolution);
  int count = 0;
  s.circle_of_edge = class_ids(uf, m, count);
  s.circles.resize(static_cast<std::size_t>(count) + static_cast<std::size_t>(d.free_circles()));
  for (std::size_t e = 0; e < m; ++e) {
    s.circles[static_cast<std::size_t>(s.circle_of_edge[e])].push_back(d.edge_labels()[e]);
  }
  return s;
}

std::vector<int> state_circle_counts(const OrientedDiagram& d) {
  if (d.crossing_count() > max_cube_crossings) throw InputError("too many crossings for state enumeration");
  const std::uint64_t states = std::uint64_t{1} << d.crossing_count();
  std::vector<int> counts(states);
  for (std::uint64_t r = 0; r < states; ++r) counts[r] = static_cast<int>(resolve_state(d, r).circle_count());
  return counts;
}

CubeEdge make_cube_edge(const OrientedDiagram& d, const SmoothingState& from, const SmoothingState& to,
                        std::size_t crossing) {
  CubeEdge e;
  e.from = from.resolution;
  e.to = to.resolution;
  e.crossing = crossing;
  e.sign = (std::popcount(from.resolution & ((std::uint64_t{1} << crossing) - 1)) % 2 == 0) ? 1 : -1;

  const auto& c = d.crossings()[crossing];
  std::vector<int> from_touched, to_touched;
  for (int label : {c.under_in, c.over_in, c.under_out, c.over_out}) {
    const auto idx = d.edge_index(label);
    from_touched.push_back(from.circle_of_edge[idx]);
    to_touched.push_back(to.circle_of_edge[idx]);
  }
  auto uniq = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  uniq(from_touched);
  uniq(to_touched);

  if (from_touched.size() == 2 && to_touched.size() == 1) {
    e.kind = CubeEdge::Kind::merge;
    e.from_circles = {from_touched[0], from_touched[1]};
    e.to_circles = {to_touched[0], -1};
  } else if (from_touched.size() == 1 && to_touched.size() == 2) {
    e.kind = CubeEdge::Kind::split;
    e.from_circles = {from_touched[0], -1};
    e.to_circles = {to_touched[0], to_touched[1]};
  } else {
    throw InputError("changing crossing " + std::to_string(crossing) +
                     " neither merges nor splits circles; the diagram is not planar");
  }

  const std::size_t from_edge_circles = from.circle_count() - static_cast<std::size_t>(d.free_circles());
  const std::size_t to_edge_circles = to.circle_count() - static_cast<std::size_t>(d.free_circles());
  e.circle_map.assign(from.circle_count(), -1);
  for (std::size_t k = 0; k < from.circle_count(); ++k) {
    if (static_cast<int>(k) == e.from_circles[0] || static_cast<int>(k) == e.from_circles[1]) continue;
    if (k >= from_edge_circles) {
      e.circle_map[k] = static_cast<int>(to_edge_circles + (k - from_edge_circles));
    } else {
      e.circle_map[k] = to.circle_of_edge[d.edge_index(from.circles[k].front())];
    }
  }
  return e;
}

std::vector<CubeEdge> cube_edges(const OrientedDiagram& d) {
  if (d.crossing_count() > max_cube_crossings) throw InputError("too many crossings for cube enumeration");
  const std::size_t n = d.crossing_count();
  const std::uint64_t states = std::uint64_t{1} << n;
  std::vector<SmoothingState> all;
  all.reserve(states);
  for (std::uint64_t r = 0; r < states; ++r) all.push_back(resolve_state(d, r));
  std::vector<CubeEdge> edges;
  for (std::uint64_t r = 0; r < states; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((r >> i) & 1U) continue;
      edges.push_back(make_cube_edge(d, all[r], all[r | (std::uint64_t{1} << i)], i));
    }
  }
  return edges;
}

}  // namespace bracketlab
