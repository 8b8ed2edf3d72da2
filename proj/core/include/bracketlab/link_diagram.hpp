#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace bracketlab {

/// One crossing of an oriented diagram, given by the labels of its four
/// incident edges. Edges are oriented, so each edge label appears once as an
/// outgoing slot and once as an incoming slot over the whole diagram.
///
/// Picture the crossing with both strands pointing downward. At a positive
/// crossing the under strand runs NW -> SE and the over strand NE -> SW; at a
/// negative crossing the over strand runs NW -> SE and the under strand
/// NE -> SW. The "left" arcs are the two on the west side.
struct CrossingRecord {
  int sign = 1;
  int under_in = 0;
  int over_in = 0;
  int under_out = 0;
  int over_out = 0;

  int left_under() const { return sign > 0 ? under_in : under_out; }
  int left_over() const { return sign > 0 ? over_out : over_in; }
  int right_under() const { return sign > 0 ? under_out : under_in; }
  int right_over() const { return sign > 0 ? over_in : over_out; }

  friend bool operator==(const CrossingRecord&, const CrossingRecord&) = default;
};

/// A closed oriented link diagram in PD-style form plus a number of
/// crossing-less circles. Validated on construction.
class OrientedDiagram {
 public:
  OrientedDiagram() = default;
  /// Throws InputError on a bad sign, a non-positive label, or a label that
  /// is not used exactly once as incoming and once as outgoing.
  OrientedDiagram(std::vector<CrossingRecord> crossings, int free_circles);

  const std::vector<CrossingRecord>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  int free_circles() const { return free_circles_; }

  /// Edge labels in increasing order; positions in this list are edge indices.
  const std::vector<int>& edge_labels() const { return labels_; }
  std::size_t edge_count() const { return labels_.size(); }
  std::size_t edge_index(int label) const;
  /// Edges plus free circles: the things a coloring assigns colors to.
  std::size_t arc_count() const { return labels_.size() + static_cast<std::size_t>(free_circles_); }

  /// Number of link components, free circles included.
  int component_count() const { return component_count_; }
  /// Component id of an arc index (free circles come last).
  int component_of_arc(std::size_t arc) const { return arc_component_[arc]; }
  /// Component carrying the under (or over) strand of a crossing.
  int under_component(std::size_t crossing) const;
  int over_component(std::size_t crossing) const;

  int positive_crossings() const { return n_plus_; }
  int negative_crossings() const { return n_minus_; }
  int writhe() const { return n_plus_ - n_minus_; }
  /// Half the signed count of crossings between components a and b.
  /// Throws InputError when a == b or the count is odd.
  int linking_number(int a, int b) const;

 private:
  std::vector<CrossingRecord> crossings_;
  int free_circles_ = 0;
  std::vector<int> labels_;
  std::vector<int> arc_component_;
  int component_count_ = 0;
  int n_plus_ = 0;
  int n_minus_ = 0;
};

/// Parses `{"crossings":[{"sign":1,"under_in":1,...}],"free_circles":0}`.
OrientedDiagram parse_diagram(std::string_view json_text);

/// Closure of a braid on `strands` strands, strands pointing downward and
/// numbered left to right. Generator +i is a positive crossing of strands i
/// and i+1 (the left strand passes under), -i is its inverse. Untouched
/// strands become free circles.
OrientedDiagram braid_closure(int strands, const std::vector<int>& word);

/// Whether a crossing at resolution bit `bit` takes the oriented smoothing.
/// Bit 0 at a positive crossing and bit 1 at a negative crossing are the
/// oriented (vertical) smoothing.
inline bool is_oriented_smoothing(int sign, int bit) { return (sign > 0) == (bit == 0); }

/// A vertex of the cube of resolutions.
struct SmoothingState {
  std::uint64_t resolution = 0;
  int weight = 0;
  /// Each circle as the sorted edge labels it passes through. Circles are
  /// ordered by smallest label; free circles follow as empty entries.
  std::vector<std::vector<int>> circles;
  /// Circle index of each edge index.
  std::vector<int> circle_of_edge;

  std::size_t circle_count() const { return circles.size(); }
};

/// Resolves every crossing per the bits of `resolution` (bit i belongs to
/// crossing i) and finds the circles with a union-find over edges.
SmoothingState resolve_state(const OrientedDiagram& diagram, std::uint64_t resolution);

/// Circle counts of all 2^n states indexed by resolution.
std::vector<int> state_circle_counts(const OrientedDiagram& diagram);

struct CubeEdge {
  enum class Kind { merge, split };

  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::size_t crossing = 0;
  Kind kind = Kind::merge;
  /// For each circle of `from`, its index in `to`, or -1 for the circles
  /// touched by the changed crossing.
  std::vector<int> circle_map;
  /// Merge: the two source circles (ascending) and the target in [0].
  /// Split: the source circle in [0] and the two targets (ascending).
  std::array<int, 2> from_circles{-1, -1};
  std::array<int, 2> to_circles{-1, -1};
  /// (-1)^(number of 1-bits of `from` below `crossing`).
  int sign = 1;
};

/// Edge of the cube from `from` (whose bit `crossing` must be 0).
CubeEdge make_cube_edge(const OrientedDiagram& diagram, const SmoothingState& from,
                        const SmoothingState& to, std::size_t crossing);

/// All n * 2^(n-1) edges, ordered by source state then crossing. Throws
/// InputError if some edge neither merges nor splits (non-planar input).
std::vector<CubeEdge> cube_edges(const OrientedDiagram& diagram);

/// Largest crossing count for which cube enumeration is attempted.
inline constexpr std::size_t max_cube_crossings = 20;

}  // namespace bracketlab
