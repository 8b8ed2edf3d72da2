#pragma once

#include <cstddef>
#include <vector>

#include "bracketlab/link_diagram.hpp"
#include "bracketlab/report.hpp"

namespace bracketlab {

/// Operation table, row = left operand, entries 1..n.
using OperationTable = std::vector<std::vector<int>>;

/// Checks the biquandle axioms on a pair of tables. Axiom ids in the report:
/// "i" (diagonal agreement, witness x), "ii-under"/"ii-over" (column y of the
/// table is not a permutation, witness y), "ii-S" (S is not a bijection,
/// witness of a collision pair x1,y1,x2,y2), "iii-1".."iii-3" (exchange laws,
/// witness x,y,z). All witnesses are 1-based. Throws InputError on a shape
/// mismatch or an out-of-range entry.
VerificationReport verify_biquandle(const OperationTable& under, const OperationTable& over);

/// A verified finite biquandle with 1-based elements.
class Biquandle {
 public:
  Biquandle() = default;
  /// Throws VerificationError when an axiom fails.
  Biquandle(OperationTable under, OperationTable over);

  /// The trivial one-element biquandle.
  static Biquandle trivial();

  int size() const { return static_cast<int>(under_.size()); }
  int under(int x, int y) const { return under_[x - 1][y - 1]; }
  int over(int x, int y) const { return over_[x - 1][y - 1]; }
  const OperationTable& under_table() const { return under_; }
  const OperationTable& over_table() const { return over_; }

  /// Inverse of S(x,y) = (y over x, x under y): given (s1, s2) returns (x, y).
  std::pair<int, int> s_inverse(int s1, int s2) const {
    const auto k = s_inverse_[static_cast<std::size_t>((s1 - 1) * size() + (s2 - 1))];
    return {k / size() + 1, k % size() + 1};
  }

  /// A quandle is a biquandle whose over operation is trivial.
  bool is_quandle() const;

  friend bool operator==(const Biquandle& a, const Biquandle& b) {
    return a.under_ == b.under_ && a.over_ == b.over_;
  }

 private:
  OperationTable under_;
  OperationTable over_;
  std::vector<int> s_inverse_;
};

/// Colors (1-based) of every arc of a diagram, indexed like
/// OrientedDiagram::arc_count(): edges in edge-index order, then free circles.
struct Coloring {
  std::vector<int> colors;

  int of_label(const OrientedDiagram& d, int label) const { return colors[d.edge_index(label)]; }

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring&, const Coloring&) = default;
};

/// The pair (x, y) of colors on the left side of a crossing, x on the under
/// strand and y on the over strand. These index A, B and cocycles.
struct CrossingColors {
  int x = 0;
  int y = 0;
};

CrossingColors crossing_colors(const OrientedDiagram& d, const Coloring& f, std::size_t crossing);

/// Whether every crossing relation holds: the right-hand under arc is
/// x under y and the right-hand over arc is y over x.
bool is_valid_coloring(const Biquandle& X, const OrientedDiagram& d, const Coloring& f);

/// All colorings in lexicographic order of their color vectors.
std::vector<Coloring> enumerate_colorings(const Biquandle& X, const OrientedDiagram& d);

std::size_t counting_invariant(const Biquandle& X, const OrientedDiagram& d);

}  // namespace bracketlab
