#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bracketlab/finite_ring.hpp"
#include "bracketlab/report.hpp"
#include "bracketlab/smith_normal_form.hpp"

namespace bracketlab {

/// A grading degree: an exponent of q in the infinite cyclic group, or a
/// unit of a finite ring.
using Degree = std::variant<std::int64_t, RingElement>;

class GradingGroup {
 public:
  enum class Kind { finite_units, infinite_cyclic };

  static GradingGroup infinite_cyclic();
  static GradingGroup finite_units(RingPtr ring);

  Kind kind() const { return kind_; }
  const RingPtr& ring() const { return ring_; }

  Degree identity() const;
  Degree multiply(const Degree& a, const Degree& b) const;
  Degree inverse(const Degree& a) const;
  Degree power(const Degree& a, std::int64_t k) const;
  /// "q^k" style integers for the cyclic group, ring notation otherwise.
  std::string to_string(const Degree& d) const;

  friend bool operator==(const GradingGroup& a, const GradingGroup& b);

 private:
  Kind kind_ = Kind::infinite_cyclic;
  RingPtr ring_;
};

/// Formal integer combination of degrees.
using FormalSum = std::map<Degree, BigInt>;

void add_term(FormalSum& s, const Degree& d, const BigInt& coefficient);
/// Multiplies every degree by h and every coefficient by `sign`.
FormalSum shift(const GradingGroup& group, const FormalSum& s, const Degree& h, int sign = 1);
/// Sum of coefficient * degree in the ring. Throws InputError for a cyclic
/// grading group.
RingElement evaluate_formal_sum(const GradingGroup& group, const FormalSum& s);
/// Evaluates a cyclic-group sum by sending q^k to q^k in the ring.
RingElement evaluate_formal_sum(const Ring& ring, const FormalSum& s, const RingElement& q);

/// Sparse integer matrix stored by column: columns[j] maps row -> value.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::map<std::size_t, std::int64_t>> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  void add(std::size_t row, std::size_t col, std::int64_t value);
  bool is_zero() const;
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
};

/// A finite cochain complex of free abelian groups with a degree attached
/// to every basis vector. Column k sits at index index_offset + k; reported
/// degrees are multiplied by global_shift.
struct GradedComplex {
  GradingGroup group;
  int index_offset = 0;
  Degree global_shift;
  std::vector<std::vector<Degree>> basis_degrees;
  /// differentials[k] maps column k to column k+1.
  std::vector<SparseMatrix> differentials;

  std::size_t length() const { return basis_degrees.size(); }
  /// Degree of a basis vector with the global shift applied.
  Degree degree(std::size_t column, std::size_t basis) const;
};

/// Index shift [j] (index i moves to i + j) and grading shift {h}.
GradedComplex shifted(const GradedComplex& c, int j, const Degree& h);

struct HomologyEntry {
  std::uint64_t rank = 0;
  std::vector<BigInt> torsion;

  bool empty() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyEntry&, const HomologyEntry&) = default;
  friend bool operator<(const HomologyEntry& a, const HomologyEntry& b) {
    return std::tie(a.rank, a.torsion) < std::tie(b.rank, b.torsion);
  }
};

struct HomologyTable {
  GradingGroup group;
  /// Keyed by (index, degree); empty entries are never stored.
  std::map<std::pair<int, Degree>, HomologyEntry> entries;

  friend bool operator==(const HomologyTable& a, const HomologyTable& b) { return a.entries == b.entries; }
  friend bool operator<(const HomologyTable& a, const HomologyTable& b) { return a.entries < b.entries; }
};

/// Adds `e` into the table at (i, h), merging ranks and torsion.
void add_entry(HomologyTable& t, int i, const Degree& h, const HomologyEntry& e);

/// Checks d^{k+1} d^k = 0 (axiom "d-squared", witness k).
VerificationReport check_d_squared(const GradedComplex& c);
/// Checks every nonzero entry links basis vectors of equal degree (axiom
/// "degree", witness k, column, row).
VerificationReport check_degree_preserving(const GradedComplex& c);

/// Cohomology computed blockwise per degree. Throws InputError when either
/// check above fails.
HomologyTable cohomology(const GradedComplex& c);

FormalSum graded_euler_characteristic(const HomologyTable& t);
FormalSum graded_euler_characteristic(const GradedComplex& c);

}  // namespace bracketlab
