#include "bracketlab/graded_algebra.hpp"

#include <set>

#include "bracketlab/errors.hpp"

namespace bracketlab {

GradingGroup GradingGroup::infinite_cyclic() { return GradingGroup{}; }

GradingGroup GradingGroup::finite_units(RingPtr ring) {
  GradingGroup g;
  g.kind_ = Kind::finite_units;
  g.ring_ = std::move(ring);
  return g;
}

Degree GradingGroup::identity() const {
  if (kind_ == Kind::infinite_cyclic) return std::int64_t{0};
  return ring_->one();
}

Degree GradingGroup::multiply(const Degree& a, const Degree& b) const {
  if (kind_ == Kind::infinite_cyclic) return std::get<std::int64_t>(a) + std::get<std::int64_t>(b);
  return ring_->mul(std::get<RingElement>(a), std::get<RingElement>(b));
}

Degree GradingGroup::inverse(const Degree& a) const {
  if (kind_ == Kind::infinite_cyclic) return -std::get<std::int64_t>(a);
  return ring_->invert(std::get<RingElement>(a));
}

Degree GradingGroup::power(const Degree& a, std::int64_t k) const {
  if (kind_ == Kind::infinite_cyclic) return std::get<std::int64_t>(a) * k;
  return ring_->pow(std::get<RingElement>(a), k);
}

std::string GradingGroup::to_string(const Degree& d) const {
  if (kind_ == Kind::infinite_cyclic) return std::to_string(std::get<std::int64_t>(d));
  return ring_->to_string(std::get<RingElement>(d));
}

bool operator==(const GradingGroup& a, const GradingGroup& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ == GradingGroup::Kind::infinite_cyclic || a.ring_->descriptor() == b.ring_->descriptor();
}

void add_term(FormalSum& s, const Degree& d, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto& c = s[d];
  c += coefficient;
  if (c == 0) s.erase(d);
}

FormalSum shift(const GradingGroup& group, const FormalSum& s, const Degree& h, int sign) {
  FormalSum out;
  for (const auto& [d, c] : s) add_term(out, group.multiply(h, d), sign * c);
  return out;
}

namespace {

RingElement scaled_by_bigint(const Ring& ring, const BigInt& c, const RingElement& e) {
  const BigInt n = ring.descriptor().modulus_n;
  BigInt r = c % n;
  if (r < 0) r += n;
  return ring.scale(r.convert_to<std::int64_t>(), e);
}

}  // namespace

RingElement evaluate_formal_sum(const GradingGroup& group, const FormalSum& s) {
  if (group.kind() != GradingGroup::Kind::finite_units) {
    throw InputError("formal sums over the infinite cyclic group need a value for q");
  }
  const Ring& ring = *group.ring();
  RingElement total = ring.zero();
  for (const auto& [d, c] : s) total = ring.add(total, scaled_by_bigint(ring, c, std::get<RingElement>(d)));
  return total;
}

RingElement evaluate_formal_sum(const Ring& ring, const FormalSum& s, const RingElement& q) {
  RingElement total = ring.zero();
  for (const auto& [d, c] : s) {
    if (!std::holds_alternative<std::int64_t>(d)) throw InputError("expected integer degrees");
    total = ring.add(total, scaled_by_bigint(ring, c, ring.pow(q, std::get<std::int64_t>(d))));
  }
  return total;
}

void SparseMatrix::add(std::size_t row, std::size_t col, std::int64_t value) {
  if (value == 0) return;
  auto& column = columns[col];
  auto& v = column[row];
  v += value;
  if (v == 0) column.erase(row);
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : columns) {
    if (!c.empty()) return false;
  }
  return true;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw InputError("sparse matrix shapes do not match");
  SparseMatrix c(a.rows, b.cols);
  for (std::size_t j = 0; j < b.cols; ++j) {
    for (const auto& [k, bv] : b.columns[j]) {
      for (const auto& [i, av] : a.columns[k]) c.add(i, j, av * bv);
    }
  }
  return c;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw InputError("sparse matrix shapes do not match");
  SparseMatrix c = a;
  for (std::size_t j = 0; j < b.cols; ++j) {
    for (const auto& [i, v] : b.columns[j]) c.add(i, j, v);
  }
  return c;
}

Degree GradedComplex::degree(std::size_t column, std::size_t basis) const {
  return group.multiply(global_shift, basis_degrees[column][basis]);
}

GradedComplex shifted(const GradedComplex& c, int j, const Degree& h) {
  GradedComplex out = c;
  out.index_offset += j;
  out.global_shift = c.group.multiply(h, c.global_shift);
  return out;
}

void add_entry(HomologyTable& t, int i, const Degree& h, const HomologyEntry& e) {
  if (e.empty()) return;
  auto& slot = t.entries[{i, h}];
  slot.rank += e.rank;
  auto all = slot.torsion;
  all.insert(all.end(), e.torsion.begin(), e.torsion.end());
  slot.torsion = combine_torsion(all);
}

VerificationReport check_d_squared(const GradedComplex& c) {
  VerificationReport report;
  for (std::size_t k = 0; k + 1 < c.differentials.size(); ++k) {
    if (!(c.differentials[k + 1] * c.differentials[k]).is_zero()) {
      report.add("d-squared", {static_cast<int>(k) + c.index_offset}, "d o d is nonzero");
    }
  }
  return report;
}

VerificationReport check_degree_preserving(const GradedComplex& c) {
  VerificationReport report;
  for (std::size_t k = 0; k < c.differentials.size(); ++k) {
    const auto& d = c.differentials[k];
    for (std::size_t j = 0; j < d.cols; ++j) {
      for (const auto& [i, v] : d.columns[j]) {
        if (c.basis_degrees[k][j] != c.basis_degrees[k + 1][i]) {
          report.add("degree", {static_cast<int>(k) + c.index_offset, static_cast<int>(j), static_cast<int>(i)},
                     "differential changes degree " + c.group.to_string(c.basis_degrees[k][j]) + " -> " +
                         c.group.to_string(c.basis_degrees[k + 1][i]));
        }
      }
    }
  }
  return report;
}

namespace {

void check_shape(const GradedComplex& c) {
  if (c.length() == 0) {
    if (!c.differentials.empty()) throw InputError("complex has differentials but no modules");
    return;
  }
  if (c.differentials.size() + 1 != c.length()) throw InputError("complex needs one differential per adjacent pair");
  for (std::size_t k = 0; k < c.differentials.size(); ++k) {
    const auto& d = c.differentials[k];
    if (d.cols != c.basis_degrees[k].size() || d.rows != c.basis_degrees[k + 1].size() || d.columns.size() != d.cols) {
      throw InputError("differential " + std::to_string(k) + " has the wrong shape");
    }
  }
}

// Indices of each degree within one column.
std::map<Degree, std::vector<std::size_t>> group_by_degree(const std::vector<Degree>& degrees) {
  std::map<Degree, std::vector<std::size_t>> out;
  for (std::size_t b = 0; b < degrees.size(); ++b) out[degrees[b]].push_back(b);
  return out;
}

struct BlockSmith {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
};

BlockSmith block_smith(const SparseMatrix& d, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
  if (rows.empty() || cols.empty()) return {};
  std::map<std::size_t, std::size_t> row_pos;
  for (std::size_t i = 0; i < rows.size(); ++i) row_pos[rows[i]] = i;
  std::vector<std::vector<std::int64_t>> dense(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
  bool any = false;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [i, v] : d.columns[cols[j]]) {
      auto it = row_pos.find(i);
      if (it != row_pos.end()) {
        dense[it->second][j] = v;
        any = true;
      }
    }
  }
  if (!any) return {};
  BlockSmith out;
  const auto factors = invariant_factors(dense);
  out.rank = factors.size();
  for (const auto& f : factors) {
    if (f > 1) out.torsion.push_back(f);
  }
  return out;
}

}  // namespace

HomologyTable cohomology(const GradedComplex& c) {
  check_shape(c);
  if (auto r = check_d_squared(c); !r.ok()) throw InputError("complex is malformed: d o d != 0");
  if (auto r = check_degree_preserving(c); !r.ok()) throw InputError("complex is malformed: " + r.failures[0].detail);

  HomologyTable table{c.group, {}};
  const std::size_t len = c.length();
  std::vector<std::map<Degree, std::vector<std::size_t>>> blocks(len);
  for (std::size_t k = 0; k < len; ++k) blocks[k] = group_by_degree(c.basis_degrees[k]);

  // rank and torsion of d^k restricted to each degree
  std::vector<std::map<Degree, BlockSmith>> smith(len);
  for (std::size_t k = 0; k + 1 < len; ++k) {
    for (const auto& [h, cols] : blocks[k]) {
      auto it = blocks[k + 1].find(h);
      if (it == blocks[k + 1].end()) continue;
      smith[k][h] = block_smith(c.differentials[k], it->second, cols);
    }
  }
  for (std::size_t k = 0; k < len; ++k) {
    for (const auto& [h, basis] : blocks[k]) {
      HomologyEntry e;
      std::size_t out_rank = 0, in_rank = 0;
      if (auto it = smith[k].find(h); it != smith[k].end()) out_rank = it->second.rank;
      if (k > 0) {
        if (auto it = smith[k - 1].find(h); it != smith[k - 1].end()) {
          in_rank = it->second.rank;
          e.torsion = it->second.torsion;
        }
      }
      e.rank = basis.size() - out_rank - in_rank;
      add_entry(table, static_cast<int>(k) + c.index_offset, c.group.multiply(c.global_shift, h), e);
    }
  }
  return table;
}

FormalSum graded_euler_characteristic(const HomologyTable& t) {
  FormalSum s;
  for (const auto& [key, e] : t.entries) add_term(s, key.second, (key.first % 2 == 0 ? 1 : -1) * BigInt(e.rank));
  return s;
}

FormalSum graded_euler_characteristic(const GradedComplex& c) {
  FormalSum s;
  for (std::size_t k = 0; k < c.length(); ++k) {
    const int sign = (static_cast<int>(k) + c.index_offset) % 2 == 0 ? 1 : -1;
    for (std::size_t b = 0; b < c.basis_degrees[k].size(); ++b) add_term(s, c.degree(k, b), sign);
  }
  return s;
}

}  // namespace bracketlab
