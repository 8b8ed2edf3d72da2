#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bracketlab {

using BigInt = boost::multiprecision::cpp_int;
/// Dense row-major integer matrix.
using IntMatrix = std::vector<std::vector<BigInt>>;

struct SmithResult {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  /// Nonzero diagonal entries of S, each dividing the next, all positive.
  std::vector<BigInt> invariant_factors;
  std::size_t rank() const { return invariant_factors.size(); }
};

/// U * m * V = S with U, V unimodular and S diagonal. Pivots on the entry
/// of least absolute value. `rows`/`cols` give the shape when m is empty.
SmithResult smith_normal_form(const IntMatrix& m, std::size_t rows, std::size_t cols);
SmithResult smith_normal_form(const IntMatrix& m);

/// Invariant factors only. Runs in 64-bit arithmetic and falls back to
/// arbitrary precision if an intermediate value would overflow.
std::vector<BigInt> invariant_factors(const std::vector<std::vector<std::int64_t>>& m);

/// Invariant factors of a direct sum of cyclic groups Z/a_1 + Z/a_2 + ...
/// (entries 0 and 1 are dropped).
std::vector<BigInt> combine_torsion(const std::vector<BigInt>& orders);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(std::size_t n);
/// Exact determinant by fraction-free elimination.
BigInt determinant(const IntMatrix& m);

}  // namespace bracketlab
