#include "bracketlab/smith_normal_form.hpp"

#include <stdexcept>
#include <utility>

#include "bracketlab/errors.hpp"

namespace bracketlab {

namespace {

struct Overflow {};

std::int64_t abs_of(std::int64_t a) {
  if (a == INT64_MIN) throw Overflow{};
  return a < 0 ? -a : a;
}
BigInt abs_of(const BigInt& a) { return boost::multiprecision::abs(a); }

// a - k * b
std::int64_t sub_mul(std::int64_t a, std::int64_t k, std::int64_t b) {
  std::int64_t p = 0, r = 0;
  if (__builtin_mul_overflow(k, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
  return r;
}
BigInt sub_mul(const BigInt& a, const BigInt& k, const BigInt& b) { return a - k * b; }

std::int64_t add_of(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
BigInt add_of(const BigInt& a, const BigInt& b) { return a + b; }

template <class T>
using Dense = std::vector<std::vector<T>>;

// Row/column operations are mirrored into U (rows) and V (columns) when
// those are non-null.
template <class T>
class Reducer {
 public:
  Reducer(Dense<T>& a, std::size_t rows, std::size_t cols, Dense<T>* u, Dense<T>* v)
      : a_(a), rows_(rows), cols_(cols), u_(u), v_(v) {}

  void run() {
    const std::size_t limit = std::min(rows_, cols_);
    for (std::size_t t = 0; t < limit; ++t) {
      if (!move_min_to(t)) break;
      while (true) {
        if (!clear_column(t)) continue;
        if (!clear_row(t)) continue;
        if (fix_divisibility(t)) break;
      }
      if (a_[t][t] < 0) negate_row(t);
    }
  }

 private:
  // Moves the nonzero entry of least absolute value in the trailing
  // submatrix to (t,t). Returns false if the submatrix is zero.
  bool move_min_to(std::size_t t) {
    std::size_t bi = rows_, bj = cols_;
    T best{};
    for (std::size_t i = t; i < rows_; ++i) {
      for (std::size_t j = t; j < cols_; ++j) {
        if (a_[i][j] == 0) continue;
        T v = abs_of(a_[i][j]);
        if (bi == rows_ || v < best) {
          best = v;
          bi = i;
          bj = j;
          if (best == 1) break;
        }
      }
      if (bi != rows_ && best == 1) break;
    }
    if (bi == rows_) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Returns true when column t below the pivot is zero; otherwise a smaller
  // remainder was moved into the pivot and the caller retries.
  bool clear_column(std::size_t t) {
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (a_[i][t] == 0) continue;
      T k = a_[i][t] / a_[t][t];
      add_row_multiple(i, t, k);
    }
    std::size_t bi = t;
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (a_[i][t] != 0 && abs_of(a_[i][t]) < abs_of(a_[bi][t])) bi = i;
    }
    if (bi != t) {
      swap_rows(t, bi);
      return false;
    }
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (a_[i][t] != 0) return false;
    }
    return true;
  }

  bool clear_row(std::size_t t) {
    for (std::size_t j = t + 1; j < cols_; ++j) {
      if (a_[t][j] == 0) continue;
      T k = a_[t][j] / a_[t][t];
      add_col_multiple(j, t, k);
    }
    std::size_t bj = t;
    for (std::size_t j = t + 1; j < cols_; ++j) {
      if (a_[t][j] != 0 && abs_of(a_[t][j]) < abs_of(a_[t][bj])) bj = j;
    }
    if (bj != t) {
      swap_cols(t, bj);
      return false;
    }
    for (std::size_t j = t + 1; j < cols_; ++j) {
      if (a_[t][j] != 0) return false;
    }
    // Clearing the row may have refilled the column only if a swap
    // happened, which returned above.
    return true;
  }

  // Ensures the pivot divides every remaining entry; if not, adds the
  // offending row to row t so the next pass reduces the pivot.
  bool fix_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < rows_; ++i) {
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (a_[i][j] % a_[t][t] != 0) {
          add_row_multiple(t, i, T{-1});
          return false;
        }
      }
    }
    return true;
  }

  // row i -= k * row s
  void add_row_multiple(std::size_t i, std::size_t s, const T& k) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (a_[s][j] != 0) a_[i][j] = sub_mul(a_[i][j], k, a_[s][j]);
    }
    if (u_) {
      for (std::size_t j = 0; j < rows_; ++j) {
        if ((*u_)[s][j] != 0) (*u_)[i][j] = sub_mul((*u_)[i][j], k, (*u_)[s][j]);
      }
    }
  }

  // column j -= k * column s
  void add_col_multiple(std::size_t j, std::size_t s, const T& k) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (a_[i][s] != 0) a_[i][j] = sub_mul(a_[i][j], k, a_[i][s]);
    }
    if (v_) {
      for (std::size_t i = 0; i < cols_; ++i) {
        if ((*v_)[i][s] != 0) (*v_)[i][j] = sub_mul((*v_)[i][j], k, (*v_)[i][s]);
      }
    }
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    std::swap(a_[i], a_[k]);
    if (u_) std::swap((*u_)[i], (*u_)[k]);
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (auto& row : a_) std::swap(row[j], row[k]);
    if (v_) {
      for (auto& row : *v_) std::swap(row[j], row[k]);
    }
  }

  void negate_row(std::size_t t) {
    for (auto& x : a_[t]) x = sub_mul(T{0}, T{1}, x);
    if (u_) {
      for (auto& x : (*u_)[t]) x = sub_mul(T{0}, T{1}, x);
    }
  }

  Dense<T>& a_;
  std::size_t rows_;
  std::size_t cols_;
  Dense<T>* u_;
  Dense<T>* v_;
};

template <class T>
std::vector<BigInt> diagonal_of(const Dense<T>& a, std::size_t rows, std::size_t cols) {
  std::vector<BigInt> out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    if (a[t][t] == 0) break;
    out.emplace_back(a[t][t]);
  }
  return out;
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  return smith_normal_form(m, m.size(), m.empty() ? 0 : m.front().size());
}

SmithResult smith_normal_form(const IntMatrix& m, std::size_t rows, std::size_t cols) {
  for (const auto& row : m) {
    if (row.size() != cols) throw InputError("matrix rows have different lengths");
  }
  if (m.size() != rows) throw InputError("matrix has the wrong number of rows");
  SmithResult r;
  r.S = m;
  r.U = identity_matrix(rows);
  r.V = identity_matrix(cols);
  Reducer<BigInt>(r.S, rows, cols, &r.U, &r.V).run();
  r.invariant_factors = diagonal_of(r.S, rows, cols);
  return r;
}

std::vector<BigInt> invariant_factors(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  try {
    auto a = m;
    Reducer<std::int64_t>(a, rows, cols, nullptr, nullptr).run();
    return diagonal_of(a, rows, cols);
  } catch (const Overflow&) {
    Dense<BigInt> a(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
    }
    Reducer<BigInt>(a, rows, cols, nullptr, nullptr).run();
    return diagonal_of(a, rows, cols);
  }
}

std::vector<BigInt> combine_torsion(const std::vector<BigInt>& orders) {
  std::vector<BigInt> diag;
  for (const auto& o : orders) {
    if (abs_of(o) > 1) diag.push_back(abs_of(o));
  }
  if (diag.size() <= 1) return diag;
  Dense<BigInt> a(diag.size(), std::vector<BigInt>(diag.size(), 0));
  for (std::size_t i = 0; i < diag.size(); ++i) a[i][i] = diag[i];
  Reducer<BigInt>(a, diag.size(), diag.size(), nullptr, nullptr).run();
  std::vector<BigInt> out;
  for (auto& f : diagonal_of(a, diag.size(), diag.size())) {
    if (f > 1) out.push_back(f);
  }
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b.front().size();
  IntMatrix c(n, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw InputError("matrix shapes do not match");
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw InputError("determinant needs a square matrix");
  }
  if (n == 0) return 1;
  // Bareiss elimination: every division is exact.
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace bracketlab
