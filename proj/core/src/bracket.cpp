#include "bracketlab/bracket.hpp"

#include <array>
#include <string>

#include "bracketlab/errors.hpp"

namespace bracketlab {

namespace {

void check_matrix(const ElementMatrix& M, const Ring& R, int n, const char* name) {
  if (M.size() != static_cast<std::size_t>(n)) throw InputError(std::string(name) + " has the wrong number of rows");
  for (const auto& row : M) {
    if (row.size() != static_cast<std::size_t>(n)) throw InputError(std::string(name) + " is not n x n");
    for (const auto& e : row) {
      if (!R.contains(e)) throw InputError(std::string(name) + " has an entry outside the ring");
    }
  }
}

}  // namespace

VerificationReport verify_bracket(const Biquandle& X, const Ring& R, const ElementMatrix& A, const ElementMatrix& B,
                                  AxiomForm form) {
  const int n = X.size();
  check_matrix(A, R, n, "A");
  check_matrix(B, R, n, "B");

  VerificationReport report;
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      if (!R.is_unit(A[x - 1][y - 1])) report.add("unit-A", {x, y}, R.to_string(A[x - 1][y - 1]) + " is not a unit");
      if (!R.is_unit(B[x - 1][y - 1])) report.add("unit-B", {x, y}, R.to_string(B[x - 1][y - 1]) + " is not a unit");
    }
  }
  if (!report.ok()) return report;

  auto a = [&](int x, int y) -> const RingElement& { return A[x - 1][y - 1]; };
  auto b = [&](int x, int y) -> const RingElement& { return B[x - 1][y - 1]; };
  auto U = [&](int x, int y) { return X.under(x, y); };
  auto O = [&](int x, int y) { return X.over(x, y); };
  auto mul3 = [&](const RingElement& p, const RingElement& q, const RingElement& r) {
    return R.mul(R.mul(p, q), r);
  };

  auto w_at = [&](int x) { return R.neg(R.mul(R.mul(a(x, x), a(x, x)), R.invert(b(x, x)))); };
  auto delta_at = [&](int x, int y) {
    return R.neg(R.add(R.mul(a(x, y), R.invert(b(x, y))), R.mul(R.invert(a(x, y)), b(x, y))));
  };
  const RingElement w = w_at(1);
  for (int x = 2; x <= n; ++x) {
    if (w_at(x) != w) report.add("i", {x}, R.to_string(w_at(x)) + " != " + R.to_string(w));
  }
  const RingElement delta = delta_at(1, 1);
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      if (delta_at(x, y) != delta) report.add("ii", {x, y}, R.to_string(delta_at(x, y)) + " != " + R.to_string(delta));
    }
  }

  auto check = [&](const char* id, int x, int y, int z, const RingElement& lhs, const RingElement& rhs) {
    if (lhs != rhs) report.add(id, {x, y, z}, R.to_string(lhs) + " != " + R.to_string(rhs));
  };
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      for (int z = 1; z <= n; ++z) {
        const int uxy = U(x, y), ozy = O(z, y), oyx = O(y, x), ozx = O(z, x), uxz = U(x, z), uyz = U(y, z);
        check("iii-1", x, y, z, mul3(a(x, y), a(y, z), a(uxy, ozy)), mul3(a(x, z), a(oyx, ozx), a(uxz, uyz)));
        check("iii-2", x, y, z, mul3(a(x, y), b(y, z), b(uxy, ozy)), mul3(b(x, z), b(oyx, ozx), a(uxz, uyz)));
        check("iii-3", x, y, z, mul3(b(x, y), a(y, z), b(uxy, ozy)), mul3(b(x, z), a(oyx, ozx), b(uxz, uyz)));

        const int p = form == AxiomForm::literal ? U(x, x) : uxy;
        const int s = form == AxiomForm::literal ? O(z, z) : ozx;
        RingElement lhs = mul3(a(x, y), a(y, z), b(p, ozy));
        RingElement rhs = mul3(a(x, z), b(oyx, s), a(uxz, uyz));
        rhs = R.add(rhs, mul3(a(x, z), a(oyx, ozx), b(uxz, uyz)));
        rhs = R.add(rhs, R.mul(delta, mul3(a(x, z), b(oyx, ozx), b(uxz, uyz))));
        rhs = R.add(rhs, mul3(b(x, z), b(oyx, ozx), b(uxz, uyz)));
        check("iii-4", x, y, z, lhs, rhs);

        lhs = mul3(b(x, z), a(oyx, ozx), a(uxz, uyz));
        rhs = mul3(b(x, y), a(y, z), a(uxy, ozy));
        rhs = R.add(rhs, mul3(a(x, y), b(y, z), a(uxy, ozy)));
        rhs = R.add(rhs, R.mul(delta, mul3(b(x, y), b(y, z), a(uxy, ozy))));
        rhs = R.add(rhs, mul3(b(x, y), b(y, z), b(uxy, ozy)));
        check("iii-5", x, y, z, lhs, rhs);
      }
    }
  }
  return report;
}

Bracket::Bracket(Biquandle X, RingPtr R, ElementMatrix A, ElementMatrix B, AxiomForm form)
    : X_(std::move(X)), R_(std::move(R)), A_(std::move(A)), B_(std::move(B)) {
  auto report = verify_bracket(X_, *R_, A_, B_, form);
  if (!report.ok()) throw VerificationError("matrices do not define a biquandle bracket", std::move(report));
  const auto& a = A_[0][0];
  const auto& b = B_[0][0];
  w_ = R_->neg(R_->mul(R_->mul(a, a), R_->invert(b)));
  delta_ = R_->neg(R_->add(R_->mul(a, R_->invert(b)), R_->mul(R_->invert(a), b)));
}

Bracket Bracket::constant(Biquandle X, RingPtr R, const RingElement& a, const RingElement& b) {
  const auto n = static_cast<std::size_t>(X.size());
  ElementMatrix A(n, std::vector<RingElement>(n, a));
  ElementMatrix B(n, std::vector<RingElement>(n, b));
  return Bracket(std::move(X), std::move(R), std::move(A), std::move(B));
}

RingElement Bracket::q(int x, int y) const { return R_->neg(R_->mul(R_->invert(A(x, y)), B(x, y))); }

RingElement Bracket::smoothing_coefficient(int sign, int bit, int x, int y) const {
  if (sign > 0) return bit == 0 ? A(x, y) : B(x, y);
  return bit == 0 ? R_->invert(B(x, y)) : R_->invert(A(x, y));
}

Bracket Bracket::scaled(const RingElement& c) const {
  ElementMatrix A = A_, B = B_;
  for (auto* M : {&A, &B}) {
    for (auto& row : *M) {
      for (auto& e : row) e = R_->mul(c, e);
    }
  }
  return Bracket(X_, R_, std::move(A), std::move(B));
}

RingElement bracket_value(const Bracket& beta, const OrientedDiagram& d, const Coloring& f) {
  return bracket_value(beta, d, f, state_circle_counts(d));
}

RingElement bracket_value(const Bracket& beta, const OrientedDiagram& d, const Coloring& f,
                          const std::vector<int>& circle_counts) {
  const Ring& R = beta.ring();
  const std::size_t n = d.crossing_count();
  std::vector<std::array<RingElement, 2>> coeff(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [x, y] = crossing_colors(d, f, i);
    const int sign = d.crossings()[i].sign;
    coeff[i] = {beta.smoothing_coefficient(sign, 0, x, y), beta.smoothing_coefficient(sign, 1, x, y)};
  }
  std::vector<RingElement> delta_pow{R.one()};
  RingElement sum = R.zero();
  for (std::uint64_t r = 0; r < circle_counts.size(); ++r) {
    const auto k = static_cast<std::size_t>(circle_counts[r]);
    while (delta_pow.size() <= k) delta_pow.push_back(R.mul(delta_pow.back(), beta.delta()));
    RingElement term = delta_pow[k];
    for (std::size_t i = 0; i < n; ++i) term = R.mul(term, coeff[i][(r >> i) & 1U]);
    sum = R.add(sum, term);
  }
  return R.mul(R.pow(beta.w(), d.negative_crossings() - d.positive_crossings()), sum);
}

Multiset<RingElement> bracket_invariant(const Bracket& beta, const OrientedDiagram& d) {
  const auto counts = state_circle_counts(d);
  std::vector<RingElement> values;
  for (const auto& f : enumerate_colorings(beta.biquandle(), d)) values.push_back(bracket_value(beta, d, f, counts));
  return make_multiset(std::move(values));
}

}  // namespace bracketlab
