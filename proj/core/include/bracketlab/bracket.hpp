#pragma once

#include <vector>

#include "bracketlab/biquandle.hpp"
#include "bracketlab/finite_ring.hpp"
#include "bracketlab/report.hpp"

namespace bracketlab {

/// n x n matrix of ring elements indexed [x-1][y-1].
using ElementMatrix = std::vector<std::vector<RingElement>>;

enum class AxiomForm {
  /// The fourth exchange equation with subscripts x under y and z over x.
  corrected,
  /// The fourth exchange equation exactly as commonly printed, with
  /// subscripts x under x and z over z.
  literal,
};

/// Checks the bracket axioms. Axiom ids: "unit-A"/"unit-B" (witness x,y),
/// "i" (w differs between 1 and x), "ii" (delta differs between (1,1) and
/// (x,y)), "iii-1".."iii-5" (witness x,y,z). Throws InputError on a shape
/// mismatch or an element not in the ring.
VerificationReport verify_bracket(const Biquandle& X, const Ring& R, const ElementMatrix& A, const ElementMatrix& B,
                                  AxiomForm form = AxiomForm::corrected);

/// A verified biquandle bracket. delta and w are derived at construction.
class Bracket {
 public:
  /// Throws VerificationError when the axioms fail.
  Bracket(Biquandle X, RingPtr R, ElementMatrix A, ElementMatrix B, AxiomForm form = AxiomForm::corrected);

  /// The constant bracket A = a, B = b on X.
  static Bracket constant(Biquandle X, RingPtr R, const RingElement& a, const RingElement& b);

  const Biquandle& biquandle() const { return X_; }
  const Ring& ring() const { return *R_; }
  const RingPtr& ring_ptr() const { return R_; }
  const ElementMatrix& A() const { return A_; }
  const ElementMatrix& B() const { return B_; }
  const RingElement& A(int x, int y) const { return A_[x - 1][y - 1]; }
  const RingElement& B(int x, int y) const { return B_[x - 1][y - 1]; }
  const RingElement& delta() const { return delta_; }
  const RingElement& w() const { return w_; }
  /// q_{x,y} = -A_{x,y}^-1 B_{x,y}.
  RingElement q(int x, int y) const;

  /// Coefficient of the smoothing selected by `bit` at a crossing of the
  /// given sign colored (x, y): A/B at positive, B^-1/A^-1 at negative.
  RingElement smoothing_coefficient(int sign, int bit, int x, int y) const;

  /// The same bracket with every entry of A and B multiplied by c.
  Bracket scaled(const RingElement& c) const;

 private:
  Biquandle X_;
  RingPtr R_;
  ElementMatrix A_;
  ElementMatrix B_;
  RingElement delta_;
  RingElement w_;
};

/// State sum w^(n- - n+) * sum over states of delta^(circles) * product of
/// smoothing coefficients.
RingElement bracket_value(const Bracket& beta, const OrientedDiagram& d, const Coloring& f);
/// Same, reusing precomputed circle counts per state.
RingElement bracket_value(const Bracket& beta, const OrientedDiagram& d, const Coloring& f,
                          const std::vector<int>& circle_counts);

Multiset<RingElement> bracket_invariant(const Bracket& beta, const OrientedDiagram& d);

}  // namespace bracketlab
