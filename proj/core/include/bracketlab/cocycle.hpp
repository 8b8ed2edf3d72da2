#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "bracketlab/biquandle.hpp"
#include "bracketlab/bracket.hpp"
#include "bracketlab/finite_ring.hpp"
#include "bracketlab/report.hpp"

namespace bracketlab {

/// Element of a free abelian group as an exponent vector over a fixed
/// symbol list.
struct FreeWord {
  std::vector<std::int64_t> exponents;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;
};

using CocycleValue = std::variant<FreeWord, Coset>;

/// The abelian group a cocycle takes values in: free abelian on named
/// symbols, or a quotient R^x / G.
class CocycleTarget {
 public:
  enum class Kind { free_abelian, unit_quotient };

  static CocycleTarget free_abelian(std::vector<std::string> symbols);
  static CocycleTarget unit_quotient(SubgroupPtr subgroup);

  Kind kind() const { return kind_; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const SubgroupPtr& subgroup() const { return subgroup_; }

  CocycleValue identity() const;
  CocycleValue multiply(const CocycleValue& a, const CocycleValue& b) const;
  CocycleValue inverse(const CocycleValue& a) const;
  bool is_identity(const CocycleValue& a) const;

  /// Free words print as "1", "ab", "a^2b^-1" (symbols joined with '*' when
  /// any symbol is longer than one character); cosets print their
  /// canonical representative.
  std::string to_string(const CocycleValue& a) const;
  /// Parses the free-word syntax above. Throws InputError on unknown symbols
  /// or on a unit_quotient target.
  CocycleValue parse_word(const std::string& text) const;

 private:
  Kind kind_ = Kind::free_abelian;
  std::vector<std::string> symbols_;
  SubgroupPtr subgroup_;
};

using CocycleMatrix = std::vector<std::vector<CocycleValue>>;

struct Cocycle {
  Biquandle biquandle;
  CocycleTarget target;
  CocycleMatrix phi;

  const CocycleValue& operator()(int x, int y) const { return phi[x - 1][y - 1]; }
};

/// Axiom ids: "i" (witness x), "ii" (witness x,y,z). Throws InputError on a
/// shape mismatch.
VerificationReport verify_cocycle(const Cocycle& c);

/// Product over crossings of phi(x, y)^sign for one coloring.
CocycleValue cocycle_value(const Cocycle& c, const OrientedDiagram& d, const Coloring& f);
Multiset<CocycleValue> cocycle_invariant(const Cocycle& c, const OrientedDiagram& d);

/// Image of a free-abelian cocycle under the homomorphism sending each
/// symbol to a unit, read in R^x / G.
Cocycle push_forward(const Cocycle& c, const std::map<std::string, RingElement>& images, SubgroupPtr subgroup);

/// G = < q_{x,y}^-1 q : x, y > with q = q_{x0,x0}.
SubgroupPtr grading_subgroup(const Bracket& beta, int x0 = 1);

struct CanonicalCocycle {
  int x0 = 1;
  RingElement q;
  SubgroupPtr G;
  /// phi(x, y) = A_{x,y} A_{x0,x0}^-1 G.
  Cocycle phi;
};

/// Throws InternalError if the result fails verify_cocycle.
CanonicalCocycle canonical_cocycle(const Bracket& beta, int x0 = 1);

/// The Z shift as a unit, before passing to the quotient:
/// prod_{+} A_{x,y} A_{x0,x0}^-1 * prod_{-} B_{x,y}^-1 B_{x0,x0}.
RingElement z_shift(const Bracket& beta, const OrientedDiagram& d, const Coloring& f, int x0 = 1);
/// z_shift read in R^x / G.
Coset z_invariant(const Bracket& beta, const OrientedDiagram& d, const Coloring& f, int x0 = 1);
Multiset<Coset> z_invariant_multiset(const Bracket& beta, const OrientedDiagram& d, int x0 = 1);

}  // namespace bracketlab
