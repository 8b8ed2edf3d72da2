#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bracketlab {

/// Description of a finite commutative ring: either Z/nZ or
/// (Z/nZ)[t]/(f(t)) with f monic up to a unit.
struct RingDescriptor {
  enum class Kind { zmod, poly_quotient };

  Kind kind = Kind::zmod;
  std::int64_t modulus_n = 2;
  /// Coefficients of f, constant term first. Empty for zmod.
  std::vector<std::int64_t> modulus_poly;

  static RingDescriptor zmod(std::int64_t n);
  static RingDescriptor poly_quotient(std::int64_t base_n, std::vector<std::int64_t> modulus);

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

/// An element in canonical form: one residue for Z/nZ, or the residues of
/// the coefficients of a polynomial of degree < deg f. Ordering is
/// lexicographic with the constant term most significant, which for Z/nZ is
/// ordering by value.
class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {}

  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  friend bool operator==(const RingElement&, const RingElement&) = default;
  friend std::strong_ordering operator<=>(const RingElement&, const RingElement&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Immutable finite ring. All element tables are built at construction, so
/// rings are limited to `max_size` elements.
class Ring {
 public:
  static constexpr std::size_t max_size = 4096;

  explicit Ring(RingDescriptor descriptor);

  const RingDescriptor& descriptor() const { return desc_; }
  std::size_t size() const { return elements_.size(); }
  /// Length of the coefficient vector of every element.
  std::size_t width() const { return width_; }

  RingElement zero() const;
  RingElement one() const;
  RingElement from_integer(std::int64_t k) const;
  /// Reduces an arbitrary coefficient list (constant term first).
  RingElement reduce(std::vector<std::int64_t> coefficients) const;

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement scale(std::int64_t k, const RingElement& a) const;
  /// a^e; negative exponents require a to be a unit.
  RingElement pow(const RingElement& a, std::int64_t e) const;

  std::optional<RingElement> try_invert(const RingElement& a) const;
  /// Throws InputError when a is not a unit.
  RingElement invert(const RingElement& a) const;
  bool is_unit(const RingElement& a) const { return inverse_[index_of(a)] >= 0; }

  /// All elements in canonical order.
  const std::vector<RingElement>& elements() const { return elements_; }
  /// The unit group R^x in canonical order.
  const std::vector<RingElement>& units() const { return units_; }
  /// Position of a canonical element within elements().
  std::size_t index_of(const RingElement& a) const;
  bool contains(const RingElement& a) const;

  std::string to_string(const RingElement& a) const;

 private:
  std::vector<std::int64_t> poly_mul_reduce(const std::vector<std::int64_t>& a,
                                            const std::vector<std::int64_t>& b) const;

  RingDescriptor desc_;
  std::size_t width_ = 1;
  std::int64_t lead_inverse_ = 1;
  std::vector<RingElement> elements_;
  std::vector<RingElement> units_;
  std::vector<std::ptrdiff_t> inverse_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Validates the descriptor and builds the ring. Throws InputError for
/// n < 2, a constant or non-unit-led modulus, or rings over max_size.
RingPtr make_ring(const RingDescriptor& descriptor);

/// A subgroup of R^x stored as its full sorted element list.
class UnitSubgroup {
 public:
  /// Closure of `generators` under multiplication (which, in a finite group,
  /// also gives inverses). Throws InputError on a non-unit generator.
  static UnitSubgroup generate(RingPtr ring, std::vector<RingElement> generators);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const std::vector<RingElement>& elements() const { return elements_; }
  const std::vector<RingElement>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const RingElement& a) const;
  bool is_trivial() const { return elements_.size() == 1; }

  /// Smallest element of the coset u*G in canonical order.
  RingElement canonical_representative(const RingElement& unit) const;

  friend bool operator==(const UnitSubgroup& a, const UnitSubgroup& b) {
    return a.ring_->descriptor() == b.ring_->descriptor() && a.elements_ == b.elements_;
  }

 private:
  RingPtr ring_;
  std::vector<RingElement> generators_;
  std::vector<RingElement> elements_;
};

using SubgroupPtr = std::shared_ptr<const UnitSubgroup>;

/// An element of R^x / G. The representative is always canonical, so
/// comparing representatives agrees with the rep1 * rep2^-1 in G test.
class Coset {
 public:
  Coset(SubgroupPtr subgroup, const RingElement& unit);

  const SubgroupPtr& subgroup() const { return subgroup_; }
  const RingElement& representative() const { return rep_; }

  Coset operator*(const Coset& other) const;
  Coset inverse() const;
  bool is_identity() const;

  friend bool operator==(const Coset& a, const Coset& b);
  friend bool operator<(const Coset& a, const Coset& b) { return a.rep_ < b.rep_; }

 private:
  SubgroupPtr subgroup_;
  RingElement rep_;
};

/// Partition of R^x into cosets of G, sorted by canonical representative.
std::vector<Coset> quotient_cosets(const SubgroupPtr& subgroup);

}  // namespace bracketlab
