#include "bracketlab/finite_ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "bracketlab/errors.hpp"

namespace bracketlab {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t n) {
  std::int64_t r0 = n, r1 = mod(a, n);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t quot = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - quot * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - quot * s1);
  }
  if (r0 != 1) return std::nullopt;
  return mod(s0, n);
}

}  // namespace

RingDescriptor RingDescriptor::zmod(std::int64_t n) {
  RingDescriptor d;
  d.kind = Kind::zmod;
  d.modulus_n = n;
  return d;
}

RingDescriptor RingDescriptor::poly_quotient(std::int64_t base_n, std::vector<std::int64_t> modulus) {
  RingDescriptor d;
  d.kind = Kind::poly_quotient;
  d.modulus_n = base_n;
  d.modulus_poly = std::move(modulus);
  return d;
}

Ring::Ring(RingDescriptor descriptor) : desc_(std::move(descriptor)) {
  const std::int64_t n = desc_.modulus_n;
  if (n < 2) throw InputError("ring modulus must be at least 2, got " + std::to_string(n));
  if (desc_.kind == RingDescriptor::Kind::poly_quotient) {
    auto& f = desc_.modulus_poly;
    for (auto& c : f) c = mod(c, n);
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.size() < 2) throw InputError("polynomial modulus must have degree at least 1");
    auto lead = mod_inverse(f.back(), n);
    if (!lead) throw InputError("leading coefficient of the polynomial modulus is not a unit");
    lead_inverse_ = *lead;
    width_ = f.size() - 1;
  } else {
    desc_.modulus_poly.clear();
    width_ = 1;
  }

  std::size_t total = 1;
  for (std::size_t i = 0; i < width_; ++i) {
    total *= static_cast<std::size_t>(n);
    if (total > max_size) {
      throw InputError("ring has more than " + std::to_string(max_size) + " elements");
    }
  }

  elements_.reserve(total);
  std::vector<std::int64_t> digits(width_, 0);
  for (std::size_t k = 0; k < total; ++k) {
    elements_.emplace_back(digits);
    for (std::size_t pos = width_; pos-- > 0;) {
      if (++digits[pos] < n) break;
      digits[pos] = 0;
    }
  }

  inverse_.assign(total, -1);
  if (desc_.kind == RingDescriptor::Kind::zmod) {
    for (std::size_t k = 0; k < total; ++k) {
      if (auto inv = mod_inverse(static_cast<std::int64_t>(k), n)) {
        inverse_[k] = static_cast<std::ptrdiff_t>(*inv);
      }
    }
  } else {
    const RingElement unity = one();
    for (std::size_t a = 0; a < total; ++a) {
      if (inverse_[a] >= 0) continue;
      for (std::size_t b = a; b < total; ++b) {
        if (mul(elements_[a], elements_[b]) == unity) {
          inverse_[a] = static_cast<std::ptrdiff_t>(b);
          inverse_[b] = static_cast<std::ptrdiff_t>(a);
          break;
        }
      }
    }
  }
  for (std::size_t k = 0; k < total; ++k) {
    if (inverse_[k] >= 0) units_.push_back(elements_[k]);
  }
}

RingElement Ring::zero() const { return RingElement(std::vector<std::int64_t>(width_, 0)); }

RingElement Ring::one() const { return from_integer(1); }

RingElement Ring::from_integer(std::int64_t k) const {
  std::vector<std::int64_t> c(width_, 0);
  c[0] = mod(k, desc_.modulus_n);
  return RingElement(std::move(c));
}

std::vector<std::int64_t> Ring::poly_mul_reduce(const std::vector<std::int64_t>& a,
                                                const std::vector<std::int64_t>& b) const {
  const std::int64_t n = desc_.modulus_n;
  std::vector<std::int64_t> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = mod(prod[i + j] + a[i] * b[j], n);
    }
  }
  return prod;
}

RingElement Ring::reduce(std::vector<std::int64_t> c) const {
  const std::int64_t n = desc_.modulus_n;
  for (auto& v : c) v = mod(v, n);
  if (desc_.kind == RingDescriptor::Kind::poly_quotient) {
    const auto& f = desc_.modulus_poly;
    const std::size_t d = width_;
    for (std::size_t k = c.size(); k-- > d;) {
      if (c[k] == 0) continue;
      const std::int64_t factor = mod(c[k] * lead_inverse_, n);
      for (std::size_t i = 0; i <= d; ++i) {
        c[k - d + i] = mod(c[k - d + i] - factor * f[i], n);
      }
    }
  }
  c.resize(width_, 0);
  return RingElement(std::move(c));
}

RingElement Ring::add(const RingElement& a, const RingElement& b) const {
  std::vector<std::int64_t> c(width_);
  for (std::size_t i = 0; i < width_; ++i) {
    c[i] = mod(a.coefficients()[i] + b.coefficients()[i], desc_.modulus_n);
  }
  return RingElement(std::move(c));
}

RingElement Ring::neg(const RingElement& a) const {
  std::vector<std::int64_t> c(width_);
  for (std::size_t i = 0; i < width_; ++i) c[i] = mod(-a.coefficients()[i], desc_.modulus_n);
  return RingElement(std::move(c));
}

RingElement Ring::sub(const RingElement& a, const RingElement& b) const { return add(a, neg(b)); }

RingElement Ring::mul(const RingElement& a, const RingElement& b) const {
  return reduce(poly_mul_reduce(a.coefficients(), b.coefficients()));
}

RingElement Ring::scale(std::int64_t k, const RingElement& a) const {
  std::vector<std::int64_t> c(width_);
  const std::int64_t km = mod(k, desc_.modulus_n);
  for (std::size_t i = 0; i < width_; ++i) c[i] = mod(km * a.coefficients()[i], desc_.modulus_n);
  return RingElement(std::move(c));
}

RingElement Ring::pow(const RingElement& a, std::int64_t e) const {
  RingElement base = e < 0 ? invert(a) : a;
  std::uint64_t exp = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  RingElement result = one();
  while (exp > 0) {
    if (exp & 1U) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1U;
  }
  return result;
}

std::optional<RingElement> Ring::try_invert(const RingElement& a) const {
  const auto inv = inverse_[index_of(a)];
  if (inv < 0) return std::nullopt;
  return elements_[static_cast<std::size_t>(inv)];
}

RingElement Ring::invert(const RingElement& a) const {
  auto inv = try_invert(a);
  if (!inv) throw InputError("element " + to_string(a) + " is not a unit");
  return *inv;
}

std::size_t Ring::index_of(const RingElement& a) const {
  if (!contains(a)) throw InputError("element is not in canonical form for this ring");
  std::size_t idx = 0;
  for (auto c : a.coefficients()) {
    idx = idx * static_cast<std::size_t>(desc_.modulus_n) + static_cast<std::size_t>(c);
  }
  return idx;
}

bool Ring::contains(const RingElement& a) const {
  const auto& c = a.coefficients();
  return c.size() == width_ &&
         std::all_of(c.begin(), c.end(), [&](std::int64_t v) { return v >= 0 && v < desc_.modulus_n; });
}

std::string Ring::to_string(const RingElement& a) const {
  if (desc_.kind == RingDescriptor::Kind::zmod) return std::to_string(a.coefficients()[0]);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    const auto c = a.coefficients()[i];
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << '*';
    out << 't';
    if (i > 1) out << '^' << i;
  }
  if (first) out << '0';
  return out.str();
}

RingPtr make_ring(const RingDescriptor& descriptor) { return std::make_shared<const Ring>(descriptor); }

UnitSubgroup UnitSubgroup::generate(RingPtr ring, std::vector<RingElement> generators) {
  UnitSubgroup g;
  g.ring_ = std::move(ring);
  for (const auto& x : generators) {
    if (!g.ring_->contains(x) || !g.ring_->is_unit(x)) {
      throw InputError("subgroup generator " + (g.ring_->contains(x) ? g.ring_->to_string(x) : "?") +
                       " is not a unit");
    }
  }
  std::set<RingElement> closed{g.ring_->one()};
  std::vector<RingElement> frontier{g.ring_->one()};
  while (!frontier.empty()) {
    std::vector<RingElement> next;
    for (const auto& a : frontier) {
      for (const auto& s : generators) {
        auto p = g.ring_->mul(a, s);
        if (closed.insert(p).second) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  g.generators_ = std::move(generators);
  g.elements_.assign(closed.begin(), closed.end());
  return g;
}

bool UnitSubgroup::contains(const RingElement& a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

RingElement UnitSubgroup::canonical_representative(const RingElement& unit) const {
  RingElement best = ring_->mul(unit, elements_.front());
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    auto candidate = ring_->mul(unit, elements_[i]);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

Coset::Coset(SubgroupPtr subgroup, const RingElement& unit) : subgroup_(std::move(subgroup)) {
  if (!subgroup_->ring().is_unit(unit)) {
    throw InputError("coset representative " + subgroup_->ring().to_string(unit) + " is not a unit");
  }
  rep_ = subgroup_->canonical_representative(unit);
}

Coset Coset::operator*(const Coset& other) const {
  return Coset(subgroup_, subgroup_->ring().mul(rep_, other.rep_));
}

Coset Coset::inverse() const { return Coset(subgroup_, subgroup_->ring().invert(rep_)); }

bool Coset::is_identity() const { return subgroup_->contains(rep_); }

bool operator==(const Coset& a, const Coset& b) {
  const Ring& r = a.subgroup_->ring();
  return a.subgroup_->contains(r.mul(a.rep_, r.invert(b.rep_)));
}

std::vector<Coset> quotient_cosets(const SubgroupPtr& subgroup) {
  std::vector<Coset> result;
  std::set<RingElement> seen;
  for (const auto& u : subgroup->ring().units()) {
    if (seen.count(u)) continue;
    for (const auto& g : subgroup->elements()) seen.insert(subgroup->ring().mul(u, g));
    result.emplace_back(subgroup, u);
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace bracketlab
