#include "bracketlab/cocycle.hpp"

#include <algorithm>
#include <cctype>

#include "bracketlab/errors.hpp"

namespace bracketlab {

CocycleTarget CocycleTarget::free_abelian(std::vector<std::string> symbols) {
  for (const auto& s : symbols) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) {
      throw InputError("cocycle symbol '" + s + "' must start with a letter");
    }
    for (char ch : s) {
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') {
        throw InputError("cocycle symbol '" + s + "' has an invalid character");
      }
    }
  }
  auto sorted = symbols;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("duplicate cocycle symbol");
  CocycleTarget t;
  t.kind_ = Kind::free_abelian;
  t.symbols_ = std::move(symbols);
  return t;
}

CocycleTarget CocycleTarget::unit_quotient(SubgroupPtr subgroup) {
  CocycleTarget t;
  t.kind_ = Kind::unit_quotient;
  t.subgroup_ = std::move(subgroup);
  return t;
}

CocycleValue CocycleTarget::identity() const {
  if (kind_ == Kind::free_abelian) return FreeWord{std::vector<std::int64_t>(symbols_.size(), 0)};
  return Coset(subgroup_, subgroup_->ring().one());
}

CocycleValue CocycleTarget::multiply(const CocycleValue& a, const CocycleValue& b) const {
  if (kind_ == Kind::free_abelian) {
    auto out = std::get<FreeWord>(a);
    const auto& other = std::get<FreeWord>(b).exponents;
    for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] += other[i];
    return out;
  }
  return std::get<Coset>(a) * std::get<Coset>(b);
}

CocycleValue CocycleTarget::inverse(const CocycleValue& a) const {
  if (kind_ == Kind::free_abelian) {
    auto out = std::get<FreeWord>(a);
    for (auto& e : out.exponents) e = -e;
    return out;
  }
  return std::get<Coset>(a).inverse();
}

bool CocycleTarget::is_identity(const CocycleValue& a) const { return a == identity(); }

std::string CocycleTarget::to_string(const CocycleValue& a) const {
  if (kind_ == Kind::unit_quotient) {
    const auto& c = std::get<Coset>(a);
    return c.subgroup()->ring().to_string(c.representative());
  }
  const auto& e = std::get<FreeWord>(a).exponents;
  const bool joined = std::any_of(symbols_.begin(), symbols_.end(), [](const auto& s) { return s.size() > 1; });
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (joined && !out.empty()) out += '*';
    out += symbols_[i];
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

CocycleValue CocycleTarget::parse_word(const std::string& text) const {
  if (kind_ != Kind::free_abelian) throw InputError("words can only be parsed for free abelian targets");
  FreeWord w{std::vector<std::int64_t>(symbols_.size(), 0)};
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == '*' || std::isspace(static_cast<unsigned char>(text[pos])))) ++pos;
  };
  skip();
  if (text.substr(pos) == "1") return w;
  while (skip(), pos < text.size()) {
    std::size_t best = symbols_.size(), best_len = 0;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      const auto& s = symbols_[i];
      if (s.size() > best_len && text.compare(pos, s.size(), s) == 0) {
        best = i;
        best_len = s.size();
      }
    }
    if (best == symbols_.size()) throw InputError("cannot parse cocycle word '" + text + "'");
    pos += best_len;
    std::int64_t exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      try {
        exponent = std::stoll(text.substr(start, pos - start));
      } catch (const std::exception&) {
        throw InputError("bad exponent in cocycle word '" + text + "'");
      }
    }
    w.exponents[best] += exponent;
  }
  return w;
}

VerificationReport verify_cocycle(const Cocycle& c) {
  const int n = c.biquandle.size();
  if (c.phi.size() != static_cast<std::size_t>(n)) throw InputError("cocycle matrix has the wrong number of rows");
  for (const auto& row : c.phi) {
    if (row.size() != static_cast<std::size_t>(n)) throw InputError("cocycle matrix is not n x n");
    for (const auto& v : row) {
      const bool free = std::holds_alternative<FreeWord>(v);
      if (free != (c.target.kind() == CocycleTarget::Kind::free_abelian)) {
        throw InputError("cocycle entry does not belong to the target group");
      }
      if (free && std::get<FreeWord>(v).exponents.size() != c.target.symbols().size()) {
        throw InputError("cocycle word has the wrong number of exponents");
      }
    }
  }
  const auto& X = c.biquandle;
  const auto& T = c.target;
  VerificationReport report;
  for (int x = 1; x <= n; ++x) {
    if (!T.is_identity(c(x, x))) report.add("i", {x}, "phi(x,x) = " + T.to_string(c(x, x)));
  }
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      for (int z = 1; z <= n; ++z) {
        const auto lhs = T.multiply(T.multiply(c(x, y), c(y, z)), c(X.under(x, y), X.over(z, y)));
        const auto rhs = T.multiply(T.multiply(c(x, z), c(X.over(y, x), X.over(z, x))), c(X.under(x, z), X.under(y, z)));
        if (!(lhs == rhs)) report.add("ii", {x, y, z}, T.to_string(lhs) + " != " + T.to_string(rhs));
      }
    }
  }
  return report;
}

CocycleValue cocycle_value(const Cocycle& c, const OrientedDiagram& d, const Coloring& f) {
  auto value = c.target.identity();
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const auto [x, y] = crossing_colors(d, f, i);
    const auto& p = c(x, y);
    value = c.target.multiply(value, d.crossings()[i].sign > 0 ? p : c.target.inverse(p));
  }
  return value;
}

Multiset<CocycleValue> cocycle_invariant(const Cocycle& c, const OrientedDiagram& d) {
  std::vector<CocycleValue> values;
  for (const auto& f : enumerate_colorings(c.biquandle, d)) values.push_back(cocycle_value(c, d, f));
  return make_multiset(std::move(values));
}

Cocycle push_forward(const Cocycle& c, const std::map<std::string, RingElement>& images, SubgroupPtr subgroup) {
  if (c.target.kind() != CocycleTarget::Kind::free_abelian) throw InputError("push_forward needs a free abelian cocycle");
  const Ring& R = subgroup->ring();
  std::vector<RingElement> units;
  for (const auto& s : c.target.symbols()) {
    const auto it = images.find(s);
    if (it == images.end()) throw InputError("no image given for symbol " + s);
    if (!R.is_unit(it->second)) throw InputError("image of " + s + " is not a unit");
    units.push_back(it->second);
  }
  Cocycle out{c.biquandle, CocycleTarget::unit_quotient(subgroup), {}};
  for (const auto& row : c.phi) {
    auto& out_row = out.phi.emplace_back();
    for (const auto& v : row) {
      RingElement u = R.one();
      const auto& e = std::get<FreeWord>(v).exponents;
      for (std::size_t i = 0; i < e.size(); ++i) u = R.mul(u, R.pow(units[i], e[i]));
      out_row.emplace_back(Coset(subgroup, u));
    }
  }
  return out;
}

namespace {

void check_x0(const Bracket& beta, int x0) {
  if (x0 < 1 || x0 > beta.biquandle().size()) throw InputError("x0 = " + std::to_string(x0) + " is not an element");
}

}  // namespace

SubgroupPtr grading_subgroup(const Bracket& beta, int x0) {
  check_x0(beta, x0);
  const Ring& R = beta.ring();
  const RingElement q = beta.q(x0, x0);
  std::vector<RingElement> gens;
  const int n = beta.biquandle().size();
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) gens.push_back(R.mul(R.invert(beta.q(x, y)), q));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return std::make_shared<const UnitSubgroup>(UnitSubgroup::generate(beta.ring_ptr(), std::move(gens)));
}

CanonicalCocycle canonical_cocycle(const Bracket& beta, int x0) {
  CanonicalCocycle out;
  out.x0 = x0;
  out.G = grading_subgroup(beta, x0);
  out.q = beta.q(x0, x0);
  const Ring& R = beta.ring();
  const RingElement a0_inv = R.invert(beta.A(x0, x0));
  out.phi = Cocycle{beta.biquandle(), CocycleTarget::unit_quotient(out.G), {}};
  const int n = beta.biquandle().size();
  for (int x = 1; x <= n; ++x) {
    auto& row = out.phi.phi.emplace_back();
    for (int y = 1; y <= n; ++y) row.emplace_back(Coset(out.G, R.mul(beta.A(x, y), a0_inv)));
  }
  const auto report = verify_cocycle(out.phi);
  if (!report.ok()) {
    throw InternalError("canonical cocycle fails axiom " + report.failures.front().axiom);
  }
  return out;
}

RingElement z_shift(const Bracket& beta, const OrientedDiagram& d, const Coloring& f, int x0) {
  check_x0(beta, x0);
  const Ring& R = beta.ring();
  const RingElement a0_inv = R.invert(beta.A(x0, x0));
  const RingElement& b0 = beta.B(x0, x0);
  RingElement z = R.one();
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const auto [x, y] = crossing_colors(d, f, i);
    if (d.crossings()[i].sign > 0) {
      z = R.mul(z, R.mul(beta.A(x, y), a0_inv));
    } else {
      z = R.mul(z, R.mul(R.invert(beta.B(x, y)), b0));
    }
  }
  return z;
}

Coset z_invariant(const Bracket& beta, const OrientedDiagram& d, const Coloring& f, int x0) {
  return Coset(grading_subgroup(beta, x0), z_shift(beta, d, f, x0));
}

Multiset<Coset> z_invariant_multiset(const Bracket& beta, const OrientedDiagram& d, int x0) {
  const auto G = grading_subgroup(beta, x0);
  std::vector<Coset> values;
  for (const auto& f : enumerate_colorings(beta.biquandle(), d)) values.emplace_back(G, z_shift(beta, d, f, x0));
  return make_multiset(std::move(values));
}

}  // namespace bracketlab
