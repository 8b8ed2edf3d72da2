#include "bracketlab/biquandle.hpp"

#include <algorithm>
#include <string>

#include "bracketlab/errors.hpp"

namespace bracketlab {

namespace {

void check_shape(const OperationTable& t, std::size_t n, const char* name) {
  if (t.size() != n) throw InputError(std::string(name) + " table has the wrong number of rows");
  for (const auto& row : t) {
    if (row.size() != n) throw InputError(std::string(name) + " table is not square");
    for (int v : row) {
      if (v < 1 || v > static_cast<int>(n)) {
        throw InputError(std::string(name) + " table entry " + std::to_string(v) + " is out of range 1.." +
                         std::to_string(n));
      }
    }
  }
}

}  // namespace

VerificationReport verify_biquandle(const OperationTable& under, const OperationTable& over) {
  const std::size_t n = under.size();
  if (n == 0) throw InputError("biquandle must have at least one element");
  check_shape(under, n, "under");
  check_shape(over, n, "over");

  auto U = [&](int x, int y) { return under[x - 1][y - 1]; };
  auto O = [&](int x, int y) { return over[x - 1][y - 1]; };
  const int m = static_cast<int>(n);

  VerificationReport report;
  for (int x = 1; x <= m; ++x) {
    if (U(x, x) != O(x, x)) {
      report.add("i", {x}, "x under x = " + std::to_string(U(x, x)) + ", x over x = " + std::to_string(O(x, x)));
    }
  }
  for (int y = 1; y <= m; ++y) {
    std::vector<bool> seen_u(n + 1, false), seen_o(n + 1, false);
    bool perm_u = true, perm_o = true;
    for (int x = 1; x <= m; ++x) {
      perm_u = perm_u && !seen_u[U(x, y)];
      perm_o = perm_o && !seen_o[O(x, y)];
      seen_u[U(x, y)] = seen_o[O(x, y)] = true;
    }
    if (!perm_u) report.add("ii-under", {y}, "x -> x under y is not a permutation");
    if (!perm_o) report.add("ii-over", {y}, "x -> x over y is not a permutation");
  }
  std::vector<int> preimage(n * n, 0);
  bool s_reported = false;
  for (int x = 1; x <= m && !s_reported; ++x) {
    for (int y = 1; y <= m; ++y) {
      auto& slot = preimage[static_cast<std::size_t>((O(y, x) - 1) * m + (U(x, y) - 1))];
      if (slot != 0) {
        const int px = (slot - 1) / m + 1, py = (slot - 1) % m + 1;
        report.add("ii-S", {px, py, x, y}, "S(x,y) = (y over x, x under y) is not injective");
        s_reported = true;
        break;
      }
      slot = (x - 1) * m + y;
    }
  }
  for (int x = 1; x <= m; ++x) {
    for (int y = 1; y <= m; ++y) {
      for (int z = 1; z <= m; ++z) {
        int l = U(U(x, y), U(z, y)), r = U(U(x, z), O(y, z));
        if (l != r) report.add("iii-1", {x, y, z}, std::to_string(l) + " != " + std::to_string(r));
        l = O(U(x, y), U(z, y));
        r = U(O(x, z), O(y, z));
        if (l != r) report.add("iii-2", {x, y, z}, std::to_string(l) + " != " + std::to_string(r));
        l = O(O(x, y), O(z, y));
        r = O(O(x, z), U(y, z));
        if (l != r) report.add("iii-3", {x, y, z}, std::to_string(l) + " != " + std::to_string(r));
      }
    }
  }
  return report;
}

Biquandle::Biquandle(OperationTable under, OperationTable over) : under_(std::move(under)), over_(std::move(over)) {
  auto report = verify_biquandle(under_, over_);
  if (!report.ok()) throw VerificationError("tables do not define a biquandle", std::move(report));
  const int n = size();
  s_inverse_.assign(static_cast<std::size_t>(n * n), 0);
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      s_inverse_[static_cast<std::size_t>((this->over(y, x) - 1) * n + (this->under(x, y) - 1))] =
          (x - 1) * n + (y - 1);
    }
  }
}

Biquandle Biquandle::trivial() { return Biquandle({{1}}, {{1}}); }

bool Biquandle::is_quandle() const {
  for (int x = 1; x <= size(); ++x) {
    for (int y = 1; y <= size(); ++y) {
      if (over(x, y) != x) return false;
    }
  }
  return true;
}

CrossingColors crossing_colors(const OrientedDiagram& d, const Coloring& f, std::size_t crossing) {
  const auto& c = d.crossings()[crossing];
  return {f.of_label(d, c.left_under()), f.of_label(d, c.left_over())};
}

bool is_valid_coloring(const Biquandle& X, const OrientedDiagram& d, const Coloring& f) {
  if (f.colors.size() != d.arc_count()) return false;
  for (int c : f.colors) {
    if (c < 1 || c > X.size()) return false;
  }
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const auto& c = d.crossings()[i];
    const auto [x, y] = crossing_colors(d, f, i);
    if (f.of_label(d, c.right_under()) != X.under(x, y)) return false;
    if (f.of_label(d, c.right_over()) != X.over(y, x)) return false;
  }
  return true;
}

namespace {

struct Slots {
  std::size_t lu, lo, ru, ro;
};

class ColoringSearch {
 public:
  ColoringSearch(const Biquandle& X, const OrientedDiagram& d) : X_(X), colors_(d.arc_count(), 0) {
    for (const auto& c : d.crossings()) {
      slots_.push_back({d.edge_index(c.left_under()), d.edge_index(c.left_over()), d.edge_index(c.right_under()),
                        d.edge_index(c.right_over())});
    }
  }

  std::vector<Coloring> run() {
    search();
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  bool assign(std::size_t arc, int color, std::vector<std::size_t>& trail) {
    if (colors_[arc] != 0) return colors_[arc] == color;
    colors_[arc] = color;
    trail.push_back(arc);
    return true;
  }

  // Fills in arcs forced by a crossing whose left pair or right pair is
  // known. Returns false on a contradiction.
  bool propagate(std::vector<std::size_t>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& s : slots_) {
        const std::size_t before = trail.size();
        const int x = colors_[s.lu], y = colors_[s.lo];
        if (x != 0 && y != 0) {
          if (!assign(s.ru, X_.under(x, y), trail) || !assign(s.ro, X_.over(y, x), trail)) return false;
        } else if (colors_[s.ru] != 0 && colors_[s.ro] != 0) {
          const auto [px, py] = X_.s_inverse(colors_[s.ro], colors_[s.ru]);
          if (!assign(s.lu, px, trail) || !assign(s.lo, py, trail)) return false;
        }
        changed = changed || trail.size() != before;
      }
    }
    return true;
  }

  void search() {
    const auto next = std::find(colors_.begin(), colors_.end(), 0);
    if (next == colors_.end()) {
      found_.push_back({colors_});
      return;
    }
    const auto arc = static_cast<std::size_t>(next - colors_.begin());
    for (int color = 1; color <= X_.size(); ++color) {
      std::vector<std::size_t> trail;
      colors_[arc] = color;
      trail.push_back(arc);
      if (propagate(trail)) search();
      for (auto a : trail) colors_[a] = 0;
    }
  }

  const Biquandle& X_;
  std::vector<Slots> slots_;
  std::vector<int> colors_;
  std::vector<Coloring> found_;
};

}  // namespace

std::vector<Coloring> enumerate_colorings(const Biquandle& X, const OrientedDiagram& d) {
  return ColoringSearch(X, d).run();
}

std::size_t counting_invariant(const Biquandle& X, const OrientedDiagram& d) {
  return enumerate_colorings(X, d).size();
}

}  // namespace bracketlab
