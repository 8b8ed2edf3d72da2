#include "bracketlab/homology.hpp"

#include <algorithm>
#include <bit>

#include "bracketlab/cocycle.hpp"
#include "bracketlab/errors.hpp"

namespace bracketlab {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::size_t scalar_index(const std::vector<Degree>& scalars, const Degree& d) {
  const auto it = std::find(scalars.begin(), scalars.end(), d);
  if (it == scalars.end()) throw InternalError("edge coefficient is not in the scalar group");
  return static_cast<std::size_t>(it - scalars.begin());
}

// Images of a basis mask under m or Delta, as target masks with coefficient 1.
std::vector<std::uint64_t> frobenius_images(const CubeEdge& e, std::uint64_t mask) {
  std::uint64_t rest = 0;
  for (std::size_t c = 0; c < e.circle_map.size(); ++c) {
    if (e.circle_map[c] >= 0 && ((mask >> c) & 1U)) rest |= std::uint64_t{1} << e.circle_map[c];
  }
  if (e.kind == CubeEdge::Kind::merge) {
    const bool t1 = (mask >> e.from_circles[0]) & 1U;
    const bool t2 = (mask >> e.from_circles[1]) & 1U;
    if (t1 && t2) return {};
    const std::uint64_t bit = std::uint64_t{t1 || t2} << e.to_circles[0];
    return {rest | bit};
  }
  const std::uint64_t b1 = std::uint64_t{1} << e.to_circles[0];
  const std::uint64_t b2 = std::uint64_t{1} << e.to_circles[1];
  if ((mask >> e.from_circles[0]) & 1U) return {rest | b1 | b2};
  return {rest | b2, rest | b1};
}

}  // namespace

const CubeMap& ColoredCube::map_at(std::uint64_t from, std::size_t crossing) const {
  const auto k = map_index.at(static_cast<std::size_t>(from) * crossings + crossing);
  if (k == npos) throw InternalError("no cube edge at that position");
  return maps[k];
}

Degree ColoredCube::basis_degree(const CubeVertex& v, std::size_t g, std::uint64_t mask) const {
  const auto circles = static_cast<std::int64_t>(v.state.circle_count());
  const auto ts = static_cast<std::int64_t>(std::popcount(mask));
  return group.multiply(scalars[g], group.multiply(v.shift, group.power(q, circles - 2 * ts)));
}

ColoredCube build_cube(const CubeRecipe& recipe, const OrientedDiagram& d) {
  const std::size_t n = d.crossing_count();
  if (n > max_cube_crossings) throw InputError("too many crossings for the cube construction");
  if (recipe.crossing_shift.size() != n || recipe.edge_scalar.size() != n) {
    throw InternalError("cube recipe does not match the diagram");
  }
  ColoredCube cube;
  cube.group = recipe.group;
  cube.scalars = recipe.scalars;
  cube.q = recipe.q;
  cube.crossings = n;
  cube.index_offset = recipe.index_offset;
  cube.global_shift = recipe.global_shift;

  const std::uint64_t states = std::uint64_t{1} << n;
  std::vector<std::size_t> column_size(n + 1, 0);
  cube.vertices.resize(states);
  for (std::uint64_t r = 0; r < states; ++r) {
    auto& v = cube.vertices[r];
    v.state = resolve_state(d, r);
    if (v.state.circle_count() >= 63) throw InputError("too many circles in a smoothing");
    v.shift = recipe.group.identity();
    for (std::size_t i = 0; i < n; ++i) v.shift = recipe.group.multiply(v.shift, recipe.crossing_shift[i][(r >> i) & 1U]);
    v.column = static_cast<std::size_t>(v.state.weight);
    v.dimension = recipe.scalars.size() << v.state.circle_count();
    v.offset = column_size[v.column];
    column_size[v.column] += v.dimension;
  }

  cube.map_index.assign(static_cast<std::size_t>(states) * n, npos);
  const std::size_t G = recipe.scalars.size();
  for (std::uint64_t r = 0; r < states; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((r >> i) & 1U) continue;
      const auto& from = cube.vertices[r];
      const auto& to = cube.vertices[r | (std::uint64_t{1} << i)];
      CubeMap m;
      m.edge = make_cube_edge(d, from.state, to.state, i);
      m.scalar = recipe.edge_scalar[i];
      m.matrix = SparseMatrix(to.dimension, from.dimension);
      const std::size_t from_block = std::size_t{1} << from.state.circle_count();
      const std::size_t to_block = std::size_t{1} << to.state.circle_count();
      for (std::size_t g = 0; g < G; ++g) {
        const std::size_t tg = scalar_index(recipe.scalars, recipe.group.multiply(recipe.scalars[m.scalar], recipe.scalars[g]));
        for (std::uint64_t mask = 0; mask < from_block; ++mask) {
          for (auto image : frobenius_images(m.edge, mask)) {
            m.matrix.add(tg * to_block + image, g * from_block + mask, 1);
          }
        }
      }
      cube.map_index[static_cast<std::size_t>(r) * n + i] = cube.maps.size();
      cube.maps.push_back(std::move(m));
    }
  }
  return cube;
}

namespace {

std::vector<Degree> subgroup_degrees(const UnitSubgroup& G) {
  std::vector<Degree> out;
  for (const auto& g : G.elements()) out.emplace_back(g);
  return out;
}

}  // namespace

ColoredCube bracket_cube(const Bracket& beta, const OrientedDiagram& d, const Coloring& f, int x0) {
  if (!is_valid_coloring(beta.biquandle(), d, f)) throw InputError("coloring is not valid for this diagram");
  const Ring& R = beta.ring();
  const auto G = grading_subgroup(beta, x0);
  const RingElement q = beta.q(x0, x0);

  CubeRecipe recipe;
  recipe.group = GradingGroup::finite_units(beta.ring_ptr());
  recipe.scalars = subgroup_degrees(*G);
  recipe.q = q;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const auto [x, y] = crossing_colors(d, f, i);
    const int sign = d.crossings()[i].sign;
    // bit 1 always carries the sign of the step q_{x,y}
    recipe.crossing_shift.push_back(
        {beta.smoothing_coefficient(sign, 0, x, y), R.neg(beta.smoothing_coefficient(sign, 1, x, y))});
    const RingElement g = R.mul(q, R.invert(beta.q(x, y)));
    recipe.edge_scalar.push_back(scalar_index(recipe.scalars, g));
  }
  const int n_minus = d.negative_crossings(), n_plus = d.positive_crossings();
  recipe.index_offset = -n_minus;
  RingElement shift = R.pow(beta.w(), n_minus - n_plus);
  if (n_minus % 2 != 0) shift = R.neg(shift);
  recipe.global_shift = shift;
  return build_cube(recipe, d);
}

ColoredCube classical_cube(const OrientedDiagram& d) {
  CubeRecipe recipe;
  recipe.group = GradingGroup::infinite_cyclic();
  recipe.scalars = {std::int64_t{0}};
  recipe.q = std::int64_t{1};
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    recipe.crossing_shift.push_back({std::int64_t{0}, std::int64_t{1}});
    recipe.edge_scalar.push_back(0);
  }
  recipe.index_offset = -d.negative_crossings();
  recipe.global_shift = std::int64_t{d.positive_crossings() - 2 * d.negative_crossings()};
  return build_cube(recipe, d);
}

GradedComplex assemble(const ColoredCube& cube) {
  GradedComplex c;
  c.group = cube.group;
  c.index_offset = cube.index_offset;
  c.global_shift = cube.global_shift;
  const std::size_t columns = cube.crossings + 1;
  c.basis_degrees.resize(columns);
  for (const auto& v : cube.vertices) {
    auto& col = c.basis_degrees[v.column];
    if (col.size() < v.offset + v.dimension) col.resize(v.offset + v.dimension);
    const std::size_t block = std::size_t{1} << v.state.circle_count();
    for (std::size_t g = 0; g < cube.scalars.size(); ++g) {
      for (std::uint64_t mask = 0; mask < block; ++mask) col[v.offset + g * block + mask] = cube.basis_degree(v, g, mask);
    }
  }
  for (std::size_t k = 0; k + 1 < columns; ++k) {
    c.differentials.emplace_back(c.basis_degrees[k + 1].size(), c.basis_degrees[k].size());
  }
  for (const auto& m : cube.maps) {
    const auto& from = cube.vertices[m.edge.from];
    const auto& to = cube.vertices[m.edge.to];
    auto& d = c.differentials[from.column];
    for (std::size_t j = 0; j < m.matrix.cols; ++j) {
      for (const auto& [i, v] : m.matrix.columns[j]) d.add(to.offset + i, from.offset + j, m.edge.sign * v);
    }
  }
  return c;
}

GradedComplex build_complex(const Bracket& beta, const OrientedDiagram& d, const Coloring& f, int x0) {
  return assemble(bracket_cube(beta, d, f, x0));
}

VerificationReport check_anticommuting_faces(const ColoredCube& cube) {
  VerificationReport report;
  const std::size_t n = cube.crossings;
  const std::uint64_t states = std::uint64_t{1} << n;
  auto signed_map = [&](std::uint64_t from, std::size_t i) {
    const auto& m = cube.map_at(from, i);
    SparseMatrix s = m.matrix;
    if (m.edge.sign < 0) {
      for (auto& col : s.columns) {
        for (auto& [row, v] : col) v = -v;
      }
    }
    return s;
  };
  for (std::uint64_t r = 0; r < states; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((r >> i) & 1U) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if ((r >> j) & 1U) continue;
        const std::uint64_t ri = r | (std::uint64_t{1} << i), rj = r | (std::uint64_t{1} << j);
        const auto path1 = signed_map(ri, j) * signed_map(r, i);
        const auto path2 = signed_map(rj, i) * signed_map(r, j);
        if (!(path1 + path2).is_zero()) {
          report.add("face", {static_cast<int>(r), static_cast<int>(i), static_cast<int>(j)}, "square commutes");
        }
      }
    }
  }
  return report;
}

SubgroupPtr degree_subgroup(const Bracket& beta) {
  const Ring& R = beta.ring();
  std::vector<RingElement> gens;
  const int n = beta.biquandle().size();
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      gens.push_back(beta.A(x, y));
      gens.push_back(R.neg(beta.B(x, y)));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return std::make_shared<const UnitSubgroup>(UnitSubgroup::generate(beta.ring_ptr(), std::move(gens)));
}

VerificationReport check_h_membership(const Bracket& beta, const GradedComplex& c) {
  const auto H = degree_subgroup(beta);
  VerificationReport report;
  for (std::size_t k = 0; k < c.length(); ++k) {
    for (std::size_t b = 0; b < c.basis_degrees[k].size(); ++b) {
      const auto deg = std::get<RingElement>(c.degree(k, b));
      if (!H->contains(deg)) {
        report.add("H", {static_cast<int>(k) + c.index_offset, static_cast<int>(b)},
                   "degree " + beta.ring().to_string(deg) + " is outside H");
      }
    }
  }
  return report;
}

VerificationReport check_euler_of_complex(const GradedComplex& c, const HomologyTable& h) {
  VerificationReport report;
  if (graded_euler_characteristic(c) != graded_euler_characteristic(h)) {
    report.add("euler", {}, "chi(C) differs from chi(H(C))");
  }
  return report;
}

HomologyTable bh_invariant(const Bracket& beta, const OrientedDiagram& d, const Coloring& f, int x0) {
  return cohomology(build_complex(beta, d, f, x0));
}

Multiset<HomologyTable> bh_multiset(const Bracket& beta, const OrientedDiagram& d, int x0) {
  std::vector<HomologyTable> tables;
  for (const auto& f : enumerate_colorings(beta.biquandle(), d)) tables.push_back(bh_invariant(beta, d, f, x0));
  return make_multiset(std::move(tables));
}

HomologyTable khovanov_classical(const OrientedDiagram& d) { return cohomology(assemble(classical_cube(d))); }

HomologyTable predicted_bh(const Bracket& beta, const HomologyTable& khovanov, const RingElement& z, int x0) {
  const Ring& R = beta.ring();
  const auto G = grading_subgroup(beta, x0);
  const RingElement q = beta.q(x0, x0);
  HomologyTable out{GradingGroup::finite_units(beta.ring_ptr()), {}};
  for (const auto& [key, e] : khovanov.entries) {
    const RingElement base = R.mul(z, R.pow(q, std::get<std::int64_t>(key.second)));
    for (const auto& g : G->elements()) add_entry(out, key.first, R.mul(g, base), e);
  }
  return out;
}

TheoremCheck check_theorem(const Bracket& beta, const OrientedDiagram& d, const Coloring& f, int x0) {
  return check_theorem(beta, d, f, khovanov_classical(d), x0);
}

TheoremCheck check_theorem(const Bracket& beta, const OrientedDiagram& d, const Coloring& f,
                           const HomologyTable& khovanov, int x0) {
  TheoremCheck out;
  out.z = z_shift(beta, d, f, x0);
  out.direct = bh_invariant(beta, d, f, x0);
  out.predicted = predicted_bh(beta, khovanov, out.z, x0);
  out.equal = out.direct == out.predicted;
  return out;
}

EulerCheck check_euler_identity(const Bracket& beta, const OrientedDiagram& d, const Coloring& f, int x0) {
  const Ring& R = beta.ring();
  EulerCheck out;
  const auto table = bh_invariant(beta, d, f, x0);
  out.chi = evaluate_formal_sum(table.group, graded_euler_characteristic(table));
  out.g_sum = R.zero();
  const auto G = grading_subgroup(beta, x0);
  for (const auto& g : G->elements()) out.g_sum = R.add(out.g_sum, g);
  out.bracket_value = bracket_value(beta, d, f);
  out.expected = R.mul(out.g_sum, out.bracket_value);
  out.equal = out.chi == out.expected;
  return out;
}

}  // namespace bracketlab
