#include "embform/pwl2d.hpp"

#include <algorithm>
#include <set>

#include "embform/error.hpp"
#include "embform/verify.hpp"

namespace embform {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t log2_exact(std::size_t n) {
  std::size_t b = 0;
  while ((std::size_t{1} << b) < n) ++b;
  return b;
}

int even_corner(std::size_t u) { return static_cast<int>(u % 2 == 0 ? u : u + 1); }
int odd_corner(std::size_t u) { return static_cast<int>(u % 2 == 0 ? u + 1 : u); }

std::set<GridPoint> as_set(const Triangle& t) { return {t.begin(), t.end()}; }

bool same_triangles(const GridTriangulation& a, const GridTriangulation& b) {
  if (a.m != b.m || a.triangles.size() != b.triangles.size()) return false;
  for (std::size_t i = 0; i < a.triangles.size(); ++i)
    if (as_set(a.triangles[i]) != as_set(b.triangles[i])) return false;
  return true;
}

std::string point_name(const GridPoint& p) {
  return "lambda_" + std::to_string(p.first) + "_" + std::to_string(p.second);
}

void check_m(std::size_t m, std::size_t min, const char* who) {
  if (m < min) throw InvalidArgument(std::string(who) + ": m must be at least " + std::to_string(min));
}

}  // namespace

void GridTriangulation::validate() const {
  if (m == 0) throw InvalidArgument("triangulation: m must be positive");
  if (triangles.size() != 2 * m * m)
    throw InvalidArgument("triangulation: expected " + std::to_string(2 * m * m) + " triangles, got " +
                          std::to_string(triangles.size()));
  const int mi = static_cast<int>(m);
  for (int u = 1; u <= mi; ++u) {
    for (int v = 1; v <= mi; ++v) {
      const std::set<GridPoint> square{{u, v}, {u + 1, v}, {u, v + 1}, {u + 1, v + 1}};
      const auto a = as_set(at(u, v, 1));
      const auto b = as_set(at(u, v, 2));
      const std::string where = "square (" + std::to_string(u) + "," + std::to_string(v) + ")";
      if (a.size() != 3 || b.size() != 3) throw InvalidArgument("triangulation: degenerate triangle in " + where);
      std::set<GridPoint> both = a;
      both.insert(b.begin(), b.end());
      if (both != square) throw InvalidArgument("triangulation: triangles do not cover " + where);
      std::set<GridPoint> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(common, common.end()));
      const std::set<GridPoint> main{{u, v}, {u + 1, v + 1}};
      const std::set<GridPoint> anti{{u + 1, v}, {u, v + 1}};
      if (common != main && common != anti) throw InvalidArgument("triangulation: " + where + " not split along a diagonal");
    }
  }
}

GridTriangulation union_jack(std::size_t m) {
  check_m(m, 1, "union_jack");
  GridTriangulation t{m, std::vector<Triangle>(2 * m * m)};
  for (std::size_t u = 1; u <= m; ++u) {
    for (std::size_t v = 1; v <= m; ++v) {
      const GridPoint c{even_corner(u), even_corner(v)};
      const GridPoint o{odd_corner(u), odd_corner(v)};
      t.triangles[GridTriangulation::index(m, u, v, 1)] = {c, GridPoint{c.first, o.second}, o};
      t.triangles[GridTriangulation::index(m, u, v, 2)] = {c, GridPoint{o.first, c.second}, o};
    }
  }
  return t;
}

GridTriangulation modified_union_jack(std::size_t m) {
  check_m(m, 2, "modified_union_jack");
  if (m % 2 != 0) throw InvalidArgument("modified_union_jack: m must be even");
  GridTriangulation t = union_jack(m);
  for (std::size_t s : {std::size_t{1}, m}) {
    const int u = static_cast<int>(s);
    const int v = static_cast<int>(s);
    const Triangle bottom_left{GridPoint{u, v}, GridPoint{u + 1, v}, GridPoint{u, v + 1}};
    const Triangle top_right{GridPoint{u + 1, v}, GridPoint{u, v + 1}, GridPoint{u + 1, v + 1}};
    // The bottom-left triangle takes the slot of the old top-left one.
    const bool first_is_top_left = as_set(t.at(s, s, 1)).count({u, v + 1}) != 0;
    t.triangles[GridTriangulation::index(m, s, s, first_is_top_left ? 1 : 2)] = bottom_left;
    t.triangles[GridTriangulation::index(m, s, s, first_is_top_left ? 2 : 1)] = top_right;
  }
  return t;
}

GridTriangulation k1(std::size_t m) {
  check_m(m, 1, "k1");
  GridTriangulation t{m, std::vector<Triangle>(2 * m * m)};
  for (std::size_t u = 1; u <= m; ++u) {
    for (std::size_t v = 1; v <= m; ++v) {
      const int a = static_cast<int>(u), b = static_cast<int>(v);
      t.triangles[GridTriangulation::index(m, u, v, 1)] = {GridPoint{a, b}, GridPoint{a + 1, b}, GridPoint{a + 1, b + 1}};
      t.triangles[GridTriangulation::index(m, u, v, 2)] = {GridPoint{a, b}, GridPoint{a, b + 1}, GridPoint{a + 1, b + 1}};
    }
  }
  return t;
}

Encoding jack_encoding(const GridTriangulation& t) {
  t.validate();
  const std::size_t m = t.m;
  if (!is_power_of_two(m)) throw InvalidArgument("jack_encoding: m must be a power of two");
  const bool supported = same_triangles(t, union_jack(m)) || (m >= 2 && same_triangles(t, modified_union_jack(m)));
  if (!supported) throw InvalidArgument("jack_encoding: only union-jack and modified union-jack are supported");
  const std::size_t bits = log2_exact(m);
  const std::size_t k = 1 + 2 * bits;
  std::vector<Encoding::Code> codes(2 * m * m);
  for (std::size_t u = 1; u <= m; ++u) {
    for (std::size_t v = 1; v <= m; ++v) {
      const std::size_t gu = (u - 1) ^ ((u - 1) >> 1);
      const std::size_t gv = (v - 1) ^ ((v - 1) >> 1);
      for (std::size_t tt = 1; tt <= 2; ++tt) {
        Encoding::Code c(k);
        c[0] = static_cast<std::uint8_t>(tt - 1);
        for (std::size_t l = 0; l < bits; ++l) {
          c[1 + l] = static_cast<std::uint8_t>((gv >> l) & 1U);
          c[1 + bits + l] = static_cast<std::uint8_t>((gu >> l) & 1U);
        }
        codes[GridTriangulation::index(m, u, v, tt)] = std::move(c);
      }
    }
  }
  return Encoding(std::move(codes), k);
}

std::vector<std::string> pwl_variable_names(std::size_t m, std::size_t k) {
  std::vector<std::string> names;
  const int side = static_cast<int>(m + 1);
  for (int u = 1; u <= side; ++u)
    for (int v = 1; v <= side; ++v) names.push_back(point_name({u, v}));
  for (std::size_t l = 1; l <= k; ++l) names.push_back("y" + std::to_string(l));
  return names;
}

std::vector<HRep> pwl_family(const GridTriangulation& t) {
  std::vector<HRep> fam;
  for (const auto& tri : t.triangles) {
    std::vector<std::size_t> support;
    for (const auto& p : tri) support.push_back(t.point_index(p));
    fam.push_back(simplex_face(t.num_points(), support));
  }
  return fam;
}

VRep pwl_embedding(const GridTriangulation& t, const Encoding& h) {
  if (h.size() != t.triangles.size())
    throw InvalidEncoding("encoding has " + std::to_string(h.size()) + " codes for " +
                          std::to_string(t.triangles.size()) + " triangles");
  const std::size_t np = t.num_points();
  VRep v;
  for (std::size_t i = 0; i < t.triangles.size(); ++i) {
    for (const auto& p : t.triangles[i]) {
      RatVector x(np + h.bit_width());
      x[t.point_index(p)] = 1;
      for (std::size_t l = 0; l < h.bit_width(); ++l) x[np + l] = h.code(i)[l];
      v.vertices.push_back(std::move(x));
    }
  }
  return v;
}

Formulation embed_and_hull(const GridTriangulation& t, const Encoding& h, const HullOptions& options) {
  t.validate();
  if (t.m > 8)
    throw BudgetExceeded("embed_and_hull: m = " + std::to_string(t.m) + " exceeds the supported hull size (m <= 8)");
  const HRep hull = vrep_to_hrep(pwl_embedding(t, h), options);
  Formulation f;
  f.name = "pwl-embedding";
  f.system = to_system(hull, pwl_variable_names(t.m, h.bit_width()));
  for (std::size_t l = 1; l <= h.bit_width(); ++l) f.integer_vars.push_back("y" + std::to_string(l));
  return f;
}

Formulation graph_formulation(const PwlFunction& pwl, const Formulation& base) {
  const auto& t = pwl.triangulation;
  if (pwl.values.size() != t.num_points()) throw InvalidArgument("graph_formulation: wrong number of function values");
  LinearSystem s = base.system.with_appended_variables({"x1", "x2", "z"});
  const std::size_t nv = s.num_vars();
  RatVector r1(nv), r2(nv), r3(nv);
  const int side = static_cast<int>(t.m + 1);
  for (int u = 1; u <= side; ++u) {
    for (int v = 1; v <= side; ++v) {
      const auto j = s.var_index(point_name({u, v}));
      if (!j) throw InvalidArgument("graph_formulation: base formulation has no variable " + point_name({u, v}));
      r1[*j] = u;
      r2[*j] = v;
      r3[*j] = pwl.value(u, v);
    }
  }
  r1[nv - 3] = -1;
  r2[nv - 2] = -1;
  r3[nv - 1] = -1;
  s.add_equation(std::move(r1), 0);
  s.add_equation(std::move(r2), 0);
  s.add_equation(std::move(r3), 0);
  return Formulation{base.name + "+graph", std::move(s), base.integer_vars, base.ideal};
}

Formulation balas_formulation(const std::vector<HRep>& family) {
  if (family.empty()) throw InvalidArgument("balas_formulation: empty family");
  const std::size_t n = family.size();
  const std::size_t d = family.front().dim;
  for (const auto& p : family)
    if (p.dim != d) throw InvalidArgument("balas_formulation: polyhedra live in different dimensions");

  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= d; ++j) names.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
  for (std::size_t j = 1; j <= d; ++j) names.push_back("x" + std::to_string(j));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  LinearSystem s(std::move(names));
  const std::size_t nv = s.num_vars();
  const std::size_t x_at = n * d;
  const std::size_t y_at = n * d + d;

  auto lifted = [&](const LinearRow& row, std::size_t i) {
    RatVector c(nv);
    for (std::size_t j = 0; j < d; ++j) c[i * d + j] = row.coeffs[j];
    c[y_at + i] = -row.rhs;
    return c;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : family[i].equations) s.add_equation(lifted(e, i), 0);
    for (const auto& a : family[i].inequalities) s.add_inequality(lifted(a, i), 0);
  }
  for (std::size_t j = 0; j < d; ++j) {
    RatVector c(nv);
    c[x_at + j] = 1;
    for (std::size_t i = 0; i < n; ++i) c[i * d + j] = -1;
    s.add_equation(std::move(c), 0);
  }
  RatVector ys(nv);
  for (std::size_t i = 0; i < n; ++i) ys[y_at + i] = 1;
  s.add_equation(std::move(ys), 1);

  Formulation f{"balas", std::move(s), {}, true};
  for (std::size_t i = 1; i <= n; ++i) f.integer_vars.push_back("y" + std::to_string(i));
  return f;
}

RecoveryResult recover_encoding(const Formulation& f, const std::vector<HRep>& family, const HullOptions& options) {
  f.validate();
  const auto ints = f.integer_indices();
  const auto cont = f.continuous_indices();
  for (const auto& p : family)
    if (p.dim != cont.size()) throw InvalidArgument("recover_encoding: family dimension differs from continuous block");

  const auto v = hrep_to_vrep(to_hrep(f.system), options);
  if (!v) return {std::nullopt, "relaxation is empty"};
  for (const auto& r : v->rays)
    for (auto j : ints)
      if (!r[j].is_zero()) return {std::nullopt, "relaxation is unbounded in the integer variables"};

  std::vector<long> lo(ints.size()), hi(ints.size());
  bool first = true;
  for (const auto& p : v->vertices) {
    for (std::size_t q = 0; q < ints.size(); ++q) {
      const Rational& y = p[ints[q]];
      if (!y.is_integer()) return {std::nullopt, "relaxation vertex " + to_string(p) + " has a fractional integer variable"};
      const long val = y.numerator().get_si();
      lo[q] = first ? val : std::min(lo[q], val);
      hi[q] = first ? val : std::max(hi[q], val);
    }
    first = false;
  }
  double total = 1;
  for (std::size_t q = 0; q < ints.size(); ++q) total *= static_cast<double>(hi[q] - lo[q] + 1);
  if (total > 65536) return {std::nullopt, "too many integer points to enumerate"};

  std::vector<HRep> want;
  for (const auto& p : family) want.push_back(minimize_hrep(p, options));
  std::vector<std::optional<RatVector>> assigned(family.size());

  std::vector<long> y = lo;
  while (true) {
    RatVector value;
    for (auto x : y) value.emplace_back(x);
    if (auto proj = slice_projection(f, value, options)) {
      const HRep got = vrep_to_hrep(*proj, options);
      std::size_t i = 0;
      while (i < want.size() && !same_polyhedron(got, want[i])) ++i;
      if (i == want.size()) return {std::nullopt, "slice at y=" + to_string(value) + " matches no polyhedron"};
      if (assigned[i]) return {std::nullopt, "polyhedron " + std::to_string(i + 1) + " matched by two slices"};
      assigned[i] = value;
    }
    std::size_t q = 0;
    while (q < y.size() && y[q] == hi[q]) y[q] = lo[q], ++q;
    if (q == y.size()) break;
    ++y[q];
  }

  std::vector<Encoding::Code> codes;
  for (std::size_t i = 0; i < assigned.size(); ++i) {
    if (!assigned[i]) return {std::nullopt, "no slice projects onto polyhedron " + std::to_string(i + 1)};
    Encoding::Code c;
    for (const auto& x : *assigned[i]) {
      if (x != Rational(0) && x != Rational(1)) return {std::nullopt, "recovered code " + to_string(*assigned[i]) + " is not 0-1"};
      c.push_back(static_cast<std::uint8_t>(x == Rational(1)));
    }
    codes.push_back(std::move(c));
  }
  return {Encoding(std::move(codes), ints.size()), {}};
}

}  // namespace embform
