#include "embform/polyhedra.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "double_description.hpp"
#include "embform/error.hpp"
#include "embform/linalg.hpp"

namespace embform {

using detail::IntVec;

std::size_t VRep::dim() const {
  if (!vertices.empty()) return vertices.front().size();
  if (!rays.empty()) return rays.front().size();
  return 0;
}

HullOptions HullOptions::from_environment() {
  HullOptions o;
  if (const char* s = std::getenv("EMBFORM_BUDGET_SECONDS"); s && *s) {
    char* end = nullptr;
    const double seconds = std::strtod(s, &end);
    if (end == s || *end != '\0' || seconds < 0)
      throw InvalidArgument(std::string("EMBFORM_BUDGET_SECONDS is not a nonnegative number: '") + s + "'");
    o.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
  }
  return o;
}

namespace {

/// Sorted, readable form of a facet list relative to the given equations.
HRep finish(std::size_t dim, const EquationSpace& space, const std::vector<LinearRow>& facets) {
  HRep h;
  h.dim = dim;
  h.equations = space.reduced();
  std::vector<LinearRow> general;
  std::vector<std::pair<std::size_t, LinearRow>> bounds;
  for (const auto& f : facets) {
    if (auto j = space.bound_variable(f)) {
      bounds.emplace_back(*j, space.as_bound(f, *j));
    } else {
      general.push_back(space.sparsify(f));
    }
  }
  std::sort(general.begin(), general.end());
  general.erase(std::unique(general.begin(), general.end()), general.end());
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
  h.inequalities = std::move(general);
  for (auto& b : bounds) h.inequalities.push_back(std::move(b.second));
  return h;
}

void check_dims(const std::vector<RatVector>& vs, std::size_t d, const char* what) {
  for (const auto& v : vs)
    if (v.size() != d) throw InvalidArgument(std::string(what) + " has wrong dimension");
}

}  // namespace

HRep vrep_to_hrep(const VRep& v, const HullOptions& options) {
  if (v.vertices.empty()) throw InvalidArgument("vrep_to_hrep: at least one vertex is required");
  const std::size_t d = v.dim();
  check_dims(v.vertices, d, "vertex");
  check_dims(v.rays, d, "ray");

  // Homogenize: vertex p -> (1, p), ray r -> (0, r).
  RatMatrix points(d + 1);
  for (const auto& p : v.vertices) {
    RatVector row{1};
    row.insert(row.end(), p.begin(), p.end());
    points.add_row(std::move(row));
  }
  for (const auto& r : v.rays) {
    RatVector row{0};
    row.insert(row.end(), r.begin(), r.end());
    points.add_row(std::move(row));
  }

  std::vector<LinearRow> equations;
  for (const auto& a : nullspace_basis(points))
    equations.push_back({RatVector(a.begin() + 1, a.end()), -a[0]});
  const EquationSpace space(equations, d);

  // Valid inequalities a . (t, x) >= 0 restricted to the row space of the
  // points form a pointed cone; its extreme rays are the facets.
  std::vector<IntVec> basis;
  for (auto i : independent_rows(points)) basis.push_back(detail::to_integer_row(points[i]));
  const std::size_t dd = basis.size();
  std::vector<IntVec> rows;
  rows.reserve(points.rows());
  for (const auto& p : points) {
    const IntVec pi = detail::to_integer_row(p);
    IntVec g(dd);
    for (std::size_t j = 0; j < dd; ++j)
      for (std::size_t c = 0; c <= d; ++c)
        if (sgn(pi[c]) != 0 && sgn(basis[j][c]) != 0) g[j] += pi[c] * basis[j][c];
    rows.push_back(std::move(g));
  }

  std::vector<LinearRow> facets;
  const auto rays = detail::extreme_rays(rows, dd, options);
  for (const auto& ray : rays) {
    bool touches_vertex = false;
    for (std::size_t i = 0; i < v.vertices.size() && !touches_vertex; ++i) touches_vertex = ray.zeros.test(i);
    if (!touches_vertex) continue;  // the face at infinity, not a facet
    IntVec a(d + 1);
    for (std::size_t j = 0; j < dd; ++j)
      for (std::size_t c = 0; c <= d; ++c) a[c] += ray.x[j] * basis[j][c];
    // a0 + a_x . x >= 0  <=>  -a_x . x <= a0
    LinearRow f{RatVector(d), Rational(a[0])};
    for (std::size_t c = 0; c < d; ++c) f.coeffs[c] = -Rational(a[c + 1]);
    facets.push_back(std::move(f));
  }
  return finish(d, space, facets);
}

std::optional<VRep> hrep_to_vrep(const HRep& h, const HullOptions& options) {
  const std::size_t d = h.dim;
  for (const auto& e : h.equations)
    if (e.coeffs.size() != d) throw InvalidArgument("equation has wrong dimension");
  for (const auto& e : h.inequalities)
    if (e.coeffs.size() != d) throw InvalidArgument("inequality has wrong dimension");

  // x = x0 + N z parametrizes the equations.
  RatVector x0(d);
  RatMatrix n_mat(0);
  {
    RatMatrix e(d);
    RatVector rhs;
    for (const auto& row : h.equations) {
      e.add_row(row.coeffs);
      rhs.push_back(row.rhs);
    }
    if (!h.equations.empty()) {
      auto sol = solve(e, rhs);
      if (!sol) return std::nullopt;
      x0 = std::move(*sol);
    }
    const auto null = h.equations.empty() ? RatMatrix::identity(d).row_list() : nullspace_basis(e);
    n_mat = RatMatrix(null, d).transpose();  // d x f
  }
  const std::size_t f = n_mat.cols();
  auto lift_direction = [&](const RatVector& z) {
    RatVector x(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < f; ++j)
        if (!z[j].is_zero()) x[i] += n_mat[i][j] * z[j];
    return x;
  };

  // A N z <= a - A x0
  RatMatrix az(f);
  RatVector bz;
  for (const auto& row : h.inequalities) {
    RatVector r(f);
    for (std::size_t j = 0; j < f; ++j)
      for (std::size_t i = 0; i < d; ++i)
        if (!row.coeffs[i].is_zero()) r[j] += row.coeffs[i] * n_mat[i][j];
    az.add_row(std::move(r));
    bz.push_back(row.rhs - dot(row.coeffs, x0));
  }

  VRep out;
  std::vector<RatVector> lineality = f == 0 ? std::vector<RatVector>{} : nullspace_basis(az);
  if (az.rows() == 0) lineality = RatMatrix::identity(f).row_list();
  for (const auto& l : lineality) {
    const RatVector x = lift_direction(l);
    out.rays.push_back(x);
    out.rays.push_back(Rational(-1) * x);
  }

  // Work in the row space of A N, where the recession cone is pointed.
  std::vector<RatVector> w_basis;
  for (auto i : independent_rows(az)) w_basis.push_back(az[i]);
  const std::size_t r = w_basis.size();
  if (r == 0) {
    for (const auto& b : bz)
      if (b.sign() < 0) return std::nullopt;
    out.vertices.push_back(x0);
  } else {
    // Cone in (t, w): t >= 0 and t * bz_i - (A N W^T w)_i >= 0.
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < az.rows(); ++i) {
      RatVector g{bz[i]};
      for (std::size_t j = 0; j < r; ++j) g.push_back(-dot(az[i], w_basis[j]));
      rows.push_back(detail::to_integer_row(g));
    }
    RatVector t_row(r + 1);
    t_row[0] = 1;
    rows.push_back(detail::to_integer_row(t_row));

    const auto rays = detail::extreme_rays(rows, r + 1, options);
    auto to_z = [&](const IntVec& ray, const Rational& scale) {
      RatVector z(f);
      for (std::size_t j = 0; j < r; ++j)
        if (sgn(ray[j + 1]) != 0) z = z + (Rational(ray[j + 1]) / scale) * w_basis[j];
      return z;
    };
    bool any_vertex = false;
    for (const auto& ray : rays) {
      if (sgn(ray.x[0]) > 0) {
        any_vertex = true;
        out.vertices.push_back(x0 + lift_direction(to_z(ray.x, Rational(ray.x[0]))));
      } else {
        out.rays.push_back(primitive_positive(lift_direction(to_z(ray.x, 1))));
      }
    }
    if (!any_vertex) return std::nullopt;
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

HRep minimize_hrep(const HRep& h, const HullOptions& options) {
  const auto v = hrep_to_vrep(h, options);
  if (!v) {
    HRep empty;
    empty.dim = h.dim;
    empty.inequalities.push_back({RatVector(h.dim), -1});
    return empty;
  }
  return vrep_to_hrep(*v, options);
}

HRep to_hrep(const LinearSystem& s) {
  HRep h;
  h.dim = s.num_vars();
  h.equations = s.equations();
  h.inequalities = s.inequalities();
  return h;
}

LinearSystem to_system(const HRep& h, std::vector<std::string> var_names) {
  if (var_names.size() != h.dim) throw InvalidArgument("to_system: wrong number of variable names");
  LinearSystem s(std::move(var_names));
  for (const auto& e : h.equations) s.add_equation(e);
  for (const auto& e : h.inequalities) s.add_inequality(e);
  return s;
}

SizeReport count_facets(const HRep& h) {
  const EquationSpace space(h.equations, h.dim);
  SizeReport r;
  for (const auto& row : h.inequalities) (space.bound_variable(row) ? r.size_b : r.size_g) += 1;
  r.num_equations = space.rank();
  r.size = r.size_g + r.size_b + 2 * r.num_equations;
  return r;
}

bool same_polyhedron(const HRep& a, const HRep& b) {
  if (a.dim != b.dim) return false;
  return canonicalize(a.equations, a.inequalities, a.dim) == canonicalize(b.equations, b.inequalities, b.dim);
}

}  // namespace embform
