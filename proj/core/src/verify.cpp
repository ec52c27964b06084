#include "embform/verify.hpp"

#include <algorithm>

#include "embform/error.hpp"

namespace embform {

HRep simplex_face(std::size_t dim, const std::vector<std::size_t>& support) {
  HRep h;
  h.dim = dim;
  h.equations.push_back({RatVector(dim, Rational(1)), 1});
  for (std::size_t p = 0; p < dim; ++p) {
    if (std::find(support.begin(), support.end(), p) != support.end()) {
      RatVector c(dim);
      c[p] = -1;
      h.inequalities.push_back({std::move(c), 0});
    } else {
      h.equations.push_back({unit_vector(dim, p), 0});
    }
  }
  return h;
}

std::vector<HRep> sos2_family(std::size_t n) {
  std::vector<HRep> fam;
  for (std::size_t i = 0; i < n; ++i) fam.push_back(simplex_face(n + 1, {i, i + 1}));
  return fam;
}

std::vector<RatVector> fractional_vertices(const Formulation& f, const HullOptions& options) {
  const auto v = hrep_to_vrep(to_hrep(f.system), options);
  if (!v) throw VerificationFailed("relaxation of '" + f.name + "' is empty");
  const auto ints = f.integer_indices();
  std::vector<RatVector> bad;
  for (const auto& p : v->vertices)
    if (std::any_of(ints.begin(), ints.end(), [&](std::size_t j) { return !p[j].is_integer(); })) bad.push_back(p);
  return bad;
}

namespace {

// Variables forced to zero by a row sum_j a_j x_j <= 0 (or = 0) whose
// coefficients all share one sign, when every variable involved has a
// nonnegativity bound. Repeats until nothing changes.
std::vector<bool> forced_zeros(const HRep& h) {
  std::vector<bool> nonneg(h.dim, false), zero(h.dim, false);
  for (const auto& r : h.inequalities) {
    std::size_t nz = 0, at = 0;
    for (std::size_t j = 0; j < h.dim; ++j)
      if (!r.coeffs[j].is_zero()) ++nz, at = j;
    if (nz == 1 && r.coeffs[at].sign() < 0 && r.rhs.sign() <= 0) nonneg[at] = true;
  }
  auto sweep = [&](const LinearRow& r, bool equation) {
    if (!r.rhs.is_zero()) return false;
    int sign = 0;
    for (std::size_t j = 0; j < h.dim; ++j) {
      if (zero[j] || r.coeffs[j].is_zero()) continue;
      if (!nonneg[j]) return false;
      const int s = r.coeffs[j].sign();
      if (sign == 0) sign = s;
      else if (s != sign) return false;
    }
    if (sign == 0 || (!equation && sign < 0)) return false;
    bool changed = false;
    for (std::size_t j = 0; j < h.dim; ++j)
      if (!zero[j] && !r.coeffs[j].is_zero()) zero[j] = changed = true;
    return changed;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : h.inequalities) changed = sweep(r, false) || changed;
    for (const auto& r : h.equations) changed = sweep(r, true) || changed;
  }
  return zero;
}

}  // namespace

std::optional<VRep> slice_projection(const Formulation& f, const RatVector& value, const HullOptions& options) {
  const auto ints = f.integer_indices();
  if (value.size() != ints.size()) throw InvalidArgument("slice value has wrong length");
  const auto keep = f.continuous_indices();
  const HRep full = to_hrep(f.system);

  // Substitute the integer values; the slice lives on the continuous variables.
  auto substitute = [&](const LinearRow& r) {
    LinearRow out{RatVector(keep.size()), r.rhs};
    for (std::size_t q = 0; q < ints.size(); ++q) out.rhs -= r.coeffs[ints[q]] * value[q];
    for (std::size_t c = 0; c < keep.size(); ++c) out.coeffs[c] = r.coeffs[keep[c]];
    return out;
  };
  HRep h;
  h.dim = keep.size();
  for (const auto& r : full.equations) h.equations.push_back(substitute(r));
  for (const auto& r : full.inequalities) h.inequalities.push_back(substitute(r));

  // Drop variables that the slice pins at zero before enumerating vertices;
  // for grid formulations most of them are.
  const auto zero = forced_zeros(h);
  std::vector<std::size_t> live;
  for (std::size_t j = 0; j < h.dim; ++j)
    if (!zero[j]) live.push_back(j);
  HRep reduced;
  reduced.dim = live.size();
  auto restrict_row = [&](const LinearRow& r) {
    LinearRow out{RatVector(live.size()), r.rhs};
    for (std::size_t c = 0; c < live.size(); ++c) out.coeffs[c] = r.coeffs[live[c]];
    return out;
  };
  for (const auto& r : h.equations) reduced.equations.push_back(restrict_row(r));
  for (const auto& r : h.inequalities) reduced.inequalities.push_back(restrict_row(r));

  auto lift = [&](const RatVector& p) {
    RatVector out(h.dim);
    for (std::size_t c = 0; c < live.size(); ++c) out[live[c]] = p[c];
    return out;
  };
  VRep out;
  if (live.empty()) {
    for (const auto& r : reduced.equations)
      if (!r.rhs.is_zero()) return std::nullopt;
    for (const auto& r : reduced.inequalities)
      if (r.rhs.sign() < 0) return std::nullopt;
    out.vertices.push_back(RatVector(h.dim));
    return out;
  }
  const auto v = hrep_to_vrep(reduced, options);
  if (!v) return std::nullopt;
  for (const auto& p : v->vertices) out.vertices.push_back(lift(p));
  for (const auto& r : v->rays) out.rays.push_back(lift(r));
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  return out;
}

SliceCheck check_slices(const Formulation& f, const Encoding& h, const std::vector<HRep>& family,
                        const HullOptions& options) {
  if (family.size() != h.size()) throw InvalidArgument("check_slices: family and encoding differ in size");
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto proj = slice_projection(f, h.vector(i), options);
    if (!proj) return {false, "slice " + std::to_string(i + 1) + " at y=" + to_string(h.vector(i)) + " is empty"};
    const HRep got = vrep_to_hrep(*proj, options);
    const HRep want = minimize_hrep(family[i], options);
    if (!same_polyhedron(got, want))
      return {false, "slice " + std::to_string(i + 1) + " at y=" + to_string(h.vector(i)) +
                         " does not project onto its polyhedron"};
  }
  return {};
}

bool same_hull(const VRep& a, const VRep& b, const HullOptions& options) {
  if (a.vertices.empty() || b.vertices.empty()) return a.vertices.empty() && b.vertices.empty();
  return same_polyhedron(vrep_to_hrep(a, options), vrep_to_hrep(b, options));
}

}  // namespace embform
