#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "embform/encoding.hpp"
#include "embform/formulation.hpp"
#include "embform/polyhedra.hpp"

namespace embform {

/// Grid point (u, v) with 1 <= u, v <= m + 1.
using GridPoint = std::pair<int, int>;
using Triangle = std::array<GridPoint, 3>;

/// Two triangles per unit square of the [1, m+1]^2 grid. Triangle T^t of
/// square (u, v) is stored at index 2(m(u-1) + (v-1)) + t - 1.
struct GridTriangulation {
  std::size_t m = 0;
  std::vector<Triangle> triangles;

  static std::size_t index(std::size_t m, std::size_t u, std::size_t v, std::size_t t) {
    return 2 * (m * (u - 1) + (v - 1)) + t - 1;
  }
  const Triangle& at(std::size_t u, std::size_t v, std::size_t t) const { return triangles.at(index(m, u, v, t)); }
  std::size_t num_points() const { return (m + 1) * (m + 1); }
  /// Position of lambda_(u,v) among the grid variables (u-major).
  std::size_t point_index(const GridPoint& p) const {
    return static_cast<std::size_t>(p.first - 1) * (m + 1) + static_cast<std::size_t>(p.second - 1);
  }

  /// Throws InvalidArgument unless every square is split along one diagonal
  /// into two triangles stored in the right slots.
  void validate() const;

  friend bool operator==(const GridTriangulation&, const GridTriangulation&) = default;
};

/// Diagonals alternate around the grid points with both coordinates odd. In
/// square (u, v) let c be the corner with both coordinates even and o its
/// opposite; T^1 = {c, (c_u, o_v), o} and T^2 = {c, (o_u, c_v), o}.
GridTriangulation union_jack(std::size_t m);

/// union_jack(m) with squares (1,1) and (m,m) split along their other
/// diagonal. The new bottom-left triangle inherits the slot of the old
/// top-left one and the top-right triangle that of the old bottom-right one.
GridTriangulation modified_union_jack(std::size_t m);

/// Every square split along the diagonal (u,v)-(u+1,v+1).
GridTriangulation k1(std::size_t m);

/// Codes [t-1 | gray(v-1) | gray(u-1)] with log2(m) bits per gray block, so
/// k = log2(2 m^2). Accepts union_jack(m) and modified_union_jack(m) for m a
/// power of two; throws InvalidArgument otherwise.
Encoding jack_encoding(const GridTriangulation& t);

/// lambda_u_v for all grid points (u-major), then y1..yk.
std::vector<std::string> pwl_variable_names(std::size_t m, std::size_t k);

/// P(T_i) = {lambda in the grid simplex : lambda_p = 0 outside T_i}.
std::vector<HRep> pwl_family(const GridTriangulation& t);

/// The points (e^p, h^i) for p in T_i.
VRep pwl_embedding(const GridTriangulation& t, const Encoding& h);

/// Minimal H-representation of the embedding hull as a formulation with the
/// y block integer. Throws BudgetExceeded for m > 8.
Formulation embed_and_hull(const GridTriangulation& t, const Encoding& h, const HullOptions& options = {});

struct PwlFunction {
  GridTriangulation triangulation;
  /// f(u, v) at point_index((u, v)).
  std::vector<Rational> values;

  const Rational& value(int u, int v) const { return values.at(triangulation.point_index({u, v})); }
};

/// Appends x1, x2, z with sum u lambda = x1, sum v lambda = x2 and
/// sum f(u,v) lambda = z. Throws InvalidArgument when the base lacks a grid
/// variable.
Formulation graph_formulation(const PwlFunction& pwl, const Formulation& base);

/// Extended formulation with one copy x^i per polyhedron: A^i x^i <= b^i y_i
/// (equations E^i x^i = e^i y_i), x = sum x^i, sum y = 1, y integer.
/// Variables x<i>_<j>, then x<j>, then y<i>.
Formulation balas_formulation(const std::vector<HRep>& family);

struct RecoveryResult {
  std::optional<Encoding> encoding;
  std::string reason;  // why recovery failed, empty on success
};

/// Certifies that the relaxation of `f` is the embedding hull of `family`
/// under some encoding and returns that encoding: every relaxation vertex has
/// integral y, and each integral y in the vertices' bounding box gives either
/// an empty slice or a slice projecting onto a distinct family member, with
/// every member hit.
RecoveryResult recover_encoding(const Formulation& f, const std::vector<HRep>& family,
                                const HullOptions& options = {});

}  // namespace embform
