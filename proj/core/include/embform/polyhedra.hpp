#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "embform/formulation.hpp"
#include "embform/rational.hpp"

namespace embform {

/// conv(vertices) + cone(rays).
struct VRep {
  std::vector<RatVector> vertices;
  std::vector<RatVector> rays;

  std::size_t dim() const;
  friend bool operator==(const VRep&, const VRep&) = default;
};

/// {x : E x = e, A x <= a}.
struct HRep {
  std::size_t dim = 0;
  std::vector<LinearRow> equations;
  std::vector<LinearRow> inequalities;

  friend bool operator==(const HRep&, const HRep&) = default;
};

enum class AdjacencyTest {
  /// Two rays are adjacent iff no third ray's zero set contains the
  /// intersection of theirs.
  combinatorial,
  /// Two rays are adjacent iff the constraints tight at both have rank d - 2.
  algebraic,
};

struct HullOptions {
  AdjacencyTest adjacency = AdjacencyTest::combinatorial;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  /// Options whose deadline comes from EMBFORM_BUDGET_SECONDS, if set.
  static HullOptions from_environment();
};

/// Minimal H-representation of conv(V.vertices) + cone(V.rays).
///
/// Equations are the reduced echelon rows of the affine hull, scaled
/// primitive-integer. Each facet appears once: as a unit-coefficient bound
/// `+-x_j <= c` when it is one modulo the equations, otherwise in a sparse
/// primitive-integer form. General rows come first in lexicographic order,
/// then bounds by variable.
///
/// Throws InvalidArgument when there are no vertices and BudgetExceeded when
/// the deadline passes.
HRep vrep_to_hrep(const VRep& v, const HullOptions& options = {});

/// Vertices and extreme rays of an H-representation, or nullopt when it is
/// empty. A lineality space is reported as a pair of opposite rays per basis
/// direction, so the result is a valid (not necessarily minimal) VRep.
/// Vertices and rays come out sorted.
std::optional<VRep> hrep_to_vrep(const HRep& h, const HullOptions& options = {});

/// Removes implied rows and turns implicit equalities into equations. An
/// empty polyhedron becomes the single inequality 0 <= -1.
HRep minimize_hrep(const HRep& h, const HullOptions& options = {});

HRep to_hrep(const LinearSystem& s);
LinearSystem to_system(const HRep& h, std::vector<std::string> var_names);

/// Facet counts of an irredundant H-representation (bounds detected modulo
/// the equations). dim_h/k/n are left at zero.
SizeReport count_facets(const HRep& h);

/// Equality of polyhedra given by minimal H-representations, modulo the
/// choice of equation multiples.
bool same_polyhedron(const HRep& a, const HRep& b);

}  // namespace embform
