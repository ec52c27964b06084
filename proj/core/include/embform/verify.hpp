#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "embform/encoding.hpp"
#include "embform/formulation.hpp"
#include "embform/polyhedra.hpp"

namespace embform {

/// {lambda in the unit simplex of R^dim : lambda_p = 0 for p outside support}.
HRep simplex_face(std::size_t dim, const std::vector<std::size_t>& support);

/// The SOS2 family on n+1 points: P^i is the edge conv(e^i, e^{i+1}).
std::vector<HRep> sos2_family(std::size_t n);

/// Vertices of the relaxation with a non-integral integer-variable component.
/// Throws VerificationFailed when the relaxation is empty.
std::vector<RatVector> fractional_vertices(const Formulation& f, const HullOptions& options = {});

inline bool is_ideal(const Formulation& f, const HullOptions& options = {}) {
  return fractional_vertices(f, options).empty();
}

/// Projection onto the continuous variables of the relaxation with the
/// integer variables fixed to `value` (given in integer_indices() order).
/// nullopt when that slice is empty.
std::optional<VRep> slice_projection(const Formulation& f, const RatVector& value, const HullOptions& options = {});

struct SliceCheck {
  bool ok = true;
  std::string message;
};

/// For each i, the slice at y = h^i must project exactly onto family[i].
SliceCheck check_slices(const Formulation& f, const Encoding& h, const std::vector<HRep>& family,
                        const HullOptions& options = {});

/// Whether two point sets have the same convex hull.
bool same_hull(const VRep& a, const VRep& b, const HullOptions& options = {});

}  // namespace embform
