#pragma once

// Internal cone engine shared by the V->H and H->V conversions.

#include <cstddef>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <gmpxx.h>

#include "embform/polyhedra.hpp"

namespace embform::detail {

using IntVec = std::vector<mpz_class>;

struct ConeRay {
  IntVec x;
  boost::dynamic_bitset<> zeros;  // indices of input rows with g . x = 0
};

/// Extreme rays of the pointed cone {x in Q^d : g . x >= 0 for every row g}.
/// Rows must have rank d. Each ray is primitive-integer. Rows are inserted in
/// lexicographic order, starting from the first d independent ones.
std::vector<ConeRay> extreme_rays(const std::vector<IntVec>& rows, std::size_t d, const HullOptions& options);

/// Rank of an integer matrix by fraction-free elimination.
std::size_t integer_rank(std::vector<IntVec> rows);

IntVec to_integer_row(const RatVector& v);
RatVector to_rational(const IntVec& v);

}  // namespace embform::detail
