#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "embform/rational.hpp"

namespace embform {

/// Integer row echelon form produced by fraction-free (Bareiss) elimination.
/// Every row of the input is first scaled to integers; the entries of `rows`
/// are then minors of that integer matrix, so growth stays polynomial.
struct EchelonForm {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::vector<mpz_class>> rows;  // first `rank` rows are nonzero
};

EchelonForm fraction_free_echelon(const RatMatrix& m);

/// Exact rank over the rationals (fraction-free elimination).
std::size_t rank(const RatMatrix& m);

/// Reduced row echelon form by plain rational Gauss-Jordan elimination.
/// Zero rows are dropped. `pivots`, if given, receives the pivot columns.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Normalizes a fraction-free echelon form to the unique reduced form.
RatMatrix rref_from_echelon(const EchelonForm& e, std::size_t cols);

/// Basis of {x : Mx = 0}. Each vector is primitive-integer with its first
/// nonzero entry positive. Vectors are ordered by their free column.
std::vector<RatVector> nullspace_basis(const RatMatrix& m);

/// Indices of a maximal linearly independent subset of rows, chosen greedily
/// in row order.
std::vector<std::size_t> independent_rows(const RatMatrix& m);

/// Some solution of Ax = b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

bool in_span(const RatVector& v, const RatMatrix& basis);

/// Inverse of a square nonsingular matrix; throws when singular.
RatMatrix inverse(const RatMatrix& m);

/// Given directions spanning a hyperplane of the subspace L = span(ambient),
/// returns the primitive normal b in L with b.d = 0 for every direction,
/// sign-normalized so its first nonzero entry is positive.
///
/// Returns nullopt when span(directions) does not have dimension dim(L) - 1.
/// Throws InvalidArgument if a direction lies outside L.
std::optional<RatVector> primitive_normal(const std::vector<RatVector>& directions,
                                          const std::vector<RatVector>& ambient_basis);

}  // namespace embform
