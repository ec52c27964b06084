#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "embform/encoding.hpp"
#include "embform/formulation.hpp"
#include "embform/polyhedra.hpp"

namespace embform {

/// Normals of the linear hyperplanes of L(H) spanned by the difference
/// vectors, primitive-integer, first nonzero entry positive, sorted
/// lexicographically. Empty when every difference is zero.
std::vector<RatVector> spanned_hyperplanes(const EncodingGeometry& g);

/// Indices j in [1, n+1] (1-based) whose bound lambda_j >= 0 is a facet:
/// 1, n+1, and every j for which dropping c^{j-1} keeps the span of the
/// differences equal to L(H).
std::vector<std::size_t> bound_index_set(const EncodingGeometry& g);

/// Variable names lambda1..lambda{n+1}, y1..yk.
std::vector<std::string> sos2_variable_names(std::size_t n, std::size_t k);

/// The SOS2 embedding points (e^j, h^i), j in {i, i+1}, in (lambda, y) space.
VRep sos2_embedding(const Encoding& h);

struct Sos2Build {
  Formulation formulation;
  SizeReport report;
};

/// Closed-form relaxation of the embedding formulation: the simplex equation,
/// the affine hull of the codes, a pair of inequalities per spanned hyperplane
/// and the facet-defining bounds.
Sos2Build build_sos2(const Encoding& h);

/// Size accounting of build_sos2 without building rows.
SizeReport sos2_size(const Encoding& h);

/// size_G alone: twice the number of spanned hyperplanes. Uses 64-bit
/// integer minors when L(H) is all of R^k.
std::size_t sos2_general_size(const Encoding& h);

/// Incremental unary formulation (n segments, unary codes):
///   sum_{j<=l} lambda_j <= sum_{i<=l} y_i,
///   sum_{j>=l+2} lambda_j <= sum_{i>=l+1} y_i      for l = 1..n-1,
/// lambda_1 >= 0, lambda_{n+1} >= 0 and both simplex equations.
Formulation padberg(std::size_t n);

/// Logarithmic formulation for a gray code, all n+1 bounds included:
///   sum_j min(h^j_l, h^{j-1}_l) lambda_j <= y_l <= sum_j max(...) lambda_j.
/// Throws InvalidEncoding when the code fails the gray predicate or n differs.
Formulation logarithmic(std::size_t n, const Encoding& gray_code);

/// Textbook formulation: lambda_j <= y_{j-1} + y_j, one y selected, with
/// 0 <= y <= 1 in the relaxation. Not ideal.
Formulation textbook_cc(std::size_t n);

struct FaceCheck {
  bool face = false;
  /// Dimension of the point set selected by (J-, J+); -1 when empty.
  long dim = -1;
};

/// Face predicate for the SOS2 embedding. `j_minus` and `j_plus` are 1-based
/// subsets of [n+1]; c^0 = c^n = 0. Strict feasibility of the sign conditions
/// is decided by exact Fourier-Motzkin elimination.
FaceCheck face_check(const Encoding& h, const std::vector<std::size_t>& j_minus,
                     const std::vector<std::size_t>& j_plus);

}  // namespace embform
