#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "embform/rational.hpp"

namespace embform {

/// One linear row: `coeffs . v = rhs` for an equation, `coeffs . v <= rhs` for
/// an inequality.
struct LinearRow {
  RatVector coeffs;
  Rational rhs;

  friend bool operator==(const LinearRow&, const LinearRow&) = default;
  friend auto operator<=>(const LinearRow& a, const LinearRow& b) {
    if (auto c = a.coeffs <=> b.coeffs; c != 0) return c;
    return a.rhs <=> b.rhs;
  }
};

/// Equations and `<=` inequalities over a fixed ordered list of named variables.
/// An inequality is a variable bound when it has exactly one nonzero coefficient.
class LinearSystem {
 public:
  LinearSystem() = default;
  /// Throws InvalidArgument on empty or duplicate names.
  explicit LinearSystem(std::vector<std::string> var_names);

  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& var_names() const { return names_; }
  std::optional<std::size_t> var_index(const std::string& name) const;

  void add_equation(RatVector coeffs, Rational rhs);
  void add_inequality(RatVector coeffs, Rational rhs);
  void add_equation(LinearRow row) { add_equation(std::move(row.coeffs), std::move(row.rhs)); }
  void add_inequality(LinearRow row) { add_inequality(std::move(row.coeffs), std::move(row.rhs)); }
  /// value <= x_j, stored as -x_j <= -value.
  void add_lower_bound(std::size_t j, const Rational& value);
  void add_upper_bound(std::size_t j, const Rational& value);

  const std::vector<LinearRow>& equations() const { return equations_; }
  const std::vector<LinearRow>& inequalities() const { return inequalities_; }

  bool is_bound(std::size_t i) const;
  std::vector<bool> bound_flags() const;
  std::size_t num_bounds() const;
  std::size_t num_general() const { return inequalities_.size() - num_bounds(); }

  /// Copy with extra zero-coefficient variables appended at the end.
  LinearSystem with_appended_variables(const std::vector<std::string>& extra) const;

  friend bool operator==(const LinearSystem&, const LinearSystem&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<LinearRow> equations_;
  std::vector<LinearRow> inequalities_;
};

/// A linear system together with the names of its integer variables. The
/// relaxation is the system itself; the formulation adds integrality.
struct Formulation {
  std::string name;
  LinearSystem system;
  std::vector<std::string> integer_vars;
  /// False for formulations known to be non-ideal (the textbook baseline).
  bool ideal = true;

  /// Throws InvalidArgument when an integer variable is not a system variable.
  void validate() const;
  std::vector<std::size_t> integer_indices() const;
  std::vector<std::size_t> continuous_indices() const;

  friend bool operator==(const Formulation&, const Formulation&) = default;
};

/// Facet counts of an LP relaxation: size = size_g + size_b + 2 * num_equations.
/// For SOS2 embeddings num_equations = 1 + k - dim_h.
struct SizeReport {
  std::size_t size = 0;
  std::size_t size_g = 0;
  std::size_t size_b = 0;
  std::size_t num_equations = 0;
  std::size_t dim_h = 0;
  std::size_t k = 0;
  std::size_t n = 0;

  friend bool operator==(const SizeReport&, const SizeReport&) = default;
};

/// The row space of a set of equations, used to put inequalities into a form
/// that does not depend on which multiples of the equations were added.
class EquationSpace {
 public:
  EquationSpace(const std::vector<LinearRow>& equations, std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }
  /// Rank of the coefficient matrix.
  std::size_t rank() const { return ortho_.size(); }
  bool consistent() const { return consistent_; }
  /// Reduced row echelon form of [E | e], each row scaled primitive-integer.
  const std::vector<LinearRow>& reduced() const { return reduced_; }

  /// Subtracts the equation combination that makes the coefficient vector
  /// orthogonal to every equation normal, then scales primitive-integer by a
  /// positive factor. Rows with zero coefficients collapse to (0, sign(rhs)).
  LinearRow canonical(const LinearRow& row) const;

  /// If the row is equivalent (modulo equations) to a single-variable bound,
  /// the variable index.
  std::optional<std::size_t> bound_variable(const LinearRow& row) const;

  /// The equivalent single-variable form of a row for which bound_variable()
  /// succeeded: +-x_j <= c with unit coefficient.
  LinearRow as_bound(const LinearRow& row, std::size_t j) const;

  /// Adds equation multiples greedily while that shrinks the support, then
  /// scales primitive-integer. Used for readable output only.
  LinearRow sparsify(const LinearRow& row) const;

 private:
  LinearRow project(const LinearRow& row) const;

  std::size_t num_vars_ = 0;
  bool consistent_ = true;
  std::vector<LinearRow> reduced_;
  std::vector<LinearRow> ortho_;  // coefficient parts pairwise orthogonal
  std::vector<Rational> ortho_norms_;
};

/// Canonical description of a system up to adding multiples of equations:
/// the echelon equation rows plus the sorted, deduplicated set of canonical
/// inequalities (trivially valid rows 0 <= c are dropped).
struct CanonicalSystem {
  std::vector<LinearRow> equations;
  std::vector<LinearRow> inequalities;

  friend bool operator==(const CanonicalSystem&, const CanonicalSystem&) = default;
};

CanonicalSystem canonicalize(const LinearSystem& system);
CanonicalSystem canonicalize(const std::vector<LinearRow>& equations, const std::vector<LinearRow>& inequalities,
                             std::size_t num_vars);

std::string to_string(const LinearRow& row, const std::vector<std::string>& names, const char* relation);

}  // namespace embform
