#include "embform/linalg.hpp"

#include <utility>

#include "embform/error.hpp"

namespace embform {

EchelonForm fraction_free_echelon(const RatMatrix& m) {
  EchelonForm e;
  const std::size_t cols = m.cols();
  e.rows.reserve(m.rows());
  for (const auto& r : m) e.rows.push_back(to_primitive_integers(r));

  auto& a = e.rows;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rank = r;
  return e;
}

std::size_t rank(const RatMatrix& m) { return fraction_free_echelon(m).rank; }

RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots) {
  std::vector<RatVector> a = m.row_list();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    const Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  a.resize(r);
  if (pivots) *pivots = std::move(piv);
  return RatMatrix(std::move(a), cols);
}

RatMatrix rref_from_echelon(const EchelonForm& e, std::size_t cols) {
  std::vector<RatVector> a;
  for (std::size_t i = 0; i < e.rank; ++i) {
    RatVector row(cols);
    for (std::size_t j = 0; j < cols; ++j) row[j] = Rational(e.rows[i][j]);
    a.push_back(std::move(row));
  }
  // Back substitution on the (already upper-triangular) echelon rows.
  for (std::size_t i = e.rank; i-- > 0;) {
    const std::size_t c = e.pivot_cols[i];
    const Rational inv = Rational(1) / a[i][c];
    for (auto& x : a[i]) x *= inv;
    for (std::size_t k = 0; k < i; ++k) {
      if (a[k][c].is_zero()) continue;
      const Rational f = a[k][c];
      for (std::size_t j = c; j < cols; ++j) a[k][j] -= f * a[i][j];
    }
  }
  return RatMatrix(std::move(a), cols);
}

std::vector<RatVector> nullspace_basis(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  const RatMatrix r = rref(m, &piv);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r[i][f];
    basis.push_back(primitive_normalized(v));
  }
  return basis;
}

std::vector<std::size_t> independent_rows(const RatMatrix& m) {
  // Incremental elimination against the rows kept so far.
  std::vector<std::size_t> kept;
  std::vector<RatVector> reduced;
  std::vector<std::size_t> lead;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    RatVector v = m[i];
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      const std::size_t c = lead[k];
      if (v[c].is_zero()) continue;
      const Rational f = v[c] / reduced[k][c];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!reduced[k][j].is_zero()) v[j] -= f * reduced[k][j];
    }
    std::size_t c = 0;
    while (c < v.size() && v[c].is_zero()) ++c;
    if (c == v.size()) continue;
    kept.push_back(i);
    reduced.push_back(std::move(v));
    lead.push_back(c);
  }
  return kept;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw InvalidArgument("solve: right-hand side has wrong length");
  RatMatrix aug(a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    RatVector row = a[i];
    row.push_back(b[i]);
    aug.add_row(std::move(row));
  }
  std::vector<std::size_t> piv;
  const RatMatrix r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r[i][a.cols()];
  return x;
}

bool in_span(const RatVector& v, const RatMatrix& basis) {
  if (basis.empty()) return is_zero(v);
  RatMatrix both = basis;
  both.add_row(v);
  return rank(both) == rank(basis);
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvalidArgument("inverse of non-square matrix");
  RatMatrix aug(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    RatVector row = m[i];
    row.resize(2 * n);
    row[n + i] = 1;
    aug.add_row(std::move(row));
  }
  std::vector<std::size_t> piv;
  const RatMatrix r = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw InvalidArgument("inverse of singular matrix");
  RatMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv.add_row(RatVector(r[i].begin() + static_cast<long>(n), r[i].end()));
  return inv;
}

std::optional<RatVector> primitive_normal(const std::vector<RatVector>& directions,
                                          const std::vector<RatVector>& ambient_basis) {
  if (ambient_basis.empty()) throw InvalidArgument("primitive_normal: empty ambient subspace");
  const std::size_t n = ambient_basis.front().size();
  const RatMatrix ambient(ambient_basis, n);
  RatMatrix basis(n);
  for (auto i : independent_rows(ambient)) basis.add_row(ambient[i]);
  const std::size_t dim_l = basis.rows();

  RatMatrix dirs(n);
  for (const auto& d : directions) {
    if (d.size() != n) throw InvalidArgument("primitive_normal: direction has wrong dimension");
    if (!in_span(d, basis)) throw InvalidArgument("primitive_normal: direction " + to_string(d) + " outside ambient span");
    dirs.add_row(d);
  }
  if (dim_l == 0 || rank(dirs) + 1 != dim_l) return std::nullopt;

  // b = sum_i beta_i basis_i with (b . d) = 0 for all directions.
  RatMatrix gram(dim_l);
  for (const auto& d : dirs) {
    RatVector row(dim_l);
    for (std::size_t i = 0; i < dim_l; ++i) row[i] = dot(basis[i], d);
    gram.add_row(std::move(row));
  }
  const auto kernel = nullspace_basis(gram);
  if (kernel.size() != 1) return std::nullopt;
  RatVector b(n);
  for (std::size_t i = 0; i < dim_l; ++i)
    if (!kernel[0][i].is_zero()) b = b + kernel[0][i] * basis[i];
  return primitive_normalized(b);
}

}  // namespace embform
