#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library's linear algebra or hull code; everything is plain mpq_class
// elimination and subset enumeration, so it is only usable on small inputs.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "embform/polyhedra.hpp"

namespace oracle {

using Vec = std::vector<mpq_class>;
using Mat = std::vector<Vec>;

inline Vec from_rat(const embform::RatVector& v) {
  Vec out;
  for (const auto& x : v) out.push_back(x.value());
  return out;
}

inline embform::RatVector to_rat(const Vec& v) {
  embform::RatVector out;
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

/// Row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> echelon(Mat& m, std::size_t cols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const mpq_class inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

inline std::size_t rank(Mat m, std::size_t cols) { return echelon(m, cols).size(); }

inline Mat nullspace(Mat m, std::size_t cols) {
  const auto piv = echelon(m, cols);
  Mat out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(piv.begin(), piv.end(), f) != piv.end()) continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
    out.push_back(v);
  }
  return out;
}

/// Calls fn on every r-subset of [0, n) in lexicographic order.
inline void subsets(std::size_t n, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (r > n) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

using TightSet = std::vector<bool>;

/// Facets of conv(points), each identified by the set of points it contains.
/// A facet is spanned by dim affinely independent points, where dim is the
/// dimension of the hull; every such subset is tried.
inline std::set<TightSet> facets_by_tight_sets(const std::vector<embform::RatVector>& points) {
  const std::size_t d = points.front().size();
  Mat lifted;
  for (const auto& p : points) {
    Vec row = from_rat(p);
    row.push_back(1);
    lifted.push_back(row);
  }
  const std::size_t dim = rank(lifted, d + 1) - 1;
  std::set<TightSet> out;
  if (dim == 0) return out;
  subsets(points.size(), dim, [&](const std::vector<std::size_t>& s) {
    Mat sub;
    for (auto i : s) sub.push_back(lifted[i]);
    if (rank(sub, d + 1) != dim) return;
    for (const auto& w : nullspace(sub, d + 1)) {
      std::vector<int> sign;
      for (const auto& p : lifted) {
        mpq_class v = 0;
        for (std::size_t j = 0; j <= d; ++j) v += p[j] * w[j];
        sign.push_back(sgn(v));
      }
      if (std::all_of(sign.begin(), sign.end(), [](int x) { return x == 0; })) continue;
      const bool pos = std::none_of(sign.begin(), sign.end(), [](int x) { return x < 0; });
      const bool neg = std::none_of(sign.begin(), sign.end(), [](int x) { return x > 0; });
      if (pos || neg) {
        TightSet t;
        for (int x : sign) t.push_back(x == 0);
        out.insert(t);
      }
      break;
    }
  });
  return out;
}

/// The points on each inequality of an H-representation.
inline std::set<TightSet> tight_sets(const embform::HRep& h, const std::vector<embform::RatVector>& points) {
  std::set<TightSet> out;
  for (const auto& r : h.inequalities) {
    TightSet t;
    for (const auto& p : points) t.push_back(embform::dot(r.coeffs, p) == r.rhs);
    out.insert(t);
  }
  return out;
}

/// Vertices of {x : E x = e, A x <= a} by solving every choice of tight rows
/// that together with E determines a point. Exponential; tiny systems only.
inline std::set<Vec> vertices(const embform::HRep& h) {
  const std::size_t d = h.dim;
  Mat eq;
  for (const auto& r : h.equations) {
    Vec row = from_rat(r.coeffs);
    row.push_back(r.rhs.value());
    eq.push_back(row);
  }
  std::set<Vec> out;
  const std::size_t fixed = rank(eq, d);
  if (fixed <= d) {
    subsets(h.inequalities.size(), d - fixed, [&](const std::vector<std::size_t>& s) {
      Mat m = eq;
      for (auto i : s) {
        Vec row = from_rat(h.inequalities[i].coeffs);
        row.push_back(h.inequalities[i].rhs.value());
        m.push_back(row);
      }
      const auto piv = echelon(m, d + 1);
      if (piv.size() != d || std::find(piv.begin(), piv.end(), d) != piv.end()) return;
      Vec x(d);
      for (std::size_t i = 0; i < d; ++i) x[piv[i]] = m[i][d];
      for (const auto& row : h.inequalities) {
        mpq_class v = 0;
        for (std::size_t j = 0; j < d; ++j) v += row.coeffs[j].value() * x[j];
        if (v > row.rhs.value()) return;
      }
      for (const auto& row : h.equations) {
        mpq_class v = 0;
        for (std::size_t j = 0; j < d; ++j) v += row.coeffs[j].value() * x[j];
        if (v != row.rhs.value()) return;
      }
      out.insert(x);
    });
  }
  return out;
}

}  // namespace oracle
