#include "embform/sos2.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>

#include "embform/error.hpp"
#include "embform/linalg.hpp"

namespace embform {

namespace {

using SmallVec = std::vector<std::int64_t>;

/// Calls fn on every r-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (r > n) return;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    fn(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

__extension__ using Wide = __int128;

/// Determinant by fraction-free elimination with 128-bit intermediates.
std::int64_t small_det(std::vector<SmallVec> a) {
  const std::size_t n = a.size();
  Wide prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        const Wide v = static_cast<Wide>(a[c][c]) * a[i][j] - static_cast<Wide>(a[i][c]) * a[c][j];
        a[i][j] = static_cast<std::int64_t>(v / prev);
      }
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  return sign * (n == 0 ? 1 : a[n - 1][n - 1]);
}

/// Normal of the span of k-1 vectors in Z^k via signed maximal minors; zero
/// when the vectors are dependent.
SmallVec minor_normal(const std::vector<const SmallVec*>& rows, std::size_t k) {
  SmallVec b(k);
  for (std::size_t drop = 0; drop < k; ++drop) {
    std::vector<SmallVec> m;
    m.reserve(rows.size());
    for (const auto* r : rows) {
      SmallVec row;
      row.reserve(k - 1);
      for (std::size_t c = 0; c < k; ++c)
        if (c != drop) row.push_back((*r)[c]);
      m.push_back(std::move(row));
    }
    const std::int64_t d = small_det(std::move(m));
    b[drop] = (drop % 2 == 0) ? d : -d;
  }
  std::int64_t g = 0;
  for (auto x : b) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) return b;
  for (auto& x : b) x /= g;
  const auto first = std::find_if(b.begin(), b.end(), [](std::int64_t x) { return x != 0; });
  if (*first < 0)
    for (auto& x : b) x = -x;
  return b;
}

std::vector<RatVector> distinct_directions(const EncodingGeometry& g) {
  std::set<RatVector> dirs;
  for (const auto& d : g.diffs)
    if (!is_zero(d)) dirs.insert(primitive_normalized(d));
  return {dirs.begin(), dirs.end()};
}

/// c^{j-1} for 1-based j in [1, n+1], zero at both ends.
RatVector padded_diff(const EncodingGeometry& g, std::size_t j) {
  if (j <= 1 || j >= g.n + 1) return RatVector(g.k);
  return g.diffs[j - 2];
}

void check_n(std::size_t n, std::size_t min, const char* who) {
  if (n < min) throw InvalidArgument(std::string(who) + ": n must be at least " + std::to_string(min));
}

}  // namespace

std::vector<RatVector> spanned_hyperplanes(const EncodingGeometry& g) {
  const auto dirs = distinct_directions(g);
  if (dirs.empty()) return {};
  const std::size_t r = g.dim_h;
  std::set<RatVector> normals;

  if (r == g.k && g.k <= 16) {
    std::vector<SmallVec> small;
    for (const auto& d : dirs) {
      SmallVec v;
      for (const auto& x : d) v.push_back(x.numerator().get_si());
      small.push_back(std::move(v));
    }
    std::set<SmallVec> found;
    std::vector<const SmallVec*> rows(r - 1);
    for_each_subset(small.size(), r - 1, [&](const std::vector<std::size_t>& idx) {
      for (std::size_t q = 0; q < idx.size(); ++q) rows[q] = &small[idx[q]];
      SmallVec b = minor_normal(rows, g.k);
      if (std::any_of(b.begin(), b.end(), [](std::int64_t x) { return x != 0; })) found.insert(std::move(b));
    });
    for (const auto& b : found) {
      RatVector v;
      for (auto x : b) v.emplace_back(x);
      normals.insert(std::move(v));
    }
  } else {
    std::vector<RatVector> chosen(r - 1);
    for_each_subset(dirs.size(), r - 1, [&](const std::vector<std::size_t>& idx) {
      for (std::size_t q = 0; q < idx.size(); ++q) chosen[q] = dirs[idx[q]];
      if (auto b = primitive_normal(chosen, g.lh_basis)) normals.insert(std::move(*b));
    });
  }
  return {normals.begin(), normals.end()};
}

std::vector<std::size_t> bound_index_set(const EncodingGeometry& g) {
  std::vector<std::size_t> j_set{1};
  for (std::size_t j = 2; j <= g.n; ++j) {
    RatMatrix rest(g.k);
    for (std::size_t i = 0; i < g.diffs.size(); ++i)
      if (i != j - 2) rest.add_row(g.diffs[i]);
    if (rank(rest) == g.dim_h) j_set.push_back(j);
  }
  if (g.n + 1 > 1) j_set.push_back(g.n + 1);
  return j_set;
}

std::vector<std::string> sos2_variable_names(std::size_t n, std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= n + 1; ++j) names.push_back("lambda" + std::to_string(j));
  for (std::size_t l = 1; l <= k; ++l) names.push_back("y" + std::to_string(l));
  return names;
}

VRep sos2_embedding(const Encoding& h) {
  const std::size_t n = h.size();
  const std::size_t k = h.bit_width();
  VRep v;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : {i, i + 1}) {
      RatVector p(n + 1 + k);
      p[j] = 1;
      for (std::size_t l = 0; l < k; ++l) p[n + 1 + l] = h.code(i)[l];
      v.vertices.push_back(std::move(p));
    }
  }
  return v;
}

SizeReport sos2_size(const Encoding& h) {
  const auto g = geometry(h);
  SizeReport r;
  r.n = g.n;
  r.k = g.k;
  r.dim_h = g.dim_h;
  r.size_g = 2 * spanned_hyperplanes(g).size();
  r.size_b = bound_index_set(g).size();
  r.num_equations = 1 + g.k - g.dim_h;
  r.size = r.size_g + r.size_b + 2 * r.num_equations;
  return r;
}

std::size_t sos2_general_size(const Encoding& h) { return 2 * spanned_hyperplanes(geometry(h)).size(); }

Sos2Build build_sos2(const Encoding& h) {
  const auto g = geometry(h);
  const std::size_t n = g.n;
  const std::size_t k = g.k;
  const std::size_t nv = n + 1 + k;
  LinearSystem s(sos2_variable_names(n, k));

  RatVector simplex(nv);
  for (std::size_t j = 0; j <= n; ++j) simplex[j] = 1;
  s.add_equation(std::move(simplex), 1);

  const RatVector h1 = h.vector(0);
  for (const auto& a : nullspace_basis(RatMatrix(g.diffs, k))) {
    RatVector row(nv);
    for (std::size_t l = 0; l < k; ++l) row[n + 1 + l] = a[l];
    s.add_equation(std::move(row), dot(a, h1));
  }

  // Values b . h^j with padding h^0 = h^1 and h^{n+1} = h^n.
  const auto normals = spanned_hyperplanes(g);
  for (const auto& b : normals) {
    std::vector<Rational> bh(n);
    for (std::size_t i = 0; i < n; ++i) bh[i] = dot(b, h.vector(i));
    RatVector lower(nv), upper(nv);
    for (std::size_t j = 1; j <= n + 1; ++j) {
      const Rational& cur = bh[std::min(j, n) - 1];
      const Rational& prev = bh[std::max<std::size_t>(j, 2) - 2];
      lower[j - 1] = std::min(cur, prev);
      upper[j - 1] = -std::max(cur, prev);
    }
    for (std::size_t l = 0; l < k; ++l) {
      lower[n + 1 + l] = -b[l];
      upper[n + 1 + l] = b[l];
    }
    s.add_inequality(std::move(lower), 0);
    s.add_inequality(std::move(upper), 0);
  }

  const auto j_set = bound_index_set(g);
  for (auto j : j_set) s.add_lower_bound(j - 1, 0);

  Sos2Build out;
  out.formulation.name = "sos2-embedding";
  out.formulation.system = std::move(s);
  for (std::size_t l = 1; l <= k; ++l) out.formulation.integer_vars.push_back("y" + std::to_string(l));
  out.report.n = n;
  out.report.k = k;
  out.report.dim_h = g.dim_h;
  out.report.size_g = 2 * normals.size();
  out.report.size_b = j_set.size();
  out.report.num_equations = 1 + k - g.dim_h;
  out.report.size = out.report.size_g + out.report.size_b + 2 * out.report.num_equations;
  return out;
}

Formulation padberg(std::size_t n) {
  check_n(n, 2, "padberg");
  const std::size_t nv = 2 * n + 1;
  LinearSystem s(sos2_variable_names(n, n));
  RatVector lam(nv), ys(nv);
  for (std::size_t j = 0; j <= n; ++j) lam[j] = 1;
  for (std::size_t i = 0; i < n; ++i) ys[n + 1 + i] = 1;
  s.add_equation(std::move(lam), 1);
  s.add_equation(std::move(ys), 1);
  for (std::size_t l = 1; l < n; ++l) {
    RatVector head(nv), tail(nv);
    for (std::size_t j = 1; j <= l; ++j) head[j - 1] = 1;
    for (std::size_t i = 1; i <= l; ++i) head[n + i] = -1;
    for (std::size_t j = l + 2; j <= n + 1; ++j) tail[j - 1] = 1;
    for (std::size_t i = l + 1; i <= n; ++i) tail[n + i] = -1;
    s.add_inequality(std::move(head), 0);
    s.add_inequality(std::move(tail), 0);
  }
  s.add_lower_bound(0, 0);
  s.add_lower_bound(n, 0);
  Formulation f{"padberg", std::move(s), {}, true};
  for (std::size_t i = 1; i <= n; ++i) f.integer_vars.push_back("y" + std::to_string(i));
  return f;
}

Formulation logarithmic(std::size_t n, const Encoding& gray_code) {
  if (gray_code.size() != n) throw InvalidEncoding("logarithmic: code has " + std::to_string(gray_code.size()) +
                                                   " entries, expected " + std::to_string(n));
  if (!is_gray_code(gray_code)) throw InvalidEncoding("logarithmic: encoding is not a gray code");
  const std::size_t k = gray_code.bit_width();
  const std::size_t nv = n + 1 + k;
  LinearSystem s(sos2_variable_names(n, k));
  RatVector lam(nv);
  for (std::size_t j = 0; j <= n; ++j) lam[j] = 1;
  s.add_equation(std::move(lam), 1);
  for (std::size_t l = 0; l < k; ++l) {
    RatVector lower(nv), upper(nv);
    for (std::size_t j = 1; j <= n + 1; ++j) {
      const int cur = gray_code.code(std::min(j, n) - 1)[l];
      const int prev = gray_code.code(std::max<std::size_t>(j, 2) - 2)[l];
      lower[j - 1] = std::min(cur, prev);
      upper[j - 1] = -std::max(cur, prev);
    }
    lower[n + 1 + l] = -1;
    upper[n + 1 + l] = 1;
    s.add_inequality(std::move(lower), 0);
    s.add_inequality(std::move(upper), 0);
  }
  for (std::size_t j = 0; j <= n; ++j) s.add_lower_bound(j, 0);
  Formulation f{"logarithmic", std::move(s), {}, true};
  for (std::size_t l = 1; l <= k; ++l) f.integer_vars.push_back("y" + std::to_string(l));
  return f;
}

Formulation textbook_cc(std::size_t n) {
  check_n(n, 2, "textbook_cc");
  const std::size_t nv = 2 * n + 1;
  LinearSystem s(sos2_variable_names(n, n));
  RatVector lam(nv), ys(nv);
  for (std::size_t j = 0; j <= n; ++j) lam[j] = 1;
  for (std::size_t i = 0; i < n; ++i) ys[n + 1 + i] = 1;
  s.add_equation(std::move(lam), 1);
  s.add_equation(std::move(ys), 1);
  for (std::size_t j = 1; j <= n + 1; ++j) {
    RatVector row(nv);
    row[j - 1] = 1;
    if (j >= 2) row[n + j - 1] = -1;  // y_{j-1}
    if (j <= n) row[n + j] = -1;      // y_j
    s.add_inequality(std::move(row), 0);
  }
  for (std::size_t j = 0; j <= n; ++j) s.add_lower_bound(j, 0);
  for (std::size_t i = 0; i < n; ++i) {
    s.add_lower_bound(n + 1 + i, 0);
    s.add_upper_bound(n + 1 + i, 1);
  }
  Formulation f{"textbook-cc", std::move(s), {}, false};
  for (std::size_t i = 1; i <= n; ++i) f.integer_vars.push_back("y" + std::to_string(i));
  return f;
}

namespace {

/// Whether some z satisfies g . z > 0 for every row, by Fourier-Motzkin.
bool strictly_feasible(std::vector<RatVector> rows, std::size_t nvars) {
  auto normalize = [](std::vector<RatVector>& rs) {
    std::set<RatVector> uniq;
    for (auto& r : rs) uniq.insert(primitive_positive(r));
    rs.assign(uniq.begin(), uniq.end());
    return std::none_of(rs.begin(), rs.end(), [](const RatVector& r) { return is_zero(r); });
  };
  if (!normalize(rows)) return false;
  for (std::size_t v = 0; v < nvars; ++v) {
    std::vector<RatVector> pos, neg, next;
    for (auto& r : rows) {
      const int s = r[v].sign();
      (s > 0 ? pos : s < 0 ? neg : next).push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& q : neg) next.push_back((-q[v]) * p + p[v] * q);
    rows = std::move(next);
    if (!normalize(rows)) return false;
  }
  return rows.empty();
}

}  // namespace

FaceCheck face_check(const Encoding& h, const std::vector<std::size_t>& j_minus,
                     const std::vector<std::size_t>& j_plus) {
  const auto g = geometry(h);
  const std::size_t n = g.n;
  std::set<std::size_t> minus(j_minus.begin(), j_minus.end()), plus(j_plus.begin(), j_plus.end());
  for (const auto* set : {&minus, &plus})
    for (auto j : *set)
      if (j < 1 || j > n + 1) throw InvalidArgument("face_check: index " + std::to_string(j) + " outside [1, n+1]");

  RatMatrix tight(g.k);
  std::vector<RatVector> strict;
  std::size_t union_size = 0;
  for (std::size_t j = 1; j <= n + 1; ++j) {
    const bool m = minus.count(j) != 0;
    const bool p = plus.count(j) != 0;
    union_size += (m || p);
    const RatVector c = padded_diff(g, j);
    if (m && p) tight.add_row(c);
    else if (p) strict.push_back(c);
    else if (m) strict.push_back(Rational(-1) * c);
  }

  FaceCheck out;
  out.dim = static_cast<long>(union_size) - 1 + static_cast<long>(rank(tight));

  // b = N z ranges over the vectors orthogonal to the tight differences.
  const auto basis = nullspace_basis(tight);
  std::vector<RatVector> rows;
  for (const auto& c : strict) {
    RatVector r(basis.size());
    for (std::size_t q = 0; q < basis.size(); ++q) r[q] = dot(basis[q], c);
    rows.push_back(std::move(r));
  }
  out.face = strictly_feasible(std::move(rows), basis.size());
  return out;
}

}  // namespace embform
