#include "double_description.hpp"

#include <algorithm>
#include <numeric>

#include "embform/error.hpp"
#include "embform/linalg.hpp"

namespace embform::detail {

namespace {

void check_deadline(const HullOptions& options) {
  if (options.deadline && std::chrono::steady_clock::now() > *options.deadline)
    throw BudgetExceeded("hull computation exceeded its time budget");
}

mpz_class dot(const IntVec& a, const IntVec& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

void make_primitive(IntVec& v) {
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

IntVec to_integer_row(const RatVector& v) { return to_primitive_integers(v); }

RatVector to_rational(const IntVec& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

std::size_t integer_rank(std::vector<IntVec> a) {
  if (a.empty()) return 0;
  const std::size_t cols = a.front().size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
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
    ++r;
  }
  return r;
}

std::vector<ConeRay> extreme_rays(const std::vector<IntVec>& rows, std::size_t d, const HullOptions& options) {
  const std::size_t n_rows = rows.size();
  for (const auto& g : rows)
    if (g.size() != d) throw InvalidArgument("cone constraint has wrong dimension");
  if (d == 0) return {};

  std::vector<std::size_t> order(n_rows);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows[a] < rows[b]; });

  // Greedy independent rows in insertion order form the initial simplex cone.
  RatMatrix ordered(d);
  for (auto i : order) ordered.add_row(to_rational(rows[i]));
  const auto basis_pos = independent_rows(ordered);
  if (basis_pos.size() != d) throw InvalidArgument("cone is not pointed (constraint rank below dimension)");
  std::vector<std::size_t> initial;
  for (auto p : basis_pos) initial.push_back(order[p]);

  RatMatrix gs(d);
  for (auto i : initial) gs.add_row(to_rational(rows[i]));
  const RatMatrix inv = inverse(gs);

  std::vector<ConeRay> rays;
  for (std::size_t k = 0; k < d; ++k) {
    RatVector col(d);
    for (std::size_t r = 0; r < d; ++r) col[r] = inv[r][k];
    ConeRay ray{to_primitive_integers(col), boost::dynamic_bitset<>(n_rows)};
    for (std::size_t q = 0; q < d; ++q)
      if (q != k) ray.zeros.set(initial[q]);
    rays.push_back(std::move(ray));
  }

  boost::dynamic_bitset<> processed(n_rows);
  for (auto i : initial) processed.set(i);

  std::size_t ticks = 0;
  for (auto row : order) {
    if (processed.test(row)) continue;
    check_deadline(options);
    const IntVec& g = rows[row];

    std::vector<std::size_t> pos, neg, zero;
    std::vector<mpz_class> val(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(g, rays[r].x);
      const int s = sgn(val[r]);
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
    }
    if (neg.empty()) {
      for (auto r : zero) rays[r].zeros.set(row);
      processed.set(row);
      continue;
    }

    std::vector<ConeRay> next;
    next.reserve(pos.size() + zero.size());
    for (auto r : pos) next.push_back(rays[r]);
    for (auto r : zero) {
      next.push_back(rays[r]);
      next.back().zeros.set(row);
    }

    for (auto p : pos) {
      for (auto q : neg) {
        if ((++ticks & 0xFFF) == 0) check_deadline(options);
        boost::dynamic_bitset<> common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        if (options.adjacency == AdjacencyTest::combinatorial) {
          for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
            if (r == p || r == q) continue;
            if (common.is_subset_of(rays[r].zeros)) adjacent = false;
          }
        } else {
          std::vector<IntVec> tight;
          for (auto b = common.find_first(); b != boost::dynamic_bitset<>::npos; b = common.find_next(b))
            tight.push_back(rows[b]);
          adjacent = integer_rank(std::move(tight)) + 2 == d;
        }
        if (!adjacent) continue;

        ConeRay ray;
        ray.x.resize(d);
        for (std::size_t j = 0; j < d; ++j) ray.x[j] = val[p] * rays[q].x[j] - val[q] * rays[p].x[j];
        make_primitive(ray.x);
        ray.zeros = std::move(common);
        ray.zeros.set(row);
        next.push_back(std::move(ray));
      }
    }
    rays = std::move(next);
    processed.set(row);
  }
  return rays;
}

}  // namespace embform::detail
