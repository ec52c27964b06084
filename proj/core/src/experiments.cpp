#include "embform/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>

#include "embform/error.hpp"
#include "embform/linalg.hpp"
#include "embform/sos2.hpp"

namespace embform {

namespace {

/// Runs fn(i) for i < count on a small pool. Results go to caller-owned slots,
/// so the output never depends on scheduling.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    try {
      for (std::size_t i; !failed && (i = next.fetch_add(1)) < count;) fn(i);
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::size_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

Encoding from_integers(const std::vector<std::size_t>& ids, std::size_t k) {
  std::vector<Encoding::Code> codes;
  for (auto x : ids) {
    Encoding::Code c(k);
    for (std::size_t l = 0; l < k; ++l) c[l] = static_cast<std::uint8_t>((x >> l) & 1U);
    codes.push_back(std::move(c));
  }
  return Encoding(std::move(codes), k);
}

}  // namespace

std::size_t trivial_upper_bound(std::size_t n, std::size_t k) { return 2 * binomial(n - 1, k - 1); }

ScanResult summarize(std::size_t n, std::size_t k, std::vector<ScanSample> samples) {
  std::sort(samples.begin(), samples.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  ScanResult r;
  r.n = n;
  r.k = k;
  if (!samples.empty()) {
    auto [lo, hi] = std::minmax_element(samples.begin(), samples.end(),
                                        [](const auto& a, const auto& b) { return a.size_g < b.size_g; });
    r.min = lo->size_g;
    r.max = hi->size_g;
    long double total = 0;
    for (const auto& s : samples) total += s.size_g;
    r.mean = static_cast<double>(total / samples.size());
    const std::size_t first = r.min - r.min % 2;
    r.bins.resize((r.max - first) / 2 + 1);
    for (std::size_t b = 0; b < r.bins.size(); ++b) r.bins[b].lo = first + 2 * b;
    for (const auto& s : samples) ++r.bins[(s.size_g - first) / 2].count;
  }
  r.samples = std::move(samples);
  return r;
}

ScanResult scan_binary_encodings(std::size_t k, const ScanOptions& options) {
  if (k < 1 || k > 6) throw InvalidArgument("scan: k must be between 1 and 6");
  if (options.mode == ScanMode::exhaustive && k >= 4)
    throw InvalidArgument("scan: exhaustive mode is limited to k <= 3 ((2^k)! encodings)");
  if (k >= 5 && !options.long_run) throw BudgetExceeded("scan: k >= 5 needs the long-run flag");
  const std::size_t n = std::size_t{1} << k;

  std::vector<ScanSample> samples;
  if (options.mode == ScanMode::exhaustive) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    samples.resize(perms.size());
    parallel_for(perms.size(), options.threads, [&](std::size_t i) {
      samples[i] = {i, sos2_general_size(binary_from_permutation(perms[i], k))};
    });
  } else {
    samples.resize(options.count);
    parallel_for(options.count, options.threads, [&](std::size_t i) {
      const std::uint64_t seed = options.seed + i;
      samples[i] = {seed, sos2_general_size(random_binary(n, seed))};
    });
  }
  return summarize(n, k, std::move(samples));
}

std::size_t affine_hyperplanes_of_cube(std::size_t d) {
  if (d == 0) throw InvalidArgument("affine_hyperplanes_of_cube: dimension must be positive");
  const std::size_t np = std::size_t{1} << d;
  std::vector<RatVector> points;
  for (std::size_t x = 0; x < np; ++x) {
    RatVector p(d + 1);
    for (std::size_t l = 0; l < d; ++l) p[l] = static_cast<long>((x >> l) & 1U);
    p[d] = 1;
    points.push_back(std::move(p));
  }
  std::set<RatVector> planes;
  std::vector<std::size_t> idx(d);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    RatMatrix m(d + 1);
    for (auto i : idx) m.add_row(points[i]);
    auto null = nullspace_basis(m);
    if (null.size() == 1) planes.insert(primitive_normalized(null.front()));
    std::size_t i = d;
    while (i > 0 && idx[i - 1] == np - d + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return planes.size();
}

AntigrayCheck antigray_check(std::size_t k) {
  if (k < 2 || k > 6) throw InvalidArgument("antigray_check: k must be between 2 and 6");
  AntigrayCheck c;
  c.k = k;
  c.size_g = sos2_general_size(antigray(std::size_t{1} << k));
  c.affine_hyperplanes = affine_hyperplanes_of_cube(k - 1);
  c.equal = c.size_g == 2 * c.affine_hyperplanes;
  return c;
}

MmcResult exhaustive_mmc(std::size_t n, std::size_t k_max, std::size_t max_encodings, unsigned threads) {
  if (n < 2) throw InvalidArgument("mmc: n must be at least 2");
  const std::size_t k_min = ceil_log2(n);
  if (k_max < k_min) throw InvalidArgument("mmc: k_max is below ceil(log2 n)");
  if (k_max > 16) throw BudgetExceeded("mmc: k_max too large");

  std::size_t total = 0;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    std::size_t tuples = 1;
    for (std::size_t i = 0; i < n; ++i) {
      tuples *= (std::size_t{1} << k) - i;
      if (tuples > max_encodings) break;
    }
    total += tuples;
    if (total > max_encodings)
      throw BudgetExceeded("mmc: more than " + std::to_string(max_encodings) + " encodings to enumerate");
  }

  MmcResult r;
  r.n = n;
  r.k_max = k_max;
  r.encodings = total;
  bool first = true;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    const std::size_t side = std::size_t{1} << k;
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::size_t> t(n, 0);
    while (true) {
      std::vector<std::size_t> sorted = t;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) tuples.push_back(t);
      std::size_t q = 0;
      while (q < n && t[q] == side - 1) t[q] = 0, ++q;
      if (q == n) break;
      ++t[q];
    }
    std::vector<SizeReport> reports(tuples.size());
    parallel_for(tuples.size(), threads, [&](std::size_t i) { reports[i] = sos2_size(from_integers(tuples[i], k)); });
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      const auto& rep = reports[i];
      if (first || rep.size_g < r.min_size_g) {
        r.min_size_g = rep.size_g;
        r.argmin_size_g.clear();
      }
      if (first || rep.size < r.min_size) {
        r.min_size = rep.size;
        r.argmin_size.clear();
      }
      first = false;
      if (rep.size_g == r.min_size_g && r.argmin_size_g.size() < 16) r.argmin_size_g.push_back(from_integers(tuples[i], k));
      if (rep.size == r.min_size && r.argmin_size.size() < 16) r.argmin_size.push_back(from_integers(tuples[i], k));
    }
  }
  return r;
}

}  // namespace embform
