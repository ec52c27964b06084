#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "embform/encoding.hpp"

namespace embform {

enum class ScanMode { exhaustive, sample };

struct ScanOptions {
  ScanMode mode = ScanMode::sample;
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  /// Required for k >= 5.
  bool long_run = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct ScanSample {
  /// Permutation rank (exhaustive) or the seed handed to random_binary.
  std::uint64_t id = 0;
  std::size_t size_g = 0;
  friend bool operator==(const ScanSample&, const ScanSample&) = default;
};

/// Sizes in [lo, lo + 2).
struct HistogramBin {
  std::size_t lo = 0;
  std::size_t count = 0;
  friend bool operator==(const HistogramBin&, const HistogramBin&) = default;
};

struct ScanResult {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<ScanSample> samples;  // sorted by id
  std::size_t min = 0;
  std::size_t max = 0;
  double mean = 0;
  std::vector<HistogramBin> bins;
  friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

/// size_G over binary encodings of the SOS2 family with n = 2^k segments.
/// Exhaustive mode walks all (2^k)! orderings in lexicographic permutation
/// order and is limited to k <= 3; sample mode uses random_binary(n, seed + i)
/// for i < count. Throws InvalidArgument for k outside [1, 6] or exhaustive
/// k >= 4, and BudgetExceeded for k >= 5 without long_run.
ScanResult scan_binary_encodings(std::size_t k, const ScanOptions& options);

/// Histogram and summary statistics for a list of samples.
ScanResult summarize(std::size_t n, std::size_t k, std::vector<ScanSample> samples);

/// 2 * C(n - 1, k - 1).
std::size_t trivial_upper_bound(std::size_t n, std::size_t k);

struct AntigrayCheck {
  std::size_t k = 0;
  std::size_t size_g = 0;
  std::size_t affine_hyperplanes = 0;
  bool equal = false;
};

/// Compares size_G for antigray(2^k) with twice the number of affine
/// hyperplanes spanned by points of {0,1}^(k-1), counted by enumerating
/// (k-1)-subsets. Requires 2 <= k <= 6.
AntigrayCheck antigray_check(std::size_t k);

/// Distinct affine hyperplanes of R^d spanned by points of {0,1}^d.
std::size_t affine_hyperplanes_of_cube(std::size_t d);

struct MmcResult {
  std::size_t n = 0;
  std::size_t k_max = 0;
  std::size_t encodings = 0;
  std::size_t min_size_g = 0;
  std::size_t min_size = 0;
  std::vector<Encoding> argmin_size_g;  // at most 16 witnesses each
  std::vector<Encoding> argmin_size;
};

/// Minimum size_G and size of the SOS2 embedding over every ordered tuple of
/// n distinct vectors in {0,1}^k, ceil(log2 n) <= k <= k_max. Throws
/// BudgetExceeded when more than `max_encodings` tuples would be visited.
MmcResult exhaustive_mmc(std::size_t n, std::size_t k_max, std::size_t max_encodings = 2'000'000,
                         unsigned threads = 0);

}  // namespace embform
