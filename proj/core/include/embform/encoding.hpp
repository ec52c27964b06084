#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "embform/rational.hpp"

namespace embform {

/// An ordered family (h^1, ..., h^n) of pairwise distinct 0-1 vectors of
/// width k. Codes are stored as bytes; `vector(i)` gives the rational view.
/// Indices are 0-based in the API (code(0) is h^1).
class Encoding {
 public:
  using Code = std::vector<std::uint8_t>;

  /// Validates entries in {0,1}, equal widths and pairwise distinctness.
  /// Throws InvalidEncoding otherwise.
  explicit Encoding(std::vector<Code> codes);
  Encoding(std::vector<Code> codes, std::size_t k);

  std::size_t size() const { return codes_.size(); }
  std::size_t bit_width() const { return k_; }
  const Code& code(std::size_t i) const { return codes_[i]; }
  const std::vector<Code>& codes() const { return codes_; }
  RatVector vector(std::size_t i) const;

  friend bool operator==(const Encoding&, const Encoding&) = default;

 private:
  std::vector<Code> codes_;
  std::size_t k_ = 0;
};

/// c^i = h^{i+1} - h^i, the linear space L(H) = aff(H) - h^1 and its dimension.
struct EncodingGeometry {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<RatVector> diffs;     // n - 1 vectors
  std::vector<RatVector> lh_basis;  // independent subset of diffs spanning L(H)
  std::size_t dim_h = 0;
};

EncodingGeometry geometry(const Encoding& h);

/// ceil(log2 n) for n >= 1.
std::size_t ceil_log2(std::size_t n);

Encoding unary(std::size_t n);

/// Reflected binary code truncated to n entries, k = ceil(log2 n). Bit l of
/// h^i is bit l of (i-1) xor ((i-1) >> 1).
Encoding gray(std::size_t n);

/// Anti-gray code for n = 2^k: consecutive pairs (h^{2i-1}, h^{2i}) are
/// complements (distance k) and transitions h^{2i} -> h^{2i+1} flip k-1 bits.
/// Built as (g, 0), (~g, 1) for g running over gray(n/2).
Encoding antigray(std::size_t n);

/// A uniformly random ordering of {0,1}^k (n = 2^k). The generator is
/// std::mt19937_64 seeded with `seed`, and the shuffle is Fisher-Yates with
/// rejection sampling on raw 64-bit outputs, so results do not depend on the
/// standard library's distribution implementations.
Encoding random_binary(std::size_t n, std::uint64_t seed);

/// All of {0,1}^k in the order given by a permutation of the integers
/// 0..2^k-1 (bit l of the integer is coordinate l).
Encoding binary_from_permutation(const std::vector<std::size_t>& perm, std::size_t k);

/// Consecutive codes at Hamming distance exactly one and k = ceil(log2 n).
bool is_gray_code(const Encoding& h);

/// Distances alternate k, k-1, k, ..., k with n = 2^k.
bool is_antigray_code(const Encoding& h);

/// True when an affine map sends h^i to g^i for every i and is a bijection
/// between conv(H) and conv(G).
bool affinely_equivalent(const Encoding& h, const Encoding& g);

/// Number of coordinates that change between consecutive codes exactly once.
std::size_t bits_changed_once(const Encoding& h);

std::size_t hamming_distance(const Encoding::Code& a, const Encoding::Code& b);

}  // namespace embform
