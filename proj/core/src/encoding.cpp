#include "embform/encoding.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "embform/error.hpp"
#include "embform/linalg.hpp"

namespace embform {

namespace {

std::size_t width_of(const std::vector<Encoding::Code>& codes) { return codes.empty() ? 0 : codes.front().size(); }

}  // namespace

Encoding::Encoding(std::vector<Code> codes) : k_(width_of(codes)) {
  *this = Encoding(std::move(codes), k_);
}

Encoding::Encoding(std::vector<Code> codes, std::size_t k) : codes_(std::move(codes)), k_(k) {
  if (codes_.empty()) throw InvalidEncoding("encoding must contain at least one code");
  for (const auto& c : codes_) {
    if (c.size() != k_) throw InvalidEncoding("encoding codes have different widths");
    for (auto b : c)
      if (b > 1) throw InvalidEncoding("encoding entries must be 0 or 1");
  }
  std::set<Code> seen(codes_.begin(), codes_.end());
  if (seen.size() != codes_.size()) throw InvalidEncoding("encoding codes are not pairwise distinct");
}

RatVector Encoding::vector(std::size_t i) const {
  const auto& c = codes_.at(i);
  RatVector v(c.size());
  for (std::size_t l = 0; l < c.size(); ++l) v[l] = c[l];
  return v;
}

EncodingGeometry geometry(const Encoding& h) {
  EncodingGeometry g;
  g.n = h.size();
  g.k = h.bit_width();
  for (std::size_t i = 0; i + 1 < h.size(); ++i) g.diffs.push_back(h.vector(i + 1) - h.vector(i));
  const RatMatrix dm(g.diffs, g.k);
  for (auto i : independent_rows(dm)) g.lh_basis.push_back(g.diffs[i]);
  g.dim_h = g.lh_basis.size();
  return g;
}

std::size_t ceil_log2(std::size_t n) {
  if (n == 0) throw InvalidArgument("ceil_log2(0)");
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

Encoding::Code bits_of(std::size_t value, std::size_t k) {
  Encoding::Code c(k);
  for (std::size_t l = 0; l < k; ++l) c[l] = static_cast<std::uint8_t>((value >> l) & 1U);
  return c;
}

}  // namespace

Encoding unary(std::size_t n) {
  if (n == 0) throw InvalidArgument("unary: n must be positive");
  std::vector<Encoding::Code> codes(n, Encoding::Code(n, 0));
  for (std::size_t i = 0; i < n; ++i) codes[i][i] = 1;
  return Encoding(std::move(codes), n);
}

Encoding gray(std::size_t n) {
  if (n == 0) throw InvalidArgument("gray: n must be positive");
  const std::size_t k = ceil_log2(n);
  std::vector<Encoding::Code> codes;
  codes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) codes.push_back(bits_of(i ^ (i >> 1), k));
  return Encoding(std::move(codes), k);
}

Encoding antigray(std::size_t n) {
  if (n < 2 || !is_power_of_two(n)) throw InvalidArgument("antigray: n must be a power of two >= 2");
  const Encoding base = gray(n / 2);
  const std::size_t k = base.bit_width() + 1;
  std::vector<Encoding::Code> codes;
  codes.reserve(n);
  for (const auto& g : base.codes()) {
    Encoding::Code a = g;
    a.push_back(0);
    Encoding::Code b(k);
    for (std::size_t l = 0; l < k; ++l) b[l] = static_cast<std::uint8_t>(1 - a[l]);
    codes.push_back(std::move(a));
    codes.push_back(std::move(b));
  }
  return Encoding(std::move(codes), k);
}

Encoding binary_from_permutation(const std::vector<std::size_t>& perm, std::size_t k) {
  if (perm.size() != (std::size_t{1} << k)) throw InvalidArgument("binary_from_permutation: size must be 2^k");
  std::vector<Encoding::Code> codes;
  codes.reserve(perm.size());
  for (auto v : perm) codes.push_back(bits_of(v, k));
  return Encoding(std::move(codes), k);
}

Encoding random_binary(std::size_t n, std::uint64_t seed) {
  if (!is_power_of_two(n)) throw InvalidArgument("random_binary: n must be a power of two");
  const std::size_t k = ceil_log2(n);
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i-- > 1;) {
    const std::uint64_t bound = i + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    std::uint64_t x;
    do x = rng(); while (x > limit);
    std::swap(perm[i], perm[static_cast<std::size_t>(x % bound)]);
  }
  return binary_from_permutation(perm, k);
}

std::size_t hamming_distance(const Encoding::Code& a, const Encoding::Code& b) {
  std::size_t d = 0;
  for (std::size_t l = 0; l < a.size(); ++l) d += a[l] != b[l];
  return d;
}

bool is_gray_code(const Encoding& h) {
  if (h.bit_width() != ceil_log2(h.size())) return false;
  for (std::size_t i = 0; i + 1 < h.size(); ++i)
    if (hamming_distance(h.code(i), h.code(i + 1)) != 1) return false;
  return true;
}

bool is_antigray_code(const Encoding& h) {
  const std::size_t n = h.size();
  const std::size_t k = h.bit_width();
  if (!is_power_of_two(n) || n < 2 || k != ceil_log2(n)) return false;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t want = (i % 2 == 0) ? k : k - 1;
    if (hamming_distance(h.code(i), h.code(i + 1)) != want) return false;
  }
  return true;
}

bool affinely_equivalent(const Encoding& h, const Encoding& g) {
  if (h.size() != g.size()) throw InvalidArgument("affinely_equivalent: encodings differ in size");
  if (geometry(h).dim_h != geometry(g).dim_h) return false;
  // Each output coordinate r needs (M_r, t_r) with M_r . h^i + t_r = g^i_r.
  RatMatrix lhs(h.bit_width() + 1);
  for (std::size_t i = 0; i < h.size(); ++i) {
    RatVector row = h.vector(i);
    row.push_back(1);
    lhs.add_row(std::move(row));
  }
  for (std::size_t r = 0; r < g.bit_width(); ++r) {
    RatVector rhs(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) rhs[i] = g.code(i)[r];
    if (!solve(lhs, rhs)) return false;
  }
  return true;
}

std::size_t bits_changed_once(const Encoding& h) {
  std::size_t count = 0;
  for (std::size_t l = 0; l < h.bit_width(); ++l) {
    std::size_t changes = 0;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) changes += h.code(i)[l] != h.code(i + 1)[l];
    count += changes == 1;
  }
  return count;
}

}  // namespace embform
