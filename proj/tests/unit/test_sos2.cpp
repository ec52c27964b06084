#include <random>
#include <set>

#include "doctest.h"
#include "embform/error.hpp"
#include "embform/polyhedra.hpp"
#include "embform/sos2.hpp"
#include "embform/verify.hpp"
#include "golden.hpp"
#include "oracle.hpp"

using namespace embform;

namespace {

// Hyperplanes of L(H) spanned by difference vectors, by trying every
// (dim - 1)-subset of the differences.
std::set<RatVector> hyperplanes_by_subsets(const Encoding& h) {
  const auto g = geometry(h);
  std::vector<RatVector> diffs;
  for (const auto& c : g.diffs)
    if (!is_zero(c)) diffs.push_back(c);
  std::set<RatVector> out;
  if (g.dim_h == 0) return out;
  // Normals live in L(H): orthogonal complement of the subset within L(H).
  oracle::Mat lh;
  for (const auto& b : g.lh_basis) lh.push_back(oracle::from_rat(b));
  oracle::subsets(diffs.size(), g.dim_h - 1, [&](const std::vector<std::size_t>& s) {
    oracle::Mat sub;
    for (auto i : s) sub.push_back(oracle::from_rat(diffs[i]));
    if (oracle::rank(sub, h.bit_width()) != g.dim_h - 1) return;
    // Solve for b = sum t_r lh_r with b . d = 0 for every d in the subset.
    oracle::Mat m;
    for (const auto& d : sub) {
      oracle::Vec row;
      for (const auto& b : lh) {
        mpq_class v = 0;
        for (std::size_t j = 0; j < d.size(); ++j) v += b[j] * d[j];
        row.push_back(v);
      }
      m.push_back(row);
    }
    const auto ns = oracle::nullspace(m, lh.size());
    REQUIRE(ns.size() == 1);
    oracle::Vec b(h.bit_width(), 0);
    for (std::size_t r = 0; r < lh.size(); ++r)
      for (std::size_t j = 0; j < b.size(); ++j) b[j] += ns[0][r] * lh[r][j];
    out.insert(primitive_normalized(oracle::to_rat(b)));
  });
  return out;
}

std::vector<Encoding> sample_encodings() {
  std::vector<Encoding> out{unary(5), gray(6), antigray(8), random_binary(8, 3), Encoding(golden::nine_codes())};
  return out;
}

}  // namespace

TEST_CASE("golden systems") {
  CHECK(golden::equivalent(build_sos2(unary(4)).formulation.system, golden::unary4()));
  CHECK(golden::equivalent(padberg(4).system, golden::unary4()));
  const Encoding log_codes({{0, 1}, {1, 1}, {1, 0}, {0, 0}});
  CHECK(golden::equivalent(build_sos2(log_codes).formulation.system, golden::log4()));
  // gray(4) is the same code with its second bit complemented.
  CHECK(golden::equivalent(build_sos2(gray(4)).formulation.system, golden::complement(golden::log4(), 6)));
  CHECK(golden::equivalent(logarithmic(4, gray(4)).system, build_sos2(gray(4)).formulation.system));
  CHECK(golden::equivalent(build_sos2(Encoding(golden::nine_codes())).formulation.system, golden::nine()));
  for (const auto& h : {unary(4), gray(4), Encoding(golden::nine_codes())})
    CHECK(golden::irredundant(build_sos2(h).formulation.system));
}

TEST_CASE("spanned hyperplanes of the nine-segment example") {
  const auto b = spanned_hyperplanes(geometry(Encoding(golden::nine_codes())));
  CHECK(b.size() == 5);
  std::set<RatVector> got(b.begin(), b.end());
  CHECK(got.count(RatVector{1, 0, 0, 1}));
  CHECK(got.count(RatVector{1, -1, -1, 1}));
  CHECK(got.count(RatVector{1, 0, 0, 0}));
  CHECK(got.count(RatVector{0, 0, 1, 0}));
  CHECK(got.count(RatVector{1, 0, -1, 1}));
  CHECK(bound_index_set(geometry(Encoding(golden::nine_codes()))) == std::vector<std::size_t>{1, 2, 3, 4, 5, 7, 8, 9, 10});
}

TEST_CASE("spanned hyperplanes agree with subset enumeration") {
  for (const auto& h : sample_encodings()) {
    const auto b = spanned_hyperplanes(geometry(h));
    CHECK(std::set<RatVector>(b.begin(), b.end()) == hyperplanes_by_subsets(h));
    CHECK(sos2_general_size(h) == 2 * b.size());
  }
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto h = random_binary(16, s);
    CHECK(sos2_general_size(h) == 2 * hyperplanes_by_subsets(h).size());
  }
}

TEST_CASE("bound sets") {
  CHECK(bound_index_set(geometry(unary(4))) == std::vector<std::size_t>{1, 5});
  CHECK(bound_index_set(geometry(gray(4))) == std::vector<std::size_t>{1, 2, 4, 5});
}

TEST_CASE("closed-form sizes") {
  for (std::size_t n : {4, 8, 16, 32}) {
    const auto u = sos2_size(unary(n));
    CHECK(u.size_g == 2 * (n - 1));
    CHECK(u.size_b == 2);
    CHECK(u.size == 2 * n + 4);
    const auto g = sos2_size(gray(n));
    CHECK(g.size_g == 2 * ceil_log2(n));
  }
  const auto r = sos2_size(gray(4));
  CHECK(r.size_g == 4);
  CHECK(r.size_b == 4);  // lambda_3 >= 0 is implied
  CHECK(r.num_equations == 1);
  CHECK(r.size == 10);
}

TEST_CASE("size identities") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 40; ++t) {
    const auto h = random_binary(std::size_t{1} << (1 + rng() % 4), rng());
    const auto s = sos2_size(h);
    CHECK(s.size == s.size_g + s.size_b + 2 * s.num_equations);
    CHECK(s.num_equations == 1 + s.k - s.dim_h);
    CHECK(s.size_g >= 2 * ceil_log2(h.size()));
    const auto b = build_sos2(h);
    CHECK(b.report == s);
    CHECK(b.formulation.system.num_general() == s.size_g);
    CHECK(b.formulation.system.num_bounds() == s.size_b);
  }
}

TEST_CASE("closed form equals the hull") {
  for (const auto& h : sample_encodings()) {
    const auto b = build_sos2(h);
    const HRep hull = vrep_to_hrep(sos2_embedding(h));
    CHECK(same_polyhedron(minimize_hrep(to_hrep(b.formulation.system)), hull));
    CHECK(count_facets(hull).size == b.report.size);
  }
}

TEST_CASE("sizes are invariant under bit permutations and complements") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const auto h = random_binary(8, rng());
    std::vector<std::size_t> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::size_t flip = rng() % 3;
    std::vector<Encoding::Code> moved;
    for (const auto& c : h.codes()) {
      Encoding::Code d(3);
      for (std::size_t l = 0; l < 3; ++l) d[perm[l]] = c[l];
      d[flip] ^= 1;
      moved.push_back(d);
    }
    CHECK(sos2_size(Encoding(moved)) == sos2_size(h));
    std::vector<Encoding::Code> rev(h.codes().rbegin(), h.codes().rend());
    CHECK(sos2_size(Encoding(rev)).size == sos2_size(h).size);
  }
}

TEST_CASE("face predicate") {
  const auto all = std::vector<std::size_t>{1, 2, 3, 4, 5};
  const auto whole = face_check(unary(4), all, all);
  CHECK(whole.face);
  CHECK(whole.dim == 7);
  const auto bound = face_check(unary(4), {2, 3, 4, 5}, {2, 3, 4, 5});
  CHECK(bound.face);
  CHECK(bound.dim == 6);
  // Dropping lambda_3 from unary(4) selects a face of lower dimension.
  const auto low = face_check(unary(4), {1, 2, 4, 5}, {1, 2, 4, 5});
  CHECK(low.face);
  CHECK(low.dim < 6);
  CHECK(face_check(unary(4), {}, {}).dim == -1);
}

TEST_CASE("logarithmic formulation needs a gray code") {
  CHECK_THROWS_AS(logarithmic(4, antigray(4)), InvalidEncoding);
  CHECK_THROWS_AS(logarithmic(5, gray(4)), InvalidEncoding);
}

TEST_CASE("textbook and incremental formulations") {
  CHECK(is_ideal(padberg(5)));
  CHECK_FALSE(textbook_cc(3).ideal);
  CHECK(check_slices(padberg(4), unary(4), sos2_family(4)).ok);
  CHECK(check_slices(textbook_cc(4), unary(4), sos2_family(4)).ok);
}
