#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpt/lattice.hpp"

using namespace qpt;

namespace {

Bicharacter bichar(std::initializer_list<std::initializer_list<long long>> rows) {
  return Bicharacter(to_rat(int_mat(rows)));
}

// Lattice spanned by the box vectors of the kernel, for cross-checking.
std::vector<IntVec> box_kernel(const IntMat& l, long long bound) {
  const Eigen::Index m = l.cols();
  std::vector<IntVec> out;
  std::vector<long long> v(static_cast<size_t>(m), -bound);
  while (true) {
    IntVec iv(m);
    for (Eigen::Index i = 0; i < m; ++i) iv(i) = Int(v[static_cast<size_t>(i)]);
    if (is_zero_vec(l * iv) && !is_zero_vec(iv)) out.push_back(iv);
    Eigen::Index pos = 0;
    while (pos < m && v[static_cast<size_t>(pos)] == bound) v[static_cast<size_t>(pos++)] = -bound;
    if (pos == m) break;
    ++v[static_cast<size_t>(pos)];
  }
  return out;
}

}  // namespace

TEST_CASE("bichar_eval on standard basis reads off the matrix") {
  const Bicharacter omega = bichar({{0, 1}, {-1, 0}});
  CHECK(bichar_eval(omega, int_vec({1, 0}), int_vec({0, 1})) == Rat(1));
  CHECK(bichar_eval(omega, int_vec({0, 1}), int_vec({1, 0})) == Rat(-1));
}

TEST_CASE("bichar_eval vanishes on equal arguments") {
  const Bicharacter omega = bichar({{0, 2}, {-2, 0}});
  CHECK(bichar_eval(omega, int_vec({3, -2}), int_vec({3, -2})) == Rat(0));
}

TEST_CASE("bichar_eval is the full bilinear pairing") {
  const Bicharacter omega = bichar({{0, 1}, {-1, 0}});
  // alpha^t L beta with alpha = (2,1), beta = (1,3)
  CHECK(bichar_eval(omega, int_vec({2, 1}), int_vec({1, 3})) == Rat(5));
}

TEST_CASE("bichar_eval rejects mismatched dimensions") {
  const Bicharacter omega = bichar({{0, 1}, {-1, 0}});
  CHECK_THROWS_AS(bichar_eval(omega, int_vec({1, 0, 0}), int_vec({0, 1})), PreconditionError);
}

TEST_CASE("bicharacter constructor validates skewsymmetry") {
  CHECK_THROWS_AS(Bicharacter(to_rat(int_mat({{0, 1}, {1, 0}}))), PreconditionError);
  CHECK_THROWS_AS(Bicharacter(to_rat(int_mat({{1, 1}, {-1, 0}}))), PreconditionError);
}

TEST_CASE("bilinearity and skewsymmetry hold on random inputs") {
  SplitMix64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const Eigen::Index m = rng.range(1, 4);
    RatMat l = RatMat::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = i + 1; j < m; ++j) {
        l(i, j) = Rat(Int(rng.range(-3, 3)), Int(rng.range(1, 3)));
        l(j, i) = -l(i, j);
      }
    const Bicharacter omega{std::move(l)};
    IntVec a(m), a2(m), b(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      a(i) = Int(rng.range(-3, 3));
      a2(i) = Int(rng.range(-3, 3));
      b(i) = Int(rng.range(-3, 3));
    }
    CHECK(bichar_eval(omega, a, b) == -bichar_eval(omega, b, a));
    CHECK(bichar_eval(omega, a + a2, b) ==
          bichar_eval(omega, a, b) + bichar_eval(omega, a2, b));
  }
}

TEST_CASE("radical of a nondegenerate form is trivial") {
  const Sublattice rad = radical(bichar({{0, 1}, {-1, 0}}));
  CHECK(rad.rank() == 0);
}

TEST_CASE("radical with an obvious kernel direction") {
  const Sublattice rad = radical(bichar({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}));
  REQUIRE(rad.rank() == 1);
  CHECK(vec_eq(rad.basis().row(0).transpose(), int_vec({0, 0, 1})));
}

TEST_CASE("radical of the cyclic 3x3 form is the diagonal") {
  const IntMat l = int_mat({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
  const Sublattice rad = radical(Bicharacter(to_rat(l)));
  REQUIRE(rad.rank() == 1);
  CHECK(vec_eq(rad.basis().row(0).transpose(), int_vec({1, 1, 1})));
  // Brute-force box oracle: every kernel vector in the box lies in the lattice.
  for (const auto& v : box_kernel(l, 4)) CHECK(rad.contains(v));
}

TEST_CASE("radical handles rational entries by clearing denominators") {
  RatMat l = RatMat::Zero(2, 2);
  l(0, 1) = Rat(Int(3), Int(2));
  l(1, 0) = -l(0, 1);
  CHECK(radical(Bicharacter(std::move(l))).rank() == 0);
}

TEST_CASE("center generators mirror the radical basis") {
  CHECK(center_generators(bichar({{0, 1}, {-1, 0}})).empty());

  const auto zero_gens = center_generators(bichar({{0, 0}, {0, 0}}));
  REQUIRE(zero_gens.size() == 2);
  CHECK(vec_eq(zero_gens[0], int_vec({1, 0})));
  CHECK(vec_eq(zero_gens[1], int_vec({0, 1})));

  const auto cyc = center_generators(bichar({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}));
  REQUIRE(cyc.size() == 1);
  CHECK(vec_eq(cyc[0], int_vec({1, 1, 1})));
}

TEST_CASE("weighted_degree is the weighted coordinate sum") {
  CHECK(weighted_degree(GradingVector(int_vec({1, 1})), int_vec({2, 3})) == Int(5));
  CHECK(weighted_degree(GradingVector(int_vec({1, 2})), int_vec({3, -1})) == Int(1));
  CHECK(weighted_degree(GradingVector(int_vec({2, 3, 5})), int_vec({1, 1, 1})) == Int(10));
  CHECK_THROWS_AS(weighted_degree(GradingVector(int_vec({1, 1})), int_vec({1})),
                  PreconditionError);
  CHECK_THROWS_AS(GradingVector(int_vec({1, 0})), PreconditionError);
}

TEST_CASE("kernel bases are saturated") {
  SplitMix64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const Eigen::Index m = rng.range(2, 5);
    IntMat l = IntMat::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = i + 1; j < m; ++j) {
        l(i, j) = Int(rng.range(-3, 3));
        l(j, i) = -l(i, j);
      }
    const Sublattice rad = radical(Bicharacter(to_rat(l)));
    for (Eigen::Index k = 0; k < rad.rank(); ++k) {
      const IntVec v = rad.basis().row(k).transpose();
      for (long long p : {2, 3, 5, 7}) {
        bool divisible = true;
        for (Eigen::Index i = 0; i < m && divisible; ++i)
          divisible = (v(i) % Int(p)).is_zero();
        if (divisible) {
          IntVec w(m);
          for (Eigen::Index i = 0; i < m; ++i) w(i) = v(i) / Int(p);
          CHECK(rad.contains(w));
        }
      }
    }
  }
}

TEST_CASE("saturated_span saturates index-p sublattices") {
  // (2,0) and (0,2) span an index-4 sublattice; the saturation is all of Z^2.
  const Sublattice sat =
      Sublattice::saturated_span(2, {int_vec({2, 0}), int_vec({0, 2})});
  CHECK(sat.rank() == 2);
  CHECK(sat.contains(int_vec({1, 0})));
  CHECK(sat.contains(int_vec({0, 1})));

  const Sublattice line = Sublattice::saturated_span(3, {int_vec({2, 2, 4})});
  REQUIRE(line.rank() == 1);
  CHECK(vec_eq(line.basis().row(0).transpose(), int_vec({1, 1, 2})));
}

TEST_CASE("hermite form is canonical under row shuffles") {
  const IntMat a = int_mat({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  const IntMat b = int_mat({{10, 4, 16}, {2, 4, 4}, {-6, 6, 12}});
  CHECK(mat_eq(hnf_rows(a), hnf_rows(b)));
}

TEST_CASE("sublattice equality is pure data comparison") {
  const auto l1 = Sublattice::saturated_span(2, {int_vec({1, 1}), int_vec({1, -1})});
  const auto l2 = Sublattice::saturated_span(2, {int_vec({1, 0}), int_vec({0, 1})});
  CHECK(l1 == l2);
}
