#include <random>

#include "burnside/linalg.hpp"
#include "doctest.h"
#include "fixture.hpp"

using namespace burnside;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(rows, std::vector<long long>(cols));
  for (auto& row : m)
    for (auto& v : row) v = d(rng);
  return m;
}

std::vector<std::vector<Rational>> to_q(const IntMatrix& m) {
  std::vector<std::vector<Rational>> q;
  for (const auto& row : m) {
    q.emplace_back();
    for (long long v : row) q.back().emplace_back(static_cast<long>(v));
  }
  return q;
}

}  // namespace

TEST_CASE("determinants agree with rational elimination") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 7; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = random_matrix(rng, n, n, 9);
      CHECK(Rational(determinant(to_zmatrix(m))) == oracle::determinant(to_q(m)));
    }
  CHECK(determinant(to_zmatrix({{2, 0}, {1, 1}})) == 2);
}

TEST_CASE("Smith invariants agree with determinantal divisors") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + trial % 5, cols = 1 + (trial / 5) % 5;
    auto m = random_matrix(rng, rows, cols, trial % 3 == 0 ? 2 : 6);
    CAPTURE(trial);
    CHECK(smith_invariants(to_zmatrix(m)) == oracle::determinantal_invariants(m));
  }
  // Zero and rank-deficient matrices.
  CHECK(smith_invariants(to_zmatrix({{0, 0}, {0, 0}})).empty());
  CHECK(smith_invariants(to_zmatrix({{2, 4}, {1, 2}})) == std::vector<Integer>{1});
  CHECK(smith_invariants(to_zmatrix({{2, 0}, {0, 3}})) == std::vector<Integer>{1, 6});
}

TEST_CASE("Smith invariants of mark matrices") {
  for (const char* g : {"C2", "C4", "S3", "C2xC2"})
    for (const char* f : fixture::kFunctors) {
      CAPTURE(std::string(g));
      CAPTURE(std::string(f));
      const auto r = fixture::make(g, f);
      if (r.basis->rank() > 9) continue;
      CHECK(smith_invariants(to_zmatrix(r.maps->marks())) ==
            oracle::determinantal_invariants(r.maps->marks()));
    }
}

TEST_CASE("left solves") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 6;
    const auto a = random_matrix(rng, n, n, 5);
    std::vector<Rational> b(n);
    for (int i = 0; i < n; ++i) b[i] = Rational(static_cast<long>(i * 3 - 2), static_cast<unsigned long>(1 + i));
    for (auto& q : b) q.canonicalize();
    const auto ours = solve_left(to_q(a), b);
    const auto ref = oracle::solve_left(a, b);
    REQUIRE(ours.has_value() == ref.has_value());
    if (ours) CHECK(*ours == *ref);
  }
  CHECK_FALSE(solve_left({{1, 2}, {2, 4}}, {1, 1}).has_value());
}

TEST_CASE("p-exponents") {
  CHECK(p_exponents({Integer(8), Integer(1), Integer(12)}, 2) == std::vector<unsigned long>{2, 3});
  CHECK(p_exponents({Integer(9), Integer(6)}, 3) == std::vector<unsigned long>{1, 2});
}
