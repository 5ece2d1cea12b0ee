#include <random>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "rackmod/smith.hpp"

using namespace rackmod;

namespace {

std::vector<long long> as_longs(const SmithResult& s) {
  std::vector<long long> out;
  for (const auto& f : s.factors) out.push_back(f.convert_to<long long>());
  return out;
}

}  // namespace

TEST_CASE("smith_normal_form on fixed matrices") {
  auto zero = smith_normal_form(std::vector<std::vector<std::int64_t>>{{0, 0}, {0, 0}, {0, 0}});
  CHECK(zero.rank == 0);
  CHECK(zero.factors.empty());

  auto id = smith_normal_form({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(as_longs(id) == std::vector<long long>{1, 1, 1});

  // rows: subtract, then gcd(2,3) = 1 and lcm = 6
  auto diag = smith_normal_form({{2, 0}, {0, 3}});
  CHECK(as_longs(diag) == std::vector<long long>{1, 6});
  CHECK(diag.rank == 2);

  CHECK(smith_normal_form(std::vector<std::vector<std::int64_t>>{}).rank == 0);
}

TEST_CASE("smith_normal_form agrees with determinantal divisors on random matrices") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4), dim(1, 4);
  for (int trial = 0; trial < 400; ++trial) {
    const int rows = dim(rng), cols = dim(rng);
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
    std::vector<std::vector<long long>> copy(rows, std::vector<long long>(cols));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) copy[r][c] = m[r][c] = trial % 3 == 0 ? 2 * entry(rng) : entry(rng);
    auto expected = oracle::invariant_factors_by_minors(copy);
    auto got = smith_normal_form(m);
    REQUIRE(as_longs(got) == expected);
  }
}

TEST_CASE("smith_normal_form falls back to arbitrary precision") {
  const std::int64_t a = (std::int64_t{1} << 62) - 1, b = (std::int64_t{1} << 62) - 3;
  auto s = smith_normal_form({{a, 0}, {0, b}});
  CHECK(s.used_bigint);
  REQUIRE(s.factors.size() == 2);
  CHECK(s.factors[0] == 1);
  CHECK(s.factors[1] == BigInt(a) * BigInt(b));
}

TEST_CASE("SparseMatrix product") {
  auto a = SparseMatrix::from_dense({{1, 2}, {0, 1}});
  auto b = SparseMatrix::from_dense({{1, -2}, {0, 1}});
  CHECK(a.multiply(b).to_dense() == std::vector<std::vector<std::int64_t>>{{1, 0}, {0, 1}});
  CHECK(SparseMatrix::from_dense({{0, 0}}).is_zero());
}
