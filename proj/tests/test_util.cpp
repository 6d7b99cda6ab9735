#include "nonsplit/util.hpp"

#include "doctest.h"

using namespace nonsplit;

TEST_CASE("extended gcd and modular inverse") {
  auto [g, x, y] = ext_gcd(240, 46);
  CHECK(g == 2);
  CHECK(240 * x + 46 * y == 2);
  CHECK(inv_mod(3, 7) == 5);
  CHECK(inv_mod(-1, 5) == 4);
  CHECK_THROWS_AS(inv_mod(6, 9), std::invalid_argument);
  for (i64 q : {2, 3, 5, 97, 1000003}) {
    for (i64 a = 1; a < std::min<i64>(q, 50); ++a) {
      if (std::gcd(a, q) != 1) continue;
      CHECK(mod_pos(a * inv_mod(a, q), q) == 1);
    }
  }
}

TEST_CASE("primality and factorization") {
  CHECK(is_prime(2));
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(7917));
  CHECK(is_prime(2147483647ULL));          // 2^31 - 1
  CHECK_FALSE(is_prime(3215031751ULL));    // strong pseudoprime to 2,3,5,7

  auto f = factorize(975);  // 3 * 5^2 * 13
  REQUIRE(f.size() == 3);
  CHECK(f[1] == std::pair<i64, int>{5, 2});

  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(30) == -1);
  CHECK(mobius(12) == 0);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(1) == 1);
  CHECK(divisor_count(12) == 6);
  CHECK(divisors(12) == std::vector<i64>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("tau sieve matches direct divisor counts") {
  auto tau = divisor_count_sieve(500);
  for (i64 n = 1; n <= 500; ++n) CHECK(tau[n] == divisor_count(n));
}

TEST_CASE("isqrt edge cases") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(999999999999999999LL) == 999999999);
  CHECK(is_square(49));
  CHECK_FALSE(is_square(50));
  CHECK_FALSE(is_square(-4));
}

TEST_CASE("pairwise sum is deterministic and accurate") {
  std::vector<double> xs(10001);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = 1.0 / (1.0 + i);
  double a = pairwise_sum(xs);
  double b = pairwise_sum(xs);
  CHECK(a == b);
  long double ref = 0.0L;
  for (double x : xs) ref += static_cast<long double>(x);
  CHECK(std::abs(a - static_cast<double>(ref)) < 1e-12);
}

TEST_CASE("least squares recovers an exact line") {
  std::vector<double> x{1, 2, 3, 4, 5}, y;
  for (double v : x) y.push_back(2.5 * v - 1.0);
  auto fit = least_squares(x, y);
  CHECK(fit.slope == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(fit.residual_norm < 1e-12);
}

TEST_CASE("parallel_for covers all indices once") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("splitmix64 reference values") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  SplitMix64 rng2(1234567);
  u64 v = rng2.below(100);
  CHECK(v < 100);
}
