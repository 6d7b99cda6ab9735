#pragma once
// Integer and numeric utilities shared across the library.

#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nonsplit {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128_t;
using u128 = __uint128_t;

// gcd with Bezout coefficients: g = a*x + b*y, g >= 0.
struct ExtGcd {
  i64 g, x, y;
};
ExtGcd ext_gcd(i64 a, i64 b);

// Inverse of a modulo m (m >= 1). Throws if gcd(a, m) != 1.
i64 inv_mod(i64 a, i64 m);

// Nonnegative residue of a mod m (m >= 1).
inline i64 mod_pos(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

inline i64 mul_mod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(static_cast<i128>(a) * b % m);
}

i64 pow_mod(i64 base, u64 exp, i64 m);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(u64 n);

// Trial division factorization, (prime, exponent) pairs, ascending.
std::vector<std::pair<i64, int>> factorize(i64 n);

std::vector<i64> divisors(i64 n);
int mobius(i64 n);
i64 euler_phi(i64 n);
i64 divisor_count(i64 n);
bool is_squarefree(i64 n);

// Sieves. divisor_count_sieve[n] = tau(n), valid up to index `limit`.
std::vector<std::uint16_t> divisor_count_sieve(u64 limit);
std::vector<u64> primes_up_to(u64 limit);

i64 isqrt(i64 n);
inline bool is_square(i64 n) {
  if (n < 0) return false;
  i64 r = isqrt(n);
  return r * r == n;
}

// Pairwise (cascade) summation: deterministic and more accurate than
// left-to-right accumulation for long sums.
double pairwise_sum(std::span<const double> xs);

// splitmix64: tiny deterministic generator, identical output everywhere.
struct SplitMix64 {
  u64 state;
  explicit SplitMix64(u64 seed) : state(seed) {}
  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n), n >= 1.
  u64 below(u64 n) {
    u128 m = static_cast<u128>(next()) * n;
    return static_cast<u64>(m >> 64);
  }
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Ordinary least squares for y ~ slope*x + intercept.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_norm = 0.0;  // sqrt of sum of squared residuals
  std::size_t n = 0;
};
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

// Runs fn(i) for i in [0, n) on `threads` workers in fixed-size chunks.
// Work item i only writes its own slot, so results are thread-count
// independent.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace nonsplit
