#include "nonsplit/util.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace nonsplit {

ExtGcd ext_gcd(i64 a, i64 b) {
  i64 old_r = a, r = b;
  i64 old_s = 1, s = 0;
  i64 old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

i64 inv_mod(i64 a, i64 m) {
  if (m < 1) throw std::invalid_argument("inv_mod: modulus must be positive");
  a = mod_pos(a, m);
  auto [g, x, y] = ext_gcd(a, m);
  if (g != 1) throw std::invalid_argument("inv_mod: arguments not coprime");
  return mod_pos(x, m);
}

i64 pow_mod(i64 base, u64 exp, i64 m) {
  if (m < 1) throw std::invalid_argument("pow_mod: modulus must be positive");
  i64 result = 1 % m;
  base = mod_pos(base, m);
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

namespace {

u64 pow_mod_u(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = static_cast<u64>(static_cast<u128>(result) * base % m);
    base = static_cast<u64>(static_cast<u128>(base) * base % m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This witness set is exact for all n < 2^64.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod_u(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = static_cast<u64>(static_cast<u128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n < 0) n = -n;
  std::vector<std::pair<i64, int>> out;
  if (n < 2) return out;
  for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<i64> divisors(i64 n) {
  auto fac = factorize(n);
  std::vector<i64> out{1};
  for (auto [p, e] : fac) {
    std::size_t sz = out.size();
    i64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(i64 n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be positive");
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

i64 euler_phi(i64 n) {
  i64 result = n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    result -= result / p;
  }
  return result;
}

i64 divisor_count(i64 n) {
  i64 t = 1;
  for (auto [p, e] : factorize(n)) {
    (void)p;
    t *= e + 1;
  }
  return t;
}

bool is_squarefree(i64 n) {
  if (n == 0) return false;
  for (auto [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return false;
  }
  return true;
}

std::vector<std::uint16_t> divisor_count_sieve(u64 limit) {
  std::vector<std::uint16_t> tau(limit + 1, 0);
  for (u64 d = 1; d <= limit; ++d)
    for (u64 m = d; m <= limit; m += d) ++tau[m];
  return tau;
}

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<bool> comp(limit + 1, false);
  std::vector<u64> primes;
  for (u64 p = 2; p <= limit; ++p) {
    if (!comp[p]) {
      primes.push_back(p);
      for (u64 m = p * p; m <= limit; m += p) comp[m] = true;
    }
  }
  return primes;
}

i64 isqrt(i64 n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  if (n == 0) return 0;
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

double pairwise_sum(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  std::size_t half = n / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("least_squares: need >= 2 matching points");
  const std::size_t n = x.size();
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("least_squares: degenerate x grid");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.n = n;
  double rss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = y[i] - (fit.slope * x[i] + fit.intercept);
    rss += r * r;
  }
  fit.residual_norm = std::sqrt(rss);
  return fit;
}

void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  threads = std::min<std::size_t>(threads, n);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mu;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace nonsplit
