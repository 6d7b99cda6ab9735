#include "nonsplit/special.hpp"

#include <cmath>
#include <stdexcept>

namespace nonsplit {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Lanczos g = 7, n = 9 coefficient set.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

std::complex<double> lgamma_positive(std::complex<double> z) {
  // Valid for Re z > 0 (used with Re z >= 0.5 after reflection).
  z -= 1.0;
  std::complex<double> a = kLanczos[0];
  std::complex<double> t = z + 7.5;
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

// Bernoulli numbers B_2, B_4, ..., B_24.
constexpr long double kBern2j[12] = {
    1.0L / 6,           -1.0L / 30,          1.0L / 42,
    -1.0L / 30,         5.0L / 66,           -691.0L / 2730,
    7.0L / 6,           -3617.0L / 510,      43867.0L / 798,
    -174611.0L / 330,   854513.0L / 138,     -236364091.0L / 2730};

}  // namespace

std::complex<double> lgamma_complex(std::complex<double> z) {
  if (z.real() < 0.5) {
    // Reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z).
    std::complex<double> s = std::sin(kPi * z);
    return std::log(kPi) - std::log(s) - lgamma_positive(1.0 - z);
  }
  return lgamma_positive(z);
}

double digamma(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw std::invalid_argument("digamma: pole at non-positive integer");
  double result = 0.0;
  // Reflection for negative arguments.
  if (x < 0.0) return digamma(1.0 - x) - kPi / std::tan(kPi * x);
  while (x < 12.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  double inv = 1.0 / x, inv2 = inv * inv;
  result += std::log(x) - 0.5 * inv;
  double p = inv2;
  for (int j = 0; j < 8; ++j) {
    result -= static_cast<double>(kBern2j[j]) / (2.0 * (j + 1)) * p;
    p *= inv2;
  }
  return result;
}

namespace {

// Shared Euler-Maclaurin core. Computes Z(s,x) = zeta(s,x) - 1/(s-1) and its
// s-derivative when `regularized`, else the plain pair at s != 1.
HurwitzValue hurwitz_em(double s, double x, bool regularized) {
  if (x <= 0.0) throw std::invalid_argument("hurwitz_zeta: x must be positive");
  const int shift = 18 + static_cast<int>(std::max(0.0, std::abs(s)));
  const int terms = 10;

  long double v = 0.0L, dv = 0.0L;
  for (int n = 0; n < shift; ++n) {
    long double base = n + static_cast<long double>(x);
    long double lb = std::log(base);
    long double pw = std::exp(-s * lb);
    v += pw;
    dv -= lb * pw;
  }
  const long double y = shift + static_cast<long double>(x);
  const long double L = std::log(y);
  const long double ys = std::exp(-s * L);  // y^{-s}

  if (regularized) {
    // [(y^{1-s} - 1)/(s-1)] -> -L, derivative -> L^2/2 at s = 1.
    v += -L;
    dv += L * L / 2.0L;
  } else {
    long double y1s = ys * y;  // y^{1-s}
    v += y1s / (s - 1.0L);
    dv += -y1s * (L * (s - 1.0L) + 1.0L) / ((s - 1.0L) * (s - 1.0L));
  }

  v += ys / 2.0L;
  dv += -L * ys / 2.0L;

  // Bernoulli tail: B_2j/(2j)! * (s)_{2j-1} * y^{-s-2j+1}.
  long double poch = s;          // (s)_1 = s
  long double dpoch = 1.0L;      // d/ds (s)_1
  long double fact = 1.0L;       // (2j)!
  long double ypow = ys / y;     // y^{-s-1}
  for (int j = 1; j <= terms; ++j) {
    fact *= (2.0L * j - 1.0L) * (2.0L * j);
    if (j > 1) {
      // (s)_{2j-1} = (s)_{2j-3} * (s+2j-3)(s+2j-2)
      long double f1 = s + 2.0L * j - 3.0L, f2 = s + 2.0L * j - 2.0L;
      dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
      poch = poch * f1 * f2;
      ypow /= y * y;
    }
    long double c = kBern2j[j - 1] / fact;
    v += c * poch * ypow;
    dv += c * (dpoch - poch * L) * ypow;
  }
  return {static_cast<double>(v), static_cast<double>(dv)};
}

}  // namespace

HurwitzValue hurwitz_zeta(double s, double x) {
  if (s == 1.0) throw std::invalid_argument("hurwitz_zeta: pole at s = 1");
  return hurwitz_em(s, x, false);
}

HurwitzValue hurwitz_zeta_reg1(double x) { return hurwitz_em(1.0, x, true); }

double riemann_zeta(double s) { return hurwitz_zeta(s, 1.0).value; }
double riemann_zeta_ds(double s) { return hurwitz_zeta(s, 1.0).ds; }

double bessel_j1(double x) {
  if (x < 0.0) throw std::invalid_argument("bessel_j1: x must be >= 0");
  if (x == 0.0) return 0.0;
  const long double xl = x;
  if (x < 16.0) {
    // J1(x) = (x/2) sum_k (-1)^k (x^2/4)^k / (k! (k+1)!).
    const long double q = xl * xl / 4.0L;
    long double term = xl / 2.0L, sum = term;
    for (int k = 1; k <= 60; ++k) {
      term *= -q / (static_cast<long double>(k) * (k + 1));
      sum += term;
      if (std::abs(term) < 1e-22L * (1.0L + std::abs(sum))) break;
    }
    return static_cast<double>(sum);
  }
  // Hankel expansion J1(x) = sqrt(2/(pi x)) [P cos(chi) - Q sin(chi)],
  // chi = x - 3pi/4, truncated at the smallest term. The Hankel symbols
  // (1,k)/(8x)^k alternate into P (even k) and Q (odd k) with period-4 signs.
  const long double inv8x = 1.0L / (8.0L * xl);
  long double p = 1.0L, q = 0.0L;
  long double hank = 1.0L;  // (1,k) / (8x)^k, starting at k = 0
  long double prev = 1e30L;
  for (int k = 1; k <= 40; ++k) {
    hank *= (4.0L - (2.0L * k - 1.0L) * (2.0L * k - 1.0L)) * inv8x /
            static_cast<long double>(k);
    if (std::abs(hank) >= prev) break;
    prev = std::abs(hank);
    int r = k % 4;
    if (r == 1)
      q += hank;
    else if (r == 2)
      p -= hank;
    else if (r == 3)
      q -= hank;
    else
      p += hank;
  }
  const long double kPiL = 3.14159265358979323846264338327950288L;
  const long double chi = std::fmod(xl, 2.0L * kPiL) - 0.75L * kPiL;
  const long double amp = std::sqrt(2.0L / (kPiL * xl));
  return static_cast<double>(amp * (p * std::cos(chi) - q * std::sin(chi)));
}

}  // namespace nonsplit
