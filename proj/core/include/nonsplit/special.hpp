#pragma once
// Scalar special functions: complex log-gamma, digamma, Hurwitz zeta with
// its s-derivative, and the Bessel kernel J1.

#include <complex>

namespace nonsplit {

inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
inline constexpr double kLog2Pi = 1.837877066409345483560659472811235279;

// log Gamma(z), Lanczos approximation (g = 7), ~1e-13 relative away from
// the poles. After reflection (Re z < 1/2) the imaginary part may be off
// the canonical branch by a multiple of 2 pi; exp() of it is always Gamma.
std::complex<double> lgamma_complex(std::complex<double> z);

double digamma(double x);

// Hurwitz zeta and its derivative in s. `value` = zeta(s, x), `ds` =
// d/ds zeta(s, x). Requires x > 0 and s != 1.
struct HurwitzValue {
  double value;
  double ds;
};
HurwitzValue hurwitz_zeta(double s, double x);

// Regularized value at s = 1: Z(s,x) := zeta(s,x) - 1/(s-1) is entire in s;
// returns Z(1,x) = -digamma(x) and Z'(1,x) (= minus the first generalized
// Stieltjes constant gamma_1(x)).
HurwitzValue hurwitz_zeta_reg1(double x);

double riemann_zeta(double s);
double riemann_zeta_ds(double s);

// J1 Bessel function for x >= 0, absolute error below 1e-12: long-double
// power series for small x, Hankel asymptotic expansion beyond.
double bessel_j1(double x);

}  // namespace nonsplit
