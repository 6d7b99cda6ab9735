#include "nonsplit/deltasym.hpp"

#include <cmath>
#include <stdexcept>

#include "nonsplit/expsums.hpp"

namespace nonsplit {

double bump_w(double t) {
  if (std::abs(t) >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - t * t));
}

namespace {

// Base profile on (0, 1), smooth, positive inside.
double unit_bump(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return std::exp(-1.0 / (t * (1.0 - t)));
}

}  // namespace

DeltaKernel::DeltaKernel(double U, double Omega) : U_(U), Omega_(Omega) {
  if (U <= 1.0 || Omega <= 1.0)
    throw std::invalid_argument("DeltaKernel: U and Omega must exceed 1");
  Q_ = std::max(Omega, U / Omega);
  q_support_max_ = static_cast<i64>(std::ceil(std::max(2.0 * Omega, U / Omega)));
  double lattice_sum = 0.0;
  for (i64 r = static_cast<i64>(std::floor(Omega)) + 1; r < 2.0 * Omega; ++r)
    lattice_sum += unit_bump((static_cast<double>(r) - Omega) / Omega);
  if (lattice_sum <= 0.0)
    throw std::invalid_argument("DeltaKernel: no integers in (Omega, 2 Omega)");
  norm_ = 1.0 / lattice_sum;
}

double DeltaKernel::omega(double r) const {
  return norm_ * unit_bump((r - Omega_) / Omega_);
}

double DeltaKernel::delta_q(double q, double u) const {
  if (q <= 0.0) throw std::invalid_argument("delta_q: q must be positive");
  const double au = std::abs(u);
  double sum = 0.0;
  // omega(qr) branch: r in (Omega/q, 2 Omega/q)
  {
    const i64 lo = static_cast<i64>(std::floor(Omega_ / q)) + 1;
    const i64 hi = static_cast<i64>(std::ceil(2.0 * Omega_ / q));
    for (i64 r = std::max<i64>(lo, 1); r <= hi; ++r)
      sum += omega(q * static_cast<double>(r)) / (q * static_cast<double>(r));
  }
  // omega(|u|/(qr)) branch: r in (|u|/(2 Omega q), |u|/(Omega q))
  if (au > 0.0) {
    const i64 lo = static_cast<i64>(std::floor(au / (2.0 * Omega_ * q))) + 1;
    const i64 hi = static_cast<i64>(std::ceil(au / (Omega_ * q)));
    for (i64 r = std::max<i64>(lo, 1); r <= hi; ++r)
      sum -= omega(au / (q * static_cast<double>(r))) / (q * static_cast<double>(r));
  }
  return sum;
}

double DeltaKernel::delta_q_dq(double q, double u, double step) const {
  return (delta_q(q + step, u) - delta_q(q - step, u)) / (2.0 * step);
}

double DeltaKernel::identity_residual(i64 n) const {
  const double target = (n == 0) ? 1.0 : 0.0;
  const double phin = phi(static_cast<double>(n));
  if (phin == 0.0) return std::abs(0.0 - target);
  double sum = 0.0;
  for (i64 q = 1; q <= q_support_max_; ++q) {
    const double dq = delta_q(static_cast<double>(q), static_cast<double>(n));
    if (dq == 0.0) continue;
    sum += dq * static_cast<double>(ramanujan(q, n));
  }
  return std::abs(phin * sum - target);
}

DeltaKernel::BoundProfile DeltaKernel::bound_profile() const {
  BoundProfile prof{0.0, 0.0};
  const double inv_omega2 = 1.0 / (Omega_ * Omega_);
  std::vector<double> u_grid{0.0};
  for (double u = 1.0; u <= U_; u *= 1.5) u_grid.push_back(u);
  for (i64 q = 1; q <= q_support_max_; ++q) {
    const double qd = static_cast<double>(q);
    for (double u : u_grid) {
      const double envelope = inv_omega2 + 1.0 / (qd * Omega_ + u);
      const double ratio = std::abs(delta_q(qd, u)) / envelope;
      prof.sup_ratio_value = std::max(prof.sup_ratio_value, ratio);
      const double denv = inv_omega2 / qd + 1.0 / (qd * qd * Omega_);
      const double dratio = std::abs(delta_q_dq(qd, u)) / denv;
      prof.sup_ratio_deriv = std::max(prof.sup_ratio_deriv, dratio);
    }
  }
  return prof;
}

}  // namespace nonsplit
