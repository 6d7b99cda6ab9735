#pragma once
// Delta-symbol machinery: the bump pair (W, omega), the kernel
// Delta_q(u) = sum_r (1/qr) [omega(qr) - omega(|u|/(qr))], and the exact
// detection identity delta(n) = phi(n) sum_q Delta_q(n) c_q(n).

#include <vector>

#include "nonsplit/util.hpp"

namespace nonsplit {

// Smooth even bump on (-1, 1) with W(0) = 1.
double bump_w(double t);

class DeltaKernel {
 public:
  // W is fixed; omega is the standard bump on (Omega, 2*Omega) rescaled so
  // its integer lattice sum is exactly 1. Throws when (Omega, 2*Omega)
  // contains no integer.
  DeltaKernel(double U, double Omega);

  double U() const { return U_; }
  double Omega() const { return Omega_; }
  // Q = max(Omega, U/Omega), the cutoff entering the circle-method
  // parameter choices.
  double Q() const { return Q_; }
  // Smallest integer beyond which Delta_q * phi vanishes identically. The
  // omega branch survives to 2*Omega, so this is max(2*Omega, U/Omega)
  // rather than Q itself.
  i64 q_support_max() const { return q_support_max_; }

  double phi(double u) const { return bump_w(u / U_); }
  double omega(double r) const;

  // Delta_q(u) for real q > 0 (the integer points are the ones entering the
  // identity; the real-q extension backs the derivative profile).
  double delta_q(double q, double u) const;
  double delta_q_dq(double q, double u, double step = 1e-4) const;

  // |RHS - delta(n)| for the detection identity at integer n.
  double identity_residual(i64 n) const;

  struct BoundProfile {
    double sup_ratio_value;  // sup |Delta_q(u)| / (Omega^-2 + (q Omega + |u|)^-1)
    double sup_ratio_deriv;  // sup |d/dq Delta_q(u)| / (q^-1 Omega^-2 + q^-2 Omega^-1)
  };
  // Sweeps q <= q_support_max, |u| <= U on a logarithmic grid.
  BoundProfile bound_profile() const;

 private:
  double U_, Omega_, Q_, norm_;
  i64 q_support_max_;
};

}  // namespace nonsplit
