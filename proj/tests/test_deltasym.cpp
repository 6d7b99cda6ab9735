#include "nonsplit/deltasym.hpp"

#include <cmath>

#include "doctest.h"

using namespace nonsplit;

TEST_CASE("bump W basics") {
  CHECK(bump_w(0.0) == 1.0);
  CHECK(bump_w(1.0) == 0.0);
  CHECK(bump_w(-1.0) == 0.0);
  CHECK(bump_w(2.7) == 0.0);
  CHECK(bump_w(0.5) == bump_w(-0.5));
  CHECK(bump_w(0.5) > 0.0);
}

TEST_CASE("kernel construction and the Q cutoff") {
  DeltaKernel k1(100.0, 10.0);
  CHECK(k1.Q() == doctest::Approx(10.0));
  DeltaKernel k2(1e4, 1e2);
  CHECK(k2.Q() == doctest::Approx(100.0));
  DeltaKernel k3(10.0, 100.0);
  CHECK(k3.Q() == doctest::Approx(100.0));
  CHECK_THROWS_AS(DeltaKernel(100.0, 1.0), std::invalid_argument);
}

TEST_CASE("omega lattice sum is normalized to 1") {
  for (double omega : {5.0, 10.0, 33.7, 128.0}) {
    DeltaKernel k(omega * omega, omega);
    double sum = 0.0;
    for (i64 r = 1; r <= static_cast<i64>(3 * omega); ++r)
      sum += k.omega(static_cast<double>(r));
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k.omega(omega) == 0.0);
    CHECK(k.omega(2 * omega) == 0.0);
    CHECK(k.omega(0.5 * omega) == 0.0);
  }
}

TEST_CASE("delta_q against an independent finite-sum oracle") {
  DeltaKernel k(100.0, 10.0);
  // (q=1, u=0): sum_{10 < r < 20} omega(r)/r
  double expect = 0.0;
  for (i64 r = 11; r <= 19; ++r) expect += k.omega(r) / static_cast<double>(r);
  CHECK(k.delta_q(1.0, 0.0) == doctest::Approx(expect).epsilon(1e-14));

  // (q=3, u=50): both branches, brute r scan
  double oracle = 0.0;
  for (i64 r = 1; r <= 1000; ++r) {
    double qr = 3.0 * r;
    oracle += (k.omega(qr) - k.omega(50.0 / qr)) / qr;
  }
  CHECK(k.delta_q(3.0, 50.0) == doctest::Approx(oracle).epsilon(1e-13));

  // outside both supports
  CHECK(k.delta_q(25.0, 0.0) == 0.0);
  CHECK(k.delta_q(21.0, 12000.0) == 0.0);
}

TEST_CASE("Delta_q is even in u") {
  DeltaKernel k(400.0, 12.0);
  for (double u : {1.0, 17.0, 133.0, 399.0})
    CHECK(k.delta_q(4.0, u) == doctest::Approx(k.delta_q(4.0, -u)));
}

TEST_CASE("detection identity on a desk kernel") {
  DeltaKernel k(1024.0, 32.0);
  CHECK(k.identity_residual(0) < 1e-8);
  for (i64 n = 1; n <= 500; n += 13) {
    CHECK(k.identity_residual(n) < 1e-8);
    CHECK(k.identity_residual(-n) < 1e-8);
  }
  // phi support: |n| >= U gives exactly zero contribution
  CHECK(k.identity_residual(1024) == 0.0);
}

TEST_CASE("Delta_q phi vanishes beyond the support bound") {
  DeltaKernel k(1024.0, 32.0);
  CHECK(k.q_support_max() == 64);  // max(2*Omega, U/Omega)
  for (i64 q = k.q_support_max() + 1; q <= k.q_support_max() + 40; ++q)
    for (double u : {0.0, 3.0, 100.0, 1000.0})
      CHECK(k.delta_q(static_cast<double>(q), u) * k.phi(u) == 0.0);
}

TEST_CASE("kernel bound profile is finite and scale-stable") {
  DeltaKernel small(1e4, 1e2);
  auto p1 = small.bound_profile();
  CHECK(p1.sup_ratio_value > 0.0);
  CHECK(p1.sup_ratio_value < 1e3);
  CHECK(p1.sup_ratio_deriv < 1e4);

  DeltaKernel big(4e4, 2e2);
  auto p2 = big.bound_profile();
  // fitted constants stay within a factor ~2 under (U, Omega) -> (4U, 2*Omega)
  CHECK(p2.sup_ratio_value < 2.5 * p1.sup_ratio_value + 1.0);
  CHECK(p2.sup_ratio_deriv < 2.5 * p1.sup_ratio_deriv + 1.0);

  // single point check: ratio at (q=1, u=0)
  double ratio = std::abs(small.delta_q(1.0, 0.0)) /
                 (1.0 / (100.0 * 100.0) + 1.0 / (1.0 * 100.0 + 0.0));
  CHECK(p1.sup_ratio_value >= ratio - 1e-12);
}
