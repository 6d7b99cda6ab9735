#pragma once
// Complete exponential sums: Kloosterman and Ramanujan sums, the two-index
// Jacobi-type family J(n1,r1;n2,r2;q), its identities, and the window-sum
// cancellation harness.

#include <complex>
#include <vector>

#include "nonsplit/util.hpp"

namespace nonsplit {

using cdouble = std::complex<double>;

struct JSumParams {
  i64 n1 = 0, r1 = 0, n2 = 0, r2 = 0;
  i64 q = 1;
  // C = (|r1^2 - 4 n1| + 1)(|r2^2 - 4 n2| + 1)
  i64 discriminant_combination() const {
    return (std::abs(r1 * r1 - 4 * n1) + 1) * (std::abs(r2 * r2 - 4 * n2) + 1);
  }
};

// S(m, n; q) = sum over units x mod q of e((m x + n xbar)/q). Real by the
// x <-> -x symmetry; the imaginary part is asserted below 1e-9.
double kloosterman(i64 m, i64 n, i64 q);

// Ramanujan sum c_q(n) = sum_{d | (n,q)} d mu(q/d), exact.
i64 ramanujan(i64 q, i64 n);

// J(n1,r1;n2,r2;q) = (1/q) e_{2q}(r1 r2)
//     sum_{y mod q, x unit} e_q((y^2 + r1 y + n1) xbar + n2 x + r2 y).
// Direct O(q phi(q)) evaluation; q > kJsumCrtThreshold moduli are split by
// twisted multiplicativity over the prime-power factors of q.
inline constexpr i64 kJsumCrtThreshold = 1000;
cdouble jsum(const JSumParams& p);
cdouble jsum_direct(const JSumParams& p);  // never uses the CRT split

// Left side of the Kloosterman route: (1/q) sum_n S(m, n^2+d; q) e_q(l n).
// Equals jsum({d, 0, m, l, q}) within 1e-9.
cdouble jsum_via_kloosterman(i64 d, i64 m, i64 l, i64 q);

// |J(...; q q') - J(twist; q) J(twist; q')| for coprime q, q'.
double check_twisted_multiplicativity(const JSumParams& p, i64 q, i64 qprime);

// |LHS - RHS| of the inverse-N2 reduction identity
//   J(-e^2 D, 0, m N2bar, l; q) = chi_D(N3) J(-e'^2 D, 0, m N2, l N2; q N3)
// with N2 = N3 N4, N4 | e, gcd(N3, e) = 1, e' = e / N4. N2 must be odd,
// squarefree and coprime to both D and q.
double check_reduction_lemma(i64 D, i64 l, i64 m, i64 e, i64 N2, i64 q);

// sum over Q < q < 2Q, q = 0 mod a, of J(n1,r1;n2,r2;q).
cdouble theorem_a_window(i64 n1, i64 r1, i64 n2, i64 r2, i64 Q, i64 a);

// Least-squares slope of log|window sum| against log Q over a Q grid (>= 5
// points). `family` maps Q to the J parameters used at that window.
struct WindowScanPoint {
  i64 Q;
  double abs_sum;
};
struct ExponentFit {
  LinearFit fit;
  std::vector<WindowScanPoint> points;
};
ExponentFit cancellation_exponent_fit(
    const std::vector<i64>& q_grid,
    const std::function<JSumParams(i64)>& family, i64 a = 1);

}  // namespace nonsplit
