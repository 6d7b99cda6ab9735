#include "nonsplit/expsums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nonsplit/quadratic.hpp"

namespace nonsplit {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559005768;

// e(j/q) for j = 0..q-1.
std::vector<cdouble> root_table(i64 q) {
  std::vector<cdouble> e(q);
  for (i64 j = 0; j < q; ++j) {
    double angle = kTwoPi * static_cast<double>(j) / static_cast<double>(q);
    e[j] = {std::cos(angle), std::sin(angle)};
  }
  return e;
}

// Units mod q with their inverses, q >= 2.
std::vector<std::pair<i64, i64>> unit_pairs(i64 q) {
  std::vector<std::pair<i64, i64>> units;
  for (i64 x = 1; x < q; ++x)
    if (std::gcd(x, q) == 1) units.emplace_back(x, inv_mod(x, q));
  return units;
}

}  // namespace

double kloosterman(i64 m, i64 n, i64 q) {
  if (q < 1) throw std::invalid_argument("kloosterman: q must be >= 1");
  if (q == 1) return 1.0;
  const auto e = root_table(q);
  m = mod_pos(m, q);
  n = mod_pos(n, q);
  cdouble sum = 0.0;
  for (i64 x = 1; x < q; ++x) {
    if (std::gcd(x, q) != 1) continue;
    i64 xbar = inv_mod(x, q);
    sum += e[mod_pos(m * x + n * xbar, q)];
  }
  if (std::abs(sum.imag()) > 1e-9 * (1.0 + std::abs(sum.real())))
    throw std::logic_error("kloosterman: imaginary part did not cancel");
  return sum.real();
}

i64 ramanujan(i64 q, i64 n) {
  if (q < 1) throw std::invalid_argument("ramanujan: q must be >= 1");
  n = std::abs(n);
  const i64 g = (n == 0) ? q : std::gcd(n, q);
  i64 sum = 0;
  for (i64 d : divisors(g)) sum += d * mobius(q / d);
  return sum;
}

cdouble jsum_direct(const JSumParams& p) {
  const i64 q = p.q;
  if (q < 1) throw std::invalid_argument("jsum: q must be >= 1");
  if (q == 1) return {1.0, 0.0};
  const auto e = root_table(q);

  // e_{2q}(r1 r2) with the rational reduced mod 2q before any floating step.
  const i64 phase_num = mod_pos(p.r1 * p.r2, 2 * q);
  const double phase_angle = kTwoPi * static_cast<double>(phase_num) /
                             (2.0 * static_cast<double>(q));
  const cdouble prefactor{std::cos(phase_angle), std::sin(phase_angle)};

  const i64 n1 = mod_pos(p.n1, q), r1 = mod_pos(p.r1, q);
  const i64 n2 = mod_pos(p.n2, q), r2 = mod_pos(p.r2, q);

  // Precompute the y-dependent residues once.
  std::vector<i64> quad(q), lin(q);
  for (i64 y = 0; y < q; ++y) {
    quad[y] = mod_pos(y * y + r1 * y + n1, q);
    lin[y] = mod_pos(r2 * y, q);
  }

  cdouble total = 0.0;
  for (const auto& [x, xbar] : unit_pairs(q)) {
    const i64 n2x = mod_pos(n2 * x, q);
    cdouble inner = 0.0;
    for (i64 y = 0; y < q; ++y) {
      i64 idx = quad[y] * xbar % q + n2x + lin[y];
      if (idx >= q) idx -= q;
      if (idx >= q) idx -= q;
      inner += e[idx];
    }
    total += inner;
  }
  return prefactor * total / static_cast<double>(q);
}

cdouble jsum(const JSumParams& p) {
  const i64 q = p.q;
  if (q <= kJsumCrtThreshold) return jsum_direct(p);
  const auto factors = factorize(q);
  if (factors.size() == 1) return jsum_direct(p);
  // Twisted multiplicativity over q = prod p^k.
  cdouble result = 1.0;
  for (const auto& [prime, exp] : factors) {
    i64 qi = 1;
    for (int i = 0; i < exp; ++i) qi *= prime;
    const i64 rest = q / qi;
    const i64 rbar = inv_mod(mod_pos(rest, qi), qi);
    JSumParams part{mod_pos(p.n1 % qi * rbar % qi * rbar, qi),
                    mod_pos(p.r1 % qi * rbar, qi), p.n2, p.r2, qi};
    result *= jsum(part);
  }
  return result;
}

cdouble jsum_via_kloosterman(i64 d, i64 m, i64 l, i64 q) {
  if (q < 1) throw std::invalid_argument("jsum_via_kloosterman: q must be >= 1");
  if (q == 1) return {1.0, 0.0};
  const auto e = root_table(q);
  cdouble sum = 0.0;
  for (i64 n = 0; n < q; ++n) {
    const double s = kloosterman(m, n * n + d, q);
    sum += s * e[mod_pos(l * n, q)];
  }
  return sum / static_cast<double>(q);
}

double check_twisted_multiplicativity(const JSumParams& p, i64 q, i64 qprime) {
  if (q < 1 || qprime < 1 || std::gcd(q, qprime) != 1)
    throw std::invalid_argument("twisted multiplicativity requires coprime moduli");
  JSumParams whole = p;
  whole.q = q * qprime;
  cdouble lhs = jsum_direct(whole);

  cdouble rhs = 1.0;
  if (q > 1) {
    const i64 qpbar = inv_mod(mod_pos(qprime, q), q);
    JSumParams left{mod_pos(p.n1 % q * qpbar % q * qpbar, q),
                    mod_pos(p.r1 % q * qpbar, q), p.n2, p.r2, q};
    rhs *= jsum_direct(left);
  }
  if (qprime > 1) {
    const i64 qbar = inv_mod(mod_pos(q, qprime), qprime);
    JSumParams right{mod_pos(p.n1 % qprime * qbar % qprime * qbar, qprime),
                     mod_pos(p.r1 % qprime * qbar, qprime), p.n2, p.r2, qprime};
    rhs *= jsum_direct(right);
  }
  return std::abs(lhs - rhs);
}

double check_reduction_lemma(i64 D, i64 l, i64 m, i64 e, i64 N2, i64 q) {
  if (!is_fundamental_discriminant(D))
    throw std::invalid_argument("reduction lemma: D must be fundamental");
  if (N2 < 1 || N2 % 2 == 0 || !is_squarefree(N2))
    throw std::invalid_argument("reduction lemma: N2 must be odd squarefree");
  if (std::gcd(N2, std::abs(D)) != 1)
    throw std::invalid_argument("reduction lemma: N2 must be coprime to D");
  if (std::gcd(N2, q) != 1)
    throw std::invalid_argument("reduction lemma: N2 must be coprime to q");
  if (e < 1 || q < 1) throw std::invalid_argument("reduction lemma: e, q >= 1");

  // Split N2 = N3 N4 with N4 | e and gcd(N3, e) = 1.
  i64 N4 = 1;
  for (auto [p, k] : factorize(N2)) {
    (void)k;
    if (e % p == 0) N4 *= p;
  }
  const i64 N3 = N2 / N4;
  const i64 eprime = e / N4;

  const i64 n2bar = (q == 1) ? 0 : inv_mod(mod_pos(N2, q), q);
  JSumParams lhs_params{-e * e * D, 0, mod_pos(m * n2bar, std::max<i64>(q, 1)), l, q};
  cdouble lhs = jsum_direct(lhs_params);

  JSumParams rhs_params{-eprime * eprime * D, 0, m * N2, l * N2, q * N3};
  cdouble rhs = static_cast<double>(kronecker(D, N3)) * jsum_direct(rhs_params);
  return std::abs(lhs - rhs);
}

cdouble theorem_a_window(i64 n1, i64 r1, i64 n2, i64 r2, i64 Q, i64 a) {
  if (Q < 1 || a < 1) throw std::invalid_argument("theorem_a_window: Q, a >= 1");
  cdouble sum = 0.0;
  for (i64 q = Q + 1; q < 2 * Q; ++q) {
    if (q % a != 0) continue;
    sum += jsum({n1, r1, n2, r2, q});
  }
  return sum;
}

ExponentFit cancellation_exponent_fit(
    const std::vector<i64>& q_grid,
    const std::function<JSumParams(i64)>& family, i64 a) {
  if (q_grid.size() < 5)
    throw std::invalid_argument("cancellation_exponent_fit: need >= 5 grid points");
  ExponentFit out;
  std::vector<double> lx, ly;
  for (i64 Q : q_grid) {
    JSumParams p = family(Q);
    cdouble w = theorem_a_window(p.n1, p.r1, p.n2, p.r2, Q, a);
    const double mag = std::abs(w);
    out.points.push_back({Q, mag});
    lx.push_back(std::log(static_cast<double>(Q)));
    ly.push_back(std::log(std::max(mag, 1e-300)));
  }
  out.fit = least_squares(lx, ly);
  return out;
}

}  // namespace nonsplit
