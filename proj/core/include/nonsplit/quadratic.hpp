#pragma once
// Imaginary quadratic arithmetic: Kronecker characters, reduced binary
// quadratic forms, class groups with full character tables, the norm
// counting functions r_D and r_D^dagger, and L(1), L'(1) for chi_D.

#include <complex>
#include <vector>

#include "nonsplit/util.hpp"

namespace nonsplit {

bool is_fundamental_discriminant(i64 D);
int unit_count(i64 D);  // 2 for |D| > 4, 4 for D = -4, 6 for D = -3

// Kronecker symbol (D/n), completely multiplicative in n.
int kronecker(i64 D, i64 n);

struct FormClass {
  i64 a, b, c;
  friend auto operator<=>(const FormClass&, const FormClass&) = default;
};

// Reduction of a positive definite form to |b| <= a <= c with b >= 0 when
// |b| = a or a = c.
FormClass reduce_form(i64 a, i64 b, i64 c);

struct ClassGroupData {
  i64 D = 0;
  int h = 0;
  std::vector<FormClass> classes;  // classes[0] is the principal class
  std::vector<std::vector<int>> composition;  // h x h Gauss composition
  // characters[i][j] = chi_i(classes[j]); characters[0] is trivial.
  std::vector<std::vector<std::complex<double>>> characters;

  int compose(int i, int j) const { return composition[i][j]; }
  int inverse_class(int i) const;
};

// Enumerates reduced forms, builds the composition table and all h
// characters (exact root-of-unity angles). Rejects non-fundamental D.
ClassGroupData class_group(i64 D);

// Only the class count (cheap, no composition table).
int class_number(i64 D);

struct RCounts {
  i64 r;         // 2 r_{De^2}(n) = #{(a,b) in Z^2 : a^2 - b^2 D e^2 = 4n}
  i64 r_dagger;  // #{(a,b) in Z x N>0 : a^2 - b^2 D e^2 = 4n}
};
RCounts r_counts(i64 D, i64 e, i64 n);

// Bulk versions on 1..X (index n), via lattice enumeration.
struct RSieve {
  std::vector<std::int32_t> r;
  std::vector<std::int32_t> r_dagger;
};
RSieve r_sieve(i64 D, i64 e, i64 X);

struct DirichletL {
  double L1;           // Hurwitz-zeta route
  double L1_class_number;  // 2 pi h / (w sqrt|D|)
  double Lprime1;
  double log_deriv;    // L'/L(1, chi_D)
  double script_LD;    // (1/2) log|D| + L'/L(1, chi_D)
};

// The two L(1) routes must agree to 1e-8; a larger gap throws.
DirichletL dirichlet_L(i64 D);

// True when every prime factor of |D| exceeds |D|^eps.
bool prime_factors_exceed(i64 D, double eps);

// Heegner-compatible: D fundamental odd, |D| >= 7, chi_D(p) = 1 for all
// primes p dividing the level.
bool heegner_admissible(i64 D, i64 level);

}  // namespace nonsplit
