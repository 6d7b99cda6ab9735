#include "nonsplit/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "nonsplit/special.hpp"

namespace nonsplit {

bool is_fundamental_discriminant(i64 D) {
  if (D >= 0) return false;
  i64 m = mod_pos(D, 4);
  if (m == 1) return is_squarefree(D);
  if (m == 0) {
    i64 q = D / 4;
    i64 qm = mod_pos(q, 4);
    return (qm == 2 || qm == 3) && is_squarefree(q);
  }
  return false;
}

int unit_count(i64 D) {
  if (D == -3) return 6;
  if (D == -4) return 4;
  return 2;
}

int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (n & 1) == 0) return 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int twos = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++twos;
  }
  if (twos & 1) {
    i64 r = mod_pos(a, 8);
    if (r == 3 || r == 5) result = -result;
  }
  a = mod_pos(a, n);
  while (a != 0) {
    int v = 0;
    while ((a & 1) == 0) {
      a >>= 1;
      ++v;
    }
    if (v & 1) {
      i64 r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    if ((a % 4 == 3) && (n % 4 == 3)) result = -result;
    i64 t = n % a;
    n = a;
    a = t;
  }
  return n == 1 ? result : 0;
}

FormClass reduce_form(i64 a, i64 b, i64 c) {
  if (a <= 0 || c <= 0) throw std::invalid_argument("reduce_form: not positive definite");
  for (;;) {
    if (b > a || b <= -a) {
      // substitution x -> x - k y brings b into (-a, a]
      i64 r = mod_pos(b + a, 2 * a) - a;  // r in [-a, a)
      if (r == -a) r = a;
      i64 k = (b - r) / (2 * a);
      c = a * k * k - b * k + c;
      b = r;
    }
    if (c < a) {
      std::swap(a, c);
      b = -b;
      continue;
    }
    break;
  }
  if ((a == c || b == -a) && b < 0) b = -b;
  return {a, b, c};
}

namespace {

i64 form_eval(const FormClass& f, i64 x, i64 y) {
  return f.a * x * x + f.b * x * y + f.c * y * y;
}

// Apply the SL2(Z) substitution (X, Y) -> (alpha X + beta Y, gamma X + delta Y).
FormClass transform_form(const FormClass& f, i64 alpha, i64 beta, i64 gamma,
                         i64 delta) {
  FormClass g;
  g.a = f.a * alpha * alpha + f.b * alpha * gamma + f.c * gamma * gamma;
  g.c = f.a * beta * beta + f.b * beta * delta + f.c * delta * delta;
  g.b = 2 * f.a * alpha * beta + f.b * (alpha * delta + beta * gamma) +
        2 * f.c * gamma * delta;
  return g;
}

// Equivalent form whose leading coefficient is coprime to m.
FormClass make_leading_coprime(const FormClass& f, i64 m) {
  if (std::gcd(f.a, m) == 1) return f;
  for (i64 bound = 1; bound <= 64; ++bound) {
    for (i64 x = -bound; x <= bound; ++x) {
      for (i64 y = -bound; y <= bound; ++y) {
        if (std::max(std::abs(x), std::abs(y)) != bound) continue;
        if (std::gcd(x, y) != 1) continue;
        i64 rep = form_eval(f, x, y);
        if (rep > 0 && std::gcd(rep, m) == 1) {
          auto [g, s, t] = ext_gcd(x, y);
          (void)g;
          // delta = s, beta = -t gives det = x*s + y*t = 1
          return transform_form(f, x, -t, y, s);
        }
      }
    }
  }
  throw std::logic_error("make_leading_coprime: no representative found");
}

// Gauss composition of two primitive forms of the same discriminant.
FormClass compose_forms(const FormClass& f1_in, const FormClass& f2_in, i64 D) {
  FormClass f1 = f1_in;
  FormClass f2 = make_leading_coprime(f2_in, f1.a);
  // Concordant middle coefficient: B = b1 (mod 2 a1), B = b2 (mod 2 a2).
  i64 a1 = f1.a, a2 = f2.a;
  i64 k = mul_mod(inv_mod(mod_pos(a1, a2), a2),
                  mod_pos((f2.b - f1.b) / 2, a2), a2);
  i128 B = static_cast<i128>(f1.b) + static_cast<i128>(2) * a1 * k;
  i128 A = static_cast<i128>(a1) * a2;
  i128 C = (B * B - D) / (4 * A);
  if ((B * B - D) % (4 * A) != 0)
    throw std::logic_error("compose_forms: non-integral composition");
  // Reduce in 128-bit first so the i64 reduction below cannot overflow.
  i128 a = A, b = B, c = C;
  const i128 cap = static_cast<i128>(1) << 60;
  while (a > cap || (b < 0 ? -b : b) > cap || c > cap) {
    i128 r = b % (2 * a);
    if (r < 0) r += 2 * a;
    if (r > a) r -= 2 * a;  // r in (-a, a]
    i128 kk = (b - r) / (2 * a);
    c = a * kk * kk - b * kk + c;
    b = r;
    if (c < a) {
      std::swap(a, c);
      b = -b;
    }
  }
  return reduce_form(static_cast<i64>(a), static_cast<i64>(b),
                     static_cast<i64>(c));
}

struct Frac {
  i64 num = 0;
  i64 den = 1;
  void normalize() {
    num = mod_pos(num, den);
    i64 g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
};

Frac frac_add(Frac a, Frac b) {
  Frac r;
  i64 l = std::lcm(a.den, b.den);
  r.num = a.num * (l / a.den) + b.num * (l / b.den);
  r.den = l;
  r.normalize();
  return r;
}

Frac frac_scale_add_div(Frac base, i64 t, i64 k) {
  // (base + t) / k as an angle fraction
  Frac r;
  r.num = base.num + t * base.den;
  r.den = base.den * k;
  r.normalize();
  return r;
}

Frac frac_mul_int(Frac a, i64 j) {
  Frac r{a.num * j, a.den};
  r.normalize();
  return r;
}

}  // namespace

int ClassGroupData::inverse_class(int i) const {
  const FormClass& f = classes[i];
  FormClass inv = reduce_form(f.a, -f.b, f.c);
  for (int j = 0; j < h; ++j)
    if (classes[j] == inv) return j;
  throw std::logic_error("inverse_class: inverse not found");
}

namespace {

std::vector<FormClass> reduced_forms(i64 D) {
  std::vector<FormClass> forms;
  for (i64 a = 1; 3 * a * a <= -D; ++a) {
    for (i64 b = -a + 1; b <= a; ++b) {
      i64 num = b * b - D;
      if (num % (4 * a) != 0) continue;
      i64 c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      forms.push_back({a, b, c});
    }
  }
  // principal form first, the rest in lexicographic order
  FormClass principal{1, mod_pos(D, 2), (mod_pos(D, 2) - D) / 4};
  std::sort(forms.begin(), forms.end());
  auto it = std::find(forms.begin(), forms.end(), principal);
  if (it == forms.end()) throw std::logic_error("reduced_forms: principal form missing");
  std::rotate(forms.begin(), it, it + 1);
  return forms;
}

}  // namespace

int class_number(i64 D) {
  if (!is_fundamental_discriminant(D))
    throw std::invalid_argument("class_number: D not a fundamental discriminant");
  return static_cast<int>(reduced_forms(D).size());
}

ClassGroupData class_group(i64 D) {
  if (!is_fundamental_discriminant(D))
    throw std::invalid_argument("class_group: D not a fundamental discriminant");
  ClassGroupData g;
  g.D = D;
  g.classes = reduced_forms(D);
  g.h = static_cast<int>(g.classes.size());
  const int h = g.h;

  std::map<FormClass, int> index;
  for (int i = 0; i < h; ++i) index[g.classes[i]] = i;

  g.composition.assign(h, std::vector<int>(h, 0));
  for (int i = 0; i < h; ++i) {
    for (int j = i; j < h; ++j) {
      FormClass prod = compose_forms(g.classes[i], g.classes[j], D);
      auto it = index.find(prod);
      if (it == index.end())
        throw std::logic_error("class_group: composition left the class set");
      g.composition[i][j] = it->second;
      g.composition[j][i] = it->second;
    }
  }

  // Character table by subgroup extension. chi values are exact roots of
  // unity stored as angle fractions; chars[i][j] is the angle of chi_i at
  // class j, valid only on the current subgroup.
  std::vector<int> in_sub(h, 0);
  std::vector<int> subgroup{0};
  in_sub[0] = 1;
  std::vector<std::vector<Frac>> chars(1, std::vector<Frac>(h));

  while (static_cast<int>(subgroup.size()) < h) {
    int gen = -1;
    for (int i = 0; i < h; ++i)
      if (!in_sub[i]) {
        gen = i;
        break;
      }
    // order of gen modulo the current subgroup
    int k = 1;
    int p = gen;
    while (!in_sub[p]) {
      p = g.composition[p][gen];
      ++k;
    }
    // p = gen^k lies in the subgroup
    std::vector<std::vector<Frac>> next_chars;
    next_chars.reserve(chars.size() * k);
    for (const auto& chi : chars) {
      for (int t = 0; t < k; ++t) {
        Frac zeta = frac_scale_add_div(chi[p], t, k);
        std::vector<Frac> ext = chi;
        int elem = gen;
        for (int j = 1; j < k; ++j) {
          for (int s : subgroup) {
            int target = g.composition[elem][s];
            ext[target] = frac_add(frac_mul_int(zeta, j), chi[s]);
          }
          elem = g.composition[elem][gen];
        }
        next_chars.push_back(std::move(ext));
      }
    }
    std::vector<int> new_elems;
    int elem = gen;
    for (int j = 1; j < k; ++j) {
      for (int s : subgroup) {
        int target = g.composition[elem][s];
        if (!in_sub[target]) {
          in_sub[target] = 1;
          new_elems.push_back(target);
        }
      }
      elem = g.composition[elem][gen];
    }
    for (int e : new_elems) subgroup.push_back(e);
    chars = std::move(next_chars);
  }

  constexpr double kTwoPi = 6.283185307179586476925286766559005768;
  g.characters.assign(h, std::vector<std::complex<double>>(h));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      double angle = kTwoPi * static_cast<double>(chars[i][j].num) /
                     static_cast<double>(chars[i][j].den);
      g.characters[i][j] = {std::cos(angle), std::sin(angle)};
    }
  return g;
}

RCounts r_counts(i64 D, i64 e, i64 n) {
  if (n < 1) throw std::invalid_argument("r_counts: n must be >= 1");
  if (D >= 0 || e < 1) throw std::invalid_argument("r_counts: need D < 0, e >= 1");
  const i64 disc = -D * e * e;  // positive
  i64 pairs = 0, dagger = 0;
  for (i64 b = 0; b * b * disc <= 4 * n; ++b) {
    i64 t = 4 * n - b * b * disc;
    if (t == 0) {
      pairs += (b > 0) ? 2 : 1;
      if (b > 0) dagger += 1;
      continue;
    }
    if (!is_square(t)) continue;
    pairs += (b > 0) ? 4 : 2;
    if (b > 0) dagger += 2;
  }
  return {pairs / 2, dagger};
}

RSieve r_sieve(i64 D, i64 e, i64 X) {
  if (X < 1) throw std::invalid_argument("r_sieve: X must be >= 1");
  const i64 disc = -D * e * e;
  RSieve out;
  out.r.assign(X + 1, 0);
  out.r_dagger.assign(X + 1, 0);
  std::vector<std::int32_t> pairs(X + 1, 0);
  for (i64 b = 0; b * b * disc <= 4 * X; ++b) {
    const i64 base = b * b * disc;
    for (i64 a = 0; a * a + base <= 4 * X; ++a) {
      const i64 t = a * a + base;
      if (t % 4 != 0) continue;
      const i64 n = t / 4;
      if (n < 1) continue;
      const int mult = ((a > 0) ? 2 : 1) * ((b > 0) ? 2 : 1);
      pairs[n] += mult;
      if (b > 0) out.r_dagger[n] += (a > 0) ? 2 : 1;
    }
  }
  for (i64 n = 0; n <= X; ++n) out.r[n] = pairs[n] / 2;
  return out;
}

DirichletL dirichlet_L(i64 D) {
  if (!is_fundamental_discriminant(D))
    throw std::invalid_argument("dirichlet_L: D not fundamental");
  const i64 k = -D;
  const int h = class_number(D);
  const int w = unit_count(D);

  double sum_val = 0.0, sum_ds = 0.0;
  for (i64 a = 1; a < k; ++a) {
    int chi = kronecker(D, a);
    if (chi == 0) continue;
    HurwitzValue z = hurwitz_zeta_reg1(static_cast<double>(a) / k);
    sum_val += chi * z.value;
    sum_ds += chi * z.ds;
  }
  constexpr double kPi = 3.141592653589793238462643383279502884;
  const double logk = std::log(static_cast<double>(k));
  DirichletL out;
  out.L1 = sum_val / k;
  out.Lprime1 = -logk * out.L1 + sum_ds / k;
  out.L1_class_number = 2.0 * kPi * h / (w * std::sqrt(static_cast<double>(k)));
  if (std::abs(out.L1 - out.L1_class_number) > 1e-8)
    throw std::logic_error("dirichlet_L: class number formula and Hurwitz route disagree");
  out.log_deriv = out.Lprime1 / out.L1;
  out.script_LD = 0.5 * logk + out.log_deriv;
  return out;
}

bool prime_factors_exceed(i64 D, double eps) {
  i64 n = std::abs(D);
  double bound = std::pow(static_cast<double>(n), eps);
  for (auto [p, e] : factorize(n)) {
    (void)e;
    if (static_cast<double>(p) <= bound) return false;
  }
  return true;
}

bool heegner_admissible(i64 D, i64 level) {
  if (!is_fundamental_discriminant(D)) return false;
  if (mod_pos(D, 2) == 0 || -D < 7) return false;
  for (auto [p, e] : factorize(level)) {
    (void)e;
    if (kronecker(D, p) != 1) return false;
  }
  return true;
}

}  // namespace nonsplit
