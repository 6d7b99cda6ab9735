#include "nonsplit/coeffs.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <limits>
#include <numeric>

namespace nonsplit {

namespace {

// Euler product E(q) = prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}.
// Terms (exponent, sign) with exponent <= limit, exponents ascending.
struct SparseTerm {
  i64 exp;
  int sign;
};

std::vector<SparseTerm> pentagonal_terms(i64 scale, i64 limit) {
  std::vector<SparseTerm> terms;
  terms.push_back({0, +1});
  for (i64 k = 1;; ++k) {
    i64 g1 = k * (3 * k - 1) / 2;
    i64 g2 = k * (3 * k + 1) / 2;
    int sign = (k % 2 == 0) ? +1 : -1;
    if (scale * g1 > limit) break;
    terms.push_back({scale * g1, sign});
    if (scale * g2 <= limit) terms.push_back({scale * g2, sign});
  }
  std::sort(terms.begin(), terms.end(),
            [](const SparseTerm& a, const SparseTerm& b) { return a.exp < b.exp; });
  return terms;
}

// dst[n] = sum over terms (e, s) of s * src[n - e]. Blocked so the source
// windows stream through cache; the per-term inner loop is contiguous.
void sparse_pass(const std::vector<i64>& src, const std::vector<SparseTerm>& terms,
                 std::vector<i64>& dst) {
  const i64 n_total = static_cast<i64>(src.size());
  std::fill(dst.begin(), dst.end(), 0);
  constexpr i64 kBlock = 1 << 15;
  for (i64 b0 = 0; b0 < n_total; b0 += kBlock) {
    const i64 b1 = std::min(b0 + kBlock, n_total);
    for (const auto& t : terms) {
      const i64 lo = std::max(b0, t.exp);
      if (lo >= b1) continue;
      const i64* s = src.data() + (lo - t.exp);
      i64* d = dst.data() + lo;
      const i64 len = b1 - lo;
      if (t.sign > 0) {
        for (i64 i = 0; i < len; ++i) d[i] += s[i];
      } else {
        for (i64 i = 0; i < len; ++i) d[i] -= s[i];
      }
    }
  }
}

i64 max_abs(const std::vector<i64>& v) {
  i64 m = 0;
  for (i64 x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

FormDescriptor FormDescriptor::builtin(std::uint32_t level) {
  FormDescriptor d;
  d.level = level;
  switch (level) {
    case 11:
      d.eta = {{1, 2}, {11, 2}};
      break;
    case 15:
      d.eta = {{1, 1}, {3, 1}, {5, 1}, {15, 1}};
      break;
    default:
      throw std::invalid_argument("FormDescriptor: no built-in form for level " +
                                  std::to_string(level));
  }
  return d;
}

void FormDescriptor::validate() const {
  if (level % 2 == 0 || !is_squarefree(static_cast<i64>(level)))
    throw std::invalid_argument("FormDescriptor: level must be odd squarefree");
  if (weight != 2) throw std::invalid_argument("FormDescriptor: weight must be 2");
  u64 total_power = 0, scaled = 0;
  for (const auto& f : eta) {
    if (f.scale == 0 || f.power == 0)
      throw std::invalid_argument("FormDescriptor: bad eta factor");
    total_power += f.power;
    scaled += static_cast<u64>(f.scale) * f.power;
  }
  if (total_power != 4)
    throw std::invalid_argument("FormDescriptor: eta powers must sum to 4 (weight 2)");
  // q-prefactor sum(scale*power)/24 must equal 1 so that a_1 = 1.
  if (scaled != 24)
    throw std::invalid_argument("FormDescriptor: eta quotient is not normalized (a_1 != 1)");
}

CoefficientTable CoefficientTable::expand(const FormDescriptor& desc, u64 M) {
  desc.validate();
  if (M < 1) throw std::invalid_argument("expand: M must be >= 1");

  // Flatten to one scale per unit power, ascending; the two densest factors
  // are convolved sparsely, the rest applied as blocked passes.
  std::vector<i64> scales;
  for (const auto& f : desc.eta)
    for (std::uint32_t i = 0; i < f.power; ++i) scales.push_back(f.scale);
  std::sort(scales.begin(), scales.end());

  const i64 L = static_cast<i64>(M) - 1;  // product order; a_n = [q^{n-1}] prod E
  std::vector<i64> acc(L + 1, 0);

  auto t0 = pentagonal_terms(scales[0], L);
  auto t1 = pentagonal_terms(scales[1], L);
  for (const auto& u : t0) {
    for (const auto& v : t1) {
      i64 e = u.exp + v.exp;
      if (e > L) break;  // t1 ascending
      acc[e] += u.sign * v.sign;
    }
  }

  std::vector<i64> scratch(L + 1);
  for (std::size_t i = 2; i < scales.size(); ++i) {
    auto terms = pentagonal_terms(scales[i], L);
    // Each output is a signed sum of at most terms.size() inputs; bounding
    // the inputs now rules out wraparound during the pass.
    const i64 cap = std::numeric_limits<i64>::max() / static_cast<i64>(terms.size() + 1);
    if (max_abs(acc) > cap)
      throw std::overflow_error("expand: intermediate coefficients exceed 64-bit range");
    sparse_pass(acc, terms, scratch);
    acc.swap(scratch);
  }

  CoefficientTable table;
  table.desc_ = desc;
  table.a_ = std::move(acc);
  if (table.a_[0] != 1)
    throw std::logic_error("expand: a_1 != 1 after expansion");
  return table;
}

HeckeReport verify_hecke(const CoefficientTable& table) {
  HeckeReport report;
  const u64 M = table.length();
  const i64 level = table.descriptor().level;
  auto fail = [&](std::string msg) {
    if (report.ok) {
      report.ok = false;
      report.first_violation = std::move(msg);
    }
  };

  const auto primes = primes_up_to(isqrt(static_cast<i64>(M)));
  for (u64 p : primes) {
    const i64 ip = static_cast<i64>(p);
    const bool divides_level = (level % ip == 0);
    i64 prev = 1;                  // a_{p^0}
    i64 cur = table.a(p);          // a_p
    u64 pk = p;
    while (pk * p <= M) {
      const u64 next_idx = pk * p;
      const i64 expected = divides_level
                               ? cur * table.a(p)
                               : table.a(p) * cur - ip * prev;
      const i64 actual = table.a(next_idx);
      ++report.checks;
      if (actual != expected) {
        fail("prime power recursion fails at p=" + std::to_string(p) +
             ", p^k=" + std::to_string(next_idx));
        break;
      }
      prev = cur;
      cur = actual;
      pk = next_idx;
    }
    if (!report.ok) break;
  }

  if (report.ok) {
    for (u64 m = 2; m * m <= M; ++m) {
      for (u64 n = m + 1; m * n <= M; ++n) {
        if (std::gcd(m, n) != 1) continue;
        ++report.checks;
        if (table.a(m * n) != table.a(m) * table.a(n)) {
          fail("multiplicativity fails at (m,n)=(" + std::to_string(m) + "," +
               std::to_string(n) + ")");
          break;
        }
      }
      if (!report.ok) break;
    }
  }
  return report;
}

double deligne_margin(const CoefficientTable& table) {
  const u64 M = table.length();
  const auto tau = divisor_count_sieve(M);
  double margin = 0.0;
  for (u64 n = 1; n <= M; ++n) {
    const i64 an = table.a(n);
    const i128 lhs = static_cast<i128>(an) * an;
    const i128 rhs = static_cast<i128>(tau[n]) * tau[n] * static_cast<i128>(n);
    if (lhs > rhs)
      throw std::logic_error("deligne_margin: bound violated at n=" +
                             std::to_string(n));
    const double ratio = std::abs(static_cast<double>(an)) /
                         (static_cast<double>(tau[n]) * std::sqrt(static_cast<double>(n)));
    margin = std::max(margin, ratio);
  }
  return margin;
}

namespace {

void put_u32(std::ofstream& out, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ofstream& out, u64 v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t get_u32(std::ifstream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

u64 get_u64(std::ifstream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  u64 v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<u64>(b[i]) << (8 * i);
  return v;
}

}  // namespace

void save_coefficient_cache(const std::filesystem::path& path,
                            const CoefficientTable& table) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open cache file for writing: " + path.string());
  out.write("NSC1", 4);
  put_u32(out, table.descriptor().level);
  put_u32(out, table.descriptor().weight);
  put_u64(out, table.length());
  for (u64 n = 1; n <= table.length(); ++n) {
    put_u64(out, static_cast<u64>(table.a(n)));
  }
  if (!out) throw std::runtime_error("cache write failed: " + path.string());
}

CoefficientTable load_coefficient_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open cache file: " + path.string());
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "NSC1", 4) != 0)
    throw std::runtime_error("bad cache magic: " + path.string());
  CoefficientTable table;
  table.desc_.level = get_u32(in);
  table.desc_.weight = get_u32(in);
  const u64 M = get_u64(in);
  const auto expected_size = 4 + 4 + 4 + 8 + 8 * M;
  if (std::filesystem::file_size(path) != expected_size)
    throw std::runtime_error("cache length mismatch: " + path.string());
  try {
    table.desc_ = FormDescriptor::builtin(table.desc_.level);
  } catch (const std::invalid_argument&) {
    // Non-builtin level: keep the header fields, eta list unknown.
  }
  table.a_.resize(M);
  in.read(reinterpret_cast<char*>(table.a_.data()),
          static_cast<std::streamsize>(8 * M));
  if (!in) throw std::runtime_error("cache read failed: " + path.string());
  return table;
}

}  // namespace nonsplit
