#pragma once
// Fourier coefficients a_n of fixed weight-2 newforms of odd squarefree
// level, generated from eta-quotient q-expansions. The normalized Hecke
// eigenvalue is lambda(n) = a_n / sqrt(n).

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "nonsplit/util.hpp"

namespace nonsplit {

struct EtaFactor {
  std::uint32_t scale;  // eta(scale * z)
  std::uint32_t power;
};

struct FormDescriptor {
  std::uint32_t level = 11;
  std::uint32_t weight = 2;
  std::vector<EtaFactor> eta;

  // Built-in newforms: level 11 = eta(z)^2 eta(11z)^2,
  // level 15 = eta(z) eta(3z) eta(5z) eta(15z).
  static FormDescriptor builtin(std::uint32_t level);
  void validate() const;
};

class CoefficientTable {
 public:
  // Expands the eta quotient to order M by sparse pentagonal-number
  // convolutions. Throws on overflow of the signed 64-bit accumulators.
  static CoefficientTable expand(const FormDescriptor& desc, u64 M);

  const FormDescriptor& descriptor() const { return desc_; }
  u64 length() const { return a_.size(); }

  i64 a(u64 n) const {
    if (n < 1 || n > a_.size())
      throw std::out_of_range("CoefficientTable: index out of range");
    return a_[n - 1];
  }
  double lambda(u64 n) const {
    return static_cast<double>(a(n)) / std::sqrt(static_cast<double>(n));
  }
  const std::vector<i64>& raw() const { return a_; }

 private:
  friend CoefficientTable load_coefficient_cache(const std::filesystem::path&);
  FormDescriptor desc_;
  std::vector<i64> a_;
};

struct HeckeReport {
  bool ok = true;
  u64 checks = 0;
  std::string first_violation;  // empty on success
};

// Checks Hecke multiplicativity a_{mn} = a_m a_n for coprime pairs, the
// prime-power recursion a_{p^{k+1}} = a_p a_{p^k} - p a_{p^{k-1}} (p not
// dividing the level) and a_{p^k} = a_p^k (p dividing the level), all in
// exact integer arithmetic.
HeckeReport verify_hecke(const CoefficientTable& table);

// max over n of |lambda(n)| / tau(n); Deligne gives <= 1. The comparison is
// done in exact integers as a_n^2 <= tau(n)^2 n.
double deligne_margin(const CoefficientTable& table);

// Cache file: magic "NSC1", then little-endian u32 level, u32 weight,
// u64 length M, then M signed 64-bit coefficients a_1..a_M.
void save_coefficient_cache(const std::filesystem::path& path,
                            const CoefficientTable& table);
CoefficientTable load_coefficient_cache(const std::filesystem::path& path);

}  // namespace nonsplit
