#include "nonsplit/coeffs.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"

using namespace nonsplit;

namespace {

// Independent oracle: dense factor-by-factor expansion of the eta quotient,
// one (1 - q^{m n})^{power} factor at a time. O(M^2), test-only.
std::vector<i64> dense_eta_expansion(const FormDescriptor& desc, u64 M) {
  const i64 L = static_cast<i64>(M) - 1;
  std::vector<i64> acc(L + 1, 0);
  acc[0] = 1;
  for (const auto& f : desc.eta) {
    for (std::uint32_t rep = 0; rep < f.power; ++rep) {
      for (i64 n = f.scale; n <= L; n += f.scale) {
        // multiply by (1 - q^n): acc'[j] = acc[j] - acc[j - n]
        for (i64 j = L; j >= n; --j) acc[j] -= acc[j - n];
      }
    }
  }
  return acc;  // acc[j] = a_{j+1}
}

}  // namespace

TEST_CASE("level 11 expansion: pinned small coefficients") {
  auto table = CoefficientTable::expand(FormDescriptor::builtin(11), 12);
  CHECK(table.a(1) == 1);
  CHECK(table.a(2) == -2);
  CHECK(table.a(3) == -1);
  CHECK(table.a(4) == 2);
  CHECK(table.a(5) == 1);
  CHECK(table.a(11) == 1);
}

TEST_CASE("sparse expansion matches the dense oracle") {
  for (std::uint32_t level : {11u, 15u}) {
    auto desc = FormDescriptor::builtin(level);
    auto table = CoefficientTable::expand(desc, 2000);
    auto oracle = dense_eta_expansion(desc, 2000);
    for (u64 n = 1; n <= 2000; ++n) CHECK(table.a(n) == oracle[n - 1]);
  }
}

TEST_CASE("lambda normalization") {
  auto table = CoefficientTable::expand(FormDescriptor::builtin(11), 10);
  CHECK(table.lambda(1) == doctest::Approx(1.0));
  CHECK(table.lambda(2) == doctest::Approx(-2.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(table.lambda(4) == doctest::Approx(1.0).epsilon(1e-15));  // a_4 = (-2)^2 - 2
  CHECK_THROWS_AS(table.lambda(11), std::out_of_range);
  CHECK_THROWS_AS(table.lambda(0), std::out_of_range);
}

TEST_CASE("Hecke verification passes on a genuine table") {
  auto table = CoefficientTable::expand(FormDescriptor::builtin(11), 10000);
  auto report = verify_hecke(table);
  CHECK(report.ok);
  CHECK(report.checks > 1000);
  // p | N branch: a_{121} = a_11^2
  CHECK(table.a(121) == table.a(11) * table.a(11));
}

TEST_CASE("expansion is deterministic") {
  auto t1 = CoefficientTable::expand(FormDescriptor::builtin(11), 5000);
  auto t2 = CoefficientTable::expand(FormDescriptor::builtin(11), 5000);
  CHECK(t1.raw() == t2.raw());
}

TEST_CASE("Deligne margin stays at or below 1") {
  auto table = CoefficientTable::expand(FormDescriptor::builtin(11), 100000);
  double margin = deligne_margin(table);
  CHECK(margin <= 1.0);
  // a_1 = 1, tau(1) = 1 attains ratio exactly 1
  CHECK(margin == doctest::Approx(1.0));
  // |lambda(2)|/tau(2) = sqrt(2)/2
  CHECK(std::abs(table.lambda(2)) / 2.0 ==
        doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("descriptor validation rejects malformed quotients") {
  FormDescriptor bad;
  bad.level = 12;  // even
  bad.eta = {{1, 2}, {11, 2}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.level = 11;
  bad.eta = {{1, 2}};  // weight 1/2 only
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.eta = {{1, 3}, {7, 3}};  // powers sum to 6
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.eta = {{2, 2}, {10, 2}};  // q-prefactor 24/24 ok but level even
  bad.level = 5;                // prefactor (2*2+10*2)/24 = 1: level mismatch ok,
  CHECK_NOTHROW(bad.validate());  // descriptor-level consistency is the caller's job
}

TEST_CASE("cache round trip is byte-identical and validated") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "nonsplit_coeffs_test";
  fs::create_directories(dir);
  auto path = dir / "level11.nsc";
  auto table = CoefficientTable::expand(FormDescriptor::builtin(11), 4096);
  save_coefficient_cache(path, table);

  auto loaded = load_coefficient_cache(path);
  CHECK(loaded.raw() == table.raw());
  CHECK(loaded.descriptor().level == 11);

  auto path2 = dir / "level11_resave.nsc";
  save_coefficient_cache(path2, loaded);
  std::ifstream f1(path, std::ios::binary), f2(path2, std::ios::binary);
  std::string s1((std::istreambuf_iterator<char>(f1)), {});
  std::string s2((std::istreambuf_iterator<char>(f2)), {});
  CHECK(s1 == s2);

  SUBCASE("magic validation") {
    std::fstream patch(path, std::ios::binary | std::ios::in | std::ios::out);
    patch.seekp(0);
    patch.write("XXXX", 4);
    patch.close();
    CHECK_THROWS_AS(load_coefficient_cache(path), std::runtime_error);
  }
  SUBCASE("length validation") {
    fs::resize_file(path2, fs::file_size(path2) - 8);
    CHECK_THROWS_AS(load_coefficient_cache(path2), std::runtime_error);
  }
}

TEST_CASE("injected fault is reported at the first violating pair") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "nonsplit_coeffs_test";
  fs::create_directories(dir);
  auto path = dir / "corrupt.nsc";
  auto table = CoefficientTable::expand(FormDescriptor::builtin(11), 100);
  save_coefficient_cache(path, table);
  {
    std::fstream patch(path, std::ios::binary | std::ios::in | std::ios::out);
    patch.seekp(20 + (6 - 1) * 8);  // a_6
    const char bump[8] = {42, 0, 0, 0, 0, 0, 0, 0};
    patch.write(bump, 8);
  }
  auto corrupted = load_coefficient_cache(path);
  CHECK(corrupted.a(6) != table.a(6));
  auto report = verify_hecke(corrupted);
  CHECK_FALSE(report.ok);
  CHECK(report.first_violation.find("(2,3)") != std::string::npos);
}
