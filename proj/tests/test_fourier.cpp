#include <doctest.h>

#include <bit>

#include "btl/core.hpp"
#include "btl/fourier.hpp"
#include "btl/rng.hpp"

using namespace btl;

namespace {

// Independent O(4^n) oracle: coeffs[S] = sum_x f(x) chi_S(x).
Spectrum spectrum_brute(const BFunc& f) {
  Spectrum s;
  s.n = f.n;
  s.coeffs.assign(f.size(), 0);
  for (Mask set = 0; set < f.size(); ++set)
    for (Mask x = 0; x < f.size(); ++x) s.coeffs[set] += f(x) * character(set, x);
  return s;
}

BFunc from_mask(uint64_t mask, int n) {
  BFunc f;
  f.n = n;
  f.values.resize(size_t(1) << n);
  for (size_t p = 0; p < f.values.size(); ++p) f.values[p] = (mask >> p) & 1 ? 1 : -1;
  return f;
}

}  // namespace

TEST_CASE("wht matches the brute-force spectrum for all functions at n <= 3") {
  for (int n = 1; n <= 3; ++n)
    for (uint64_t mask = 0; mask < (uint64_t(1) << (1 << n)); ++mask) {
      BFunc f = from_mask(mask, n);
      REQUIRE(wht(f) == spectrum_brute(f));
    }
}

TEST_CASE("wht matches the brute-force spectrum for random functions at n = 8") {
  Stream rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    BFunc f;
    f.n = 8;
    f.values.resize(256);
    for (auto& v : f.values) v = rng.coin() ? 1 : -1;
    REQUIRE(wht(f) == spectrum_brute(f));
    REQUIRE(inverse_wht(wht(f)) == f);
  }
}

TEST_CASE("characters have a single coefficient and degree |T|") {
  int n = 6;
  for (Mask t = 0; t <= low_mask(n); ++t) {
    BFunc chi;
    chi.n = n;
    chi.values.resize(64);
    for (Mask p = 0; p < 64; ++p) chi.values[p] = int32_t(character(t, p));
    Spectrum s = wht(chi);
    for (Mask set = 0; set < 64; ++set) CHECK(s.coeffs[set] == (set == t ? 64 : 0));
    CHECK(fourier_degree(s) == std::popcount(t));
    CHECK(tail_mass(s, std::popcount(t)) == Dyadic{1, 0});
    if (std::popcount(t) > 0) CHECK(tail_mass(s, std::popcount(t) + 1) == Dyadic::zero());
    CHECK(distance_lb_low_degree(s, std::popcount(t)) == Dyadic{1, 2});
  }
}

TEST_CASE("tail masses are nested and bounded by Parseval") {
  Stream rng(5);
  BFunc f;
  f.n = 9;
  f.values.resize(512);
  for (auto& v : f.values) v = rng.coin() ? 1 : -1;
  Spectrum s = wht(f);
  CHECK(tail_mass(s, 0) == Dyadic{1, 0});
  Dyadic prev = tail_mass(s, 0);
  for (int level = 1; level <= f.n + 1; ++level) {
    Dyadic cur = tail_mass(s, level);
    CHECK(cur <= prev);
    prev = cur;
  }
  CHECK(tail_mass(s, f.n + 1) == Dyadic::zero());
}

TEST_CASE("Dyadic comparison is exact across denominators") {
  CHECK(Dyadic{1, 3} == Dyadic{2, 4});
  CHECK(Dyadic{1, 4} < Dyadic{1, 3});
  CHECK(Dyadic{3, 2} > Dyadic{1, 2});
  CHECK(Dyadic{-1, 2} < Dyadic::zero());
  Dyadic d{6, 3};
  d.normalize();
  CHECK(d.num == 3);
  CHECK(d.log2_den == 2);
  CHECK(Dyadic{1, 1}.value() == doctest::Approx(0.5));
}

TEST_CASE("wht rejects extended ranges; inverse rejects non-preimages") {
  BFunc f = BFunc::constant(3, 5, RangeKind::ExtendedInt);
  CHECK_THROWS(wht(f));
  Spectrum s;
  s.n = 2;
  s.coeffs = {1, 0, 0, 0};  // not a multiple-of-4 scaling of a +/-1 function
  CHECK_THROWS(inverse_wht(s));
  Spectrum zero;
  zero.n = 2;
  zero.coeffs = {0, 0, 0, 0};
  CHECK_THROWS(fourier_degree(zero));
}
