#include <doctest.h>

#include <bit>
#include <cmath>

#include "btl/core.hpp"
#include "btl/fourier.hpp"
#include "btl/instances.hpp"
#include "btl/monotone.hpp"
#include "btl/rng.hpp"

using namespace btl;

TEST_CASE("sparse blocks have the promised sizes and intersections") {
  Stream rng(42);
  for (int rep = 0; rep < 2000; ++rep) {
    int m = 4 + int(rng.below(7));
    int k = 2 + int(rng.below(2));
    if (2 * k > m) k = 2;
    for (bool intersect : {false, true}) {
      if (intersect && 2 * k - 1 > m) continue;
      auto [x, y] = gen_sparse_block(m, k, intersect, rng);
      CHECK(std::popcount(x) == k);
      CHECK(std::popcount(y) == k);
      CHECK((x & ~low_mask(m)) == 0);
      CHECK((y & ~low_mask(m)) == 0);
      CHECK(std::popcount(x & y) == (intersect ? 1 : 0));
    }
  }
}

TEST_CASE("block sampling is hypergeometric: element marginal = k/m within 3 sigma") {
  int m = 10, k = 3, draws = 10000;
  Stream rng(2718);
  int hits = 0;
  for (int rep = 0; rep < draws; ++rep) {
    auto [x, y] = gen_sparse_block(m, k, false, rng);
    if (x & 1) ++hits;
  }
  double p = double(k) / m;
  double sigma = std::sqrt(p * (1 - p) / draws);
  CHECK(std::abs(double(hits) / draws - p) < 3 * sigma);
}

TEST_CASE("instances: unique intersecting block, uniformly placed") {
  std::vector<int> where(4, 0);
  for (int s = 0; s < 4000; ++s) {
    auto inst = gen_sparse_instance(4, 8, 2, true, 1000 + s);
    CHECK_NOTHROW(inst.validate());
    int found = -1;
    for (int t = 0; t < 4; ++t) {
      int isz = std::popcount(inst.x_blocks[t] & inst.y_blocks[t]);
      if (isz == 1) {
        CHECK(found == -1);
        found = t;
      } else {
        CHECK(isz == 0);
      }
    }
    REQUIRE(found >= 0);
    ++where[found];
    CHECK(eval_disj(inst) == 1);
  }
  for (int t = 0; t < 4; ++t) CHECK(where[t] > 800);  // mean 1000, sigma ~27

  auto disjoint = gen_sparse_instance(4, 8, 2, false, 7);
  CHECK(eval_disj(disjoint) == -1);
  CHECK_THROWS(gen_sparse_instance(4, 8, 1, true, 7));   // k >= 2 required
  CHECK_THROWS(gen_sparse_instance(4, 4, 3, false, 7));  // 2k > m infeasible
}

TEST_CASE("concatenate preserves the OR and the sparse accounting") {
  auto inst = gen_sparse_instance(2, 6, 2, true, 99);
  DisjInstance cat = concatenate(inst);
  CHECK(cat.ell == 1);
  CHECK(cat.m == 12);
  CHECK(std::popcount(cat.x_blocks[0]) == 4);
  CHECK(eval_disj(cat) == eval_disj(inst));
  // Shifted copies: block t lands at coordinates [t*m, (t+1)*m).
  for (int t = 0; t < inst.ell; ++t)
    CHECK(((cat.x_blocks[0] >> (t * inst.m)) & low_mask(inst.m)) == inst.x_blocks[t]);
}

TEST_CASE("gadget values follow 4|t| + 2|z| + two characters") {
  auto inst = gen_sparse_instance(2, 5, 2, true, 5);
  BFunc h = build_mono_gadget(inst);
  CHECK(h.n == 6);
  CHECK(h.range_kind == RangeKind::ExtendedInt);
  for (Mask p = 0; p < h.size(); ++p) {
    Mask t = p & 1, z = p >> 1;
    int32_t want = 4 * std::popcount(t) + 2 * std::popcount(z) +
                   character(inst.x_blocks[t], z) + character(inst.y_blocks[t], z);
    CHECK(h(p) == want);
  }
}

TEST_CASE("truncation threshold: minimal half-step with clamp prob <= 1/16") {
  for (int m = 4; m <= 12; ++m) {
    TruncationInfo info = truncation_threshold(m);
    CHECK(info.clamp_prob <= Dyadic{1, 4});
    CHECK(info.c_prime == doctest::Approx(info.half_steps / (2 * std::sqrt(double(m)))));

    // Exact binomial recount, and minimality of j.
    auto clamp_count = [m](int j) {
      long long c = 0, binom = 1;
      for (int w = 0; w <= m; ++w) {
        if (std::abs(2 * w - m) >= j) c += binom;
        binom = binom * (m - w) / (w + 1);
      }
      return c;
    };
    long long total = 1LL << m;
    CHECK(Dyadic{clamp_count(info.half_steps), m} == info.clamp_prob);
    CHECK(16 * clamp_count(info.half_steps) <= total);
    if (info.half_steps > 0) CHECK(16 * clamp_count(info.half_steps - 1) > total);
  }
}

TEST_CASE("truncated gadget clamps exactly outside the central band") {
  auto inst = gen_sparse_instance(2, 8, 2, true, 12);
  TruncationInfo info = truncation_threshold(8);
  BFunc h = build_mono_gadget(inst);
  BFunc hp = build_mono_gadget_truncated(inst);
  for (Mask p = 0; p < hp.size(); ++p) {
    int w = std::popcount(p >> 1);
    int dev = std::abs(2 * w - 8);
    if (dev >= info.half_steps)
      CHECK((hp(p) == kHiSentinel || hp(p) == kLoSentinel));
    else
      CHECK(hp(p) == h(p));
  }
}

TEST_CASE("selector round trip and evaluation") {
  std::vector<Mask> blocks = {0b011, 0b100, 0b110, 0b001};
  IndexSelector sel = selector_from_blocks(blocks, 3);
  CHECK(sel.ell == 2);
  CHECK(sel.n == 5);
  CHECK(blocks_from_selector(sel) == blocks);
  BFunc f = build_selector_function(sel);
  for (Mask p = 0; p < 32; ++p) {
    CHECK(f(p) == eval_selector_function(sel, p));
    CHECK(f(p) == character(blocks[p & 3], p >> 2));
  }
}

TEST_CASE("fourier gadget: selector identity and |D| accounting") {
  int n = 9, ell = 1, d = 3;  // m = 8, k = n - 2d = 3
  for (bool intersect : {false, true}) {
    auto inst = gen_sparse_instance(1 << ell, n - ell, d, intersect, 77 + intersect);
    CHECK(fourier_gadget_target_degree(inst) == 3);
    IndexSelector dsel = fourier_gadget_selector(inst);
    BFunc h = build_fourier_gadget(inst);
    CHECK(h == build_selector_function(dsel));
    for (int t = 0; t < inst.ell; ++t) {
      int isz = std::popcount(inst.x_blocks[t] & inst.y_blocks[t]);
      CHECK(std::popcount(dsel.sets[t]) == 3 - ell + 2 * isz);
    }
    CHECK((fourier_degree(wht(h)) <= 3) == !intersect);
  }
}

TEST_CASE("D+ samples have degree <= k; D- samples exceed it") {
  int n = 10, k = 4, ell = 1;
  for (int s = 0; s < 20; ++s) {
    CHECK(fourier_degree(wht(sample_dplus(n, k, ell, 100 + s))) <= k);
    BFunc minus = sample_dminus(n, k, ell, 0, 200 + s);
    CHECK(fourier_degree(wht(minus)) >= n - k + 1);  // the big set dominates
  }
  Stream rng(1);
  DMinusSample dm = sample_dminus_selector(n, k, ell, 0, rng);
  CHECK(std::popcount(dm.big_set) == n - k + 1);
  CHECK(dm.sel.sets[dm.special_prefix] == dm.big_set);
  CHECK(dm.big_set == default_big_set(n, k, ell));
}
