#include <doctest.h>

#include <bit>
#include <vector>

#include "btl/core.hpp"
#include "btl/monotone.hpp"
#include "btl/rng.hpp"

using namespace btl;

namespace {

BFunc from_mask(uint32_t mask, int n) {
  BFunc f;
  f.n = n;
  f.values.resize(size_t(1) << n);
  for (size_t p = 0; p < f.values.size(); ++p) f.values[p] = (mask >> p) & 1 ? 1 : -1;
  return f;
}

bool mask_monotone(uint32_t mask, int n) {
  for (int i = 0; i < n; ++i)
    for (uint32_t p = 0; p < (1u << n); ++p)
      if (!(p >> i & 1) && ((mask >> p) & 1) > ((mask >> (p | (1u << i))) & 1)) return false;
  return true;
}

}  // namespace

TEST_CASE("is_monotone agrees with the definitional scan for all n = 3 functions") {
  for (uint32_t mask = 0; mask < 256; ++mask)
    REQUIRE(is_monotone(from_mask(mask, 3)) == mask_monotone(mask, 3));
}

TEST_CASE("exact boolean distance matches brute force for all n = 3 functions") {
  std::vector<uint32_t> monotone;
  for (uint32_t g = 0; g < 256; ++g)
    if (mask_monotone(g, 3)) monotone.push_back(g);
  CHECK(monotone.size() == 20);  // Dedekind number M(3)
  for (uint32_t mask = 0; mask < 256; ++mask) {
    int best = 8;
    for (uint32_t g : monotone) best = std::min(best, std::popcount(mask ^ g));
    REQUIRE(distance_to_monotone_exact_boolean(from_mask(mask, 3)) == Dyadic{best, 3});
  }
}

TEST_CASE("violation report bookkeeping is self-consistent") {
  Stream rng(3);
  for (int rep = 0; rep < 30; ++rep) {
    BFunc f;
    f.n = 8;
    f.range_kind = RangeKind::ExtendedInt;
    f.values.resize(256);
    for (auto& v : f.values) v = int32_t(rng.below(6));
    ViolationReport r = violation_report(f, 2, true);
    CHECK(r.total_edges == 8 * 128);
    long long sum = 0;
    for (auto c : r.violated_by_direction) sum += c;
    CHECK(sum == r.violated_edges_total());
    long long matrix_sum = 0;
    for (const auto& row : r.violated_by_suffix_direction_and_index)
      for (auto c : row) matrix_sum += c;
    long long index_dirs = r.violated_by_direction[0] + r.violated_by_direction[1];
    CHECK(matrix_sum + index_dirs == sum);
    CHECK(*r.violated_pair_count >= sum);  // edges are comparable pairs
    CHECK(r.all_zero() == is_monotone(f));
  }
}

TEST_CASE("sweep_repair returns a monotone dominating function") {
  Stream rng(4);
  for (int rep = 0; rep < 30; ++rep) {
    BFunc f;
    f.n = 7;
    f.range_kind = RangeKind::ExtendedInt;
    f.values.resize(128);
    for (auto& v : f.values) v = int32_t(rng.below(10)) - 5;
    BFunc g = sweep_repair(f);
    CHECK(is_monotone(g));
    for (size_t p = 0; p < f.size(); ++p) CHECK(g.values[p] >= f.values[p]);
  }
}

TEST_CASE("general bounds bracket the exact boolean distance") {
  Stream rng(6);
  for (int rep = 0; rep < 50; ++rep) {
    BFunc f;
    f.n = 6;
    f.values.resize(64);
    for (auto& v : f.values) v = rng.coin() ? 1 : -1;
    DistanceBounds b = distance_bounds_general(f);
    Dyadic exact = distance_to_monotone_exact_boolean(f);
    CHECK(b.lower == exact);  // two-valued input: matching oracle on both sides
    CHECK(b.upper == exact);
    CHECK(b.lower_method == "matching-exact");
  }
  for (int rep = 0; rep < 30; ++rep) {
    BFunc f;
    f.n = 6;
    f.range_kind = RangeKind::ExtendedInt;
    f.values.resize(64);
    for (auto& v : f.values) v = int32_t(rng.below(5));
    DistanceBounds b = distance_bounds_general(f);
    CHECK(b.lower <= b.upper);
    CHECK(b.upper <= Dyadic::one());
  }
}

TEST_CASE("distance bounds on monotone inputs are zero") {
  BFunc f = BFunc::constant(5, 1);
  DistanceBounds b = distance_bounds_general(f);
  CHECK(b.lower == Dyadic::zero());
  CHECK(b.upper == Dyadic::zero());
  CHECK(distance_to_monotone_exact_boolean(f) == Dyadic::zero());
}
