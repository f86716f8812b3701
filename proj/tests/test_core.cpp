#include <doctest.h>

#include <bit>

#include "btl/core.hpp"
#include "btl/rng.hpp"

using namespace btl;

namespace {

int character_brute(Mask s, Mask bits, int n) {
  int prod = 1;
  for (int i = 0; i < n; ++i)
    if (s >> i & 1) prod *= (bits >> i & 1) ? 1 : -1;
  return prod;
}

}  // namespace

TEST_CASE("character matches the coordinate-product definition exhaustively") {
  for (int n = 0; n <= 5; ++n)
    for (Mask s = 0; s <= low_mask(n); ++s)
      for (Mask x = 0; x <= low_mask(n); ++x)
        REQUIRE(character(s, x) == character_brute(s, x, n));
}

TEST_CASE("flip forces a single coordinate") {
  PointIndex x(0b1010, 4);
  CHECK(flip(x, 0, true).bits == 0b1011);
  CHECK(flip(x, 1, false).bits == 0b1000);
  CHECK(flip(x, 1, true).bits == 0b1010);
  CHECK(hamming_weight(x) == 2);
  CHECK(hamming_weight(flip(x, 0, true)) == 3);
}

TEST_CASE("split/join round trip") {
  for (Mask p = 0; p < 64; ++p) {
    PointIndex x(p, 6);
    for (int lb = 0; lb <= 6; ++lb) {
      IndexSplit s = split_point(x, lb);
      CHECK(s.t == (p & low_mask(lb)));
      CHECK(s.z == (p >> lb));
      CHECK(join_point(s) == x);
    }
  }
}

// For an edge (z with coordinate i forced down / up) and characters chi_S,
// chi_T: the combined value moves by 2*chi_S(up)[i in S] + 2*chi_T(up)[i in T],
// and hits -4 exactly when i lies in both sets and both characters are -1 at
// the upper endpoint.  This is the exact mechanism that makes gadget edges
// violated only at an intersection coordinate.
namespace {

void check_edge_sum(int n, Mask s, Mask t, Mask z, int i) {
  Mask up = z | (Mask(1) << i), down = z & ~(Mask(1) << i);
  int delta = character(s, up) + character(t, up) - character(s, down) - character(t, down);
  int expected = 2 * ((s >> i & 1) ? character(s, up) : 0) +
                 2 * ((t >> i & 1) ? character(t, up) : 0);
  REQUIRE(delta == expected);
  bool hits = delta == -4;
  bool both = (s >> i & 1) && (t >> i & 1) && character(s, up) == -1 &&
              character(t, up) == -1;
  REQUIRE(hits == both);
}

}  // namespace

TEST_CASE("four-term edge sum: exhaustive at n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (Mask s = 0; s <= low_mask(n); ++s)
      for (Mask t = 0; t <= low_mask(n); ++t)
        for (Mask z = 0; z <= low_mask(n); ++z)
          for (int i = 0; i < n; ++i) check_edge_sum(n, s, t, z, i);
}

TEST_CASE("four-term edge sum: randomized at n = 10") {
  int n = 10;
  Stream rng(2024);
  for (int rep = 0; rep < 20000; ++rep) {
    Mask s = Mask(rng.below(1u << n)), t = Mask(rng.below(1u << n));
    Mask z = Mask(rng.below(1u << n));
    check_edge_sum(n, s, t, z, int(rng.below(n)));
  }
}

TEST_CASE("build_generalized_character evaluates chi_{blocks[t]}(z)") {
  std::vector<Mask> blocks = {0b0011, 0b0101, 0b1000, 0b0000};
  int m = 4;
  BFunc f = build_generalized_character(blocks, m);
  CHECK(f.n == 6);
  for (Mask p = 0; p < 64; ++p) {
    Mask t = p & 3, z = p >> 2;
    CHECK(f(p) == character(blocks[t], z));
  }
  CHECK_NOTHROW(f.validate());
}

TEST_CASE("BFunc validation rejects malformed tables") {
  BFunc f;
  f.n = 2;
  f.values = {1, -1, 1};  // wrong length
  CHECK_THROWS(f.validate());
  f.values = {1, -1, 2, 1};  // out of range for pm_one
  CHECK_THROWS(f.validate());
  f.range_kind = RangeKind::ExtendedInt;
  CHECK_NOTHROW(f.validate());
}

TEST_CASE("PointIndex rejects out-of-range bits") {
  CHECK_THROWS(PointIndex(0b100, 2));
  CHECK_THROWS(PointIndex(0, 25));
  CHECK_NOTHROW(PointIndex(0b11, 2));
}

TEST_CASE("Stream: subsets are uniform-size and reproducible") {
  Stream a(7), b(7);
  for (int rep = 0; rep < 100; ++rep) {
    Mask s = a.subset(low_mask(12), 5);
    CHECK(std::popcount(s) == 5);
    CHECK((s & ~low_mask(12)) == 0);
    CHECK(b.subset(low_mask(12), 5) == s);
  }
  Stream c = a.derive(1), d = a.derive(2);
  CHECK(c.next() != d.next());
}
