#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Exact truth-table representation of functions on the hypercube {-1,+1}^n,
// together with the bit-level helpers everything else builds on.
//
// Encoding: a point is an n-bit index; bit i set <=> coordinate i is +1.
// Coordinate sets are bitmasks over the same bit positions (0-based).

namespace btl {

inline constexpr int kMaxDim = 24;

// Sentinels standing in for +/- infinity in extended-integer ranges.  They
// compare correctly against every finite value the gadgets can produce
// (those lie in [-2, 6n]).
inline constexpr int32_t kHiSentinel = INT32_C(1) << 30;
inline constexpr int32_t kLoSentinel = -(INT32_C(1) << 30);

using Mask = uint32_t;

inline constexpr Mask low_mask(int n) {
  return n >= 32 ? ~Mask(0) : (Mask(1) << n) - 1;
}

struct PointIndex {
  Mask bits = 0;  // bit i set <=> x_i = +1
  int n = 0;

  PointIndex() = default;
  PointIndex(Mask bits_, int n_) : bits(bits_), n(n_) {
    if (n < 0 || n > kMaxDim) throw std::invalid_argument("PointIndex: bad dimension");
    if (bits > low_mask(n)) throw std::invalid_argument("PointIndex: bits out of range");
  }

  friend bool operator==(const PointIndex&, const PointIndex&) = default;
};

enum class RangeKind { PmOne, ExtendedInt };

struct BFunc {
  int n = 0;
  RangeKind range_kind = RangeKind::PmOne;
  std::vector<int32_t> values;  // exactly 2^n entries, point-index order

  static BFunc constant(int n, int32_t value, RangeKind kind = RangeKind::PmOne);

  size_t size() const { return values.size(); }
  int32_t operator()(Mask p) const { return values[p]; }

  // Checks the length and the range invariants; throws on violation.
  void validate() const;

  friend bool operator==(const BFunc&, const BFunc&) = default;
};

// The (t, z) decomposition of a point: t is the low ell_bits coordinates
// (the index part), z the remaining n - ell_bits coordinates (the suffix).
struct IndexSplit {
  int ell_bits = 0;
  int n = 0;
  Mask t = 0;
  Mask z = 0;

  friend bool operator==(const IndexSplit&, const IndexSplit&) = default;
};

int hamming_weight(PointIndex x);

// Forces coordinate i (0-based) to +1 (up) or -1 (down).
PointIndex flip(PointIndex x, int i, bool up);

// chi_S(x) = prod_{i in S} x_i; the empty product is +1.
int character(Mask s, Mask point_bits);
int character(Mask s, PointIndex x);

// f_x(t, z) := chi_{blocks[t]}(z) on log2(blocks.size()) + m bits.
// blocks.size() must be a power of two; each block must fit in [m].
BFunc build_generalized_character(const std::vector<Mask>& blocks, int m);

IndexSplit split_point(PointIndex x, int ell_bits);
PointIndex join_point(const IndexSplit& s);

}  // namespace btl
