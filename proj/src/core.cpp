#include "btl/core.hpp"

#include <bit>

namespace btl {

BFunc BFunc::constant(int n, int32_t value, RangeKind kind) {
  if (n < 0 || n > kMaxDim) throw std::invalid_argument("BFunc: bad dimension");
  BFunc f;
  f.n = n;
  f.range_kind = kind;
  f.values.assign(size_t(1) << n, value);
  f.validate();
  return f;
}

void BFunc::validate() const {
  if (n < 0 || n > kMaxDim) throw std::invalid_argument("BFunc: bad dimension");
  if (values.size() != (size_t(1) << n))
    throw std::invalid_argument("BFunc: truth table length is not 2^n");
  for (int32_t v : values) {
    if (range_kind == RangeKind::PmOne) {
      if (v != 1 && v != -1) throw std::invalid_argument("BFunc: pm_one value not in {-1,+1}");
    } else {
      if (v < kLoSentinel || v > kHiSentinel)
        throw std::invalid_argument("BFunc: extended_int value outside sentinel range");
    }
  }
}

int hamming_weight(PointIndex x) { return std::popcount(x.bits); }

PointIndex flip(PointIndex x, int i, bool up) {
  if (i < 0 || i >= x.n) throw std::out_of_range("flip: coordinate out of range");
  Mask bit = Mask(1) << i;
  return PointIndex(up ? (x.bits | bit) : (x.bits & ~bit), x.n);
}

int character(Mask s, Mask point_bits) {
  // chi_S(x) = (-1)^{#{i in S : x_i = -1}}; unset bits are -1.
  return (std::popcount(s & ~point_bits) & 1) ? -1 : 1;
}

int character(Mask s, PointIndex x) {
  if (s > low_mask(x.n)) throw std::out_of_range("character: set exceeds dimension");
  return character(s, x.bits);
}

BFunc build_generalized_character(const std::vector<Mask>& blocks, int m) {
  size_t ell = blocks.size();
  if (ell == 0 || (ell & (ell - 1)) != 0)
    throw std::invalid_argument("build_generalized_character: block count not a power of two");
  int ell_bits = std::countr_zero(ell);
  if (m < 0 || ell_bits + m > kMaxDim)
    throw std::invalid_argument("build_generalized_character: dimension out of range");
  for (Mask b : blocks)
    if (b > low_mask(m))
      throw std::out_of_range("build_generalized_character: block exceeds [m]");

  BFunc f;
  f.n = ell_bits + m;
  f.range_kind = RangeKind::PmOne;
  f.values.resize(size_t(1) << f.n);
  Mask tmask = low_mask(ell_bits);
  for (Mask p = 0; p < f.values.size(); ++p) {
    Mask t = p & tmask;
    Mask z = p >> ell_bits;
    f.values[p] = int32_t(character(blocks[t], z));
  }
  return f;
}

IndexSplit split_point(PointIndex x, int ell_bits) {
  if (ell_bits < 0 || ell_bits > x.n) throw std::out_of_range("split_point: ell_bits out of range");
  IndexSplit s;
  s.ell_bits = ell_bits;
  s.n = x.n;
  s.t = x.bits & low_mask(ell_bits);
  s.z = x.bits >> ell_bits;
  return s;
}

PointIndex join_point(const IndexSplit& s) {
  if (s.ell_bits < 0 || s.ell_bits > s.n) throw std::out_of_range("join_point: ell_bits out of range");
  if (s.t > low_mask(s.ell_bits) || s.z > low_mask(s.n - s.ell_bits))
    throw std::out_of_range("join_point: parts out of range");
  return PointIndex((s.z << s.ell_bits) | s.t, s.n);
}

}  // namespace btl
