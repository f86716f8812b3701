#include "btl/fourier.hpp"

#include <bit>
#include <stdexcept>

namespace btl {

namespace {

// Per-bit butterfly matrices.  Forward maps (lo, hi) -> (lo + hi, hi - lo);
// with the bit-set-means-+1 encoding this yields coeffs[S] = sum_x f(x) chi_S(x).
void butterfly_forward(std::vector<int64_t>& a) {
  size_t size = a.size();
  for (size_t half = 1; half < size; half <<= 1) {
    for (size_t block = 0; block < size; block += half << 1) {
      for (size_t i = block; i < block + half; ++i) {
        int64_t lo = a[i];
        int64_t hi = a[i + half];
        a[i] = lo + hi;
        a[i + half] = hi - lo;
      }
    }
  }
}

// Inverse per-bit matrix, scaled by 2: (lo, hi) -> (lo - hi, lo + hi).
void butterfly_inverse_scaled(std::vector<int64_t>& a) {
  size_t size = a.size();
  for (size_t half = 1; half < size; half <<= 1) {
    for (size_t block = 0; block < size; block += half << 1) {
      for (size_t i = block; i < block + half; ++i) {
        int64_t lo = a[i];
        int64_t hi = a[i + half];
        a[i] = lo - hi;
        a[i + half] = lo + hi;
      }
    }
  }
}

}  // namespace

Spectrum wht(const BFunc& f) {
  if (f.range_kind != RangeKind::PmOne)
    throw std::invalid_argument("wht: extended_int input rejected");
  f.validate();
  Spectrum s;
  s.n = f.n;
  s.coeffs.assign(f.values.begin(), f.values.end());
  butterfly_forward(s.coeffs);
  return s;
}

BFunc inverse_wht(const Spectrum& s) {
  if (s.coeffs.size() != (size_t(1) << s.n))
    throw std::invalid_argument("inverse_wht: bad spectrum length");
  std::vector<int64_t> a = s.coeffs;
  butterfly_inverse_scaled(a);
  BFunc f;
  f.n = s.n;
  f.range_kind = RangeKind::PmOne;
  f.values.resize(a.size());
  int64_t scale = int64_t(1) << s.n;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] % scale != 0)
      throw std::invalid_argument("inverse_wht: spectrum is not an exact preimage");
    int64_t v = a[i] / scale;
    if (v != 1 && v != -1)
      throw std::invalid_argument("inverse_wht: preimage is not +/-1 valued");
    f.values[i] = int32_t(v);
  }
  return f;
}

int fourier_degree(const Spectrum& s) {
  int deg = -1;
  for (Mask set = 0; set < s.coeffs.size(); ++set) {
    if (s.coeffs[set] != 0) {
      int sz = std::popcount(set);
      if (sz > deg) deg = sz;
    }
  }
  if (deg < 0) throw std::invalid_argument("fourier_degree: all-zero spectrum");
  return deg;
}

Dyadic tail_mass(const Spectrum& s, int level) {
  if (level < 0 || level > s.n + 1) throw std::out_of_range("tail_mass: bad level");
  long long sum = 0;
  for (Mask set = 0; set < s.coeffs.size(); ++set) {
    if (std::popcount(set) >= level) sum += s.coeffs[set] * s.coeffs[set];
  }
  Dyadic d{sum, 2 * s.n};
  d.normalize();
  return d;
}

Dyadic distance_lb_low_degree(const Spectrum& s, int level) {
  Dyadic t = tail_mass(s, level);
  t.log2_den += 2;
  t.normalize();
  return t;
}

}  // namespace btl
