#pragma once

#include <cstdint>
#include <vector>

#include "btl/core.hpp"

// Exact Fourier analysis of +/-1 valued functions.  All spectra are integer
// valued at scale 2^n and every derived quantity is a dyadic rational, so no
// tolerances are needed anywhere in this module.

namespace btl {

// num / 2^log2_den, kept exact.  Every quantity in scope has a power-of-two
// denominator.
struct Dyadic {
  long long num = 0;
  int log2_den = 0;

  static Dyadic zero() { return {0, 0}; }
  static Dyadic one() { return {1, 0}; }

  void normalize() {
    while (log2_den > 0 && num % 2 == 0) {
      num /= 2;
      --log2_den;
    }
  }

  double value() const { return double(num) / double(1LL << log2_den); }

  // -1, 0, +1 like a three-way comparison of the represented rationals.
  static int compare(const Dyadic& a, const Dyadic& b) {
    __int128 lhs = __int128(a.num) << b.log2_den;
    __int128 rhs = __int128(b.num) << a.log2_den;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
  }

  friend bool operator==(const Dyadic& a, const Dyadic& b) { return compare(a, b) == 0; }
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return compare(a, b) >= 0; }
};

struct Spectrum {
  int n = 0;
  std::vector<int64_t> coeffs;  // coeffs[S] = 2^n * fhat(S), S as a bitmask

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

// In-place butterfly transform, O(n 2^n), exact integers.  Rejects
// extended_int inputs.
Spectrum wht(const BFunc& f);

// Exact inverse; throws if the spectrum is not a multiple-of-2^n preimage.
BFunc inverse_wht(const Spectrum& s);

// Largest |S| with a nonzero coefficient; 0 for constants.  Throws on the
// all-zero spectrum (not a +/-1 function).
int fourier_degree(const Spectrum& s);

// sum_{|S| >= level} fhat(S)^2, denominator 4^n.
Dyadic tail_mass(const Spectrum& s, int level);

// tail_mass(s, level) / 4: a certified lower bound on Pr[f != g] against any
// g of Fourier degree <= level - 1 (for +/-1 valued f, g).
Dyadic distance_lb_low_degree(const Spectrum& s, int level);

}  // namespace btl
