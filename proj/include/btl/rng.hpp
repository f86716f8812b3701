#pragma once

#include <cstdint>
#include <stdexcept>

#include "btl/core.hpp"

// Splittable counter-based randomness.  Every generator in the library takes
// an explicit Stream (or a raw seed), so all sampling is reproducible, and
// derived per-block streams keep parallel generation deterministic.

namespace btl {

inline uint64_t mix64(uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Stream {
 public:
  explicit Stream(uint64_t seed) : state_(mix64(seed ^ 0x6A09E667F3BCC909ULL)) {}

  // Child stream independent of subsequent draws from this one.
  Stream derive(uint64_t idx) const {
    return Stream(state_ ^ mix64(idx + 0x243F6A8885A308D3ULL));
  }

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased uniform draw from [0, bound).
  uint64_t below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Stream::below: zero bound");
    uint64_t threshold = -bound % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  bool coin() { return next() & 1; }

  double unit() { return double(next() >> 11) * 0x1.0p-53; }

  // Uniform k-subset of the set bits of `candidates`.
  Mask subset(Mask candidates, int k);

 private:
  uint64_t state_;
};

}  // namespace btl
