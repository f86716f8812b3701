#include "btl/rng.hpp"

#include <array>
#include <bit>

namespace btl {

Mask Stream::subset(Mask candidates, int k) {
  int total = std::popcount(candidates);
  if (k < 0 || k > total) throw std::invalid_argument("Stream::subset: infeasible size");
  std::array<uint8_t, 32> pos{};
  int cnt = 0;
  for (int i = 0; i < 32; ++i)
    if (candidates & (Mask(1) << i)) pos[cnt++] = uint8_t(i);
  // Partial Fisher-Yates over the candidate positions.
  Mask out = 0;
  for (int j = 0; j < k; ++j) {
    int pick = j + int(below(uint64_t(cnt - j)));
    std::swap(pos[j], pos[pick]);
    out |= Mask(1) << pos[j];
  }
  return out;
}

}  // namespace btl
