#include "btl/instances.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace btl {

int DisjInstance::ell_bits() const {
  if (ell <= 0 || (ell & (ell - 1)) != 0)
    throw std::invalid_argument("DisjInstance: block count not a power of two");
  return std::countr_zero(unsigned(ell));
}

void DisjInstance::validate() const {
  ell_bits();
  if (m < 0 || m > kMaxDim) throw std::invalid_argument("DisjInstance: bad block width");
  if (x_blocks.size() != size_t(ell) || y_blocks.size() != size_t(ell))
    throw std::invalid_argument("DisjInstance: wrong block count");
  for (int t = 0; t < ell; ++t) {
    if (x_blocks[t] > low_mask(m) || y_blocks[t] > low_mask(m))
      throw std::out_of_range("DisjInstance: block exceeds [m]");
    if (promise == Promise::SparseK) {
      if (std::popcount(x_blocks[t]) != k || std::popcount(y_blocks[t]) != k)
        throw std::invalid_argument("DisjInstance: sparse promise weight violated");
      if (std::popcount(x_blocks[t] & y_blocks[t]) > 1)
        throw std::invalid_argument("DisjInstance: unique-intersection promise violated");
    }
  }
}

std::pair<Mask, Mask> gen_sparse_block(int m, int k, bool intersect, Stream& rng) {
  if (k < 2) throw std::invalid_argument("gen_sparse_block: k >= 2 required");
  if (m > kMaxDim) throw std::invalid_argument("gen_sparse_block: m too large");
  Mask universe = low_mask(m);
  if (intersect) {
    if (2 * k - 1 > m) throw std::invalid_argument("gen_sparse_block: infeasible (2k-1 > m)");
    int i = int(rng.below(uint64_t(m)));
    Mask pivot = Mask(1) << i;
    Mask xr = rng.subset(universe & ~pivot, k - 1);
    Mask yr = rng.subset(universe & ~pivot & ~xr, k - 1);
    return {pivot | xr, pivot | yr};
  }
  if (2 * k > m) throw std::invalid_argument("gen_sparse_block: infeasible (2k > m)");
  Mask x = rng.subset(universe, k);
  Mask y = rng.subset(universe & ~x, k);
  return {x, y};
}

DisjInstance gen_sparse_instance(int ell, int m, int k, bool intersect, uint64_t seed) {
  if (ell <= 0 || (ell & (ell - 1)) != 0)
    throw std::invalid_argument("gen_sparse_instance: ell not a power of two");
  Stream root(seed);
  int special = intersect ? int(root.below(uint64_t(ell))) : -1;
  DisjInstance inst;
  inst.ell = ell;
  inst.m = m;
  inst.promise = Promise::SparseK;
  inst.k = k;
  inst.x_blocks.resize(ell);
  inst.y_blocks.resize(ell);
  for (int t = 0; t < ell; ++t) {
    Stream block_rng = root.derive(uint64_t(t));
    auto [x, y] = gen_sparse_block(m, k, t == special, block_rng);
    inst.x_blocks[t] = x;
    inst.y_blocks[t] = y;
  }
  inst.validate();
  return inst;
}

int eval_disj(const DisjInstance& inst) {
  inst.validate();
  for (int t = 0; t < inst.ell; ++t)
    if (inst.x_blocks[t] & inst.y_blocks[t]) return 1;
  return -1;
}

DisjInstance concatenate(const DisjInstance& inst) {
  inst.validate();
  if (inst.promise != Promise::SparseK)
    throw std::invalid_argument("concatenate: sparse promise required");
  if (inst.ell * inst.m > kMaxDim)
    throw std::invalid_argument("concatenate: concatenated width too large");
  DisjInstance out;
  out.ell = 1;
  out.m = inst.ell * inst.m;
  out.promise = Promise::SparseK;
  out.k = inst.ell * inst.k;
  Mask x = 0, y = 0;
  for (int t = 0; t < inst.ell; ++t) {
    x |= inst.x_blocks[t] << (t * inst.m);
    y |= inst.y_blocks[t] << (t * inst.m);
  }
  out.x_blocks = {x};
  out.y_blocks = {y};
  // With at most one intersecting input block the unique-intersection
  // promise survives; otherwise drop it rather than lie.
  if (std::popcount(x & y) > 1) out.promise = Promise::None;
  return out;
}

BFunc build_mono_gadget(const DisjInstance& inst) {
  inst.validate();
  int lb = inst.ell_bits();
  int n = lb + inst.m;
  if (n > kMaxDim) throw std::invalid_argument("build_mono_gadget: dimension too large");
  BFunc h;
  h.n = n;
  h.range_kind = RangeKind::ExtendedInt;
  h.values.resize(size_t(1) << n);
  Mask tmask = low_mask(lb);
  for (Mask p = 0; p < h.values.size(); ++p) {
    Mask t = p & tmask;
    Mask z = p >> lb;
    h.values[p] = int32_t(4 * std::popcount(t) + 2 * std::popcount(z) +
                          character(inst.x_blocks[t], z) +
                          character(inst.y_blocks[t], z));
  }
  return h;
}

TruncationInfo truncation_threshold(int m) {
  if (m < 4) throw std::invalid_argument("truncation_threshold: m >= 4 required");
  // Binomial weights C(m, w).
  std::vector<long long> binom(m + 1);
  binom[0] = 1;
  for (int w = 1; w <= m; ++w) binom[w] = binom[w - 1] * (m - w + 1) / w;
  long long total = 1LL << m;
  for (int j = 1;; ++j) {
    // Clamped iff |2w - m| >= j.
    long long clamped = 0;
    for (int w = 0; w <= m; ++w)
      if (std::abs(2 * w - m) >= j) clamped += binom[w];
    if (16 * clamped <= total) {
      TruncationInfo info;
      info.half_steps = j;
      info.clamp_prob = Dyadic{clamped, m};
      info.clamp_prob.normalize();
      info.c_prime = double(j) / (2.0 * std::sqrt(double(m)));
      return info;
    }
  }
}

BFunc build_mono_gadget_truncated(const DisjInstance& inst) {
  BFunc h = build_mono_gadget(inst);
  int lb = inst.ell_bits();
  TruncationInfo info = truncation_threshold(inst.m);
  int j = info.half_steps;
  for (Mask p = 0; p < h.values.size(); ++p) {
    int w2 = 2 * std::popcount(p >> lb);
    if (w2 >= inst.m + j)
      h.values[p] = kHiSentinel;
    else if (w2 <= inst.m - j)
      h.values[p] = kLoSentinel;
  }
  return h;
}

void IndexSelector::validate() const {
  if (ell < 0 || ell > n || n > kMaxDim)
    throw std::invalid_argument("IndexSelector: bad dimensions");
  if (sets.size() != size_t(1) << ell)
    throw std::invalid_argument("IndexSelector: wrong map size");
  Mask prefix = low_mask(ell);
  for (Mask s : sets) {
    if (s > low_mask(n)) throw std::out_of_range("IndexSelector: set exceeds [n]");
    if (s & prefix)
      throw std::invalid_argument("IndexSelector: set touches the index prefix");
  }
}

IndexSelector selector_from_blocks(const std::vector<Mask>& blocks, int m) {
  size_t cnt = blocks.size();
  if (cnt == 0 || (cnt & (cnt - 1)) != 0)
    throw std::invalid_argument("selector_from_blocks: block count not a power of two");
  IndexSelector sel;
  sel.ell = std::countr_zero(cnt);
  sel.n = sel.ell + m;
  sel.sets.resize(cnt);
  for (size_t t = 0; t < cnt; ++t) {
    if (blocks[t] > low_mask(m))
      throw std::out_of_range("selector_from_blocks: block exceeds [m]");
    sel.sets[t] = blocks[t] << sel.ell;
  }
  sel.validate();
  return sel;
}

std::vector<Mask> blocks_from_selector(const IndexSelector& sel) {
  sel.validate();
  std::vector<Mask> blocks(sel.sets.size());
  for (size_t t = 0; t < blocks.size(); ++t) blocks[t] = sel.sets[t] >> sel.ell;
  return blocks;
}

int eval_selector_function(const IndexSelector& sel, Mask point) {
  return character(sel.sets[point & low_mask(sel.ell)], point);
}

BFunc build_selector_function(const IndexSelector& sel) {
  sel.validate();
  BFunc f;
  f.n = sel.n;
  f.range_kind = RangeKind::PmOne;
  f.values.resize(size_t(1) << sel.n);
  for (Mask p = 0; p < f.values.size(); ++p)
    f.values[p] = int32_t(eval_selector_function(sel, p));
  return f;
}

int fourier_gadget_target_degree(const DisjInstance& inst) {
  inst.validate();
  if (inst.promise != Promise::SparseK)
    throw std::invalid_argument("fourier gadget: sparse promise required");
  int ell = inst.ell_bits();
  int n = ell + inst.m;
  int k = n - 2 * inst.k;  // block weight d = (n - k)/2
  if (k < 0 || 2 * ell > k)
    throw std::invalid_argument("fourier gadget: needs ell <= k/2 (block weight too large)");
  return k;
}

IndexSelector fourier_gadget_selector(const DisjInstance& inst) {
  fourier_gadget_target_degree(inst);
  int ell = inst.ell_bits();
  std::vector<Mask> blocks(inst.ell);
  for (int t = 0; t < inst.ell; ++t)
    blocks[t] = low_mask(inst.m) & ~(inst.x_blocks[t] ^ inst.y_blocks[t]);
  return selector_from_blocks(blocks, inst.m);
}

BFunc build_fourier_gadget(const DisjInstance& inst) {
  fourier_gadget_target_degree(inst);
  int ell = inst.ell_bits();
  int n = ell + inst.m;
  IndexSelector fx = selector_from_blocks(inst.x_blocks, inst.m);
  IndexSelector gy = selector_from_blocks(inst.y_blocks, inst.m);
  Mask suffix = low_mask(n) & ~low_mask(ell);
  BFunc h;
  h.n = n;
  h.range_kind = RangeKind::PmOne;
  h.values.resize(size_t(1) << n);
  for (Mask p = 0; p < h.values.size(); ++p)
    h.values[p] = int32_t(eval_selector_function(fx, p) * eval_selector_function(gy, p) *
                          character(suffix, p));
  return h;
}

Mask default_big_set(int n, int k, int ell) {
  int size = n - k + 1;
  if (size < 0 || ell + size > n)
    throw std::invalid_argument("default_big_set: infeasible parameters");
  return low_mask(ell + size) & ~low_mask(ell);
}

namespace {

void check_d_params(int n, int k, int ell) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("D sample: bad n");
  if (k % 2 != 0) throw std::invalid_argument("D sample: k must be even");
  if (ell > k / 2 - 1) throw std::invalid_argument("D sample: needs ell <= k/2 - 1");
  if (ell < 0 || k / 2 > n - ell) throw std::invalid_argument("D sample: infeasible sizes");
}

}  // namespace

IndexSelector sample_dplus_selector(int n, int k, int ell, Stream& rng) {
  check_d_params(n, k, ell);
  IndexSelector sel;
  sel.ell = ell;
  sel.n = n;
  Mask suffix = low_mask(n) & ~low_mask(ell);
  sel.sets.resize(size_t(1) << ell);
  for (size_t a = 0; a < sel.sets.size(); ++a) {
    Stream s = rng.derive(a);
    sel.sets[a] = s.subset(suffix, k / 2);
  }
  return sel;
}

BFunc sample_dplus(int n, int k, int ell, uint64_t seed) {
  Stream rng(seed);
  return build_selector_function(sample_dplus_selector(n, k, ell, rng));
}

DMinusSample sample_dminus_selector(int n, int k, int ell, Mask big_set, Stream& rng) {
  check_d_params(n, k, ell);
  if (big_set == 0) big_set = default_big_set(n, k, ell);
  Mask suffix = low_mask(n) & ~low_mask(ell);
  if ((big_set & ~suffix) || std::popcount(big_set) != n - k + 1)
    throw std::invalid_argument("sample_dminus: bad big_set");
  if (k / 2 >= n - k + 1)
    throw std::invalid_argument("sample_dminus: big set must dominate (k/2 < n-k+1)");
  DMinusSample out;
  out.big_set = big_set;
  out.special_prefix = Mask(rng.below(uint64_t(1) << ell));
  out.sel.ell = ell;
  out.sel.n = n;
  out.sel.sets.resize(size_t(1) << ell);
  for (size_t a = 0; a < out.sel.sets.size(); ++a) {
    if (Mask(a) == out.special_prefix) {
      out.sel.sets[a] = big_set;
    } else {
      Stream s = rng.derive(a);
      out.sel.sets[a] = s.subset(suffix, k / 2);
    }
  }
  return out;
}

BFunc sample_dminus(int n, int k, int ell, Mask big_set, uint64_t seed) {
  Stream rng(seed);
  return build_selector_function(sample_dminus_selector(n, k, ell, big_set, rng).sel);
}

}  // namespace btl
