#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "btl/core.hpp"
#include "btl/fourier.hpp"
#include "btl/rng.hpp"

// Disjointness instance machinery and the hard-instance generators:
// the monotonicity gadget, its truncation, index-selector functions,
// the Fourier-degree gadget, and the D+/D- sampling distributions.

namespace btl {

enum class Promise { None, SparseK };

struct DisjInstance {
  int ell = 1;  // block count, power of two
  int m = 0;    // block width
  Promise promise = Promise::None;
  int k = 0;    // per-block weight under the sparse promise
  std::vector<Mask> x_blocks, y_blocks;

  int ell_bits() const;
  // Checks block ranges and, under sparse_k, the weight and
  // unique-intersection conditions.  Throws on violation.
  void validate() const;
};

// Uniform pair of k-subsets of [m] with |x ∩ y| = 1 or 0 per the flag.
// Off-intersection parts are disjoint and nonempty (k >= 2 is required), so
// the violated-edge fraction of the gadget is exactly 1/4.
std::pair<Mask, Mask> gen_sparse_block(int m, int k, bool intersect, Stream& rng);

// All blocks disjoint, or exactly one (uniformly placed) intersecting block.
// Per-block streams are derived from the seed, so generation is reproducible
// block by block.
DisjInstance gen_sparse_instance(int ell, int m, int k, bool intersect, uint64_t seed);

// +1 iff some block intersects (the OR fires).
int eval_disj(const DisjInstance& inst);

// One block of width ell*m; weight ell*k per side under the sparse promise.
DisjInstance concatenate(const DisjInstance& inst);

// h(t,z) = 4|t| + 2|z| + chi_{x_t}(z) + chi_{y_t}(z) on log(ell)+m bits.
BFunc build_mono_gadget(const DisjInstance& inst);

struct TruncationInfo {
  int half_steps = 0;   // j: the clamp threshold is |2|z| - m| >= j
  Dyadic clamp_prob;    // Pr_z[h != h'], exact binomial
  double c_prime = 0;   // j / (2 sqrt(m))
};

// Smallest half-integer threshold c' (in units of 1/(2 sqrt(m))) with clamp
// probability at most 1/16.
TruncationInfo truncation_threshold(int m);

// h' = h clamped to the sentinels outside |z| in m/2 +/- c' sqrt(m).
BFunc build_mono_gadget_truncated(const DisjInstance& inst);

struct IndexSelector {
  int ell = 0;  // number of index coordinates
  int n = 0;
  std::vector<Mask> sets;  // 2^ell entries, subsets of coordinates [ell, n)

  void validate() const;
};

// C(t) := blocks[t], re-homed past the ell = log2(blocks.size()) index bits.
IndexSelector selector_from_blocks(const std::vector<Mask>& blocks, int m);
std::vector<Mask> blocks_from_selector(const IndexSelector& sel);

// f(x) = chi_{C(x_[ell])}(x).
BFunc build_selector_function(const IndexSelector& sel);
int eval_selector_function(const IndexSelector& sel, Mask point);

// h = f_x * g_y * chi_{[n] \ [ell]}: the selector function for
// D(t) = [m] \ (x_t symdiff y_t).  Requires the sparse promise with
// d = (n - k)/2 as the block weight; the implied target degree is n - 2d.
BFunc build_fourier_gadget(const DisjInstance& inst);
IndexSelector fourier_gadget_selector(const DisjInstance& inst);
int fourier_gadget_target_degree(const DisjInstance& inst);

// Lexicographically first n-k+1 coordinates past the index prefix.
Mask default_big_set(int n, int k, int ell);

// D+: every C(a) a uniform (k/2)-subset of the suffix -> degree <= k.
IndexSelector sample_dplus_selector(int n, int k, int ell, Stream& rng);
BFunc sample_dplus(int n, int k, int ell, uint64_t seed);

struct DMinusSample {
  IndexSelector sel;
  Mask special_prefix = 0;  // the b pattern carrying the big set
  Mask big_set = 0;
};

// D-: a uniform prefix b gets the fixed (n-k+1)-sized big set, the rest are
// uniform (k/2)-subsets.  big_set = 0 selects the default.
DMinusSample sample_dminus_selector(int n, int k, int ell, Mask big_set, Stream& rng);
BFunc sample_dminus(int n, int k, int ell, Mask big_set, uint64_t seed);

}  // namespace btl
