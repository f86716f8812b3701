#pragma once

#include <optional>
#include <string>
#include <vector>

#include "btl/core.hpp"
#include "btl/fourier.hpp"

// Exact monotonicity analysis: violation detection, per-direction edge
// statistics, and certified lower/upper bounds on distance to monotonicity.

namespace btl {

struct ViolationReport {
  int n = 0;
  int ell_bits = 0;
  long long total_edges = 0;                         // n * 2^{n-1}
  std::vector<long long> violated_by_direction;      // size n
  // Keyed [suffix direction - ell_bits][index value t]; suffix directions only.
  std::vector<std::vector<long long>> violated_by_suffix_direction_and_index;
  std::optional<long long> violated_pair_count;      // all comparable violated pairs

  bool all_zero() const;
  long long violated_edges_total() const;
};

struct DistanceBounds {
  Dyadic lower;
  Dyadic upper;
  std::string lower_method;
  std::string upper_method;
};

// Edge check over every point and direction; suffices by transitivity.
bool is_monotone(const BFunc& f);

// Exhaustive edge scan.  count_pairs additionally counts all comparable
// violated pairs (3^n work, restricted to n <= 14).
ViolationReport violation_report(const BFunc& f, int ell_bits, bool count_pairs = false);

// Exact distance for two-valued ranges: minimum vertex cover of the
// comparable-violated-pair graph (via maximum bipartite matching), over 2^n.
// Restricted to n <= 14.
Dyadic distance_to_monotone_exact_boolean(const BFunc& f);

// g(x) = max_{y <= x} f(y), processed in increasing Hamming weight order;
// always monotone, so counting its changes gives a true upper bound.
BFunc sweep_repair(const BFunc& f);

// Certified bounds for any totally ordered integer range.  Lower bound: the
// best single direction's violated edges form a vertex-disjoint set of
// violated pairs.  Upper bound: points changed by sweep_repair.  Two-valued
// inputs at n <= 14 get the exact matching oracle on both sides.
DistanceBounds distance_bounds_general(const BFunc& f);

}  // namespace btl
