#include "btl/monotone.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace btl {

bool ViolationReport::all_zero() const { return violated_edges_total() == 0; }

long long ViolationReport::violated_edges_total() const {
  long long sum = 0;
  for (long long c : violated_by_direction) sum += c;
  return sum;
}

bool is_monotone(const BFunc& f) {
  f.validate();
  size_t size = f.values.size();
  for (int i = 0; i < f.n; ++i) {
    Mask bit = Mask(1) << i;
    for (Mask p = 0; p < size; ++p) {
      if (p & bit) continue;
      if (f.values[p] > f.values[p | bit]) return false;
    }
  }
  return true;
}

ViolationReport violation_report(const BFunc& f, int ell_bits, bool count_pairs) {
  f.validate();
  if (ell_bits < 0 || ell_bits > f.n)
    throw std::out_of_range("violation_report: ell_bits out of range");
  ViolationReport r;
  r.n = f.n;
  r.ell_bits = ell_bits;
  r.total_edges = f.n == 0 ? 0 : (long long)f.n << (f.n - 1);
  r.violated_by_direction.assign(f.n, 0);
  r.violated_by_suffix_direction_and_index.assign(
      f.n - ell_bits, std::vector<long long>(size_t(1) << ell_bits, 0));

  Mask tmask = low_mask(ell_bits);
  size_t size = f.values.size();
  for (int i = 0; i < f.n; ++i) {
    Mask bit = Mask(1) << i;
    for (Mask p = 0; p < size; ++p) {
      if (p & bit) continue;
      if (f.values[p] > f.values[p | bit]) {
        ++r.violated_by_direction[i];
        if (i >= ell_bits)
          ++r.violated_by_suffix_direction_and_index[i - ell_bits][p & tmask];
      }
    }
  }

  if (count_pairs) {
    if (f.n > 14) throw std::invalid_argument("violation_report: pair count needs n <= 14");
    long long pairs = 0;
    for (Mask y = 0; y < size; ++y) {
      // Proper subsets x of y with f(x) > f(y).
      for (Mask x = (y - 1) & y;; x = (x - 1) & y) {
        if (f.values[x] > f.values[y]) ++pairs;
        if (x == 0) break;
      }
    }
    r.violated_pair_count = pairs;
  }
  return r;
}

namespace {

// Hopcroft-Karp maximum matching.  Left vertices are adjacency-list indices;
// right vertices are 0..right_count-1.
struct HopcroftKarp {
  const std::vector<std::vector<int>>& adj;
  int right_count;
  std::vector<int> match_left, match_right, dist;

  HopcroftKarp(const std::vector<std::vector<int>>& adj_, int right_count_)
      : adj(adj_), right_count(right_count_) {}

  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<int> q;
    int nl = int(adj.size());
    bool found = false;
    for (int u = 0; u < nl; ++u) {
      if (match_left[u] < 0) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        int w = match_right[v];
        if (w < 0) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : adj[u]) {
      int w = match_right[v];
      if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  }

  int solve() {
    int nl = int(adj.size());
    match_left.assign(nl, -1);
    match_right.assign(right_count, -1);
    dist.assign(nl, 0);
    int matching = 0;
    while (bfs()) {
      for (int u = 0; u < nl; ++u)
        if (match_left[u] < 0 && dfs(u)) ++matching;
    }
    return matching;
  }
};

}  // namespace

Dyadic distance_to_monotone_exact_boolean(const BFunc& f) {
  f.validate();
  if (f.n > 14)
    throw std::invalid_argument("distance_to_monotone_exact_boolean: n too large");
  std::set<int32_t> distinct(f.values.begin(), f.values.end());
  if (distinct.size() > 2)
    throw std::invalid_argument("distance_to_monotone_exact_boolean: more than two values");
  if (distinct.size() < 2) return Dyadic::zero();
  int32_t hi = *distinct.rbegin();

  size_t size = f.values.size();
  // Left side: points with the high value; right side: points with the low
  // value.  A violated pair is x subset-of y with f(x) = hi, f(y) = lo.
  std::vector<int> left_id(size, -1), right_id(size, -1);
  std::vector<Mask> left_points;
  int right_count = 0;
  for (Mask p = 0; p < size; ++p) {
    if (f.values[p] == hi) {
      left_id[p] = int(left_points.size());
      left_points.push_back(p);
    } else {
      right_id[p] = right_count++;
    }
  }

  std::vector<std::vector<int>> adj(left_points.size());
  for (Mask y = 0; y < size; ++y) {
    if (f.values[y] == hi) continue;
    for (Mask x = (y - 1) & y;; x = (x - 1) & y) {
      if (f.values[x] == hi) adj[left_id[x]].push_back(right_id[y]);
      if (x == 0) break;
    }
  }

  HopcroftKarp hk(adj, right_count);
  Dyadic d{hk.solve(), f.n};  // min vertex cover = max matching (Koenig)
  d.normalize();
  return d;
}

BFunc sweep_repair(const BFunc& f) {
  f.validate();
  BFunc g = f;
  size_t size = f.values.size();
  std::vector<Mask> order(size);
  for (Mask p = 0; p < size; ++p) order[p] = p;
  std::sort(order.begin(), order.end(), [](Mask a, Mask b) {
    int wa = std::popcount(a), wb = std::popcount(b);
    return wa != wb ? wa < wb : a < b;
  });
  for (Mask p : order) {
    int32_t v = g.values[p];
    for (int i = 0; i < f.n; ++i) {
      Mask bit = Mask(1) << i;
      if (p & bit) v = std::max(v, g.values[p & ~bit]);
    }
    g.values[p] = v;
  }
  return g;
}

DistanceBounds distance_bounds_general(const BFunc& f) {
  f.validate();
  DistanceBounds b;

  std::set<int32_t> distinct(f.values.begin(), f.values.end());
  if (distinct.size() <= 2 && f.n <= 14) {
    Dyadic exact = distance_to_monotone_exact_boolean(f);
    b.lower = b.upper = exact;
    b.lower_method = b.upper_method = "matching-exact";
    return b;
  }

  ViolationReport r = violation_report(f, 0);
  long long best = 0;
  for (long long c : r.violated_by_direction) best = std::max(best, c);
  b.lower = Dyadic{best, f.n};
  b.lower.normalize();
  b.lower_method = "per-direction-matching";

  BFunc g = sweep_repair(f);
  long long changed = 0;
  for (size_t i = 0; i < f.values.size(); ++i)
    if (f.values[i] != g.values[i]) ++changed;
  b.upper = Dyadic{changed, f.n};
  b.upper.normalize();
  b.upper_method = "sweep-repair";
  return b;
}

}  // namespace btl
