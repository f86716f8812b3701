#include "btl/simulate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "btl/instances.hpp"

namespace btl {

RunResult run_tester(const Tester& t, const BFunc& f, uint64_t seed) {
  f.validate();
  if (t.n != f.n) throw std::invalid_argument("run_tester: dimension mismatch");
  Oracle oracle([&f](Mask p) { return f.values[p]; }, t.budget);
  Stream rng(seed);
  RunResult r;
  r.verdict = t.run(oracle, rng);
  r.queries = oracle.log();
  return r;
}

Tester exhaustive_monotone_tester(int n) {
  Tester t;
  t.name = "exhaustive-monotone";
  t.n = n;
  t.budget = 1LL << n;
  t.adaptive = false;
  t.run = [n](Oracle& o, Stream&) {
    std::vector<int32_t> vals(size_t(1) << n);
    for (Mask p = 0; p < vals.size(); ++p) vals[p] = o.query(p);
    for (int i = 0; i < n; ++i) {
      Mask bit = Mask(1) << i;
      for (Mask p = 0; p < vals.size(); ++p)
        if (!(p & bit) && vals[p] > vals[p | bit]) return Verdict::Reject;
    }
    return Verdict::Accept;
  };
  return t;
}

Tester edge_tester(int n, long long trials) {
  if (trials < 1) throw std::invalid_argument("edge_tester: trials >= 1 required");
  Tester t;
  t.name = "edge";
  t.n = n;
  t.budget = 2 * trials;
  t.adaptive = false;
  t.run = [n, trials](Oracle& o, Stream& rng) {
    for (long long trial = 0; trial < trials; ++trial) {
      Mask p = Mask(rng.below(uint64_t(1) << n));
      int dir = int(rng.below(uint64_t(n)));
      Mask bit = Mask(1) << dir;
      int32_t lo = o.query(p & ~bit);
      int32_t hi = o.query(p | bit);
      if (lo > hi) return Verdict::Reject;
    }
    return Verdict::Accept;
  };
  return t;
}

Tester derivative_degree_tester(int n, int k, long long trials) {
  if (k < 0 || k >= n) throw std::invalid_argument("derivative_degree_tester: need k < n");
  Tester t;
  t.name = "derivative-degree";
  t.n = n;
  t.budget = trials << (k + 1);
  t.adaptive = false;
  t.run = [n, k, trials](Oracle& o, Stream& rng) {
    Mask universe = low_mask(n);
    for (long long trial = 0; trial < trials; ++trial) {
      Mask s = rng.subset(universe, k + 1);
      Mask base = Mask(rng.below(uint64_t(1) << n)) & ~s;
      long long sum = 0;
      // Signed sum over the subcube x ^ S; vanishes iff the restriction has
      // no chi_S component.
      for (Mask sub = s;; sub = (sub - 1) & s) {
        int sign = (std::popcount(sub) & 1) ? -1 : 1;
        sum += sign * (long long)o.query(base | sub);
        if (sub == 0) break;
      }
      if (sum != 0) return Verdict::Reject;
    }
    return Verdict::Accept;
  };
  return t;
}

Combiner mono_combiner(int ell_bits) {
  Combiner c;
  c.name = "mono";
  c.eval = [ell_bits](Mask p, int32_t fv, int32_t gv) {
    if ((fv != 1 && fv != -1) || (gv != 1 && gv != -1))
      throw std::invalid_argument("mono_combiner: inputs must be +/-1 valued");
    Mask t = p & low_mask(ell_bits);
    Mask z = p >> ell_bits;
    return int32_t(4 * std::popcount(t) + 2 * std::popcount(z) + fv + gv);
  };
  return c;
}

Combiner fourier_combiner(int n, int ell) {
  Combiner c;
  c.name = "fourier";
  Mask suffix = low_mask(n) & ~low_mask(ell);
  c.eval = [suffix](Mask p, int32_t fv, int32_t gv) {
    if ((fv != 1 && fv != -1) || (gv != 1 && gv != -1))
      throw std::invalid_argument("fourier_combiner: inputs must be +/-1 valued");
    return int32_t(fv * gv * character(suffix, p));
  };
  return c;
}

Transcript reduce_to_protocol(const Tester& t, const Combiner& c, const BFunc& f,
                              const BFunc& g, uint64_t seed) {
  f.validate();
  g.validate();
  if (f.n != t.n || g.n != t.n)
    throw std::invalid_argument("reduce_to_protocol: dimension mismatch");
  if (f.range_kind != RangeKind::PmOne || g.range_kind != RangeKind::PmOne)
    throw std::invalid_argument("reduce_to_protocol: party inputs must be +/-1 valued");
  Transcript tr;
  // Each tester query costs one value bit from Alice and one from Bob; both
  // parties then evaluate h(x) locally from (x, f(x), g(x)) alone.
  Oracle oracle(
      [&](Mask p) {
        tr.bits += 2;
        return c.eval(p, f.values[p], g.values[p]);
      },
      t.budget);
  Stream rng(seed);
  tr.verdict = t.run(oracle, rng);
  tr.queries = (long long)oracle.log().size();
  return tr;
}

YaoResult yao_experiment(int n, int k, int ell,
                         const std::vector<std::vector<Mask>>& query_sets,
                         long long samples, uint64_t seed, Mask big_set) {
  if (samples < 1) throw std::invalid_argument("yao_experiment: samples >= 1 required");
  for (const auto& q : query_sets)
    if (q.size() > 63) throw std::invalid_argument("yao_experiment: query set too large");

  struct Tally {
    long long plus = 0, minus = 0;
  };
  size_t sets = query_sets.size();
  std::vector<std::unordered_map<uint64_t, Tally>> views(sets);
  std::vector<long long> hits(sets, 0);
  long long minus_draws = 0;

  Stream root(seed);
  for (long long it = 0; it < samples; ++it) {
    Stream draw = root.derive(uint64_t(it));
    bool is_minus = draw.coin();
    IndexSelector sel;
    Mask special = 0;
    if (is_minus) {
      DMinusSample s = sample_dminus_selector(n, k, ell, big_set, draw);
      sel = std::move(s.sel);
      special = s.special_prefix;
      ++minus_draws;
    } else {
      sel = sample_dplus_selector(n, k, ell, draw);
    }
    for (size_t qi = 0; qi < sets; ++qi) {
      const auto& q = query_sets[qi];
      uint64_t view = 0;
      bool hit = false;
      for (size_t j = 0; j < q.size(); ++j) {
        if (eval_selector_function(sel, q[j]) == 1) view |= uint64_t(1) << j;
        if (is_minus && (q[j] & low_mask(ell)) == special) hit = true;
      }
      if (hit) ++hits[qi];
      Tally& t = views[qi][view];
      if (is_minus)
        ++t.minus;
      else
        ++t.plus;
    }
  }

  YaoResult r;
  r.samples = samples;
  r.per_set.resize(sets);
  double regime_cap = double(uint64_t(1) << ell) / 6.0;
  for (size_t qi = 0; qi < sets; ++qi) {
    long long err = 0;
    for (const auto& [view, t] : views[qi]) err += std::min(t.plus, t.minus);
    r.per_set[qi].optimal_rule_error = double(err) / double(samples);
    r.per_set[qi].dminus_prefix_hit_rate =
        minus_draws ? double(hits[qi]) / double(minus_draws) : 0.0;
    r.per_set[qi].within_regime = double(query_sets[qi].size()) <= regime_cap;
  }
  r.min_error = 1.0;
  r.max_error = 0.0;
  for (const auto& s : r.per_set) {
    r.min_error = std::min(r.min_error, s.optimal_rule_error);
    r.max_error = std::max(r.max_error, s.optimal_rule_error);
  }
  if (r.per_set.empty()) r.min_error = r.max_error = 0.0;
  return r;
}

}  // namespace btl
