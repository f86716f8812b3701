#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "btl/core.hpp"
#include "btl/rng.hpp"

// Testers, the tester-to-protocol reduction, and the nonadaptive
// distributional (Yao) experiment.  The communication channel is simulated
// in-process with exact bit accounting.

namespace btl {

enum class Verdict { Accept, Reject };

struct QueryRecord {
  Mask point = 0;
  int32_t answer = 0;
};

// Wraps value access for a tester run: logs every query and enforces the
// declared budget (exceeding it is a tester bug and throws).
class Oracle {
 public:
  Oracle(std::function<int32_t(Mask)> eval, long long budget)
      : eval_(std::move(eval)), budget_(budget) {}

  int32_t query(Mask p) {
    if ((long long)log_.size() >= budget_)
      throw std::runtime_error("Oracle: query budget exceeded");
    int32_t v = eval_(p);
    log_.push_back({p, v});
    return v;
  }

  const std::vector<QueryRecord>& log() const { return log_; }

 private:
  std::function<int32_t(Mask)> eval_;
  long long budget_;
  std::vector<QueryRecord> log_;
};

struct Tester {
  std::string name;
  int n = 0;
  long long budget = 0;
  bool adaptive = false;
  std::function<Verdict(Oracle&, Stream&)> run;
};

struct RunResult {
  Verdict verdict = Verdict::Accept;
  std::vector<QueryRecord> queries;
};

// Deterministic given the seed.
RunResult run_tester(const Tester& t, const BFunc& f, uint64_t seed);

// Queries every point; accepts iff the function is monotone.
Tester exhaustive_monotone_tester(int n);

// Samples `trials` uniform hypercube edges; rejects iff one is violated.
// One-sided: never rejects a monotone function.
Tester edge_tester(int n, long long trials);

// Per trial: a uniform (k+1)-subcube; rejects iff its signed (chi_S-weighted)
// sum over f is nonzero.  One-sided for Fourier degree <= k.
Tester derivative_degree_tester(int n, int k, long long trials);

// h(x) from (x, f(x), g(x)) only; the interface enforces simplicity.
struct Combiner {
  std::string name;
  std::function<int32_t(Mask, int32_t, int32_t)> eval;
};

// h = 4|t| + 2|z| + f(x) + g(x).
Combiner mono_combiner(int ell_bits);
// h = f(x) * g(x) * chi_{[n] \ [ell]}.
Combiner fourier_combiner(int n, int ell);

struct Transcript {
  long long queries = 0;
  long long bits = 0;  // 2 per query: one value bit each from Alice and Bob
  Verdict verdict = Verdict::Accept;
};

// Simulates the two-party execution of the tester on the combined function.
// Behavior (and thus the verdict) is bitwise identical to run_tester on the
// combined truth table with the same seed.
Transcript reduce_to_protocol(const Tester& t, const Combiner& c, const BFunc& f,
                              const BFunc& g, uint64_t seed);

struct YaoQuerySetStats {
  double optimal_rule_error = 0;   // exact posterior counting over the draws
  double dminus_prefix_hit_rate = 0;  // fraction of D- draws hitting b's prefix
  bool within_regime = true;       // |Q| <= 2^ell / 6
};

struct YaoResult {
  std::vector<YaoQuerySetStats> per_set;
  double min_error = 0;
  double max_error = 0;
  long long samples = 0;
};

// Draws the 1/2 D+ + 1/2 D- mixture and, per nonadaptive query set, reports
// the error of the best deterministic decision rule on the observed answers.
YaoResult yao_experiment(int n, int k, int ell,
                         const std::vector<std::vector<Mask>>& query_sets,
                         long long samples, uint64_t seed, Mask big_set = 0);

}  // namespace btl
