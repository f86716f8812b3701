// Command-line front end: instance generation, function analysis, tester and
// protocol simulations, and the executable verification ledger.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "btl/claims.hpp"
#include "btl/core.hpp"
#include "btl/fourier.hpp"
#include "btl/instances.hpp"
#include "btl/io.hpp"
#include "btl/monotone.hpp"
#include "btl/rng.hpp"
#include "btl/simulate.hpp"
#include "btl/util.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
  uint64_t seed = 0;
  std::string format = "json";  // json | csv
  std::string out;              // empty = stdout
  std::string scale = "default";
};

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw std::runtime_error("cannot open for writing: " + g.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

json dyadic_json(const btl::Dyadic& d) {
  return {{"num", d.num}, {"log2_den", d.log2_den}, {"value", d.value()}};
}

json envelope(const GlobalOpts& g, json parameters) {
  return {{"version", btl::kVersion}, {"seed", g.seed}, {"parameters", std::move(parameters)}};
}

std::string truth_table_text(const btl::BFunc& f) {
  std::ostringstream os;
  btl::write_truth_table(os, f, f.range_kind == btl::RangeKind::PmOne);
  return os.str();
}

// ---- gen ------------------------------------------------------------------

struct GenMonoOpts {
  int ell = 2, m = 6, k = 2;
  bool intersect = false, truncate = false;
};

int cmd_gen_mono(const GlobalOpts& g, const GenMonoOpts& o) {
  auto inst = btl::gen_sparse_instance(o.ell, o.m, o.k, o.intersect, g.seed);
  btl::BFunc h = o.truncate ? btl::build_mono_gadget_truncated(inst)
                            : btl::build_mono_gadget(inst);
  if (g.format == "csv") {
    emit(g, truth_table_text(h));
    return 0;
  }
  json doc = envelope(g, {{"ell", o.ell},
                          {"m", o.m},
                          {"k", o.k},
                          {"intersect", o.intersect},
                          {"truncate", o.truncate}});
  doc["instance"] = json::parse(btl::instance_to_json(inst));
  doc["truth_table"] = truth_table_text(h);
  emit(g, doc.dump(2));
  return 0;
}

struct GenFourierOpts {
  int n = 10, k = 4, ell = 1;
  bool intersect = false;
};

int cmd_gen_fourier(const GlobalOpts& g, const GenFourierOpts& o) {
  if ((o.n - o.k) % 2 != 0 || o.n - o.k < 2)
    throw std::invalid_argument("gen fourier: need n - k even and >= 2");
  int d = (o.n - o.k) / 2, m = o.n - o.ell;
  auto inst = btl::gen_sparse_instance(1 << o.ell, m, d, o.intersect, g.seed);
  btl::BFunc h = btl::build_fourier_gadget(inst);
  if (g.format == "csv") {
    emit(g, truth_table_text(h));
    return 0;
  }
  json doc = envelope(
      g, {{"n", o.n}, {"k", o.k}, {"ell", o.ell}, {"intersect", o.intersect}, {"d", d}});
  doc["instance"] = json::parse(btl::instance_to_json(inst));
  doc["truth_table"] = truth_table_text(h);
  emit(g, doc.dump(2));
  return 0;
}

struct GenDistOpts {
  int n = 12, k = 6, ell = 2;
  uint64_t big_set = 0;
};

int cmd_gen_dist(const GlobalOpts& g, const GenDistOpts& o, bool minus) {
  btl::BFunc f = minus
                     ? btl::sample_dminus(o.n, o.k, o.ell, btl::Mask(o.big_set), g.seed)
                     : btl::sample_dplus(o.n, o.k, o.ell, g.seed);
  if (g.format == "csv") {
    emit(g, truth_table_text(f));
    return 0;
  }
  json doc = envelope(g, {{"n", o.n},
                          {"k", o.k},
                          {"ell", o.ell},
                          {"distribution", minus ? "dminus" : "dplus"}});
  doc["truth_table"] = truth_table_text(f);
  emit(g, doc.dump(2));
  return 0;
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeOpts {
  std::string in;
  int ell_bits = 0;
  bool monotone = false;
  bool include_zeros = false;
};

int cmd_analyze(const GlobalOpts& g, const AnalyzeOpts& o) {
  btl::BFunc f = btl::read_truth_table_file(o.in);
  bool pm = f.range_kind == btl::RangeKind::PmOne;

  if (g.format == "csv") {
    if (!pm) throw std::invalid_argument("analyze: CSV spectrum needs a pm_one table");
    std::ostringstream os;
    btl::write_spectrum_csv(os, btl::wht(f), o.include_zeros);
    emit(g, os.str());
    return 0;
  }

  json doc = envelope(g, {{"in", o.in}, {"ell_bits", o.ell_bits}, {"monotone", o.monotone}});
  doc["n"] = f.n;
  doc["range"] = pm ? "pm_one" : "extended_int";

  if (pm) {
    btl::Spectrum sp = btl::wht(f);
    doc["fourier_degree"] = btl::fourier_degree(sp);
    json tails = json::array();
    for (int level = 0; level <= f.n; ++level) {
      btl::Dyadic tail = btl::tail_mass(sp, level);
      // Two distance normalizations against degree < level: probability of
      // disagreement (tail/4) and half squared L2 norm (tail/2).
      btl::Dyadic pr_lb = tail, half_l2_lb = tail;
      pr_lb.log2_den += 2;
      half_l2_lb.log2_den += 1;
      tails.push_back({{"level", level},
                       {"tail_mass", dyadic_json(tail)},
                       {"distance_lb_pr_disagree", dyadic_json(pr_lb)},
                       {"distance_lb_half_l2_sq", dyadic_json(half_l2_lb)}});
    }
    doc["tail_mass_by_level"] = tails;
  }
  if (o.monotone || !pm) {
    bool count_pairs = f.n <= 14;
    btl::ViolationReport rep = btl::violation_report(f, o.ell_bits, count_pairs);
    btl::DistanceBounds bounds = btl::distance_bounds_general(f);
    doc["monotonicity"] = json::parse(btl::violation_report_to_json(rep, &bounds));
    doc["monotonicity"]["is_monotone"] = rep.all_zero();
  }
  emit(g, doc.dump(2));
  return 0;
}

// ---- simulate ---------------------------------------------------------------

struct SimTesterOpts {
  std::string tester = "edge";      // edge | derivative
  std::string target = "gadget";    // edge: gadget; derivative: dplus | dminus | gadget
  int ell = 2, m = 6, k = 2;        // edge targets
  int n = 10, deg = 4, sel_ell = 1; // derivative targets
  bool intersect = true;
  long long trials = 0;             // 0 = calibrated default
  int reps = 200;
};

int cmd_sim_tester(const GlobalOpts& g, const SimTesterOpts& o) {
  int rejected = 0;
  long long trials = o.trials;
  json params;
  for (int r = 0; r < o.reps; ++r) {
    uint64_t s = btl::mix64(g.seed) ^ btl::mix64(r);
    btl::BFunc f;
    btl::Tester t;
    if (o.tester == "edge") {
      f = btl::build_mono_gadget(btl::gen_sparse_instance(o.ell, o.m, o.k, o.intersect, s));
      if (trials == 0) trials = 16LL * f.n * o.ell;
      t = btl::edge_tester(f.n, trials);
      params = {{"ell", o.ell}, {"m", o.m}, {"k", o.k}, {"intersect", o.intersect}};
    } else if (o.tester == "derivative") {
      if (o.target == "dplus")
        f = btl::sample_dplus(o.n, o.deg, o.sel_ell, s);
      else if (o.target == "dminus")
        f = btl::sample_dminus(o.n, o.deg, o.sel_ell, 0, s);
      else
        throw std::invalid_argument("simulate tester: derivative target must be dplus|dminus");
      if (trials == 0) trials = 32;
      t = btl::derivative_degree_tester(o.n, o.deg, trials);
      params = {{"n", o.n}, {"k", o.deg}, {"ell", o.sel_ell}, {"target", o.target}};
    } else {
      throw std::invalid_argument("simulate tester: unknown tester '" + o.tester + "'");
    }
    if (btl::run_tester(t, f, btl::mix64(s + 1)).verdict == btl::Verdict::Reject) ++rejected;
  }
  params["tester"] = o.tester;
  json doc = envelope(g, params);
  doc["trials"] = trials;
  doc["reps"] = o.reps;
  doc["rejection_rate"] = double(rejected) / o.reps;
  emit(g, doc.dump(2));
  return 0;
}

struct SimReductionOpts {
  int ell = 2, m = 6, k = 2;
  bool intersect = false;
  long long trials = 48;
};

int cmd_sim_reduction(const GlobalOpts& g, const SimReductionOpts& o) {
  auto inst = btl::gen_sparse_instance(o.ell, o.m, o.k, o.intersect, g.seed);
  btl::BFunc fa = btl::build_generalized_character(inst.x_blocks, inst.m);
  btl::BFunc fb = btl::build_generalized_character(inst.y_blocks, inst.m);
  btl::BFunc h = btl::build_mono_gadget(inst);
  btl::Tester t = btl::edge_tester(h.n, o.trials);
  uint64_t run_seed = btl::mix64(g.seed + 1);
  btl::Transcript tr =
      btl::reduce_to_protocol(t, btl::mono_combiner(inst.ell_bits()), fa, fb, run_seed);
  btl::RunResult direct = btl::run_tester(t, h, run_seed);

  json doc = envelope(
      g, {{"ell", o.ell}, {"m", o.m}, {"k", o.k}, {"intersect", o.intersect}, {"trials", o.trials}});
  doc["queries"] = tr.queries;
  doc["transcript_bits"] = tr.bits;
  doc["verdict"] = tr.verdict == btl::Verdict::Reject ? "reject" : "accept";
  doc["matches_direct_run"] = tr.verdict == direct.verdict;
  emit(g, doc.dump(2));
  return 0;
}

struct SimYaoOpts {
  int n = 12, k = 6, ell = 2;
  int sets = 20, set_size = -1;  // -1 = floor(2^ell / 6)
  long long samples = 100000;
};

int cmd_sim_yao(const GlobalOpts& g, const SimYaoOpts& o) {
  int d = o.set_size >= 0 ? o.set_size : (1 << o.ell) / 6;
  btl::Stream rng(btl::mix64(g.seed) ^ 0x59A0ULL);
  std::vector<std::vector<btl::Mask>> qs(size_t(o.sets));
  for (auto& q : qs) {
    q.resize(size_t(d));
    for (auto& p : q) p = btl::Mask(rng.below(uint64_t(1) << o.n));
  }
  btl::YaoResult y = btl::yao_experiment(o.n, o.k, o.ell, qs, o.samples, g.seed + 1);

  json doc = envelope(g, {{"n", o.n},
                          {"k", o.k},
                          {"ell", o.ell},
                          {"query_sets", o.sets},
                          {"set_size", d},
                          {"samples", o.samples}});
  json per = json::array();
  for (const auto& s : y.per_set)
    per.push_back({{"optimal_rule_error", s.optimal_rule_error},
                   {"dminus_prefix_hit_rate", s.dminus_prefix_hit_rate},
                   {"within_regime", s.within_regime}});
  doc["per_set"] = per;
  doc["error_bounds"] = {{"min", y.min_error}, {"max", y.max_error}};
  emit(g, doc.dump(2));
  return 0;
}

// ---- verify-claims -----------------------------------------------------------

int cmd_verify(const GlobalOpts& g, const std::string& claim) {
  if (!claim.empty()) {
    bool known = false;
    for (const auto& id : btl::claims::claim_ids()) known |= id == claim;
    if (!known) throw std::invalid_argument("verify-claims: unknown claim '" + claim + "'");
  }
  auto results =
      btl::claims::run_claims(btl::claims::scale_from_name(g.scale), claim, g.seed);
  bool all_pass = true;
  if (g.format == "json") {
    json doc = envelope(g, {{"scale", g.scale}, {"claim", claim}});
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
      all_pass &= r.pass;
    }
    doc["claims"] = arr;
    doc["all_pass"] = all_pass;
    emit(g, doc.dump(2));
  } else {
    std::ostringstream os;
    for (const auto& r : results) {
      os << (r.pass ? "PASS" : "FAIL") << ' ' << r.id << ": " << r.detail << '\n';
      all_pass &= r.pass;
    }
    os << (all_pass ? "ALL CLAIMS PASS" : "CLAIM FAILURES PRESENT") << '\n';
    emit(g, os.str());
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hard-instance construction and verification toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "RNG seed; recorded in every output");
  app.add_option("--format", g.format, "Output format: json (canonical) or csv/text")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "Output file (default: stdout)");
  app.add_option("--scale", g.scale, "Verification scale: default or tiny")
      ->check(CLI::IsMember({"default", "tiny"}));

  // gen
  auto* gen = app.add_subcommand("gen", "Generate instances and functions");
  gen->require_subcommand(1);
  GenMonoOpts gm;
  auto* gen_mono = gen->add_subcommand("mono", "Monotonicity gadget from a sparse instance");
  gen_mono->add_option("--ell", gm.ell, "Block count (power of two)");
  gen_mono->add_option("--m", gm.m, "Block width");
  gen_mono->add_option("--k", gm.k, "Per-block set size (>= 2)");
  gen_mono->add_flag("--intersect", gm.intersect, "One intersecting block");
  gen_mono->add_flag("--truncate", gm.truncate, "Clamp to the O(sqrt m)-range variant");

  GenFourierOpts gf;
  auto* gen_fourier = gen->add_subcommand("fourier", "Degree gadget f_x * g_y * chi_suffix");
  gen_fourier->add_option("--n", gf.n, "Total coordinates");
  gen_fourier->add_option("--k", gf.k, "Target degree (n - k even)");
  gen_fourier->add_option("--ell", gf.ell, "Index coordinates");
  gen_fourier->add_flag("--intersect", gf.intersect, "One intersecting block");

  GenDistOpts gd;
  auto* gen_dplus = gen->add_subcommand("dplus", "Sample the low-degree distribution D+");
  auto* gen_dminus = gen->add_subcommand("dminus", "Sample the far distribution D-");
  for (auto* c : {gen_dplus, gen_dminus}) {
    c->add_option("--n", gd.n, "Total coordinates");
    c->add_option("--k", gd.k, "Degree threshold (even)");
    c->add_option("--ell", gd.ell, "Index coordinates");
  }
  gen_dminus->add_option("--big-set", gd.big_set, "Big-set mask (0 = default)");

  // analyze
  AnalyzeOpts an;
  auto* analyze = app.add_subcommand("analyze", "Analyze a truth-table file");
  analyze->add_option("file", an.in, "Truth-table file")->required();
  analyze->add_option("--ell-bits", an.ell_bits, "Index coordinates for per-index counts");
  analyze->add_flag("--monotone", an.monotone, "Include the monotonicity report");
  analyze->add_flag("--include-zeros", an.include_zeros, "Keep zero rows in CSV spectra");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Run testers, reductions, and experiments");
  sim->require_subcommand(1);
  SimTesterOpts st;
  auto* sim_tester = sim->add_subcommand("tester", "Empirical rejection rate of a tester");
  sim_tester->add_option("--tester", st.tester, "edge | derivative")
      ->check(CLI::IsMember({"edge", "derivative"}));
  sim_tester->add_option("--target", st.target, "derivative target: dplus | dminus");
  sim_tester->add_option("--ell", st.ell, "Gadget block count (edge)");
  sim_tester->add_option("--m", st.m, "Gadget block width (edge)");
  sim_tester->add_option("--k", st.k, "Gadget per-block size (edge)");
  bool st_disjoint = false;
  sim_tester->add_flag("--disjoint", st_disjoint, "Disjoint (monotone) gadgets (edge)");
  sim_tester->add_option("--n", st.n, "Coordinates (derivative)");
  sim_tester->add_option("--deg", st.deg, "Degree threshold (derivative)");
  sim_tester->add_option("--sel-ell", st.sel_ell, "Index coordinates (derivative)");
  sim_tester->add_option("--trials", st.trials, "Queries per run (0 = calibrated)");
  sim_tester->add_option("--reps", st.reps, "Independent repetitions");

  SimReductionOpts sr;
  auto* sim_red = sim->add_subcommand("reduction", "Tester-to-protocol simulation");
  sim_red->add_option("--ell", sr.ell, "Block count");
  sim_red->add_option("--m", sr.m, "Block width");
  sim_red->add_option("--k", sr.k, "Per-block size");
  sim_red->add_flag("--intersect", sr.intersect, "One intersecting block");
  sim_red->add_option("--trials", sr.trials, "Edge-tester trials");

  SimYaoOpts sy;
  auto* sim_yao = sim->add_subcommand("yao", "Nonadaptive distributional experiment");
  sim_yao->add_option("--n", sy.n, "Coordinates");
  sim_yao->add_option("--k", sy.k, "Degree threshold (even)");
  sim_yao->add_option("--ell", sy.ell, "Index coordinates");
  sim_yao->add_option("--sets", sy.sets, "Number of random query sets");
  sim_yao->add_option("--set-size", sy.set_size, "Queries per set (-1 = floor(2^ell/6))");
  sim_yao->add_option("--samples", sy.samples, "Mixture samples");

  // verify-claims
  std::string claim;
  auto* verify = app.add_subcommand("verify-claims", "Run the verification ledger");
  verify->add_option("--claim", claim, "Run a single claim by id (default: all)");

  // Let global flags (--seed, --out, ...) appear after any subcommand.
  for (auto* c : {gen, gen_mono, gen_fourier, gen_dplus, gen_dminus, analyze, sim,
                  sim_tester, sim_red, sim_yao, verify})
    c->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_mono->parsed()) return cmd_gen_mono(g, gm);
    if (gen_fourier->parsed()) return cmd_gen_fourier(g, gf);
    if (gen_dplus->parsed()) return cmd_gen_dist(g, gd, false);
    if (gen_dminus->parsed()) return cmd_gen_dist(g, gd, true);
    if (analyze->parsed()) return cmd_analyze(g, an);
    if (sim_tester->parsed()) {
      st.intersect = !st_disjoint;
      return cmd_sim_tester(g, st);
    }
    if (sim_red->parsed()) return cmd_sim_reduction(g, sr);
    if (sim_yao->parsed()) return cmd_sim_yao(g, sy);
    if (verify->parsed()) return cmd_verify(g, claim);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
