// Batch runner: profiles, comparisons, verification suites, adversaries, oracle.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bijective/adversaries.hpp"
#include "bijective/analysis.hpp"
#include "bijective/io.hpp"
#include "bijective/oracle.hpp"
#include "bijective/reorder_buffer.hpp"
#include "bijective/verify.hpp"
#include "bijective/weighted_paging.hpp"

namespace fs = std::filesystem;
using namespace bijective;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string problem = "kserver";
  std::string metric = "path:5";
  std::string metric_file;
  int k = 2;
  int n = 3;
  std::string alg = "greedy";
  std::string a = "greedy";
  std::string b = "opt";
  std::string tie = "lowest_point";
  std::string c0;
  std::uint64_t seed = 1;
  std::uint64_t samples = 0;
  std::uint64_t budget = kDefaultSequenceBudget;
  std::uint64_t tree_budget = 2'000'000;
  unsigned workers = 1;
  std::string out;
  bool traces = false;
  std::vector<std::string> rhos;
  std::string max_rho;
  // paging
  std::string costs = "1,1,4";
  std::string cache;
  std::string page_tie = "lowest_id";
  // buffer
  int colours = 2;
  // verify
  std::string suite = "all";
  bool json = false;
  // adversary
  std::string kind = "three-point";
  std::string eps = "1/5";
  int m = 101;
  std::string d;
  std::string delta = "1";
  // oracle
  std::string mode = "auto";
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const std::string& s : split_list(text)) out.push_back(std::stoi(s));
  return out;
}

MetricSpace load_metric(const Options& o) {
  if (!o.metric_file.empty()) {
    std::ifstream in(o.metric_file);
    if (!in) throw std::invalid_argument("cannot read metric file '" + o.metric_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return MetricSpace::build(parse_metric_json(buf.str()));
  }
  return MetricSpace::build(parse_metric_flag(o.metric));
}

Configuration start_config(const Options& o, const MetricSpace& metric) {
  if (!o.c0.empty()) {
    Configuration c = parse_configuration(o.c0);
    if (c.size() != o.k) throw std::invalid_argument("--c0 must list exactly k servers");
    metric.validate(c);
    return c;
  }
  return kcenter_anchors(metric, o.k);
}

PagingInstance paging_instance(const Options& o) {
  PagingInstance inst;
  for (const std::string& c : split_list(o.costs)) inst.costs.push_back(parse_rational(c));
  inst.k = o.k;
  if (!o.cache.empty()) inst.initial_cache = parse_ints(o.cache);
  inst.validate();
  return inst;
}

PageTie page_tie(const Options& o) {
  if (o.page_tie == "lowest_id" || o.page_tie == "lowest") return PageTie::lowest_id;
  if (o.page_tie == "highest_id" || o.page_tie == "highest") return PageTie::highest_id;
  throw std::invalid_argument("--page-tie must be lowest_id or highest_id");
}

struct Built {
  CostProfile profile;
  ProfileInfo info;
};

Built build_profile(const Options& o, const std::string& alg) {
  Built out;
  out.info.n = o.n;
  if (o.problem == "kserver") {
    const MetricSpace metric = load_metric(o);
    AlgorithmSpec spec = parse_algorithm(alg);
    if (alg.find(':') == std::string::npos && spec.id == AlgorithmId::greedy) spec.tie = parse_tie_break(o.tie);
    const Algorithm algorithm(metric, o.k, spec);
    const Configuration c0 = start_config(o, metric);
    out.info.algorithm = spec.name();
    out.info.metric = metric.id();
    out.info.c0 = to_string(c0);
    out.info.tie = to_string(spec.tie);
    if (o.samples > 0) {
      if (!algorithm.online()) throw std::invalid_argument("sampling needs an online algorithm");
      out.profile = sample_profile(algorithm, c0, o.n, o.samples, o.seed);
      out.info.approximate = true;
      out.info.seed = o.seed;
    } else {
      EnumerationOptions eo;
      eo.budget = o.budget;
      eo.workers = o.workers;
      out.profile = cost_profile(algorithm, c0, o.n, eo);
    }
    return out;
  }
  if (o.problem == "paging") {
    const PagingInstance inst = paging_instance(o);
    out.info.metric = "paging:" + o.costs + " k=" + std::to_string(o.k);
    std::string cache;
    for (PageId p : inst.cache()) cache += (cache.empty() ? "" : ",") + std::to_string(p);
    out.info.c0 = "{" + cache + "}";
    out.info.tie = o.page_tie;
    if (alg == "opt") {
      out.info.algorithm = "opt";
      out.profile = paging_opt_profile(inst, o.n, o.budget);
    } else {
      const PagingPolicy policy = parse_paging_policy(alg);
      out.info.algorithm = to_string(policy);
      out.profile = paging_profile(PagingSimulator(inst), policy, o.n, page_tie(o), o.budget);
    }
    return out;
  }
  if (o.problem == "buffer") {
    out.info.metric = "buffer:colours=" + std::to_string(o.colours) + " k=" + std::to_string(o.k);
    out.info.c0 = "none";
    out.info.tie = "lowest_colour";
    if (alg == "opt") {
      out.info.algorithm = "opt";
      out.profile = rbm_opt_profile(o.colours, o.k, o.n, o.budget);
    } else {
      const RbmPolicy policy = parse_rbm_policy(alg);
      out.info.algorithm = to_string(policy);
      out.profile = rbm_profile(policy, o.colours, o.k, o.n, o.budget);
    }
    return out;
  }
  throw std::invalid_argument("--problem must be kserver, paging or buffer");
}

std::ofstream open_out(const Options& o, const std::string& name) {
  fs::create_directories(o.out);
  std::ofstream f(fs::path(o.out) / name, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write " + (fs::path(o.out) / name).string());
  return f;
}

int run_profile(const Options& o) {
  const Built b = build_profile(o, o.alg);
  if (o.out.empty()) {
    write_profile_csv(std::cout, b.profile);
  } else {
    auto f = open_out(o, "profile.csv");
    write_profile_csv(f, b.profile);
    if (o.traces && o.problem == "kserver") {
      const MetricSpace metric = load_metric(o);
      const Algorithm alg(metric, o.k, parse_algorithm(o.alg));
      const Configuration c0 = start_config(o, metric);
      auto t = open_out(o, "traces.csv");
      write_trace_csv_header(t);
      std::uint64_t id = 0;
      enumerate_sequences(
          metric, o.n, [&](std::span<const PointId> seq) { write_trace_csv(t, id++, simulate(alg, c0, seq)); },
          o.budget);
    }
  }
  return 0;
}

int run_compare(const Options& o) {
  const Built a = build_profile(o, o.a);
  const Built b = build_profile(o, o.b);
  std::vector<Rational> rhos;
  for (const std::string& r : o.rhos) rhos.push_back(parse_rational(r));
  const ComparisonReport report = bijective_ratio(a.profile, b.profile, rhos);
  const std::string json = comparison_json(report, a.info, b.info);
  std::cout << json;
  if (!o.out.empty()) {
    open_out(o, "report.json") << json;
    auto fa = open_out(o, "profile_a.csv");
    write_profile_csv(fa, a.profile);
    auto fb = open_out(o, "profile_b.csv");
    write_profile_csv(fb, b.profile);
  }
  if (!o.max_rho.empty() && !(report.strict_rho <= parse_rational(o.max_rho))) return kExitCheckFailed;
  return 0;
}

void print_rows(const std::string& suite, const std::vector<VerifyRow>& rows) {
  std::cout << "suite " << suite << ": " << (all_pass(rows) ? "PASS" : "FAIL") << "\n";
  for (const VerifyRow& r : rows) {
    std::cout << "  " << (r.pass ? "pass" : "FAIL") << "  " << r.theorem << " | " << r.instance << " | " << r.bound
              << " | " << r.measured << "\n";
  }
}

int run_verify(const Options& o) {
  if (o.suite == "list") {
    for (const SuiteInfo& s : verify_suites()) std::cout << std::left << std::setw(20) << s.name << s.summary << "\n";
    return 0;
  }
  std::vector<std::string> names;
  if (o.suite == "all") {
    for (const SuiteInfo& s : verify_suites()) names.push_back(s.name);
  } else {
    names = split_list(o.suite);
  }
  VerifyOptions vo;
  vo.workers = o.workers;
  bool ok = true;
  Json combined = Json::array();
  for (const std::string& name : names) {
    const std::vector<VerifyRow> rows = run_suite(name, vo);
    ok = ok && all_pass(rows);
    const std::string json = verify_json(name, rows);
    if (o.json) {
      combined.push_back(Json::parse(json));
    } else {
      print_rows(name, rows);
    }
    if (!o.out.empty()) open_out(o, "verify-" + name + ".json") << json;
  }
  if (o.json) std::cout << combined.dump(2) << "\n";
  return ok ? 0 : kExitCheckFailed;
}

Json sequence_json(std::span<const PointId> seq) { return Json(std::vector<PointId>(seq.begin(), seq.end())); }

int run_adversary(const Options& o) {
  Json j;
  j["kind"] = o.kind;
  std::vector<PointId> sequence;
  if (o.kind == "three-point") {
    const MetricSpace metric = three_point_metric(parse_rational(o.d.empty() ? "1" : o.d));
    AlgorithmSpec spec = parse_algorithm(o.alg);
    if (o.alg.find(':') == std::string::npos && spec.id == AlgorithmId::greedy) spec.tie = parse_tie_break(o.tie);
    const Algorithm alg(metric, 2, spec);
    sequence = three_point_adversary(alg, o.n);
    const Configuration c0 = three_point_start();
    j["metric"] = metric.id();
    j["c0"] = to_string(c0);
    j["algorithm"] = spec.name();
    j["sequence"] = sequence_json(sequence);
    j["algorithm_cost"] = to_string(simulate(alg, c0, sequence).total());
    j["opt_cost"] = to_string(metric.length(offline_opt(metric, c0, sequence).cost));
  } else if (o.kind == "line") {
    std::optional<Configuration> c0;
    if (!o.c0.empty()) c0 = parse_configuration(o.c0);
    const LineAdversary adv =
        line_clustering_adversary(o.k, parse_rational(o.eps), o.m, o.n, parse_tie_break(o.tie), c0);
    sequence = adv.sequence;
    AlgorithmSpec g;
    g.tie = parse_tie_break(o.tie);
    AlgorithmSpec kc;
    kc.id = AlgorithmId::kcenter;
    j["metric"] = adv.metric.id();
    j["c0"] = to_string(adv.c0);
    j["delta_prime"] = to_string(adv.delta_prime);
    j["x"] = adv.x;
    j["prefix_length"] = adv.prefix_length;
    j["sequence"] = sequence_json(sequence);
    j["greedy_cost"] = to_string(simulate(Algorithm(adv.metric, o.k, g), adv.c0, sequence).total());
    j["kcenter_cost"] = to_string(simulate(Algorithm(adv.metric, o.k, kc), adv.c0, sequence).total());
  } else if (o.kind == "star") {
    const StarInstance st = star_lowerbound_instance(o.k, parse_rational(o.d.empty() ? "3" : o.d), parse_rational(o.delta));
    const CostProfile a = anchored_profile(st.metric, st.anchors_a, st.anchors_a, o.n);
    const CostProfile kc = anchored_profile(st.metric, st.anchors_kc, st.anchors_a, o.n);
    const auto cert = certified_rho(kc, a);
    j["points"] = st.metric.size();
    j["short_rays"] = st.short_rays;
    j["long_ray"] = to_string(st.long_ray);
    j["anchors_a"] = to_string(st.anchors_a);
    j["anchors_kcenter"] = to_string(st.anchors_kc);
    j["n"] = o.n;
    j["certified_rho"] = cert ? Json(to_string(cert->rho)) : Json(nullptr);
    j["certified_at"] = cert ? Json(to_string(cert->c)) : Json(nullptr);
  } else {
    throw std::invalid_argument("--kind must be three-point, line or star");
  }
  std::cout << j.dump(2) << "\n";
  if (!o.out.empty() && !sequence.empty()) {
    auto f = open_out(o, "sequence.csv");
    write_sequence_csv(f, 0, sequence, true);
  }
  return 0;
}

int run_oracle_cmd(const Options& o) {
  OracleOptions oo;
  oo.mode = parse_oracle_mode(o.mode);
  oo.budget = o.tree_budget;
  Json j;
  j["problem"] = o.problem;
  OracleVerdict v;
  if (o.problem == "kserver") {
    const MetricSpace metric = load_metric(o);
    const Configuration c0 = start_config(o, metric);
    j["metric"] = metric.id();
    j["c0"] = to_string(c0);
    j["tie"] = o.tie;
    v = run_oracle(KServerGame(metric, c0, o.n, parse_tie_break(o.tie)), oo);
  } else if (o.problem == "paging") {
    const PagingInstance inst = paging_instance(o);
    j["costs"] = o.costs;
    j["tie"] = o.page_tie;
    v = run_oracle(PagingGame(inst, o.n, page_tie(o)), oo);
  } else if (o.problem == "buffer") {
    j["colours"] = o.colours;
    v = run_oracle(RbmGame(o.colours, o.k, o.n), oo);
  } else {
    throw std::invalid_argument("--problem must be kserver, paging or buffer");
  }
  j["k"] = o.k;
  j["n"] = o.n;
  j["mode"] = to_string(v.mode);
  j["algorithms"] = v.policies.str();
  j["reference_dominates"] = v.reference_dominates;
  if (v.mode == OracleMode::explicit_enumeration) j["distinct_profiles"] = v.distinct_profiles;
  if (v.witness_budget) {
    j["witness"] = Json{{"budget", to_string(v.reference_profile.unit() * *v.witness_budget)},
                        {"algorithm_count", v.witness_count},
                        {"reference_count", v.reference_count}};
  }
  std::cout << j.dump(2) << "\n";
  if (!o.out.empty()) open_out(o, "oracle.json") << j.dump(2) << "\n";
  return v.reference_dominates ? 0 : kExitCheckFailed;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--metric", o.metric, "kind:m[:delta], spider:<p>x<len>,..., weighted_star:<w>,...");
  cmd->add_option("--metric-file", o.metric_file, "metric description as JSON");
  cmd->add_option("--k", o.k, "servers, cache slots or buffer size");
  cmd->add_option("--n", o.n, "sequence length");
  cmd->add_option("--tie", o.tie, "greedy tie rule: lowest_point, highest_point, clockwise");
  cmd->add_option("--c0", o.c0, "start configuration, e.g. 0,3 (default: k-center anchors)");
  cmd->add_option("--budget", o.budget, "largest number of sequences to enumerate");
  cmd->add_option("--workers", o.workers, "worker threads for enumeration");
  cmd->add_option("--out", o.out, "directory for report files");
  cmd->add_option("--problem", o.problem, "kserver, paging or buffer");
  cmd->add_option("--costs", o.costs, "paging: eviction cost per page");
  cmd->add_option("--cache", o.cache, "paging: initial cache (default: k cheapest pages)");
  cmd->add_option("--page-tie", o.page_tie, "paging: lowest_id or highest_id");
  cmd->add_option("--colours", o.colours, "buffer: number of colours");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Bijective analysis of online algorithms"};
  app.set_config("--config", "", "TOML/INI file with option defaults");
  app.require_subcommand(1);

  auto* profile = app.add_subcommand("profile", "sorted cost profile as CSV");
  add_common(profile, o);
  profile->add_option("--alg", o.alg, "algorithm id");
  profile->add_option("--samples", o.samples, "sample this many sequences instead of enumerating");
  profile->add_option("--seed", o.seed, "sampling seed");
  profile->add_flag("--traces", o.traces, "also write per-sequence traces (k-server, with --out)");

  auto* compare = app.add_subcommand("compare", "bijective comparison report as JSON");
  add_common(compare, o);
  compare->add_option("--a", o.a, "algorithm A");
  compare->add_option("--b", o.b, "algorithm B");
  compare->add_option("--rho", o.rhos, "rho values for the asymptotic curve")->delimiter(',');
  compare->add_option("--max-rho", o.max_rho, "fail unless the strict ratio is at most this");
  compare->add_option("--samples", o.samples, "sample this many sequences instead of enumerating");
  compare->add_option("--seed", o.seed, "sampling seed");

  auto* verify = app.add_subcommand("verify", "exhaustive verification suites");
  verify->add_option("--suite", o.suite, "suite name, comma list, 'all' or 'list'");
  verify->add_option("--workers", o.workers, "worker threads for enumeration");
  verify->add_option("--out", o.out, "directory for report files");
  verify->add_flag("--json", o.json, "print JSON instead of a table");

  auto* adversary = app.add_subcommand("adversary", "lower-bound sequences and instances");
  adversary->add_option("--kind", o.kind, "three-point, line or star");
  adversary->add_option("--alg", o.alg, "three-point: target algorithm");
  adversary->add_option("--k", o.k, "servers");
  adversary->add_option("--n", o.n, "sequence length");
  adversary->add_option("--tie", o.tie, "greedy tie rule");
  adversary->add_option("--c0", o.c0, "line: start configuration");
  adversary->add_option("--eps", o.eps, "line: epsilon");
  adversary->add_option("--m", o.m, "line: path points");
  adversary->add_option("--d", o.d, "three-point spacing (default 1) or star ray length (default 3)");
  adversary->add_option("--delta", o.delta, "star: spacing");
  adversary->add_option("--out", o.out, "directory for report files");

  auto* oracle = app.add_subcommand("oracle", "reference policy against every lazy online algorithm");
  add_common(oracle, o);
  oracle->add_option("--mode", o.mode, "auto, symbolic or explicit");
  oracle->add_option("--tree-budget", o.tree_budget, "largest algorithm count for explicit enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << error_json("usage", e.what());
    return kExitInvalid;
  }

  try {
    if (*profile) return run_profile(o);
    if (*compare) return run_compare(o);
    if (*verify) return run_verify(o);
    if (*adversary) return run_adversary(o);
    if (*oracle) return run_oracle_cmd(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << error_json("budget_exceeded", e.what());
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << error_json("invalid_input", e.what());
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << error_json("invalid_input", e.what());
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << error_json("internal", e.what());
    return kExitInvalid;
  }
  return kExitInvalid;
}
