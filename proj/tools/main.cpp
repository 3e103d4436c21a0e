#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spexlab/canonical.hpp"
#include "spexlab/errors.hpp"
#include "spexlab/extremal.hpp"
#include "spexlab/graph.hpp"
#include "spexlab/report.hpp"
#include "spexlab/spectral.hpp"
#include "spexlab/subgraph.hpp"
#include "spexlab/verify.hpp"

namespace {

using namespace spexlab;

struct parse_error : std::runtime_error {
  parse_error(size_t pos, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(pos) + ": " + what) {}
};

// expr := K<int> | C<int> | P<int> | E<int> | T(<int>,<int>)
//       | pow(expr,<int>) | u(expr,...) | j(expr,...)
class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  Graph parse() {
    Graph g = expr();
    skip_ws();
    if (pos_ != s_.size()) throw parse_error(pos_, "trailing input");
    return g;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) throw parse_error(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }
  int number() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw parse_error(pos_, "expected a number");
    return std::stoi(s_.substr(start, pos_ - start));
  }
  bool word(const char* w) {
    skip_ws();
    size_t len = std::string(w).size();
    if (s_.compare(pos_, len, w) == 0) {
      pos_ += len;
      return true;
    }
    return false;
  }

  Graph expr() {
    skip_ws();
    if (word("pow")) {
      expect('(');
      Graph base = expr();
      expect(',');
      int k = number();
      expect(')');
      return graph_power(base, k);
    }
    if (word("u(")) return combine(false);
    if (word("j(")) return combine(true);
    char c = peek();
    if (c == 'K') {
      ++pos_;
      return complete_graph(number());
    }
    if (c == 'C') {
      ++pos_;
      return cycle_graph(number());
    }
    if (c == 'P') {
      ++pos_;
      return path_graph(number());
    }
    if (c == 'E') {
      ++pos_;
      return empty_graph(number());
    }
    if (c == 'T') {
      ++pos_;
      expect('(');
      int n = number();
      expect(',');
      int r = number();
      expect(')');
      return turan_graph(n, r);
    }
    throw parse_error(pos_, "expected an atom or combinator");
  }

  Graph combine(bool joined) {
    std::vector<Graph> parts;
    parts.push_back(expr());
    while (peek() == ',') {
      ++pos_;
      parts.push_back(expr());
    }
    expect(')');
    return joined ? join(parts) : disjoint_union(parts);
  }
};

struct CommonOpts {
  std::uint64_t seed = 12345;
  double tol = 1e-9;
  int jobs = 1;
  std::string cache_dir;
  std::string out;
  bool allow_order_10 = false;
};

SearchOptions search_options(const CommonOpts& c) {
  SearchOptions o;
  o.cache_dir = c.cache_dir;
  o.jobs = c.jobs;
  o.allow_order_10 = c.allow_order_10;
  return o;
}

void echo_common(Report& rep, const CommonOpts& c, bool seeded) {
  if (seeded) rep.params()["seed"] = c.seed;
  rep.params()["tol"] = c.tol;
  rep.params()["jobs"] = c.jobs;
  if (!c.cache_dir.empty()) rep.params()["cache_dir"] = c.cache_dir;
  if (c.allow_order_10) rep.params()["allow_order_10"] = true;
}

int emit(Report& rep, const CommonOpts& c, std::chrono::steady_clock::time_point t0) {
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
  rep.set_runtime_ms(ms);
  std::string text = rep.dump();
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    if (!f) throw std::runtime_error("cannot open output file " + c.out);
    f << text;
  }
  return rep.all_pass() ? 0 : 1;
}

void summary_to_json(const TrialSummary& s, nlohmann::ordered_json& values) {
  values["trials"] = s.trials;
  values["violations"] = s.violations;
  values["attempts"] = s.attempts;
  if (s.name == "subgraph-monotonicity" || s.name == "edge-rotation" ||
      s.name == "neighborhood-swap") {
    values["min_margin"] = s.min_margin;
    values["tightest_instance"] = s.worst;
  } else if (!s.worst.empty()) {
    values["violating_instance"] = s.worst;
  }
}

std::pair<int, int> parse_range(const std::string& s) {
  size_t dots = s.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("range must look like 4..9");
  int lo = std::stoi(s.substr(0, dots));
  int hi = std::stoi(s.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("empty range");
  return {lo, hi};
}

nlohmann::ordered_json sweep_rows_json(const SweepReport& sw) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const AgreementRow& r : sw.rows) {
    rows.push_back({{"n", r.n},
                    {"rho_max", r.rho_max},
                    {"rho_predicted", r.rho_predicted},
                    {"spex_agrees", r.spex_agrees},
                    {"spex_unique", r.spex_unique},
                    {"runner_up_gap", r.runner_up_gap},
                    {"ex_value", r.ex_value},
                    {"ex_predicted", r.ex_predicted},
                    {"ex_agrees", r.ex_agrees},
                    {"witnesses_connected", r.witnesses_connected},
                    {"min_degree_ratio", r.min_degree_ratio}});
  }
  return rows;
}

int cmd_construct(const std::string& expr_text, const CommonOpts& c) {
  Graph g = ExprParser(expr_text).parse();
  GraphStats st = basic_stats(g);
  std::ostringstream os;
  os << canonical_g6(g) << "\n"
     << "n=" << g.order() << " e=" << st.edges << " delta=" << st.min_degree
     << " Delta=" << st.max_degree << " connected=" << (st.connected ? "yes" : "no") << "\n";
  if (c.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(c.out);
    if (!f) throw std::runtime_error("cannot open output file " + c.out);
    f << os.str();
  }
  return 0;
}

int cmd_search(bool spectral, int n, const std::vector<std::string>& forbid,
               const CommonOpts& c) {
  if (forbid.empty()) throw std::invalid_argument("need at least one --forbid graph");
  std::vector<Graph> members;
  for (const std::string& g6 : forbid) members.push_back(graph6_decode(g6));
  ForbiddenFamily fam = make_family(std::move(members));

  auto t0 = std::chrono::steady_clock::now();
  Report rep(spectral ? "spex" : "ex", "none");
  rep.params()["n"] = n;
  rep.params()["forbid"] = forbid;
  echo_common(rep, c, false);

  SearchReport sr = spectral ? spex_search(n, fam, c.tol, search_options(c))
                             : ex_search(n, fam, search_options(c));
  rep.set_witnesses(sr.witnesses);
  rep.values()["mode"] = sr.mode;
  rep.values()["family"] = sr.family_g6;
  if (spectral) {
    rep.values()["rho"] = sr.rho_value;
    rep.values()["witness_gaps"] = sr.witness_gaps;
  } else {
    rep.values()["edges"] = sr.edge_value;
  }
  rep.values()["unique"] = sr.unique;
  rep.values()["runner_up_gap"] = sr.runner_up_gap;
  rep.values()["classes_total"] = sr.classes_total;
  rep.values()["classes_free"] = sr.classes_free;
  rep.add_check("witnesses-reverified", true, "every witness re-checked as family-free");
  rep.set_cache_hits(sr.disk_cache_hit ? 1 : 0);
  return emit(rep, c, t0);
}

int verify_thm16(int s, int m, int r, const std::string& range, const CommonOpts& c) {
  auto [lo, hi] = parse_range(range);
  auto t0 = std::chrono::steady_clock::now();
  Report rep("verify", "thm16");
  rep.params()["s"] = s;
  rep.params()["m"] = m;
  rep.params()["r"] = r;
  rep.params()["n"] = range;
  echo_common(rep, c, false);

  SweepReport sw = spex_agreement_sweep(s, m, r, lo, hi, c.tol, search_options(c));
  rep.values()["rows"] = sweep_rows_json(sw);
  rep.values()["spex_onset"] = sw.spex_onset;
  bool connected = true;
  for (const AgreementRow& row : sw.rows) connected = connected && row.witnesses_connected;
  rep.add_check("witnesses-connected", connected,
                "every spectral-extremal witness in the range is connected");
  rep.add_check("predicted-rho-monotone", sw.predicted_rho_monotone,
                "spectral radius of the predicted graph increases with n");
  rep.set_cache_hits(sw.cache_hits);
  return emit(rep, c, t0);
}

int verify_thm17(int m, int k, const CommonOpts& c) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep("verify", "thm17");
  rep.params()["m"] = m;
  rep.params()["k"] = k;
  echo_common(rep, c, false);

  CyclePowerParams cp = cycle_power_params(m, k);
  rep.values()["p"] = cp.p;
  rep.values()["h"] = cp.h;
  rep.values()["s"] = cp.s;
  rep.values()["b"] = cp.b;
  rep.values()["r"] = cp.r;
  for (const CheckItem& it : verify_cycle_power_facts(m, k))
    rep.add_check(it.name, it.pass, it.details);
  return emit(rep, c, t0);
}

int verify_rotation(long trials, const CommonOpts& c) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep("verify", "lemma22");
  rep.params()["trials"] = trials;
  echo_common(rep, c, true);

  TrialSummary s = rotation_trials(trials, c.seed);
  summary_to_json(s, rep.values());
  std::ostringstream os;
  os << s.trials - s.violations << "/" << s.trials << " increased, min margin " << s.min_margin;
  rep.add_check("random-rotations", s.violations == 0, os.str());

  // path on four vertices, detach an end from its neighbor and reattach it to
  // the middle: the star appears and the radius moves from the golden ratio
  // to sqrt(3)
  Graph p4 = path_graph(4);
  auto [star, rot] = rotate_edges(p4, 3, VertexSet::of({2}), VertexSet::of({1}));
  double before = spectral_radius(p4).rho;
  double after = spectral_radius(star).rho;
  bool worked = rot.increase_certified && std::fabs(before - (1.0 + std::sqrt(5.0)) / 2.0) < 1e-9 &&
                std::fabs(after - std::sqrt(3.0)) < 1e-9;
  os.str("");
  os << "rho " << before << " -> " << after;
  rep.add_check("worked-instance", worked, os.str());
  return emit(rep, c, t0);
}

int verify_swap(long trials, const CommonOpts& c) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep("verify", "lemma23");
  rep.params()["trials"] = trials;
  echo_common(rep, c, true);

  TrialSummary s = swap_trials(trials, c.seed);
  summary_to_json(s, rep.values());
  std::ostringstream os;
  os << s.trials - s.violations << "/" << s.trials << " increased, min margin " << s.min_margin;
  rep.add_check("random-swaps", s.violations == 0, os.str());

  // star on four vertices: A = two leaves, B = the center, U = third leaf;
  // swapping the attachment turns it into the four-cycle, sqrt(3) -> 2
  Graph star(4);
  star.add_edge(2, 0);
  star.add_edge(2, 1);
  star.add_edge(2, 3);
  SwapSpec spec;
  spec.a = VertexSet::of({0, 1});
  spec.b = VertexSet::of({2});
  spec.u1 = VertexSet{};
  spec.u2 = VertexSet::of({3});
  SwapCheck chk = check_swap_preconditions(star, spec);
  Graph cycle = neighborhood_swap(star, spec);
  double before = spectral_radius(star).rho;
  double after = spectral_radius(cycle).rho;
  bool worked = chk.pass && std::fabs(before - std::sqrt(3.0)) < 1e-9 &&
                std::fabs(after - 2.0) < 1e-9 && are_isomorphic(cycle, cycle_graph(4));
  os.str("");
  os << "rho " << before << " -> " << after;
  rep.add_check("worked-instance", worked, os.str());
  return emit(rep, c, t0);
}

int verify_intersection(long trials, const CommonOpts& c) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep("verify", "lemma26");
  rep.params()["trials"] = trials;
  echo_common(rep, c, true);

  TrialSummary s = intersection_trials(trials, c.seed);
  summary_to_json(s, rep.values());
  std::ostringstream os;
  os << s.trials - s.violations << "/" << s.trials << " held";
  rep.values()["holds"] = s.violations == 0;
  rep.add_check("random-families", s.violations == 0, os.str());
  return emit(rep, c, t0);
}

int verify_paths(int n_max, const std::vector<int>& ks, const CommonOpts& c) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep("verify", "lemma27");
  rep.params()["n_max"] = n_max;
  rep.params()["k_set"] = ks;
  echo_common(rep, c, false);

  long hits = 0;
  for (const CheckItem& it : path_bound_checks(n_max, ks, search_options(c), &hits))
    rep.add_check(it.name, it.pass, it.details);
  rep.set_cache_hits(hits);
  return emit(rep, c, t0);
}

int verify_observation(long trials, const CommonOpts& c) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep("verify", "observation");
  rep.params()["trials"] = trials;
  echo_common(rep, c, true);

  TrialSummary s = symmetric_extension_trials(trials, c.seed);
  summary_to_json(s, rep.values());
  std::ostringstream os;
  os << s.trials - s.violations << "/" << s.trials << " stayed family-free";
  rep.add_check("random-extensions", s.violations == 0, os.str());
  return emit(rep, c, t0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for spectral extremal graph problems"};
  app.require_subcommand(1);

  CommonOpts common;
  std::string construct_expr;
  std::string verify_target;
  long trials = -1;
  int opt_n = 0, opt_s = 1, opt_m = 2, opt_r = 2, opt_k = 2, opt_nmax = 8;
  std::string range = "4..9";
  std::vector<int> kset{3, 4, 5, 6};
  std::vector<std::string> forbid;

  auto add_common = [&](CLI::App* cmd, bool with_seed) {
    cmd->add_option("--tol", common.tol, "tie tolerance for spectral comparisons");
    cmd->add_option("--jobs", common.jobs, "worker threads for enumeration sweeps");
    cmd->add_option("--cache-dir", common.cache_dir,
                    "enumeration cache directory (default SPEXLAB_CACHE_DIR or ./spexlab-cache)");
    cmd->add_option("--out", common.out, "write the report here instead of standard output");
    cmd->add_flag("--allow-order-10", common.allow_order_10,
                  "permit the expensive order-10 enumeration");
    if (with_seed) cmd->add_option("--seed", common.seed, "random generator seed");
  };

  CLI::App* construct = app.add_subcommand("construct", "build a graph from an expression");
  construct->add_option("expr", construct_expr, "for example j(K1,T(8,2)) or pow(C8,2)")
      ->required();
  add_common(construct, false);

  CLI::App* verify = app.add_subcommand("verify", "run a verification harness");
  verify
      ->add_option("target", verify_target,
                   "one of thm16 thm17 lemma22 lemma23 lemma26 lemma27 observation")
      ->required();
  verify->add_option("--trials", trials, "randomized trial count (harness default if omitted)");
  verify->add_option("--s", opt_s, "dominating clique size parameter");
  verify->add_option("--m", opt_m, "base order parameter");
  verify->add_option("--r", opt_r, "part count parameter");
  verify->add_option("--k", opt_k, "cycle power");
  verify->add_option("--n", range, "order range lo..hi");
  verify->add_option("--n-max", opt_nmax, "largest order for the path bound");
  verify->add_option("--k-set", kset, "path lengths for the path bound")->delimiter(',');
  add_common(verify, true);

  CLI::App* spex = app.add_subcommand("spex", "maximum spectral radius over a free family");
  spex->add_option("--n", opt_n, "graph order")->required();
  spex->add_option("--forbid", forbid, "forbidden subgraph in graph6 (repeatable)")->required();
  add_common(spex, false);

  CLI::App* ex = app.add_subcommand("ex", "maximum edge count over a free family");
  ex->add_option("--n", opt_n, "graph order")->required();
  ex->add_option("--forbid", forbid, "forbidden subgraph in graph6 (repeatable)")->required();
  add_common(ex, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }

  try {
    if (construct->parsed()) return cmd_construct(construct_expr, common);
    if (spex->parsed()) return cmd_search(true, opt_n, forbid, common);
    if (ex->parsed()) return cmd_search(false, opt_n, forbid, common);

    if (verify_target == "thm16") return verify_thm16(opt_s, opt_m, opt_r, range, common);
    if (verify_target == "thm17") return verify_thm17(opt_m, opt_k, common);
    if (verify_target == "lemma22") return verify_rotation(trials < 0 ? 200 : trials, common);
    if (verify_target == "lemma23") return verify_swap(trials < 0 ? 200 : trials, common);
    if (verify_target == "lemma26")
      return verify_intersection(trials < 0 ? 1000 : trials, common);
    if (verify_target == "lemma27") return verify_paths(opt_nmax, kset, common);
    if (verify_target == "observation")
      return verify_observation(trials < 0 ? 100 : trials, common);
    std::cerr << "unknown verify target '" << verify_target << "'\n";
    return 3;
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
}
