#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsp/bounds.hpp"
#include "hsp/character_table.hpp"
#include "hsp/combinatorics.hpp"
#include "hsp/coset.hpp"
#include "hsp/families.hpp"
#include "hsp/fourier.hpp"
#include "hsp/group.hpp"
#include "hsp/group_spec.hpp"
#include "hsp/lemmas.hpp"
#include "hsp/measurement.hpp"
#include "hsp/parallel.hpp"
#include "hsp/psl_tables.hpp"
#include "hsp/report.hpp"
#include "hsp/transfer.hpp"

using namespace hsp;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInapplicable = 2;
constexpr int kExitUsage = 64;
constexpr int kExitResource = 69;
constexpr int kExitInternal = 70;

struct Config {
  std::string family;
  std::string group;
  std::string h;
  unsigned k = 1;
  unsigned k_max = 10;
  unsigned t = 1;
  bool t_given = false;
  unsigned frames = 1;
  std::string frame_kind = "basis";
  std::uint64_t seed = 1;
  int threads = -1;
  std::string threshold = "1/3";
  std::string format;
  std::string out;
  unsigned n = 0;
  unsigned q = 0;
  unsigned p = 0;
  unsigned m = 1;
  std::string c;
  std::string kappa;
  std::string epsilon = "1/5";
  std::string alpha = "1/4";
  std::string suite = "all";
  std::string distribution;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + cfg.out + " for writing");
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("unsupported --format '" + format + "'");
}

Element hidden_element(const FiniteGroup& g, const std::string& text) {
  return text.empty() ? default_involution(g) : parse_element(g, text);
}

// --- bound -----------------------------------------------------------------

FamilyReport group_report(const FiniteGroup& g, Element h, const Rational& epsilon, const BoundOptions& options) {
  if (h == g.identity() || g.compose(h, h) != g.identity()) throw UsageError("--h must be an involution");
  FamilyReport r;
  r.family = "group";
  r.params = {{"group", g.name()}, {"h", g.format(h)}, {"epsilon", rational_string(epsilon)}};
  r.options = options;
  const CharacterData data = character_data(irreps_for(g), h);
  r.bounds = bound_params(data, Epsilon::of(epsilon));
  r.details = {{"trace_norm_eta", rational_string(trace_norm_eta(data))},
               {"centralizer_order", centralizer(g, h).order()}};
  r.notes.push_back("k_lower_bound is the largest k with sqrt(t*delta2(k)) < threshold and 2*k*eps < 1");
  r.notes.push_back("eta := (1/|G|) sum d|chi(h)|, so the two-outcome bound reads 2^t * eta");
  finish_report(r);
  return r;
}

int cmd_bound(const Config& cfg) {
  BoundOptions options;
  options.k_max = cfg.k_max;
  options.threshold = to_long_double(parse_rational(cfg.threshold));
  options.states = cfg.t;
  if (!(options.threshold > 0 && options.threshold < 1)) throw UsageError("--threshold must lie in (0, 1)");
  FamilyReport report;
  std::string spec;
  if (cfg.family == "wreath") {
    if (!cfg.n) throw UsageError("--family wreath needs --n");
    report = wreath_bound(cfg.n, parse_rational(cfg.alpha), options);
    spec = "wreath:" + std::to_string(cfg.n);
  } else if (cfg.family == "psl2") {
    if (!cfg.q) throw UsageError("--family psl2 needs --q");
    report = psl_bound(cfg.q, options);
    spec = "psl2:" + std::to_string(cfg.q);
  } else if (cfg.family == "gl") {
    if (!cfg.n || !cfg.p) throw UsageError("--family gl needs --n and --p");
    report = gl_bound(cfg.n, cfg.p, cfg.m, options);
    spec = "gl:" + std::to_string(cfg.n) + "," + std::to_string(cfg.p) + "," + std::to_string(cfg.m);
  } else if (cfg.family == "power") {
    if (cfg.group.empty() || !cfg.n) throw UsageError("--family power needs --group and --n");
    const FiniteGroup g = parse_group_spec(cfg.group);
    DirectPowerOptions dp;
    if (!cfg.c.empty()) dp.c = parse_rational(cfg.c);
    if (!cfg.kappa.empty()) dp.kappa = parse_rational(cfg.kappa);
    report = direct_power_bound(g, hidden_element(g, cfg.h), cfg.n, dp, options);
    spec = "power:" + cfg.group + "^" + std::to_string(cfg.n);
  } else if (cfg.family == "group") {
    if (cfg.group.empty()) throw UsageError("--family group needs --group");
    const FiniteGroup g = parse_group_spec(cfg.group);
    report = group_report(g, hidden_element(g, cfg.h), parse_rational(cfg.epsilon), options);
    spec = cfg.group;
  } else {
    throw UsageError("unknown --family '" + cfg.family + "' (wreath, psl2, gl, power, group)");
  }
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require_format(format, {"json", "csv", "text"});
  if (format == "json") {
    json j = to_json(report);
    j["header"] = report_header(cfg.seed, spec);
    emit(cfg, dump(j));
  } else {
    emit(cfg, format == "csv" ? to_csv(report) : to_text(report));
  }
  if (!report.applicable) {
    std::cerr << "hspsim: " << report.inapplicable_reason << "\n";
    return kExitInapplicable;
  }
  return kExitOk;
}

// --- simulate ----------------------------------------------------------------

int cmd_simulate(const Config& cfg) {
  if (cfg.group.empty()) throw UsageError("simulate needs --group");
  if (cfg.frames < 1) throw UsageError("--frames must be at least 1");
  const FiniteGroup g = parse_group_spec(cfg.group);
  if (g.order() > 2000) throw ResourceCapError("simulate needs |G| <= 2000");
  const Element h = hidden_element(g, cfg.h);
  const FrameKind kind = parse_frame_kind(cfg.frame_kind);
  const Rational epsilon = parse_rational(cfg.epsilon);
  const HiddenInvolution setting(irreps_for(g), h);
  check_simulation_cap(setting, cfg.k);
  const BoundParams params = bound_params(character_data(setting.irreps(), h), Epsilon::of(epsilon));
  const double delta2 = static_cast<double>(params.delta2(cfg.k));

  json runs = json::array();
  std::vector<double> averages, maxima;
  for (unsigned i = 0; i < cfg.frames; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    const KMeasurement m = KMeasurement::random(setting, cfg.k, seed, kind);
    const TvReport tv = avg_tv_over_conjugates(setting, m);
    if (i == 0 && !cfg.distribution.empty()) {
      std::ofstream file(cfg.distribution, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open " + cfg.distribution);
      file << full_distribution(setting, m, h).to_csv();
    }
    averages.push_back(tv.average_l1);
    maxima.push_back(tv.max_l1);
    runs.push_back({{"seed", seed},
                    {"avg_l1", sig12(tv.average_l1)},
                    {"avg_tv", sig12(tv.average_tv())},
                    {"max_l1", sig12(tv.max_l1)},
                    {"max_tv", sig12(tv.max_tv())},
                    {"avg_l1_within_delta2", tv.average_l1 <= delta2}});
  }
  const double mean_avg = pairwise_sum(averages) / static_cast<double>(averages.size());
  double worst_avg = 0, worst_max = 0;
  for (double v : averages) worst_avg = std::max(worst_avg, v);
  for (double v : maxima) worst_max = std::max(worst_max, v);
  const bool holds = worst_avg <= delta2;
  std::ostringstream line;
  line << "max over seeds of E_g l1 = " << format_sig12(worst_avg) << (holds ? " <= " : " > ") << "delta2("
       << cfg.k << ") = " << format_sig12(delta2);

  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require_format(format, {"json", "csv", "text"});
  if (format == "json") {
    json j;
    j["header"] = report_header(cfg.seed, cfg.group);
    j["command"] = "simulate";
    j["group"] = g.name();
    j["group_order"] = g.order();
    j["h"] = g.format(h);
    j["conjugates"] = setting.conjugates().size();
    j["k"] = cfg.k;
    j["frame_kind"] = to_string(kind);
    j["frames"] = cfg.frames;
    j["epsilon"] = rational_string(epsilon);
    j["hypothesis_ok"] = params.hypothesis_ok(cfg.k);
    j["delta1"] = sig12(params.delta1);
    j["delta2"] = sig12(delta2);
    j["work_units"] = sig12(simulation_work(setting, cfg.k));
    j["runs"] = runs;
    j["mean_avg_l1"] = sig12(mean_avg);
    j["mean_avg_tv"] = sig12(mean_avg / 2);
    j["max_avg_l1"] = sig12(worst_avg);
    j["max_l1_over_conjugates"] = sig12(worst_max);
    j["delta2_comparison"] = {{"holds", holds}, {"line", line.str()}};
    j["notes"] = {"l1 is the distance the bound controls; tv = l1 / 2",
                  "E_g weights each conjugate of h equally (|C(h)| elements g per conjugate)"};
    emit(cfg, dump(j));
  } else if (format == "csv") {
    std::ostringstream out;
    out << "seed,avg_l1,avg_tv,max_l1,max_tv\n";
    for (const auto& r : runs)
      out << r["seed"].get<std::uint64_t>() << "," << format_sig12(r["avg_l1"].get<double>()) << ","
          << format_sig12(r["avg_tv"].get<double>()) << "," << format_sig12(r["max_l1"].get<double>()) << ","
          << format_sig12(r["max_tv"].get<double>()) << "\n";
    emit(cfg, out.str());
  } else {
    std::ostringstream out;
    out << "group " << g.name() << ", h = " << g.format(h) << ", k = " << cfg.k << ", " << to_string(kind)
        << " frames\n";
    for (const auto& r : runs)
      out << "seed " << r["seed"].get<std::uint64_t>() << ": E_g l1 = " << format_sig12(r["avg_l1"].get<double>())
          << ", max l1 = " << format_sig12(r["max_l1"].get<double>()) << "\n";
    out << line.str() << "\n";
    emit(cfg, out.str());
  }
  return kExitOk;
}

// --- verify ------------------------------------------------------------------

struct Check {
  std::string suite;
  std::string name;
  std::string status;  // PASS, FAIL, WARN, HYPOTHESIS-NOT-MET
  std::optional<double> lhs, rhs, slack;
  std::string detail;
};

Check make_check(std::string suite, std::string name, bool ok, std::string detail = "") {
  return {std::move(suite), std::move(name), ok ? "PASS" : "FAIL", {}, {}, {}, std::move(detail)};
}

Check bounded(std::string suite, std::string name, double value, double tol, std::string detail = "") {
  Check c = make_check(std::move(suite), std::move(name), value <= tol, std::move(detail));
  c.lhs = value;
  c.rhs = tol;
  c.slack = tol - value;
  return c;
}

void add_lemmas(std::vector<Check>& out, const std::string& suite, const std::vector<LemmaResult>& results) {
  for (const auto& r : results) {
    Check c{suite, r.lemma, "", {}, {}, {}, r.detail};
    if (r.status == "hypothesis-not-met") {
      c.status = "HYPOTHESIS-NOT-MET";
    } else {
      c.status = r.pass() ? "PASS" : "FAIL";
      c.lhs = r.lhs;
      c.rhs = r.rhs;
      c.slack = r.slack;
    }
    out.push_back(c);
  }
}

void suite_repr(std::vector<Check>& out, const FiniteGroup& g) {
  const IrrepList irreps = irreps_for(g);
  double hom = 0, unit = 0, norm = 0;
  for (const auto& rho : irreps) {
    hom = std::max(hom, homomorphism_error(rho));
    unit = std::max(unit, unitarity_error(rho));
    norm = std::max(norm, std::abs(character_norm(rho) - 1));
  }
  out.push_back(bounded("repr", "homomorphism", hom, 1e-9, std::to_string(irreps.size()) + " irreps"));
  out.push_back(bounded("repr", "unitarity", unit, 1e-9));
  out.push_back(bounded("repr", "character_norm", norm, 1e-9));
  out.push_back(make_check("repr", "sum_squared_degrees", sum_squared_degrees(irreps) == g.order(),
                           std::to_string(sum_squared_degrees(irreps)) + " vs " + std::to_string(g.order())));
  if (g.order() <= 2000) {
    const Eigen::MatrixXcd f = qft(g, irreps);
    const auto n = static_cast<Eigen::Index>(g.order());
    out.push_back(bounded("repr", "qft_unitarity", (f * f.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-9));
  }
  if (g.order() <= 100) {
    const auto invs = involutions(g);
    if (!invs.empty()) {
      const Element h = default_involution(g);
      const Subgroup sub(g, {g.identity(), h});
      out.push_back(bounded("repr", "fourier_blocks_roundtrip", fourier_roundtrip_error(irreps, sub), 1e-9));
      const BlockDensity blocks = fourier_blocks(irreps, sub);
      out.push_back(bounded("repr", "block_trace", std::abs(blocks.total_trace() - 1), 1e-10));
      out.push_back(bounded("repr", "block_psd", -blocks.min_eigenvalue(), 1e-9));
    }
  }
}

void suite_tables(std::vector<Check>& out, const FiniteGroup& g) {
  const CharacterTable table = character_table(irreps_for(g));
  out.push_back(bounded("tables", "row_orthogonality", row_orthogonality_error(table), 1e-8));
  out.push_back(bounded("tables", "column_orthogonality", column_orthogonality_error(table), 1e-8));
  if (g.kind().family == GroupFamily::psl2) {
    const unsigned q = g.kind().param;
    for (const auto& c : check_psl_table(q, g.order() <= 600))
      out.push_back({"tables", c.name, c.status, {}, {}, {}, c.detail});
  }
}

void suite_gallagher(std::vector<Check>& out, const FiniteGroup& g, Element h) {
  const CharacterData data = character_data(irreps_for(g), h);
  const auto cent = centralizer(g, h).order();
  try {
    for (const auto& e : gallagher_check(data, cent)) {
      std::string detail = "|chi(h)|/d = " + rational_string(e.ratio) + (e.in_lambda ? ", in Lambda" : "");
      if (!e.in_lambda) detail += e.strict ? ", strict" : ", equality (non-strict branch)";
      out.push_back(make_check("gallagher", e.label, true, detail));
    }
  } catch (const std::logic_error& err) {
    out.push_back(make_check("gallagher", "dichotomy", false, err.what()));
  }
}

void suite_trace(std::vector<Check>& out, const FiniteGroup& g, Element h, unsigned t_max) {
  const HiddenInvolution setting(irreps_for(g), h);
  const CharacterData data = character_data(setting.irreps(), h);
  const unsigned cap = g.order() <= 100 ? 3 : g.order() <= 600 ? 2 : 1;
  const unsigned top = t_max ? std::min(t_max, cap) : cap;
  for (unsigned t = 1; t <= top; ++t) {
    const double lhs = mixed_conjugate_trace_distance(setting, t);
    const double rhs = static_cast<double>(to_long_double(trace_norm_bound(data, t)));
    Check c = make_check("trace", "twooutcome_t" + std::to_string(t), lhs < rhs,
                         "bound (2^t/|G|) sum d|chi(h)| = " + rational_string(trace_norm_bound(data, t)));
    c.lhs = lhs;
    c.rhs = rhs;
    c.slack = rhs - lhs;
    out.push_back(c);
  }
}

void suite_transfer(std::vector<Check>& out, const std::optional<FiniteGroup>& g) {
  auto record = [&](const TransferReport& r) {
    Check c = make_check("transfer", r.mode, r.pass(), r.detail);
    c.lhs = r.max_error;
    c.rhs = 1e-9;
    c.slack = 1e-9 - r.max_error;
    out.push_back(c);
  };
  const auto family = g ? std::optional<GroupFamily>(g->kind().family) : std::nullopt;
  if (!family || family == GroupFamily::wreath) record(transfer_wreath_in_symmetric(g ? g->kind().param : 3));
  if (!family || family == GroupFamily::sl2 || family == GroupFamily::psl2)
    record(transfer_sl2_to_psl2(g ? g->kind().param : 5));
  if (family && *family != GroupFamily::wreath && *family != GroupFamily::sl2 && *family != GroupFamily::psl2)
    out.push_back({"transfer", "transfer", "HYPOTHESIS-NOT-MET", {}, {}, {}, "needs a wreath, sl2 or psl2 group"});
}

int cmd_verify(const Config& cfg) {
  static const std::vector<std::string> suites{"repr", "facts", "lemmas", "tables", "transfer", "gallagher", "trace", "all"};
  if (std::find(suites.begin(), suites.end(), cfg.suite) == suites.end())
    throw UsageError("unknown --suite '" + cfg.suite + "'");
  std::optional<FiniteGroup> g;
  if (!cfg.group.empty()) g = parse_group_spec(cfg.group);
  if (!g && cfg.suite != "transfer") throw UsageError("verify --suite " + cfg.suite + " needs --group");
  if (g && g->order() > 2000) throw ResourceCapError("verify needs |G| <= 2000");
  auto want = [&](const char* s) { return cfg.suite == s || cfg.suite == "all"; };
  const bool has_involution = g && !involutions(*g).empty();
  std::optional<Element> h;
  if (has_involution) h = hidden_element(*g, cfg.h);

  std::vector<Check> checks;
  if (want("repr")) suite_repr(checks, *g);
  if (want("facts")) {
    std::vector<LemmaResult> facts = facts_suite(irreps_for(*g), 20, cfg.seed);
    add_lemmas(checks, "facts", facts);
  }
  if (want("tables")) suite_tables(checks, *g);
  if (want("gallagher") && h) suite_gallagher(checks, *g, *h);
  if (want("trace") && h) suite_trace(checks, *g, *h, cfg.t_given ? cfg.t : 0);
  if (want("lemmas") && h) {
    LemmaSuiteOptions o;
    o.k = cfg.k;
    o.epsilon = parse_rational(cfg.epsilon);
    o.kind = parse_frame_kind(cfg.frame_kind);
    o.states = cfg.t;
    o.vector_seed = cfg.seed;
    o.seeds.clear();
    for (unsigned i = 0; i < cfg.frames; ++i) o.seeds.push_back(cfg.seed + i);
    add_lemmas(checks, "lemmas", lemma_suite(HiddenInvolution(irreps_for(*g), *h), o));
  }
  if (want("transfer") && (cfg.suite == "transfer" || (g && (g->kind().family == GroupFamily::wreath || g->kind().family == GroupFamily::sl2 || g->kind().family == GroupFamily::psl2))))
    suite_transfer(checks, g);
  if (!h && (cfg.suite == "lemmas" || cfg.suite == "gallagher" || cfg.suite == "trace"))
    checks.push_back({cfg.suite, cfg.suite, "HYPOTHESIS-NOT-MET", {}, {}, {}, "group has no involution"});

  std::size_t pass = 0, fail = 0, warn = 0, skipped = 0;
  for (const auto& c : checks) {
    if (c.status == "PASS") ++pass;
    else if (c.status == "FAIL") ++fail;
    else if (c.status == "WARN") ++warn;
    else ++skipped;
  }
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require_format(format, {"json", "text"});
  if (format == "json") {
    json j;
    j["header"] = report_header(cfg.seed, cfg.group);
    j["command"] = "verify";
    j["suite"] = cfg.suite;
    if (g) j["group"] = g->name();
    if (h) j["h"] = g->format(*h);
    json arr = json::array();
    for (const auto& c : checks) {
      json e{{"suite", c.suite}, {"name", c.name}, {"status", c.status}};
      e["lhs"] = c.lhs ? json(sig12(*c.lhs)) : json(nullptr);
      e["rhs"] = c.rhs ? json(sig12(*c.rhs)) : json(nullptr);
      e["slack"] = c.slack ? json(sig12(*c.slack)) : json(nullptr);
      if (!c.detail.empty()) e["detail"] = c.detail;
      arr.push_back(e);
    }
    j["checks"] = arr;
    j["summary"] = {{"pass", pass}, {"fail", fail}, {"warn", warn}, {"skipped", skipped}};
    emit(cfg, dump(j));
  } else {
    std::ostringstream out;
    for (const auto& c : checks) {
      out << c.status << " " << c.suite << "/" << c.name;
      if (c.lhs) out << " lhs=" << format_sig12(*c.lhs) << " rhs=" << format_sig12(*c.rhs);
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << "\n";
    }
    out << pass << " passed, " << fail << " failed, " << warn << " warnings, " << skipped << " skipped\n";
    emit(cfg, out.str());
  }
  return fail ? kExitVerifyFailed : kExitOk;
}

// --- chartable ---------------------------------------------------------------

int cmd_chartable(const Config& cfg) {
  if (cfg.group.empty()) throw UsageError("chartable needs --group");
  const FiniteGroup g = parse_group_spec(cfg.group);
  if (g.order() > 2000) throw ResourceCapError("chartable needs |G| <= 2000");
  const CharacterTable table = character_table(irreps_for(g));
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  require_format(format, {"csv", "json"});
  if (format == "csv") {
    emit(cfg, to_csv(table));
  } else {
    json j = to_json(table);
    j["header"] = report_header(cfg.seed, cfg.group);
    emit(cfg, dump(j));
  }
  return kExitOk;
}

const char* kGroupGrammar =
    "Group specs: name[:param] with\n"
    "  symmetric:n | sn        S_n, 1 <= n <= 8\n"
    "  wreath:n                S_n wr S_2, 2 <= n <= 5\n"
    "  dihedral:n | dn         D_n of order 2n\n"
    "  cyclic:n | zn | cn      Z_n\n"
    "  psl2:q, sl2:q           q a prime power <= 16\n"
    "  power:<spec>^k          k-fold direct power, e.g. power:s3^2\n"
    "Elements (--h): cycles \"(1 2)(3 4)\", wreath triples \"((1 2)|()|1)\",\n"
    "matrices \"[[a,b],[c,d]]\", or \"#<id>\" for any group.\n";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact simulator and bound calculator for hidden involution subgroups"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.footer(kGroupGrammar);
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--threads", cfg.threads, "Worker threads (overrides HSPSIM_THREADS)");
    sub->add_option("--format", cfg.format, "Output format: json, csv or text");
    sub->add_option("--out", cfg.out, "Write the report to this file");
  };

  auto* bound = app.add_subcommand("bound", "Evaluate epsilon, delta1, delta2 and the k lower bound for a family");
  bound->add_option("--family", cfg.family, "wreath, psl2, gl, power or group")->required();
  bound->add_option("--n", cfg.n, "Family size parameter (wreath n, gl n, power exponent)");
  bound->add_option("--q", cfg.q, "Field size for psl2");
  bound->add_option("--p", cfg.p, "Characteristic for gl");
  bound->add_option("--m", cfg.m, "Field degree for gl");
  bound->add_option("--group", cfg.group, "Base group for power/group families");
  bound->add_option("--h", cfg.h, "Hidden involution");
  bound->add_option("--c", cfg.c, "Constant c for the direct power tail (default: search 2..16)");
  bound->add_option("--kappa", cfg.kappa, "Slack kappa in |G| > lambda (1 + kappa) sum d");
  bound->add_option("--alpha", cfg.alpha, "Wreath exponent alpha in eps = n^(-alpha n)");
  bound->add_option("--epsilon", cfg.epsilon, "Epsilon for the group family");
  bound->add_option("--k-max", cfg.k_max, "Largest k listed in delta2_by_k");
  bound->add_option("--t", cfg.t, "Number of coset states t");
  bound->add_option("--threshold", cfg.threshold, "TV threshold theta, e.g. 1/3");
  common(bound);

  auto* simulate = app.add_subcommand("simulate", "Exact average distance over conjugates for random frames");
  simulate->add_option("--group", cfg.group, "Group spec")->required();
  simulate->add_option("--h", cfg.h, "Hidden involution (default: swap, reflection or first involution)");
  simulate->add_option("--k", cfg.k, "Registers measured jointly");
  simulate->add_option("--frames", cfg.frames, "Number of random measurements (seeds seed, seed+1, ...)");
  simulate->add_option("--frame-kind", cfg.frame_kind, "basis or fused");
  simulate->add_option("--epsilon", cfg.epsilon, "Epsilon for the delta2 comparison");
  simulate->add_option("--distribution", cfg.distribution, "Write the first measurement's outcome law at h as CSV");
  common(simulate);

  auto* verify = app.add_subcommand("verify", "Run verification suites; exit 1 on any failure");
  verify->add_option("--suite", cfg.suite, "repr, facts, lemmas, tables, transfer, gallagher, trace or all");
  verify->add_option("--group", cfg.group, "Group spec");
  verify->add_option("--h", cfg.h, "Hidden involution");
  verify->add_option("--k", cfg.k, "Registers for the lemma suite");
  auto* verify_t = verify->add_option("--t", cfg.t, "States t (sqrt bound) or largest t (trace suite)");
  verify->add_option("--frames", cfg.frames, "Frame seeds for the lemma suite");
  verify->add_option("--frame-kind", cfg.frame_kind, "basis or fused");
  verify->add_option("--epsilon", cfg.epsilon, "Epsilon for the lemma suite");
  common(verify);

  auto* chartable = app.add_subcommand("chartable", "Export the character table");
  chartable->add_option("--group", cfg.group, "Group spec")->required();
  common(chartable);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.t_given = verify_t->count() > 0;

  try {
    if (cfg.threads >= 0) {
      set_thread_count(static_cast<unsigned>(cfg.threads));
    } else if (const char* env = std::getenv("HSPSIM_THREADS"); env && *env) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (*end != '\0' || v < 0) throw UsageError(std::string("bad HSPSIM_THREADS value '") + env + "'");
      set_thread_count(static_cast<unsigned>(v));
    }
    if (bound->parsed()) return cmd_bound(cfg);
    if (simulate->parsed()) return cmd_simulate(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    return cmd_chartable(cfg);
  } catch (const ResourceCapError& e) {
    std::cerr << "hspsim: resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::length_error& e) {
    std::cerr << "hspsim: resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hspsim: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "hspsim: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "hspsim: error: " << e.what() << "\n";
    return kExitInternal;
  }
}
