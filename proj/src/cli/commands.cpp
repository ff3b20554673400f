#include "coarsemap/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <random>

#include "coarsemap/analysis/exponent.hpp"
#include "coarsemap/analysis/length.hpp"
#include "coarsemap/analysis/sandwich.hpp"
#include "coarsemap/compare.hpp"
#include "coarsemap/error.hpp"
#include "coarsemap/io/csv.hpp"
#include "coarsemap/io/dot.hpp"
#include "coarsemap/io/spec.hpp"
#include "coarsemap/path_metric.hpp"
#include "coarsemap/profile.hpp"
#include "coarsemap/relation.hpp"
#include "coarsemap/sim/correlation.hpp"
#include "coarsemap/sim/dynamics.hpp"
#include "coarsemap/sim/linalg.hpp"
#include "coarsemap/sim/perturb.hpp"

namespace coarsemap::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kSchema = "coarsemap/1";

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

double parse_real(std::string_view s, std::string_view what) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    usage("bad number '" + std::string(s) + "' in " + std::string(what));
  }
  return v;
}

long long parse_int(std::string_view s, std::string_view what) {
  long long v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    usage("bad integer '" + std::string(s) + "' in " + std::string(what));
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto k = s.find(sep, start);
    out.push_back(s.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start));
    if (k == std::string_view::npos) return out;
    start = k + 1;
  }
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

// ------------------------------------------------------------------ config

struct RunConfig {
  double zero_tol = 1e-10;
  std::uint64_t seed = 0;
  std::string window = "0.2:0.6";
  std::size_t max_words = 4;
  Distance radius = 0;
  std::string mode = "pauli";
  std::string out_dir;
  std::size_t site_cap = sim::kDefaultSiteCap;
  std::size_t subset_cap = 3;
  std::size_t restarts = 8;

  void validate() const {
    if (!(zero_tol > 0.0)) usage("--zero-tol must be positive");
    if (max_words < 1) usage("--max-words must be at least 1");
    if (radius < 0) usage("--radius must be non-negative");
    if (mode != "pauli" && mode != "exact") usage("--mode must be pauli or exact");
  }
  sim::Mode sim_mode() const { return mode == "exact" ? sim::Mode::Exact : sim::Mode::Pauli; }
  sim::OptimizerOptions optimizer() const {
    sim::OptimizerOptions o;
    o.seed = seed;
    o.restarts = restarts;
    o.subset_cap = subset_cap;
    return o;
  }
  std::optional<fs::path> out() const {
    if (out_dir.empty()) return std::nullopt;
    fs::create_directories(out_dir);
    return fs::path(out_dir);
  }
};

json header(const char* command) { return json{{"schema", kSchema}, {"command", command}}; }

void emit(std::ostream& out, const RunConfig& cfg, const json& report, const char* file) {
  if (const auto dir = cfg.out()) {
    std::ofstream f(*dir / file);
    if (!f) usage("cannot write " + (*dir / file).string());
    f << report.dump(2) << '\n';
  }
  out << report.dump(2) << '\n';
}

json ids_of(const SiteSet& sites, const std::vector<std::size_t>& idx) {
  json a = json::array();
  for (auto i : idx) a.push_back(sites.id(i));
  return a;
}

// Component members in label order, so reports do not depend on row order.
json to_json(const ConnectedProfile& p, const SiteSet& sites) {
  json comps = json::array();
  for (const auto& c : p.components) {
    auto members = c.sites;
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) { return sites.rank(a) < sites.rank(b); });
    comps.push_back({{"size", members.size()}, {"dust", c.dust}, {"sites", ids_of(sites, members)}});
  }
  return {{"components", comps}, {"sizes", p.sizes()}, {"dust_cutoff", p.dust_cutoff}, {"dust_sites", p.dust_sites}};
}

json to_json(const GrowthFit& fit) {
  return {{"slope", fit.slope}, {"stderr", fit.std_error}, {"r_lo", fit.r_lo}, {"r_hi", fit.r_hi}, {"points", fit.points}};
}

json to_json(const analysis::LengthClassification& c, double eps) {
  json j{{"epsilon", eps},
         {"verdict", analysis::to_string(c.verdict)},
         {"R", c.R},
         {"fit_r2", c.fit_r2},
         {"loglog_r2", c.loglog_r2},
         {"curvature", c.curvature},
         {"window", {c.window_lo, c.window_hi}},
         {"n_pairs", c.n_pairs}};
  if (c.verdict == analysis::LengthVerdict::Finite) {
    j["A"] = c.A;
    j["B"] = c.B;
  }
  return j;
}

json to_json(const analysis::SandwichVerdict& v, double eps, analysis::TailKind kind) {
  return {{"kind", analysis::to_string(kind)}, {"epsilon", eps},      {"delta", v.delta},  {"c", v.c},
          {"eps_up", v.eps_up},                {"eps_down", v.eps_down}, {"upper", v.upper}, {"lower", v.lower},
          {"verdict", v.holds() ? "PASS" : "FAIL"}};
}

PathMetric metric_at(const DecayMatrix& f, double eps) { return path_metric(epsilon_graph(f, eps)); }

std::vector<std::size_t> parse_region(std::string_view spec, std::size_t n) {
  std::vector<std::size_t> region;
  for (auto part : split(spec, ',')) {
    const long long k = parse_int(part, "--region");
    if (k < 0 || static_cast<std::size_t>(k) >= n) {
      throw Error(ErrorCode::SupportOutOfRange, "region site " + std::string(part) + " outside 0.." + std::to_string(n - 1));
    }
    region.push_back(static_cast<std::size_t>(k));
  }
  return region;
}

analysis::TailKind parse_kind(const std::string& s) {
  if (s == "correlation") return analysis::TailKind::Correlation;
  if (s == "dynamical") return analysis::TailKind::Dynamical;
  usage("--kind must be correlation or dynamical");
}

// ------------------------------------------------------------------ commands

void cmd_profile(const std::string& matrix, const std::string& grid_spec, std::optional<std::size_t> dust,
                 bool symmetrize, const RunConfig& cfg, std::ostream& out) {
  const DecayMatrix f = io::read_decay_matrix(fs::path(matrix), symmetrize);
  const auto grid = parse_eps_grid(grid_spec, f, cfg.zero_tol);
  AsdimOptions opts;
  opts.window = parse_window(cfg.window);
  const auto dir = cfg.out();

  json report = header("profile");
  report["sites"] = f.sites().ids();
  report["eps_grid"] = grid;
  json profiles = json::array();
  std::ofstream growth_csv;
  if (dir) {
    growth_csv.open(*dir / "growth.csv");
    growth_csv << "epsilon,r,gamma,slope\n";
  }
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double eps = grid[k];
    const auto p = coarse_profile(f, eps, opts, dust);
    json j{{"epsilon", eps}, {"edges", p.edges}, {"diameter", p.diameter ? json(*p.diameter) : json(nullptr)}};
    j["connected_profile"] = to_json(p.connected, f.sites());
    if (p.asdim) {
      j["growth"] = to_json(p.asdim->fit);
      j["k_hat"] = p.asdim->k_hat ? json(*p.asdim->k_hat) : json(nullptr);
    } else {
      j["growth"] = nullptr;
      j["k_hat"] = nullptr;
    }
    profiles.push_back(std::move(j));
    if (dir) {
      const Relation e = epsilon_graph(f, eps);
      std::ofstream dot(*dir / ("eps_" + std::to_string(k) + ".dot"));
      io::write_dot(dot, e, "eps=" + io::format_value(eps), dust);
      const PathMetric d = path_metric(e);
      const GrowthCurve g = growth_curve(d, default_r_max(d));
      const std::string slope = p.asdim ? io::format_value(p.asdim->fit.slope) : "nan";
      for (std::size_t r = 0; r < g.gamma.size(); ++r) {
        growth_csv << io::format_value(eps) << ',' << r << ',' << g.gamma[r] << ',' << slope << '\n';
      }
    }
  }
  report["profiles"] = std::move(profiles);
  json intervals = json::array();
  for (const auto& s : stable_range(f, grid)) {
    intervals.push_back({{"eps_hi", s.eps_hi}, {"eps_lo", s.eps_lo}, {"first", s.first}, {"last", s.last}});
  }
  report["stable_intervals"] = std::move(intervals);
  emit(out, cfg, report, "profile.json");
}

void cmd_simulate(const std::string& spec_path, const RunConfig& cfg, std::ostream& out) {
  const json doc = io::load_json(spec_path);
  sim::MatrixResult result;
  json report = header("simulate");
  if (io::is_circuit_spec(doc)) {
    if (cfg.radius != 0) usage("--radius applies to state specs only");
    const auto circ = io::parse_circuit(doc, cfg.site_cap);
    result = sim::commutator_matrix(circ, cfg.sim_mode(), cfg.optimizer());
    report["kind"] = "dynamical";
    report["depth"] = circ.depth();
  } else {
    const auto psi = io::parse_state(doc, cfg.site_cap);
    sim::CorrMatrixOptions opts;
    opts.mode = cfg.sim_mode();
    opts.radius = cfg.radius;
    opts.optimizer = cfg.optimizer();
    if (cfg.radius > 0 && !psi.sites().has_coords()) {
      std::vector<std::pair<std::size_t, std::size_t>> chain;
      for (std::size_t i = 0; i + 1 < psi.size(); ++i) chain.emplace_back(i, i + 1);
      opts.metric = path_metric(Relation::from_edges(psi.sites(), chain));
    }
    result = sim::corr_matrix(psi, opts);
    report["kind"] = "correlation";
    report["radius"] = cfg.radius;
  }
  report["mode"] = cfg.mode;
  report["seed"] = cfg.seed;
  report["sites"] = result.matrix.sites().ids();
  json pairs = json::array();
  bool all_converged = true;
  for (const auto& p : result.brackets) {
    all_converged = all_converged && p.estimate.converged;
    pairs.push_back({{"x", result.matrix.sites().id(p.x)},
                     {"y", result.matrix.sites().id(p.y)},
                     {"value", p.estimate.value},
                     {"lower", p.estimate.lower},
                     {"upper", p.estimate.upper},
                     {"restarts", p.estimate.restarts_used},
                     {"converged", p.estimate.converged}});
  }
  report["brackets"] = std::move(pairs);
  report["all_converged"] = all_converged;
  if (const auto dir = cfg.out()) {
    io::write_decay_matrix(*dir / "matrix.csv", result.matrix);
    std::ofstream side(*dir / "brackets.json");
    side << report.dump(2) << '\n';
    json summary = report;
    summary.erase("brackets");
    summary["matrix"] = (*dir / "matrix.csv").string();
    out << summary.dump(2) << '\n';
  } else {
    io::write_decay_matrix(out, result.matrix);
  }
}

void cmd_asdim(const std::string& matrix, std::optional<double> eps_opt, std::optional<Distance> r_max_opt,
               const RunConfig& cfg, std::ostream& out) {
  const DecayMatrix f = io::read_decay_matrix(fs::path(matrix));
  const double eps = eps_opt.value_or(default_epsilon(f, cfg.zero_tol));
  const PathMetric d = metric_at(f, eps);
  const GrowthCurve g = growth_curve(d, r_max_opt.value_or(default_r_max(d)));
  AsdimOptions opts;
  opts.window = parse_window(cfg.window);
  const auto est = asdim_bound(g, opts);
  json report = header("asdim");
  report["epsilon"] = eps;
  report["r_max"] = g.r_max();
  report["growth"] = g.gamma;
  report["fit"] = to_json(est.fit);
  report["k_hat"] = est.k_hat ? json(*est.k_hat) : json(nullptr);
  if (const auto dir = cfg.out()) {
    std::ofstream csv(*dir / "growth.csv");
    csv << "r,gamma\n";
    for (std::size_t r = 0; r < g.gamma.size(); ++r) csv << r << ',' << g.gamma[r] << '\n';
  }
  emit(out, cfg, report, "asdim.json");
}

void cmd_corrlen(const std::string& matrix, std::optional<double> eps_opt, const std::string& grid_spec,
                 const RunConfig& cfg, std::ostream& out) {
  const DecayMatrix f = io::read_decay_matrix(fs::path(matrix));
  analysis::LengthConfig lc;
  lc.window = parse_window(cfg.window);
  lc.zero_tol = cfg.zero_tol;
  const double eps = eps_opt.value_or(default_epsilon(f, cfg.zero_tol));
  json report = header("corrlen");
  report.update(to_json(analysis::classify_length(f, metric_at(f, eps), lc), eps));
  if (!grid_spec.empty()) {
    json across = json::array();
    for (double e : parse_eps_grid(grid_spec, f, cfg.zero_tol)) {
      try {
        across.push_back(to_json(analysis::classify_length(f, metric_at(f, e), lc), e));
      } catch (const Error& err) {
        if (err.code() != ErrorCode::InsufficientPairs) throw;
        across.push_back({{"epsilon", e}, {"error", err.what()}});
      }
    }
    report["per_epsilon"] = std::move(across);
  }
  emit(out, cfg, report, "corrlen.json");
}

void cmd_exponent(const std::string& matrix, std::optional<double> eps_opt, const RunConfig& cfg, std::ostream& out) {
  const DecayMatrix f = io::read_decay_matrix(fs::path(matrix));
  const double eps = eps_opt.value_or(default_epsilon(f, cfg.zero_tol));
  const auto fit = analysis::fit_exponent(f, metric_at(f, eps), parse_window(cfg.window), cfg.zero_tol);
  json report = header("exponent");
  report.update({{"epsilon", eps},
                 {"gamma", fit.gamma},
                 {"stderr", fit.std_error},
                 {"shift", fit.shift},
                 {"shift_at_bound", fit.shift_at_bound},
                 {"r2", fit.r2},
                 {"window", {fit.window_lo, fit.window_hi}},
                 {"n_pairs", fit.n_pairs}});
  emit(out, cfg, report, "exponent.json");
}

void cmd_compare(const std::string& a_path, const std::string& b_path, std::optional<double> eps_a,
                 std::optional<double> eps_b, Distance r0, const RunConfig& cfg, std::ostream& out) {
  const DecayMatrix a = io::read_decay_matrix(fs::path(a_path));
  const DecayMatrix b = io::read_decay_matrix(fs::path(b_path));
  const double ea = eps_a.value_or(default_epsilon(a, cfg.zero_tol));
  const double eb = eps_b.value_or(default_epsilon(b, cfg.zero_tol));
  const PathMetric da = metric_at(a, ea), db = metric_at(b, eb);
  const GrowthCurve ga = growth_curve(da, default_r_max(da)), gb = growth_curve(db, default_r_max(db));
  AsdimOptions opts;
  opts.window = parse_window(cfg.window);
  const auto fa = asdim_bound(ga, opts), fb = asdim_bound(gb, opts);
  json report = header("compare");
  report["a"] = {{"epsilon", ea}, {"fit", to_json(fa.fit)}, {"k_hat", fa.k_hat ? json(*fa.k_hat) : json(nullptr)}};
  report["b"] = {{"epsilon", eb}, {"fit", to_json(fb.fit)}, {"k_hat", fb.k_hat ? json(*fb.k_hat) : json(nullptr)}};
  const bool b_outgrows = growth_obstruction(ga, gb, opts);
  const bool a_outgrows = growth_obstruction(gb, ga, opts);
  report["b_outgrows_a"] = b_outgrows;
  report["a_outgrows_b"] = a_outgrows;
  report["obstruction"] = a_outgrows || b_outgrows;
  if (a.sites() == b.sites()) {
    json dom = json::array();
    for (const auto& s : monotone_domination(da, db)) dom.push_back({s.t, reachable(s.rho) ? json(s.rho) : json(nullptr)});
    report["domination"] = std::move(dom);
    try {
      const auto qi = quasi_isometry_fit(da, db, r0);
      report["quasi_isometry"] = {{"L", qi.L},
                                  {"C", qi.C},
                                  {"violation_fraction", qi.violation_fraction},
                                  {"direction", to_string(qi.direction)},
                                  {"pairs_checked", qi.pairs_checked}};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoPairsBeyondR0) throw;
      report["quasi_isometry"] = nullptr;
    }
  }
  emit(out, cfg, report, "compare.json");
}

void cmd_sweep(const std::string& matrix, const std::string& grid_spec, const std::string& windows_spec,
               const RunConfig& cfg, std::ostream& out) {
  const DecayMatrix f = io::read_decay_matrix(fs::path(matrix));
  const auto grid = analysis::persistence_sweep(f, parse_eps_grid(grid_spec, f, cfg.zero_tol),
                                                parse_radius_windows(windows_spec));
  json report = header("sweep");
  report["eps_grid"] = grid.eps_values;
  json windows = json::array();
  for (const auto& [lo, hi] : grid.r_windows) windows.push_back({lo, hi});
  report["r_windows"] = std::move(windows);
  json cells = json::array();
  for (const auto& c : grid.cells) {
    cells.push_back({{"epsilon", grid.eps_values[c.eps_index]},
                     {"r_lo", grid.r_windows[c.window_index].first},
                     {"r_hi", grid.r_windows[c.window_index].second},
                     {"slope", number_or_null(c.slope)},
                     {"stderr", number_or_null(c.std_error)}});
  }
  report["cells"] = std::move(cells);
  if (grid.plateau) {
    json pc = json::array();
    for (const auto& [e, w] : grid.plateau->cells) pc.push_back({e, w});
    report["plateau"] = {{"cells", pc},
                         {"slope_min", grid.plateau->slope_min},
                         {"slope_max", grid.plateau->slope_max},
                         {"slope_mean", grid.plateau->slope_mean}};
  } else {
    report["plateau"] = nullptr;
  }
  if (const auto dir = cfg.out()) {
    std::ofstream csv(*dir / "persistence.csv");
    csv << "epsilon,r_lo,r_hi,slope,stderr\n";
    for (const auto& c : grid.cells) {
      csv << io::format_value(grid.eps_values[c.eps_index]) << ',' << grid.r_windows[c.window_index].first << ','
          << grid.r_windows[c.window_index].second << ',' << io::format_value(c.slope) << ','
          << io::format_value(c.std_error) << '\n';
    }
  }
  emit(out, cfg, report, "sweep.json");
}

void cmd_sandwich(const std::string& f_path, const std::string& g_path, double eps, const std::string& kind_name,
                  std::optional<double> delta, const RunConfig& cfg, std::ostream& out) {
  const DecayMatrix f = io::read_decay_matrix(fs::path(f_path));
  const DecayMatrix g = io::read_decay_matrix(fs::path(g_path));
  const auto kind = parse_kind(kind_name);
  const auto v = analysis::sandwich_check(f, g, eps, kind, cfg.max_words, delta);
  json report = header("sandwich");
  report.update(to_json(v, eps, kind));
  report["sup_distance"] = sup_distance(f, g);
  report["max_words"] = cfg.max_words;
  emit(out, cfg, report, "sandwich.json");
}

void cmd_perturb(const std::string& spec_path, const std::string& region_spec, const std::string& unitary,
                 std::optional<double> eps_opt, const RunConfig& cfg, std::ostream& out) {
  const json doc = io::load_json(spec_path);
  const bool dynamical = io::is_circuit_spec(doc);
  const SiteSet sites = io::parse_sites(dynamical ? doc : (doc.contains("builder") && doc["builder"] == "circuit" ? doc.at("base") : doc));
  const auto region = parse_region(region_spec, sites.size());
  const Eigen::Index dim = Eigen::Index(1) << region.size();
  sim::CMatrix u;
  if (unitary == "random") {
    const std::uint64_t tag = 0x70657274;  // fixed stream tag for the perturbation
    auto rng = sim::derived_rng(cfg.seed, std::span(&tag, 1));
    u = sim::haar_unitary(dim, rng);
  } else {
    std::vector<std::size_t> local(region.size());
    for (std::size_t q = 0; q < local.size(); ++q) local[q] = q;
    u = sim::named_gate(unitary, local).matrix;
  }

  DecayMatrix before, after;
  if (dynamical) {
    const auto circ = io::parse_circuit(doc, cfg.site_cap);
    before = sim::commutator_matrix(circ, cfg.sim_mode(), cfg.optimizer()).matrix;
    after = sim::commutator_matrix(sim::apply_localized_perturbation(circ, region, u), cfg.sim_mode(), cfg.optimizer()).matrix;
  } else {
    const auto psi = io::parse_state(doc, cfg.site_cap);
    sim::CorrMatrixOptions opts;
    opts.mode = cfg.sim_mode();
    opts.optimizer = cfg.optimizer();
    before = sim::corr_matrix(psi, opts).matrix;
    after = sim::corr_matrix(sim::apply_localized_perturbation(psi, region, u), opts).matrix;
  }

  const std::size_t n = before.size();
  auto in_region = [&](std::size_t s) { return std::find(region.begin(), region.end(), s) != region.end(); };
  double outside = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!in_region(i) && !in_region(j)) outside = std::max(outside, std::abs(before(i, j) - after(i, j)));

  const auto kind = dynamical ? analysis::TailKind::Dynamical : analysis::TailKind::Correlation;
  const double sup = sup_distance(before, after);
  double eps = 0.0;
  if (eps_opt) {
    eps = *eps_opt;
  } else {
    // finest threshold of the unperturbed matrix that the sandwich can test
    const Filtration filt(before);
    for (double t : filt.thresholds())
      if (t > sup && t > cfg.zero_tol) eps = t;
    if (eps == 0.0) throw Error(ErrorCode::EpsilonTooSmall, "no threshold of the unperturbed matrix exceeds sup|f - g|");
  }
  const auto v = analysis::sandwich_check(before, after, eps, kind, cfg.max_words);

  bool profiles_agree = true;
  json probes = json::array();
  for (double e : probe_epsilons(before, after, cfg.zero_tol)) {
    const bool same = same_outside_region(connected_profile(epsilon_graph(before, e)),
                                          connected_profile(epsilon_graph(after, e)), region);
    profiles_agree = profiles_agree && same;
    probes.push_back({{"epsilon", e}, {"same", same}});
  }

  const bool outside_equal = outside <= 1e-10;
  json report = header("perturb");
  report["kind"] = analysis::to_string(kind);
  report["region"] = ids_of(sites, region);
  report["unitary"] = unitary;
  report["seed"] = cfg.seed;
  report["outside_max_change"] = outside;
  report["outside_equal"] = outside_equal;
  report["sandwich"] = to_json(v, eps, kind);
  report["profiles_agree"] = profiles_agree;
  report["profile_probes"] = std::move(probes);
  // circuits change Q outside the region through the light cone; only the sandwich is asserted there
  const bool pass = dynamical ? v.holds() : (outside_equal && v.holds() && profiles_agree);
  report["verdict"] = pass ? "PASS" : "FAIL";
  if (const auto dir = cfg.out()) {
    io::write_decay_matrix(*dir / "before.csv", before);
    io::write_decay_matrix(*dir / "after.csv", after);
  }
  emit(out, cfg, report, "perturb.json");
}

void add_common(CLI::App* sub, RunConfig& cfg, bool window, bool zero_tol) {
  sub->add_option("--out", cfg.out_dir, "output directory");
  if (window) sub->add_option("--window", cfg.window, "fractional window lo:hi")->capture_default_str();
  if (zero_tol) sub->add_option("--zero-tol", cfg.zero_tol, "values at or below count as zero")->capture_default_str();
}

void add_sim(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--mode", cfg.mode, "pauli | exact")->capture_default_str();
  sub->add_option("--seed", cfg.seed, "seed for optimizer restarts and random unitaries")->capture_default_str();
  sub->add_option("--site-cap", cfg.site_cap, "largest number of qubits")->capture_default_str();
  sub->add_option("--subset-cap", cfg.subset_cap, "largest observable support")->capture_default_str();
  sub->add_option("--restarts", cfg.restarts, "optimizer restarts (exact mode)")->capture_default_str();
}

}  // namespace

// ------------------------------------------------------------------ helpers

std::vector<double> parse_eps_grid(std::string_view spec, const DecayMatrix& f, double zero_tol) {
  std::vector<double> grid;
  if (spec == "auto") {
    const Filtration filt(f);
    std::vector<double> above;
    for (double t : filt.thresholds())
      if (t > zero_tol) above.push_back(t);
    constexpr std::size_t kMax = 64;
    if (above.size() > kMax) {
      for (std::size_t k = 0; k < kMax; ++k) grid.push_back(above[k * (above.size() - 1) / (kMax - 1)]);
    } else {
      grid = above;
    }
    if (grid.empty()) grid = {1.0, 0.1, 0.01, 0.001};
  } else {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) usage("--eps-grid must be a:b:steps or auto");
    const double a = parse_real(parts[0], "--eps-grid"), b = parse_real(parts[1], "--eps-grid");
    const long long steps = parse_int(parts[2], "--eps-grid");
    if (steps < 1) usage("--eps-grid steps must be at least 1");
    for (long long k = 0; k < steps; ++k) grid.push_back(steps == 1 ? a : a + (b - a) * static_cast<double>(k) / static_cast<double>(steps - 1));
  }
  for (double e : grid)
    if (!(e > 0.0)) throw Error(ErrorCode::NonPositiveEpsilon, "epsilon grid entries must be positive");
  std::sort(grid.begin(), grid.end(), std::greater<>());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

Window parse_window(std::string_view spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 2) usage("--window must be lo:hi");
  Window w{parse_real(parts[0], "--window"), parse_real(parts[1], "--window")};
  if (!(w.lo > 0.0 && w.lo < w.hi && w.hi < 1.0)) usage("--window must satisfy 0 < lo < hi < 1");
  return w;
}

std::vector<analysis::RadiusWindow> parse_radius_windows(std::string_view spec) {
  std::vector<analysis::RadiusWindow> out;
  for (auto part : split(spec, ',')) {
    const auto ends = split(part, ':');
    if (ends.size() != 2) usage("radius windows must look like 1:4,2:6");
    const long long lo = parse_int(ends[0], "--r-windows"), hi = parse_int(ends[1], "--r-windows");
    if (lo < 0 || hi < lo || hi > std::numeric_limits<Distance>::max()) usage("radius windows need 0 <= lo <= hi");
    out.emplace_back(static_cast<Distance>(lo), static_cast<Distance>(hi));
  }
  return out;
}

double default_epsilon(const DecayMatrix& f, double zero_tol) {
  const Filtration filt(f);
  std::vector<double> above;
  for (double t : filt.thresholds())
    if (t > zero_tol) above.push_back(t);
  if (above.empty()) return 1.0;
  auto connected = [&](double eps) { return connected_profile(epsilon_graph(f, eps)).components.size() == 1; };
  if (!connected(above.back())) return above.back();
  // connectivity is monotone along the decreasing thresholds
  std::size_t lo = 0, hi = above.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (connected(above[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return above[lo];
}

std::vector<double> probe_epsilons(const DecayMatrix& f, const DecayMatrix& g, double zero_tol) {
  std::vector<double> values;
  for (const auto* m : {&f, &g}) {
    const Filtration filt(*m);
    for (double t : filt.thresholds())
      if (t > zero_tol) values.push_back(t);
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  // clusters of nearly equal values as [hi, lo] ranges
  std::vector<std::pair<double, double>> clusters;
  for (double v : values) {
    if (!clusters.empty() && clusters.back().second - v <= 1e-9 * clusters.back().second) {
      clusters.back().second = v;
    } else {
      clusters.emplace_back(v, v);
    }
  }
  std::vector<double> probes;
  for (std::size_t k = 0; k + 1 < clusters.size(); ++k) probes.push_back(std::sqrt(clusters[k].second * clusters[k + 1].first));
  if (!clusters.empty() && clusters.back().second / 2.0 > zero_tol) probes.push_back(clusters.back().second / 2.0);
  constexpr std::size_t kMax = 64;
  if (probes.size() > kMax) {
    std::vector<double> thin;
    for (std::size_t k = 0; k < kMax; ++k) thin.push_back(probes[k * (probes.size() - 1) / (kMax - 1)]);
    probes = std::move(thin);
  }
  return probes;
}

// ------------------------------------------------------------------ entry

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coarse-geometric analysis of decay matrices and spin-system tails", "coarsemap"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::string matrix, matrix_b, spec, grid_spec = "auto", windows_spec = "1:4,2:6,3:8,4:10", kind = "correlation";
  std::string region = "0,1", unitary = "random";
  std::optional<double> eps, eps_b, delta;
  std::optional<Distance> r_max;
  std::optional<std::size_t> dust;
  Distance r0 = 1;
  bool symmetrize = false;

  auto* profile = app.add_subcommand("profile", "coarse profiles of a matrix over an epsilon grid");
  profile->add_option("matrix", matrix, "decay matrix CSV")->required();
  profile->add_option("--eps-grid", grid_spec, "a:b:steps | auto")->capture_default_str();
  profile->add_option("--dust-cutoff", dust, "components at most this large count as dust");
  profile->add_flag("--symmetrize", symmetrize, "take max(f_ij, f_ji) instead of requiring symmetry");
  add_common(profile, cfg, true, true);

  auto* simulate = app.add_subcommand("simulate", "correlation or commutator matrix of a state or circuit spec");
  simulate->add_option("spec", spec, "state or circuit JSON")->required();
  simulate->add_option("--radius", cfg.radius, "ball radius for correlations between regions")->capture_default_str();
  add_sim(simulate, cfg);
  add_common(simulate, cfg, false, false);

  auto* asdim = app.add_subcommand("asdim", "growth curve and asymptotic-dimension bound of an eps-graph");
  asdim->add_option("matrix", matrix, "decay matrix CSV")->required();
  asdim->add_option("--eps", eps, "threshold (default: largest connected)");
  asdim->add_option("--r-max", r_max, "largest radius of the growth curve");
  add_common(asdim, cfg, true, true);

  auto* corrlen = app.add_subcommand("corrlen", "length 0 / finite / infinite classification");
  corrlen->add_option("matrix", matrix, "decay matrix CSV")->required();
  corrlen->add_option("--eps", eps, "threshold of the metric (default: largest connected)");
  auto* corrlen_grid = corrlen->add_option("--eps-grid", grid_spec, "also classify at every grid epsilon");
  add_common(corrlen, cfg, true, true);

  auto* exponent = app.add_subcommand("exponent", "coarse critical exponent fit");
  exponent->add_option("matrix", matrix, "decay matrix CSV")->required();
  exponent->add_option("--eps", eps, "threshold of the metric (default: largest connected)");
  add_common(exponent, cfg, true, true);

  auto* compare = app.add_subcommand("compare", "growth obstruction and quasi-isometry between two matrices");
  compare->add_option("a", matrix, "first decay matrix CSV")->required();
  compare->add_option("b", matrix_b, "second decay matrix CSV")->required();
  compare->add_option("--eps-a", eps, "threshold for the first matrix");
  compare->add_option("--eps-b", eps_b, "threshold for the second matrix");
  compare->add_option("--r0", r0, "smallest distance used to fit L")->capture_default_str();
  add_common(compare, cfg, true, true);

  auto* sweep = app.add_subcommand("sweep", "persistence of growth slopes over epsilon and radius windows");
  sweep->add_option("matrix", matrix, "decay matrix CSV")->required();
  sweep->add_option("--eps-grid", grid_spec, "a:b:steps | auto")->capture_default_str();
  sweep->add_option("--r-windows", windows_spec, "radius windows lo:hi,...")->capture_default_str();
  add_common(sweep, cfg, false, true);

  auto* sandwich = app.add_subcommand("sandwich", "stability sandwich between two matrices");
  sandwich->add_option("f", matrix, "first decay matrix CSV")->required();
  sandwich->add_option("g", matrix_b, "second decay matrix CSV")->required();
  sandwich->add_option("--eps", eps, "threshold")->required();
  sandwich->add_option("--kind", kind, "correlation | dynamical")->capture_default_str();
  sandwich->add_option("--delta", delta, "channel distance (default: sup|f - g| / c)");
  sandwich->add_option("--max-words", cfg.max_words, "word length for generated inclusions")->capture_default_str();
  add_common(sandwich, cfg, false, false);

  auto* perturb = app.add_subcommand("perturb", "localized unitary perturbation of a state or circuit");
  perturb->add_option("spec", spec, "state or circuit JSON")->required();
  perturb->add_option("--region", region, "site indices, comma separated")->capture_default_str();
  perturb->add_option("--unitary", unitary, "random | gate name")->capture_default_str();
  perturb->add_option("--eps", eps, "sandwich threshold (default: finest testable)");
  perturb->add_option("--max-words", cfg.max_words, "word length for generated inclusions")->capture_default_str();
  add_sim(perturb, cfg);
  add_common(perturb, cfg, false, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return static_cast<int>(ErrorClass::Usage);
  }

  try {
    cfg.validate();
    if (*profile) cmd_profile(matrix, grid_spec, dust, symmetrize, cfg, out);
    else if (*simulate) cmd_simulate(spec, cfg, out);
    else if (*asdim) cmd_asdim(matrix, eps, r_max, cfg, out);
    else if (*corrlen) cmd_corrlen(matrix, eps, corrlen_grid->count() ? grid_spec : std::string(), cfg, out);
    else if (*exponent) cmd_exponent(matrix, eps, cfg, out);
    else if (*compare) cmd_compare(matrix, matrix_b, eps, eps_b, r0, cfg, out);
    else if (*sweep) cmd_sweep(matrix, grid_spec, windows_spec, cfg, out);
    else if (*sandwich) cmd_sandwich(matrix, matrix_b, *eps, kind, delta, cfg, out);
    else if (*perturb) cmd_perturb(spec, region, unitary, eps, cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.error_class());
  } catch (const nlohmann::json::exception& e) {
    err << "error: SpecError: " << e.what() << '\n';
    return static_cast<int>(ErrorClass::Data);
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ErrorClass::Usage);
  }
  return 0;
}

}  // namespace coarsemap::cli
