#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "coarsemap/cli/commands.hpp"
#include "coarsemap/io/csv.hpp"
#include "coarsemap/io/dot.hpp"
#include "coarsemap/io/spec.hpp"
#include "coarsemap/sim/correlation.hpp"
#include "coarsemap/sim/ising.hpp"
#include "helpers.hpp"

using namespace coarsemap;
using coarsemap::testing::expect_code;
using coarsemap::testing::path_decay;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("coarsemap_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
};

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

void write_text(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read_text(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

DecayMatrix grid_decay(std::size_t w, std::size_t h) {
  const SiteSet sites = SiteSet::grid(w, h);
  return tabulate_decay(sites, [&](std::size_t i, std::size_t j) {
    const auto& a = sites.coords()[i];
    const auto& b = sites.coords()[j];
    return std::pow(2.0, -(std::abs(a[0] - b[0]) + std::abs(a[1] - b[1])));
  });
}

}  // namespace

// ---------------------------------------------------------------- csv

TEST(Csv, RoundTripIsBitExact) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::string> ids = {"a", "b7", "site_3", "x", "0"};
  const auto f = tabulate_decay(SiteSet(ids), [&](std::size_t, std::size_t) { return u(rng) * std::pow(10.0, -20 * u(rng)); });
  std::stringstream s;
  io::write_decay_matrix(s, f);
  EXPECT_EQ(io::read_decay_matrix(s), f);
}

TEST(Csv, FormatUsesSeventeenDigits) {
  EXPECT_EQ(io::format_value(0.1), "0.10000000000000001");
  EXPECT_EQ(io::format_value(0.0), "0");
}

TEST(Csv, MalformedRowNamesLineAndColumn) {
  std::stringstream s("site,a,b,c\na,0,1,2\nb,1,0\nc,2,3,0\n");
  try {
    io::read_decay_matrix(s);
    FAIL() << "expected ParseError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    const std::string what = e.what();
    EXPECT_NE(what.find("line 3"), std::string::npos) << what;
    EXPECT_NE(what.find("column 4"), std::string::npos) << what;
    EXPECT_NE(what.find("row 'b'"), std::string::npos) << what;
  }
}

TEST(Csv, OtherParseErrors) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"", "missing header"},
      {"id,a,b\n", "line 1, column 1"},
      {"site,a,a\n", "line 1, column 3"},
      {"site,a,b\na,0,x\nb,1,0\n", "line 2, column 3"},
      {"site,a,b\nb,0,1\na,1,0\n", "line 2, column 1"},
      {"site,a,b\na,0,1\n", "expected 2 rows"},
      {"site,a,b\na,0,1\nb,1,0\nc,1,1\n", "line 4"},
      {"site,a,b\na,0,1,5\nb,1,0\n", "column 4"},
  };
  for (const auto& [text, fragment] : cases) {
    std::stringstream s(text);
    try {
      io::read_decay_matrix(s);
      ADD_FAILURE() << "no error for: " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << e.what();
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  }
  std::stringstream asym("site,a,b\na,0,1\nb,0.5,0\n");
  expect_code(ErrorCode::AsymmetricInput, [&] { io::read_decay_matrix(asym); });
  std::stringstream asym2("site,a,b\na,0,1\nb,0.5,0\n");
  EXPECT_EQ(io::read_decay_matrix(asym2, true)(1, 0), 1.0);
  std::stringstream blanks("\nsite,a,b\n\na, 0 ,1\r\nb,1,0\n\n");
  EXPECT_EQ(io::read_decay_matrix(blanks)(0, 1), 1.0);
}

// ---------------------------------------------------------------- dot

TEST(Dot, ColoursComponentsAndListsEdges) {
  const SiteSet sites = SiteSet::range(5);
  const std::vector<std::pair<std::size_t, std::size_t>> edges = {{0, 1}, {1, 2}};
  std::ostringstream out;
  io::write_dot(out, Relation::from_edges(sites, edges), "g", 1);
  const std::string dot = out.str();
  EXPECT_NE(dot.find("graph \"g\""), std::string::npos);
  EXPECT_NE(dot.find("\"0\" -- \"1\";"), std::string::npos);
  EXPECT_NE(dot.find("\"1\" -- \"2\";"), std::string::npos);
  EXPECT_EQ(dot.find("\"0\" -- \"2\""), std::string::npos);
  EXPECT_NE(dot.find("\"3\" [fillcolor=\"#d9d9d9\""), std::string::npos);
  EXPECT_NE(dot.find("\"0\" [fillcolor=\"#1f77b4\""), std::string::npos);
}

// ---------------------------------------------------------------- specs

TEST(Spec, BuildersMatchLibrary) {
  const auto ghz = io::parse_state(json::parse(R"({"builder":"ghz","n":5})"));
  EXPECT_EQ(ghz.amplitudes(), sim::ghz_state(SiteSet::range(5)).amplitudes());
  const auto prod = io::parse_state(json::parse(R"({"builder":"product","n":3,"factors":["+",{"theta":1.0,"phi":0.5},"1"]})"));
  const std::vector<sim::LocalState> fs = {sim::LocalState::named("+"), {1.0, 0.5}, sim::LocalState::named("1")};
  EXPECT_EQ(prod.amplitudes(), sim::product_state(SiteSet::range(3), fs).amplitudes());
  const auto ising = io::parse_state(json::parse(R"({"builder":"ising","n":6,"beta_j":0.5})"));
  EXPECT_EQ(ising.amplitudes(), sim::ising_coherent_state(SiteSet::range(6), 0.5).amplitudes());
  const auto grid = io::parse_state(json::parse(R"({"builder":"cluster","grid":[2,3]})"));
  EXPECT_TRUE(grid.sites().has_coords());
  const auto circ = io::parse_circuit(json::parse(
      R"({"n":3,"layers":[[{"sites":[0],"gate":"H"}],[{"sites":[0,1],"gate":{"matrix":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,[-1,0]]]}}]]})"));
  EXPECT_EQ(circ.depth(), 2u);
  const auto bw = io::parse_circuit(json::parse(R"({"n":6,"brickwork":{"depth":3,"gate":"CZ"},"layers":[[{"sites":[2],"gate":"X"}]]})"));
  EXPECT_EQ(bw.depth(), 4u);
  EXPECT_TRUE(io::is_circuit_spec(json::parse(R"({"n":2,"layers":[]})")));
  EXPECT_FALSE(io::is_circuit_spec(json::parse(R"({"builder":"ghz","n":2})")));
}

TEST(Spec, Errors) {
  const std::vector<std::string> spec_errors = {
      R"({"n":4})",
      R"({"builder":"nope","n":4})",
      R"({"builder":"product","n":2,"factors":["+"]})",
      R"({"builder":"product","n":2,"factors":"?"})",
      R"({"builder":"ghz","n":-1})",
      R"({"builder":"bell_pairs","n":4,"pairs":[[0,1,2]]})",
  };
  for (const auto& s : spec_errors) expect_code(ErrorCode::SpecError, [&] { io::parse_state(json::parse(s)); });
  expect_code(ErrorCode::SpecError, [&] {
    io::parse_circuit(json::parse(R"({"n":4,"layers":[[{"sites":[0,1],"gate":"CZ"},{"sites":[1,2],"gate":"CZ"}]]})"));
  });
  expect_code(ErrorCode::SpecError, [&] { io::parse_circuit(json::parse(R"({"n":2,"layers":[[{"sites":[0],"gate":"CZ"}]]})")); });
  expect_code(ErrorCode::SpecError, [&] {
    io::parse_circuit(json::parse(R"({"n":2,"layers":[[{"sites":[0],"gate":{"matrix":[[1,1],[0,1]]}}]]})"));
  });
  expect_code(ErrorCode::SupportOutOfRange, [&] { io::parse_circuit(json::parse(R"({"n":2,"layers":[[{"sites":[5],"gate":"X"}]]})")); });
  expect_code(ErrorCode::CapExceeded, [&] { io::parse_state(json::parse(R"({"builder":"ghz","n":21})")); });
  expect_code(ErrorCode::CapExceeded, [&] { io::parse_state(json::parse(R"({"builder":"ghz","n":8})"), 4); });
}

// ---------------------------------------------------------------- helpers

TEST(CliHelpers, EpsGrid) {
  const auto f = path_decay(6, [](double t) { return std::pow(2.0, -t); });
  EXPECT_EQ(cli::parse_eps_grid("0.1:0.5:3", f, 1e-10), (std::vector<double>{0.5, 0.30000000000000004, 0.1}));
  EXPECT_EQ(cli::parse_eps_grid("0.2:0.2:1", f, 1e-10), (std::vector<double>{0.2}));
  EXPECT_EQ(cli::parse_eps_grid("auto", f, 1e-10), (std::vector<double>{0.5, 0.25, 0.125, 0.0625, 0.03125}));
  EXPECT_EQ(cli::parse_eps_grid("auto", f, 0.1), (std::vector<double>{0.5, 0.25, 0.125}));
  const auto tiny = path_decay(4, [](double) { return 1e-17; });
  EXPECT_EQ(cli::parse_eps_grid("auto", tiny, 1e-10), (std::vector<double>{1.0, 0.1, 0.01, 0.001}));
  const auto big = path_decay(40, [](double t) { return 1.0 / t; });
  EXPECT_EQ(cli::parse_eps_grid("auto", big, 1e-10).size(), 39u);
  std::mt19937_64 rng(1);
  EXPECT_EQ(cli::parse_eps_grid("auto", coarsemap::testing::random_matrix(20, rng), 1e-10).size(), 64u);
  for (const char* bad : {"1:2", "a:b:c", "0.1:0.5:0", ""}) {
    expect_code(ErrorCode::InvalidArgument, [&] { cli::parse_eps_grid(bad, f, 1e-10); });
  }
  expect_code(ErrorCode::NonPositiveEpsilon, [&] { cli::parse_eps_grid("0:1:3", f, 1e-10); });
}

TEST(CliHelpers, WindowsAndDefaults) {
  EXPECT_EQ(cli::parse_window("0.1:0.7").hi, 0.7);
  expect_code(ErrorCode::InvalidArgument, [] { cli::parse_window("0.7:0.1"); });
  expect_code(ErrorCode::InvalidArgument, [] { cli::parse_window("0.2"); });
  EXPECT_EQ(cli::parse_radius_windows("1:4,2:6").size(), 2u);
  expect_code(ErrorCode::InvalidArgument, [] { cli::parse_radius_windows("4:1"); });

  EXPECT_EQ(cli::default_epsilon(path_decay(10, [](double t) { return std::pow(2.0, -t); }), 1e-10), 0.5);
  EXPECT_EQ(cli::default_epsilon(sim::ising_1d_corr(12, 0.5), 1e-10), std::tanh(0.5));
  EXPECT_EQ(cli::default_epsilon(path_decay(5, [](double) { return 0.0; }), 1e-10), 1.0);
  // two blocks that never connect: the smallest threshold
  const auto blocks = tabulate_decay(SiteSet::range(6), [](std::size_t i, std::size_t j) { return (i < 3) == (j < 3) ? 0.4 : 0.0; });
  EXPECT_EQ(cli::default_epsilon(blocks, 1e-10), 0.4);
}

TEST(CliHelpers, ProbesAvoidEveryValue) {
  const auto f = path_decay(8, [](double t) { return std::pow(2.0, -t); });
  auto g_raw = f.values();
  for (auto& v : g_raw) v = v > 0.0 ? v * (1.0 + 1e-12) : 0.0;
  const auto g = build_decay_matrix(g_raw, f.sites(), false);
  const auto probes = cli::probe_epsilons(f, g, 1e-10);
  ASSERT_EQ(probes.size(), 7u);  // 6 gaps between the 7 clusters, plus half the smallest
  for (double p : probes)
    for (double v : f.values()) EXPECT_GT(std::abs(p - v), 1e-6);
}

// ---------------------------------------------------------------- commands

TEST(Cli, ProductStateProfileIsDiagonal) {
  TempDir dir;
  write_text(dir / "prod.json", R"({"builder":"product","n":6,"factors":[{"theta":0.3,"phi":1.1},"+","0",{"theta":2.0},"-i","1"]})");
  const auto sim = run({"simulate", (dir / "prod.json").string(), "--out", dir.str()});
  ASSERT_EQ(sim.code, 0) << sim.err;
  const auto prof = run({"profile", (dir / "matrix.csv").string(), "--out", (dir / "p").string()});
  ASSERT_EQ(prof.code, 0) << prof.err;
  const auto r = prof.report();
  EXPECT_EQ(r["schema"], "coarsemap/1");
  ASSERT_FALSE(r["profiles"].empty());
  for (const auto& p : r["profiles"]) {
    EXPECT_EQ(p["edges"], 0);
    EXPECT_EQ(p["connected_profile"]["sizes"], json(std::vector<int>(6, 1)));
  }
  EXPECT_TRUE(fs::exists(dir / "p/profile.json"));
  EXPECT_TRUE(fs::exists(dir / "p/eps_0.dot"));
  EXPECT_EQ(read_text(dir / "p/growth.csv").substr(0, 22), "epsilon,r,gamma,slope\n");
}

TEST(Cli, IsingProfileHasSlopeOneInterval) {
  TempDir dir;
  io::write_decay_matrix(dir / "ising.csv", sim::ising_1d_corr(64, 0.5));
  const auto prof = run({"profile", (dir / "ising.csv").string(), "--eps-grid", "0.46:0.3:3"});
  ASSERT_EQ(prof.code, 0) << prof.err;
  const auto r = prof.report();
  ASSERT_EQ(r["stable_intervals"].size(), 1u);
  for (const auto& p : r["profiles"]) {
    EXPECT_NEAR(p["growth"]["slope"].get<double>(), 1.0, 0.15);
    EXPECT_EQ(p["k_hat"], 1);
  }
}

TEST(Cli, ProfileReportIgnoresRowOrder) {
  TempDir dir;
  std::mt19937_64 rng(5);
  const auto f = sim::ising_1d_corr(30, 0.5);
  const auto perm = coarsemap::testing::random_permutation(30, rng);
  io::write_decay_matrix(dir / "a.csv", f);
  io::write_decay_matrix(dir / "b.csv", f.permuted(perm));
  auto a = run({"profile", (dir / "a.csv").string(), "--eps-grid", "0.46:0.1:4"}).report();
  auto b = run({"profile", (dir / "b.csv").string(), "--eps-grid", "0.46:0.1:4"}).report();
  EXPECT_EQ(b["sites"], json(f.permuted(perm).sites().ids()));
  b["sites"] = a["sites"];
  EXPECT_EQ(a, b);
}

TEST(Cli, MalformedCsvExitsWithDataError) {
  TempDir dir;
  write_text(dir / "bad.csv", "site,a,b\na,0,1\nb,1\n");
  const auto res = run({"profile", (dir / "bad.csv").string()});
  EXPECT_EQ(res.code, 2);
  EXPECT_NE(res.err.find("ParseError"), std::string::npos);
  EXPECT_NE(res.err.find("line 3"), std::string::npos);
}

TEST(Cli, SimulateExamples) {
  TempDir dir;
  write_text(dir / "ghz.json", R"({"builder":"ghz","n":8})");
  const auto ghz = run({"simulate", (dir / "ghz.json").string()});
  ASSERT_EQ(ghz.code, 0) << ghz.err;
  std::stringstream csv(ghz.out);
  const auto c = io::read_decay_matrix(csv);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (i != j) EXPECT_NEAR(c(i, j), 1.0, 1e-10);

  write_text(dir / "bw.json", R"({"n":12,"brickwork":{"depth":2,"seed":4}})");
  ASSERT_EQ(run({"simulate", (dir / "bw.json").string(), "--out", dir.str()}).code, 0);
  const auto q = io::read_decay_matrix(dir / "matrix.csv");
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j)
      if ((i > j ? i - j : j - i) > 4) EXPECT_EQ(q(i, j), 0.0);
  const auto side = json::parse(read_text(dir / "brackets.json"));
  EXPECT_EQ(side["kind"], "dynamical");

  write_text(dir / "bad.json", R"({"n":4,"layers":[[{"sites":[0,1],"gate":"CZ"},{"sites":[1,2],"gate":"CZ"}]]})");
  const auto bad = run({"simulate", (dir / "bad.json").string()});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("layer not depth-one"), std::string::npos);

  write_text(dir / "big.json", R"({"builder":"ghz","n":22})");
  EXPECT_EQ(run({"simulate", (dir / "big.json").string()}).code, 2);
  write_text(dir / "broken.json", R"({"builder": )");
  const auto broken = run({"simulate", (dir / "broken.json").string()});
  EXPECT_EQ(broken.code, 2);
  EXPECT_NE(broken.err.find("ParseError"), std::string::npos);
}

TEST(Cli, ExactModeWritesBrackets) {
  TempDir dir;
  write_text(dir / "cl.json", R"({"builder":"cluster","n":4})");
  ASSERT_EQ(run({"simulate", (dir / "cl.json").string(), "--mode", "exact", "--restarts", "2", "--out", dir.str()}).code, 0);
  const auto side = json::parse(read_text(dir / "brackets.json"));
  EXPECT_EQ(side["brackets"].size(), 6u);
  for (const auto& b : side["brackets"]) {
    EXPECT_LE(b["lower"].get<double>(), b["value"].get<double>());
    EXPECT_LE(b["value"].get<double>(), b["upper"].get<double>());
  }
}

TEST(Cli, SeedGivesBitIdenticalReruns) {
  TempDir dir;
  write_text(dir / "s.json",
             R"({"builder":"circuit","base":{"builder":"product","n":5,"factors":"+"},"circuit":{"n":5,"brickwork":{"depth":2,"seed":3}}})");
  const auto a = run({"simulate", (dir / "s.json").string(), "--mode", "exact", "--seed", "17", "--restarts", "3"});
  const auto b = run({"simulate", (dir / "s.json").string(), "--mode", "exact", "--seed", "17", "--restarts", "3"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto p1 = run({"perturb", (dir / "s.json").string(), "--seed", "5"});
  const auto p2 = run({"perturb", (dir / "s.json").string(), "--seed", "5"});
  const auto p3 = run({"perturb", (dir / "s.json").string(), "--seed", "6"});
  ASSERT_EQ(p1.code, 0) << p1.err;
  EXPECT_EQ(p1.out, p2.out);
  EXPECT_NE(p1.out, p3.out);
}

TEST(Cli, ExponentOnInversePowerLaw) {
  TempDir dir;
  io::write_decay_matrix(dir / "p.csv", path_decay(128, [](double t) { return 1.0 / t; }));
  const auto res = run({"exponent", (dir / "p.csv").string()});
  ASSERT_EQ(res.code, 0) << res.err;
  EXPECT_NEAR(res.report()["gamma"].get<double>(), 1.0, 1e-6);
  EXPECT_EQ(res.report()["epsilon"], 1.0);
}

TEST(Cli, CorrlenClassifiesIsing) {
  TempDir dir;
  io::write_decay_matrix(dir / "i.csv", sim::ising_1d_corr(64, 0.5));
  const auto res = run({"corrlen", (dir / "i.csv").string(), "--eps-grid", "0.46:0.3:2"});
  ASSERT_EQ(res.code, 0) << res.err;
  const auto r = res.report();
  EXPECT_EQ(r["verdict"], "FINITE");
  EXPECT_NEAR(r["B"].get<double>(), -std::log(std::tanh(0.5)), 0.02);
  EXPECT_EQ(r["per_epsilon"].size(), 2u);
}

TEST(Cli, ComparePathAndGrid) {
  TempDir dir;
  io::write_decay_matrix(dir / "path.csv", path_decay(144, [](double t) { return std::pow(2.0, -t); }));
  io::write_decay_matrix(dir / "grid.csv", grid_decay(12, 12));
  const auto res = run({"compare", (dir / "path.csv").string(), (dir / "grid.csv").string()});
  ASSERT_EQ(res.code, 0) << res.err;
  const auto r = res.report();
  EXPECT_TRUE(r["obstruction"].get<bool>());
  EXPECT_TRUE(r["b_outgrows_a"].get<bool>());
  EXPECT_FALSE(r["a_outgrows_b"].get<bool>());
  EXPECT_FALSE(r.contains("quasi_isometry"));  // different labels
}

TEST(Cli, AsdimSweepSandwich) {
  TempDir dir;
  io::write_decay_matrix(dir / "path.csv", path_decay(64, [](double t) { return std::pow(2.0, -t); }));
  const auto as = run({"asdim", (dir / "path.csv").string(), "--out", dir.str()});
  ASSERT_EQ(as.code, 0) << as.err;
  EXPECT_EQ(as.report()["k_hat"], 1);
  EXPECT_EQ(read_text(dir / "growth.csv").substr(0, 8), "r,gamma\n");

  const auto sw = run({"sweep", (dir / "path.csv").string(), "--eps-grid", "0.5:0.125:3", "--r-windows", "2:6,3:8",
                       "--out", dir.str()});
  ASSERT_EQ(sw.code, 0) << sw.err;
  EXPECT_NEAR(sw.report()["plateau"]["slope_mean"].get<double>(), 1.0, 0.15);
  EXPECT_EQ(read_text(dir / "persistence.csv").substr(0, 30), "epsilon,r_lo,r_hi,slope,stderr");

  io::write_decay_matrix(dir / "g.csv", path_decay(64, [](double t) { return std::pow(2.0, -t) * 0.98; }));
  const auto sd = run({"sandwich", (dir / "path.csv").string(), (dir / "g.csv").string(), "--eps", "0.2"});
  ASSERT_EQ(sd.code, 0) << sd.err;
  EXPECT_EQ(sd.report()["verdict"], "PASS");
  const auto small = run({"sandwich", (dir / "path.csv").string(), (dir / "g.csv").string(), "--eps", "0.001"});
  EXPECT_EQ(small.code, 1);
  EXPECT_NE(small.err.find("EpsilonTooSmall"), std::string::npos);
}

TEST(Cli, PerturbGhzPasses) {
  TempDir dir;
  write_text(dir / "ghz.json", R"({"builder":"ghz","n":8})");
  const auto res = run({"perturb", (dir / "ghz.json").string(), "--region", "0,1", "--seed", "2", "--out", dir.str()});
  ASSERT_EQ(res.code, 0) << res.err;
  const auto r = res.report();
  EXPECT_LE(r["outside_max_change"].get<double>(), 1e-10);
  EXPECT_EQ(r["verdict"], "PASS");
  EXPECT_TRUE(fs::exists(dir / "before.csv"));
  EXPECT_TRUE(fs::exists(dir / "after.csv"));
  EXPECT_EQ(run({"perturb", (dir / "ghz.json").string(), "--region", "0,9"}).code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"profile"}).code, 1);
  EXPECT_EQ(run({"profile", "/nonexistent/matrix.csv"}).code, 1);
  EXPECT_EQ(run({"simulate", "x.json", "--mode", "fast"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  TempDir dir;
  io::write_decay_matrix(dir / "p.csv", path_decay(6, [](double t) { return 1.0 / t; }));
  EXPECT_EQ(run({"profile", (dir / "p.csv").string(), "--zero-tol", "0"}).code, 1);
  EXPECT_EQ(run({"corrlen", (dir / "p.csv").string(), "--window", "0.5:0.1"}).code, 1);
  // too few pairs is a data error
  EXPECT_EQ(run({"exponent", (dir / "p.csv").string()}).code, 2);
}
