#include "coarsemap/io/spec.hpp"

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "coarsemap/error.hpp"
#include "coarsemap/path_metric.hpp"
#include "coarsemap/sim/linalg.hpp"

namespace coarsemap::io {
namespace {

using nlohmann::json;

[[noreturn]] void spec_error(const std::string& what) { throw Error(ErrorCode::SpecError, what); }

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) spec_error(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::size_t as_index(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) spec_error(std::string(what) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

double as_real(const json& v, const char* what) {
  if (!v.is_number()) spec_error(std::string(what) + " must be a number");
  return v.get<double>();
}

std::vector<std::size_t> index_list(const json& v, std::size_t n, const char* what) {
  if (!v.is_array()) spec_error(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& x : v) {
    const std::size_t s = as_index(x, what);
    if (s >= n) throw Error(ErrorCode::SupportOutOfRange, std::string(what) + " index " + std::to_string(s) + " >= " + std::to_string(n));
    out.push_back(s);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> pair_list(const json& v, std::size_t n, const char* what) {
  if (!v.is_array()) spec_error(std::string(what) + " must be an array of pairs");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : v) {
    const auto ij = index_list(p, n, what);
    if (ij.size() != 2) spec_error(std::string(what) + " entries must have two sites");
    out.emplace_back(ij[0], ij[1]);
  }
  return out;
}

sim::CMatrix parse_matrix(const json& m) {
  if (!m.is_array() || m.empty()) spec_error("gate matrix must be a non-empty array of rows");
  const auto dim = static_cast<Eigen::Index>(m.size());
  sim::CMatrix out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const auto& row = m[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) spec_error("gate matrix must be square");
    for (Eigen::Index c = 0; c < dim; ++c) {
      const auto& z = row[static_cast<std::size_t>(c)];
      if (z.is_number()) {
        out(r, c) = {z.get<double>(), 0.0};
      } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
        out(r, c) = {z[0].get<double>(), z[1].get<double>()};
      } else {
        spec_error("matrix entries must be numbers or [re, im] pairs");
      }
    }
  }
  return out;
}

sim::Gate parse_gate(const json& g, std::size_t n) {
  auto support = index_list(field(g, "sites"), n, "gate sites");
  const json& kind = field(g, "gate");
  if (kind.is_string()) return sim::named_gate(kind.get<std::string>(), std::move(support));
  if (kind.is_object()) return sim::make_gate(std::move(support), parse_matrix(field(kind, "matrix")));
  spec_error("gate must be a name or {\"matrix\": ...}");
}

sim::LocalState parse_factor(const json& f) {
  if (f.is_string()) {
    try {
      return sim::LocalState::named(f.get<std::string>());
    } catch (const Error& e) {
      spec_error(e.what());
    }
  }
  if (f.is_object()) return {as_real(field(f, "theta"), "theta"), f.contains("phi") ? as_real(f.at("phi"), "phi") : 0.0};
  spec_error("product factors must be names or {\"theta\", \"phi\"} objects");
}

}  // namespace

nlohmann::json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

bool is_circuit_spec(const nlohmann::json& doc) {
  return doc.is_object() && !doc.contains("builder") && (doc.contains("layers") || doc.contains("brickwork"));
}

SiteSet parse_sites(const nlohmann::json& doc) {
  if (doc.is_object() && doc.contains("grid")) {
    const auto& g = doc.at("grid");
    if (!g.is_array() || g.size() != 2) spec_error("grid must be [width, height]");
    const std::size_t w = as_index(g[0], "grid width"), h = as_index(g[1], "grid height");
    if (w == 0 || h == 0) spec_error("grid dimensions must be positive");
    return SiteSet::grid(w, h);
  }
  const std::size_t n = as_index(field(doc, "n"), "n");
  if (n == 0) spec_error("n must be positive");
  return SiteSet::range(n);
}

sim::Circuit parse_circuit(const nlohmann::json& doc, std::size_t site_cap) {
  const SiteSet sites = parse_sites(doc);
  const std::size_t n = sites.size();
  if (n > site_cap) throw Error(ErrorCode::CapExceeded, std::to_string(n) + " sites exceed the cap of " + std::to_string(site_cap));
  sim::Circuit circ(sites);
  if (doc.contains("brickwork")) {
    const auto& bw = doc.at("brickwork");
    const std::size_t depth = as_index(field(bw, "depth"), "brickwork depth");
    if (bw.contains("gate")) {
      const auto& g = bw.at("gate");
      const sim::CMatrix m = g.is_string() ? sim::named_gate(g.get<std::string>(), {0, 1}).matrix
                                           : sim::make_gate({0, 1}, parse_matrix(field(g, "matrix"))).matrix;
      circ = sim::brickwork(sites, depth, m);
    } else {
      std::mt19937_64 rng(bw.contains("seed") ? as_index(bw.at("seed"), "brickwork seed") : 0);
      circ = sim::brickwork(sites, depth, rng);
    }
  }
  if (doc.contains("layers")) {
    const auto& layers = doc.at("layers");
    if (!layers.is_array()) spec_error("layers must be an array");
    for (const auto& layer : layers) {
      if (!layer.is_array()) spec_error("each layer must be an array of gates");
      std::vector<sim::Gate> gates;
      for (const auto& g : layer) gates.push_back(parse_gate(g, n));
      circ.append_layer(std::move(gates));
    }
  }
  return circ;
}

sim::SpinState parse_state(const nlohmann::json& doc, std::size_t site_cap) {
  const json& b = field(doc, "builder");
  if (!b.is_string()) spec_error("builder must be a string");
  const std::string builder = b.get<std::string>();
  if (builder == "circuit") {
    const auto base = parse_state(field(doc, "base"), site_cap);
    const auto circ = parse_circuit(field(doc, "circuit"), site_cap);
    if (!(circ.sites() == base.sites())) spec_error("circuit and base state have different sites");
    return sim::circuit_state(base, circ);
  }
  const SiteSet sites = parse_sites(doc);
  const std::size_t n = sites.size();
  if (builder == "product") {
    const json& f = field(doc, "factors");
    std::vector<sim::LocalState> factors;
    if (f.is_array()) {
      for (const auto& x : f) factors.push_back(parse_factor(x));
      if (factors.size() != n) spec_error("product needs one factor per site");
    } else {
      factors.assign(n, parse_factor(f));
    }
    return sim::product_state(sites, factors, site_cap);
  }
  if (builder == "ghz") return sim::ghz_state(sites, site_cap);
  if (builder == "bell_pairs") return sim::bell_pairs_state(sites, pair_list(field(doc, "pairs"), n, "pairs"), site_cap);
  if (builder == "cluster") {
    if (!doc.contains("edges") && sites.has_coords()) return sim::cluster_state(lattice_graph(sites), site_cap);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (doc.contains("edges")) {
      edges = pair_list(doc.at("edges"), n, "edges");
    } else {
      for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    }
    return sim::cluster_state(Relation::from_edges(sites, edges), site_cap);
  }
  if (builder == "ising") return sim::ising_coherent_state(sites, as_real(field(doc, "beta_j"), "beta_j"), site_cap);
  spec_error("unknown builder '" + builder + "'");
}

}  // namespace coarsemap::io
