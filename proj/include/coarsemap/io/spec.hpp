#pragma once

#include <cstddef>
#include <filesystem>

#include <json.hpp>

#include "coarsemap/sim/circuit.hpp"
#include "coarsemap/sim/state.hpp"

namespace coarsemap::io {

/// Parses a JSON file. Syntax errors raise ParseError with the byte offset;
/// a missing file raises InvalidArgument.
nlohmann::json load_json(const std::filesystem::path& path);

/// True for circuit documents ("layers" or "brickwork" present, no "builder").
bool is_circuit_spec(const nlohmann::json& doc);

/// {"n": int, "layers": [[{"sites": [i] | [i, j], "gate": name | {"matrix": [[[re, im], ...], ...]}}, ...], ...],
///  "brickwork": {"depth": D, "seed": s} | {"depth": D, "gate": name}}
///
/// "brickwork" is optional; when present its layers come first.
sim::Circuit parse_circuit(const nlohmann::json& doc, std::size_t site_cap = sim::kDefaultSiteCap);

/// {"builder": "product" | "ghz" | "bell_pairs" | "cluster" | "ising" | "circuit", ...}
///
///   product:    "n", "factors": name | [name | {"theta": t, "phi": p}, ...]
///   ghz:        "n"
///   bell_pairs: "n", "pairs": [[i, j], ...]
///   cluster:    "n", "edges": [[i, j], ...] (default: chain, or the lattice for "grid")
///   ising:      "n", "beta_j"
///   circuit:    "base": state spec, "circuit": circuit spec
///
/// "grid": [w, h] may replace "n" and gives the sites lattice coordinates.
/// Schema violations raise SpecError.
sim::SpinState parse_state(const nlohmann::json& doc, std::size_t site_cap = sim::kDefaultSiteCap);

/// Sites of a state or circuit document ("n" or "grid").
SiteSet parse_sites(const nlohmann::json& doc);

}  // namespace coarsemap::io
