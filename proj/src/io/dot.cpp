#include "coarsemap/io/dot.hpp"

#include <array>
#include <ostream>
#include <vector>

#include "coarsemap/profile.hpp"

namespace coarsemap::io {
namespace {

constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                                  "#8c564b", "#e377c2", "#bcbd22", "#17becf", "#7f7f7f"};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + '"';
}

}  // namespace

void write_dot(std::ostream& out, const Relation& e, const std::string& name, std::optional<std::size_t> dust_cutoff) {
  const auto profile = connected_profile(e, dust_cutoff);
  const SiteSet& sites = e.sites();
  out << "graph " << quoted(name) << " {\n  node [style=filled];\n";
  for (std::size_t c = 0; c < profile.components.size(); ++c) {
    const auto& comp = profile.components[c];
    const char* colour = comp.dust ? "#d9d9d9" : kPalette[c % kPalette.size()];
    for (std::size_t s : comp.sites) {
      out << "  " << quoted(sites.id(s)) << " [fillcolor=\"" << colour << "\", component=" << c << "];\n";
    }
  }
  for (std::size_t ri = 0; ri < sites.size(); ++ri) {
    const std::size_t i = sites.canonical_order()[ri];
    for (std::size_t rj = ri + 1; rj < sites.size(); ++rj) {
      const std::size_t j = sites.canonical_order()[rj];
      if (e.contains(i, j) || e.contains(j, i)) out << "  " << quoted(sites.id(i)) << " -- " << quoted(sites.id(j)) << ";\n";
    }
  }
  out << "}\n";
}

}  // namespace coarsemap::io
