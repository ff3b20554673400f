#include "coarsemap/profile.hpp"

#include <algorithm>
#include <limits>

#include "coarsemap/error.hpp"

namespace coarsemap {

std::vector<std::size_t> ConnectedProfile::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.sites.size());
  return out;
}

std::size_t default_dust_cutoff(std::size_t n) { return std::max<std::size_t>(2, n / 50); }

ConnectedProfile connected_profile(const Relation& e, std::optional<std::size_t> dust_cutoff) {
  const std::size_t n = e.size();
  const SiteSet& sites = e.sites();
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(n, kNone);
  std::vector<Component> comps;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != kNone) continue;
    Component c;
    label[s] = comps.size();
    stack.assign(1, s);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      c.sites.push_back(u);
      for (std::size_t v = 0; v < n; ++v) {
        if (label[v] == kNone && (e.contains(u, v) || e.contains(v, u))) {
          label[v] = comps.size();
          stack.push_back(v);
        }
      }
    }
    std::sort(c.sites.begin(), c.sites.end());
    comps.push_back(std::move(c));
  }
  auto min_rank = [&](const Component& c) {
    std::size_t r = kNone;
    for (std::size_t s : c.sites) r = std::min(r, sites.rank(s));
    return r;
  };
  std::sort(comps.begin(), comps.end(), [&](const Component& a, const Component& b) {
    if (a.sites.size() != b.sites.size()) return a.sites.size() > b.sites.size();
    return min_rank(a) < min_rank(b);
  });
  ConnectedProfile out;
  out.dust_cutoff = dust_cutoff.value_or(default_dust_cutoff(n));
  for (auto& c : comps) {
    c.dust = c.sites.size() <= out.dust_cutoff;
    if (c.dust) out.dust_sites += c.sites.size();
  }
  out.components = std::move(comps);
  return out;
}

bool same_outside_region(const ConnectedProfile& a, const ConnectedProfile& b, std::span<const std::size_t> region) {
  auto touches = [&](const Component& c) {
    return std::any_of(c.sites.begin(), c.sites.end(),
                       [&](std::size_t s) { return std::find(region.begin(), region.end(), s) != region.end(); });
  };
  std::vector<std::size_t> dropped(region.begin(), region.end());
  for (const auto* p : {&a, &b})
    for (const auto& c : p->components)
      if (c.dust && touches(c)) dropped.insert(dropped.end(), c.sites.begin(), c.sites.end());
  std::sort(dropped.begin(), dropped.end());
  auto partition = [&](const ConnectedProfile& p) {
    std::vector<std::vector<std::size_t>> parts;
    for (const auto& c : p.components) {
      std::vector<std::size_t> kept;
      for (std::size_t s : c.sites)
        if (!std::binary_search(dropped.begin(), dropped.end(), s)) kept.push_back(s);
      if (!kept.empty()) parts.push_back(std::move(kept));
    }
    std::sort(parts.begin(), parts.end());
    return parts;
  };
  return partition(a) == partition(b);
}

CoarseProfile coarse_profile(const DecayMatrix& f, double eps, const AsdimOptions& options,
                             std::optional<std::size_t> dust_cutoff) {
  CoarseProfile p;
  p.epsilon = eps;
  const Relation e = epsilon_graph(f, eps);
  p.edges = e.edge_count();
  p.connected = connected_profile(e, dust_cutoff);
  const PathMetric d = path_metric(e);
  if (p.connected.components.size() == 1) p.diameter = d.max_finite();
  try {
    p.asdim = asdim_bound(growth_curve(d, default_r_max(d)), options);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::InsufficientData) throw;
  }
  return p;
}

}  // namespace coarsemap
