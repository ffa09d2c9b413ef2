#pragma once

// JSON renderings. Every count is a decimal string; small structural integers
// (ranks, semilengths, run lengths) are plain numbers. See docs/json.md.

#include <json.hpp>

#include "../asymptotics.hpp"
#include "../families.hpp"
#include "../poset.hpp"

namespace dyck::io {

using json = nlohmann::json;

inline json to_json(const hasse_interval& iv) {
  json layers = json::array();
  for (std::size_t r = 0; r < iv.layer_count(); ++r) {
    json nodes = json::array();
    for (const auto& w : iv.layer(r)) nodes.push_back(render(w));
    layers.push_back({{"semilength", iv.bottom.semilength() + r}, {"nodes", std::move(nodes)}});
  }
  json edges = json::array();
  for (const auto& [lo, hi] : iv.cover_edges)
    edges.push_back(json::array({render(iv.nodes[lo]), render(iv.nodes[hi])}));
  return {
      {"bottom", render(iv.bottom)},
      {"top", render(iv.top)},
      {"node_count", std::to_string(iv.nodes.size())},
      {"edge_count", std::to_string(iv.cover_edges.size())},
      {"layers", std::move(layers)},
      {"edges", std::move(edges)},
  };
}

inline json to_json(const conjecture_report& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) {
    rows.push_back({
        {"n", r.n},
        {"d_n", r.count.str()},
        {"n_pow_k", to_string(r.n_pow_k)},
        {"ratio_num", boost::multiprecision::numerator(r.ratio).str()},
        {"ratio_den", boost::multiprecision::denominator(r.ratio).str()},
        {"engine", name(r.source)},
    });
  }
  json out = {
      {"pattern", render(rep.pattern)},
      {"x", rep.x},
      {"a", rep.a},
      {"b", rep.b},
      {"k", rep.k_exp},
      {"alpha", rep.alpha.str()},
      {"predicted_constant", rep.predicted ? json(to_string(*rep.predicted)) : json(nullptr)},
      {"family", rep.detected ? json(describe(*rep.detected)) : json(nullptr)},
      {"diverges", rep.diverges()},
      {"rows", std::move(rows)},
  };
  return out;
}

}  // namespace dyck::io
