#pragma once

#include <sstream>
#include <string>

#include "../poset.hpp"

namespace dyck::io {

inline std::string dot_label(const dyck_word& w) { return w.empty() ? "ε" : render(w); }

// Hasse diagram as a digraph, bottom to top, one `rank=same` group per layer.
inline std::string to_dot(const hasse_interval& iv) {
  std::ostringstream os;
  os << "digraph interval {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (std::size_t r = 0; r < iv.layer_count(); ++r) {
    os << "  { rank=same;";
    for (std::size_t i = iv.layer_begin[r]; i < iv.layer_begin[r + 1]; ++i)
      os << " n" << i << " [label=\"" << dot_label(iv.nodes[i]) << "\"];";
    os << " }\n";
  }
  for (const auto& [lo, hi] : iv.cover_edges) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace dyck::io
