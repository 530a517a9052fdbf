#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pmcsolve/graph.hpp"

namespace testing {

using namespace pmcsolve;

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  GenParams gp;
  gp.kind = GraphKind::Gnp;
  gp.n = n;
  gp.p = p;
  gp.seed = rng();
  return gen_graph(gp);
}

inline Graph random_connected(std::mt19937_64& rng, int n, double p) {
  while (true) {
    Graph g = random_graph(rng, n, p);
    if (g.is_connected()) return g;
  }
}

inline VertexSet random_subset(std::mt19937_64& rng, int n) {
  VertexSet s;
  for (Vertex v = 0; v < n; ++v)
    if (rng() & 1u) s.insert(v);
  return s;
}

/// P3–P7, C3–C7, K2–K6, stars with 2–6 leaves, 3x3 grid.
inline std::vector<std::pair<std::string, Graph>> named_graphs() {
  std::vector<std::pair<std::string, Graph>> out;
  for (int n = 3; n <= 7; ++n) out.emplace_back("P" + std::to_string(n), path_graph(n));
  for (int n = 3; n <= 7; ++n) out.emplace_back("C" + std::to_string(n), cycle_graph(n));
  for (int n = 2; n <= 6; ++n) out.emplace_back("K" + std::to_string(n), complete_graph(n));
  for (int k = 2; k <= 6; ++k) out.emplace_back("S" + std::to_string(k), star_graph(k));
  out.emplace_back("grid3x3", grid_graph(3, 3));
  return out;
}

inline VertexSet ids(std::initializer_list<int> one_based) {
  VertexSet s;
  for (int v : one_based) s.insert(v - 1);
  return s;
}

}  // namespace testing
