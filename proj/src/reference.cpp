#include "ctwkit/reference.hpp"

#include <algorithm>

#include "ctwkit/errors.hpp"

namespace ctwkit::reference {

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.vertex_count();
  DistanceMatrix d(n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), d.row(s).begin());
  }
  return d;
}

SubNavi build_geodesic_navi(const Graph& g, const DistanceMatrix& dist) {
  if (!is_connected(g)) throw PreconditionError("geodesic navis need a connected graph");
  SubNavi navi(true);
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    for (Vertex y = x; y < g.vertex_count(); ++y) navi.set_path(lex_min_geodesic(g, dist, x, y));
  return navi;
}

std::vector<Cycle> enumerate_geodesic_cycles(const Graph& g, const DistanceMatrix& dist) {
  std::vector<Cycle> out;
  const int cap = 2 * dist.diameter() + 1;
  for (Vertex root = 0; root < g.vertex_count(); ++root)
    geodesic_cycles_from_root(g, dist, root, cap, [&out](const Cycle& c) { out.push_back(c); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ctwkit::reference
