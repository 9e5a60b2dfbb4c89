#pragma once

#include <vector>

#include "ctwkit/cycles.hpp"
#include "ctwkit/graph.hpp"
#include "ctwkit/navi.hpp"

// Single-threaded versions of the OpenMP kernels. Tests compare against
// them and the benchmark measures the speedup.
namespace ctwkit::reference {

DistanceMatrix distance_matrix(const Graph& g);
SubNavi build_geodesic_navi(const Graph& g, const DistanceMatrix& dist);
std::vector<Cycle> enumerate_geodesic_cycles(const Graph& g, const DistanceMatrix& dist);

}  // namespace ctwkit::reference
