#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include "corpus.hpp"
#include "ctwkit/cycles.hpp"
#include "ctwkit/navi.hpp"
#include "ctwkit/reference.hpp"

using namespace ctwkit;
using namespace ctwkit::testing;

namespace {

std::vector<NamedGraph> inputs() {
  auto corpus = random_corpus(60, 16, 77);
  corpus.push_back({"grid5x6", grid_graph(5, 6)});
  corpus.push_back({"petersen", petersen_graph()});
  corpus.push_back({"c31", cycle_graph(31)});
  return corpus;
}

}  // namespace

TEST_CASE("OpenMP kernels agree with the serial reference for every thread count") {
  const int saved = omp_get_max_threads();
  for (int threads : {1, 2, 4, 7}) {
    omp_set_num_threads(threads);
    for (const auto& [name, g] : inputs()) {
      CAPTURE(name);
      CAPTURE(threads);
      auto dist = distance_matrix(g);
      auto ref = reference::distance_matrix(g);
      for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = 0; v < g.vertex_count(); ++v) REQUIRE(dist.at(u, v) == ref.at(u, v));
      CHECK(build_geodesic_navi(g, dist).paths() == reference::build_geodesic_navi(g, ref).paths());
      CHECK(enumerate_geodesic_cycles(g, dist) == reference::enumerate_geodesic_cycles(g, ref));
    }
  }
  omp_set_num_threads(saved);
}
