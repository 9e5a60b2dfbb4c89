#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "ctwkit/atomizer.hpp"
#include "ctwkit/errors.hpp"
#include "ctwkit/navi.hpp"
#include "oracles.hpp"

using namespace ctwkit;
using namespace ctwkit::testing;

TEST_CASE("geodesic navi examples") {
  auto p4 = build_geodesic_navi(path_graph(4));
  CHECK(p4.length() == 3);
  CHECK(p4.path(3, 1) == Path{3, 2, 1});
  CHECK(p4.size() == 10);

  auto c4 = build_geodesic_navi(cycle_graph(4));
  CHECK(c4.path(0, 2) == Path{0, 3, 2});
  CHECK(c4.path(1, 3) == Path{1, 2, 3});

  auto k4 = build_geodesic_navi(complete_graph(4));
  CHECK(k4.length() == 1);

  CHECK_THROWS_AS(build_geodesic_navi(Graph(3, {{0, 1}})), PreconditionError);
  CHECK_THROWS_AS(k4.path(0, 7), PreconditionError);
}

TEST_CASE("check_subnavi reports consistency and geodesic violations") {
  Graph c4 = cycle_graph(4);
  CHECK(check_subnavi(c4, build_geodesic_navi(c4)).ok());

  SubNavi bad;
  for (Vertex v = 0; v < 4; ++v) bad.set_path({v});
  bad.set_path({0, 1, 2});
  bad.set_path({0, 3, 2, 1});
  auto r = check_subnavi(c4, bad);
  CHECK(r.violation == NaviViolation::kInconsistent);
  CHECK(r.x == 0);
  CHECK(r.y == 2);
  CHECK(r.a == 0);
  CHECK(r.b == 1);

  Graph k3 = complete_graph(3);
  SubNavi longer(true);
  for (Vertex v = 0; v < 3; ++v) longer.set_path({v});
  longer.set_path({0, 2});
  longer.set_path({2, 1});
  longer.set_path({0, 2, 1});
  r = check_subnavi(k3, longer);
  CHECK(r.violation == NaviViolation::kNotGeodesic);
  CHECK(r.x == 0);
  CHECK(r.y == 1);

  SubNavi gap;
  gap.set_path({0, 1, 2});
  CHECK(check_subnavi(c4, gap).violation == NaviViolation::kMissingKey);

  SubNavi jump;
  jump.set_path({0, 2});
  CHECK(check_subnavi(c4, jump).violation == NaviViolation::kNotAPath);
}

TEST_CASE("geodesic navis are consistent, geodesic and lexicographically minimal") {
  auto corpus = random_corpus(120, 10);
  for (const auto& s : structured_corpus())
    if (s.graph.vertex_count() <= 10 && is_connected(s.graph)) corpus.push_back(s);
  for (const auto& [name, g] : corpus) {
    CAPTURE(name);
    auto dist = distance_matrix(g);
    auto navi = build_geodesic_navi(g, dist);
    REQUIRE(check_subnavi(g, dist, navi).ok());
    for (const auto& [key, p] : navi.paths()) {
      REQUIRE(static_cast<int>(p.size()) - 1 == dist.at(key.first, key.second));
      auto all = oracle::geodesic_paths(g, key.first, key.second);
      CHECK(std::find(all.begin(), all.end(), p) != all.end());
      for (const auto& q : all) CHECK_FALSE(oracle::char_vector_less(q, p));
      // Distinct geodesics never share a vertex set.
      std::set<std::vector<Vertex>> sets;
      for (auto q : all) {
        std::sort(q.begin(), q.end());
        sets.insert(q);
      }
      CHECK(sets.size() == all.size());
    }
  }
}

TEST_CASE("extract_d_navi examples") {
  Graph c6 = cycle_graph(6);
  auto navi = build_geodesic_navi(c6);

  TreeDecomposition one(6);
  one.add_node(VertexSet::full(6));
  CHECK(extract_d_navi(navi, one).size() == navi.size());

  TreeDecomposition singles(6);
  for (Vertex v = 0; v < 6; ++v) singles.add_node(VertexSet(6, {v}));
  auto tiny = extract_d_navi(navi, singles);
  CHECK(tiny.size() == 6);
  CHECK(tiny.length() == 0);

  TreeDecomposition two(6);
  two.add_node(VertexSet(6, {0, 1, 2, 3}));
  two.add_node(VertexSet(6, {3, 4, 5, 0}));
  two.add_edge(0, 1);
  auto dn = extract_d_navi(navi, two);
  CHECK(dn.length() == 3);
  CHECK(check_d_navi(c6, dn, two).ok());
  CHECK(geodesic_d_navi(c6, distance_matrix(c6), two).paths() == dn.paths());

  SubNavi partial;
  partial.set_path({0});
  CHECK_THROWS_AS(extract_d_navi(partial, two), PreconditionError);
}

TEST_CASE("connectify examples") {
  Graph c4 = cycle_graph(4);
  TreeDecomposition d(4);
  d.add_node(VertexSet(4, {0, 1, 2}));
  d.add_node(VertexSet(4, {2, 3, 0}));
  d.add_edge(0, 1);
  // The stored 0-2 path runs through 3, so the first bag takes it in.
  auto r = connectify(c4, d, geodesic_d_navi(c4, distance_matrix(c4), d));
  CHECK(r.decomposition.bag(0) == VertexSet::full(4));
  CHECK(r.decomposition.bag(1) == d.bag(1));
  CHECK(r.width_after == 3);
  CHECK(r.width_bound == 5);

  Graph p3 = path_graph(3);
  TreeDecomposition edges(3);
  edges.add_node(VertexSet(3, {0, 1}));
  edges.add_node(VertexSet(3, {1, 2}));
  edges.add_edge(0, 1);
  CHECK(connectify(p3, edges, geodesic_d_navi(p3, distance_matrix(p3), edges)).decomposition == edges);

  Graph c6 = cycle_graph(6);
  TreeDecomposition fan(6);
  for (auto b : {VertexSet(6, {0, 1, 2}), VertexSet(6, {0, 2, 3}), VertexSet(6, {0, 3, 4}), VertexSet(6, {0, 4, 5})})
    fan.add_node(b);
  for (int t = 1; t < 4; ++t) fan.add_edge(t - 1, t);
  auto dn = geodesic_d_navi(c6, distance_matrix(c6), fan);
  auto c = connectify(c6, fan, dn);
  auto v = validate(c6, c.decomposition);
  CHECK(v.valid());
  CHECK(v.connected_parts);
  CHECK(c.width_bound == 2 + 3 * (dn.length() - 1));
  CHECK(c.width_after <= c.width_bound);

  SubNavi empty;
  CHECK_THROWS_AS(connectify(c6, fan, empty), PreconditionError);
  CHECK(connectify_width_bound(2, 3) == 8);
  CHECK(connectify_width_bound(0, 0) == 0);
}

TEST_CASE("connectify output is a connected decomposition within the bound") {
  for (const auto& [name, g] : random_corpus(80, 12)) {
    CAPTURE(name);
    auto dist = distance_matrix(g);
    for (std::uint64_t seed : {5u, 6u}) {
      auto d = oracle::random_decomposition(g, seed);
      auto dn = geodesic_d_navi(g, dist, d);
      auto r = connectify(g, d, dn);
      CHECK(oracle::valid_decomposition(g, r.decomposition));
      CHECK(oracle::connected_bags(g, r.decomposition));
      CHECK(r.width_after <= connectify_width_bound(d.width(), dn.length()));
      for (NodeId t = 0; t < d.node_count(); ++t) CHECK(d.bag(t).subset_of(r.decomposition.bag(t)));
      CHECK(r.decomposition.edges() == d.edges());
    }
  }
}
