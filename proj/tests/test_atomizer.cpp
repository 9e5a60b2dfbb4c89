#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "ctwkit/atomizer.hpp"
#include "ctwkit/errors.hpp"
#include "oracles.hpp"

using namespace ctwkit;
using namespace ctwkit::testing;

TEST_CASE("exact treewidth on known families") {
  CHECK(exact_treewidth(path_graph(5)).width == 1);
  CHECK(exact_treewidth(star_graph(4)).width == 1);
  for (int n = 3; n <= 10; ++n) CHECK(exact_treewidth(cycle_graph(n)).width == 2);
  CHECK(exact_treewidth(grid_graph(3, 3)).width == 3);
  for (int r = 1; r <= 7; ++r) CHECK(exact_treewidth(complete_graph(r)).width == r - 1);
  CHECK(exact_treewidth(petersen_graph()).width == 4);
  CHECK(exact_treewidth(Graph(1, {})).width == 0);
}

TEST_CASE("exact treewidth matches the subset DP oracle and returns a witness") {
  for (const auto& [name, g] : random_corpus(80, 13)) {
    CAPTURE(name);
    auto r = exact_treewidth(g);
    CHECK(r.width == oracle::treewidth(g));
    CHECK(oracle::valid_decomposition(g, r.decomposition));
    CHECK(r.decomposition.width() == r.width);
  }
}

TEST_CASE("exact treewidth refuses large graphs") {
  CHECK_THROWS_AS(exact_treewidth(cycle_graph(21)), LimitError);
  CHECK_THROWS_AS(exact_treewidth(cycle_graph(9), 8), LimitError);
  CHECK(min_degree_decomposition(cycle_graph(30)).width == 2);
}

TEST_CASE("atomize examples") {
  Graph p3 = path_graph(3);
  TreeDecomposition one(3);
  one.add_node(VertexSet::full(3));
  auto res = atomize_with_log(p3, one);
  REQUIRE(res.moves.size() == 1);
  CHECK(res.moves[0].kind == MoveKind::kDecontract);
  REQUIRE(res.decomposition.node_count() == 2);
  CHECK(res.decomposition.bag(0) == VertexSet(3, {0, 1}));
  CHECK(res.decomposition.bag(1) == VertexSet(3, {1, 2}));

  Graph c6 = cycle_graph(6);
  TreeDecomposition fan(6);
  for (auto b : {VertexSet(6, {0, 1, 2}), VertexSet(6, {0, 2, 3}), VertexSet(6, {0, 3, 4}), VertexSet(6, {0, 4, 5})})
    fan.add_node(b);
  for (int t = 1; t < 4; ++t) fan.add_edge(t - 1, t);
  auto out = atomize(c6, fan);
  CHECK(out.width() == 2);
  CHECK(oracle::valid_decomposition(c6, out));
  CHECK(oracle::non_containment_violation(out).empty());
  CHECK(oracle::split_violation(c6, out).empty());
  CHECK(oracle::adhesion_violation(c6, out).empty());

  auto again = atomize_with_log(c6, out);
  CHECK(again.moves.empty());
  CHECK(again.decomposition == out);
}

TEST_CASE("atomize rejects bad input") {
  TreeDecomposition one(3);
  one.add_node(VertexSet::full(3));
  CHECK_THROWS_AS(atomize(Graph(3, {{0, 1}}), one), PreconditionError);
  TreeDecomposition missing(3);
  missing.add_node(VertexSet(3, {0, 1}));
  CHECK_THROWS_AS(atomize(path_graph(3), missing), PreconditionError);
}

TEST_CASE("atomize postconditions on random seeds") {
  int moves = 0;
  for (const auto& [name, g] : random_corpus(80, 11)) {
    CAPTURE(name);
    for (std::uint64_t seed : {1u, 2u}) {
      auto d = oracle::random_decomposition(g, seed);
      auto res = atomize_with_log(g, d);
      const auto& out = res.decomposition;
      REQUIRE(oracle::valid_decomposition(g, out));
      CHECK(out.width() <= d.width());
      CHECK(fatness(g, out) <= fatness(g, d));
      CHECK(oracle::non_containment_violation(out) == "");
      CHECK(oracle::split_violation(g, out) == "");
      CHECK(oracle::adhesion_violation(g, out) == "");
      CHECK(check_atomic_properties(g, out).ok());
      for (const auto& m : res.moves) CHECK(m.after < m.before);
      moves += static_cast<int>(res.moves.size());
    }
  }
  CHECK(moves > 0);
}

TEST_CASE("property checker finds planted violations") {
  Graph p3 = path_graph(3);
  TreeDecomposition nested(3);
  nested.add_node(VertexSet(3, {0, 1}));
  nested.add_node(VertexSet(3, {0, 1, 2}));
  nested.add_edge(0, 1);
  auto r = check_atomic_properties(p3, nested);
  CHECK_FALSE(r.non_containment);
  CHECK_FALSE(r.first_violation.empty());

  TreeDecomposition one(3);
  one.add_node(VertexSet::full(3));
  CHECK_FALSE(check_atomic_properties(p3, one).edge_or_shared_adhesion);

  // Star with the two far leaves in one bag: that bag is split at the edge.
  Graph star = star_graph(3);
  TreeDecomposition split(4);
  split.add_node(VertexSet(4, {0, 1}));
  split.add_node(VertexSet(4, {0, 2, 3}));
  split.add_edge(0, 1);
  CHECK_FALSE(check_atomic_properties(star, split).no_split);
  CHECK_FALSE(oracle::split_violation(star, split).empty());
}

TEST_CASE("adhesion cycle examples") {
  Graph c6 = cycle_graph(6);
  TreeDecomposition two(6);
  two.add_node(VertexSet(6, {0, 1, 2, 3}));
  two.add_node(VertexSet(6, {3, 4, 5, 0}));
  two.add_edge(0, 1);
  auto ac = adhesion_cycle(c6, two, 0, 0, 3);
  CHECK(ac.cycle.size() == 6);
  CHECK(ac.far_path == Path{0, 5, 4, 3});
  CHECK(ac.near_path == Path{0, 1, 2, 3});

  Graph theta = theta_graph(2, 2, 3);  // 0 and 1 joined via 2, via 3, via 4-5
  TreeDecomposition td(6);
  td.add_node(VertexSet(6, {0, 1, 2}));
  td.add_node(VertexSet(6, {0, 1, 3}));
  td.add_node(VertexSet(6, {0, 1, 4, 5}));
  td.add_edge(0, 1);
  td.add_edge(1, 2);
  auto tc = adhesion_cycle(theta, td, 0, 0, 1);
  CHECK(tc.cycle == std::vector<Vertex>{0, 3, 1, 2});

  CHECK_THROWS_AS(adhesion_cycle(c6, two, 0, 0, 1), PreconditionError);
}

TEST_CASE("adhesion cycles on atomized corpus decompositions") {
  int cycles = 0;
  for (const auto& [name, g] : random_corpus(60, 11)) {
    CAPTURE(name);
    auto d = atomize(g, exact_treewidth(g).decomposition);
    for (NodeId s = 0; s < d.node_count(); ++s) {
      auto members = d.bag(s).to_vector();
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          if (g.has_edge(members[i], members[j])) continue;
          auto ac = adhesion_cycle(g, d, s, members[i], members[j]);
          auto ctx = split_context(g, d, s, ac.t0);
          CHECK(ac.cycle.size() >= 4);
          for (std::size_t k = 1; k + 1 < ac.far_path.size(); ++k)
            CHECK((ctx.far_side - ctx.adhesion).contains(ac.far_path[k]));
          for (std::size_t k = 1; k + 1 < ac.near_path.size(); ++k)
            CHECK((ctx.near_side - ctx.adhesion).contains(ac.near_path[k]));
          ++cycles;
        }
    }
  }
  CHECK(cycles > 0);
}
