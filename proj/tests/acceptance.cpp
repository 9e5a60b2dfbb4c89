// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "corpus.hpp"
#include "ctwkit/atomizer.hpp"
#include "ctwkit/brambles.hpp"
#include "ctwkit/cycles.hpp"
#include "ctwkit/errors.hpp"
#include "ctwkit/navi.hpp"
#include "ctwkit/pipeline.hpp"
#include "oracles.hpp"

using namespace ctwkit;
using namespace ctwkit::testing;

namespace {

struct Tally {
  long checks = 0;
  long violations = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && violations++ == 0) first = what;
  }
};

using Clock = std::chrono::steady_clock;

bool report(int id, const std::string& title, const Tally& t, double seconds, double limit = 0) {
  const bool slow = limit > 0 && seconds >= limit;
  const bool ok = t.violations == 0 && t.checks > 0 && !slow;
  std::printf("%s criterion %d: %s (%ld checks, %ld violations, %.1fs", ok ? "PASS" : "FAIL", id, title.c_str(), t.checks,
              t.violations, seconds);
  if (limit > 0) std::printf(" of %.0fs allowed", limit);
  std::printf(")");
  if (!t.first.empty()) std::printf(" first: %s", t.first.c_str());
  if (t.checks == 0) std::printf(" nothing checked");
  std::printf("\n");
  std::fflush(stdout);
  return ok;
}

bool timed(int id, const std::string& title, double limit, const std::function<void(Tally&)>& body) {
  Tally t;
  auto start = Clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(Clock::now() - start).count();
  return report(id, title, t, s, limit);
}

std::vector<oracle::Mask> masks(const Bramble& b) {
  std::vector<oracle::Mask> out;
  for (const auto& s : b.sets) out.push_back(oracle::mask_of(s));
  return out;
}

}  // namespace

int main() {
  const auto corpus = random_corpus(200, 14);
  bool all = true;

  all &= timed(1, "cycle connected tree-width and cycle bramble order", 60, [](Tally& t) {
    for (int n = 3; n <= 8; ++n) {
      Graph c = cycle_graph(n);
      std::vector<Vertex> seq(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i;
      const int half = (n + 1) / 2;
      t.expect(exact_ctw_small(c, 8) == half, "exact ctw of C" + std::to_string(n));
      t.expect(connected_order(c, cycle_bramble(c, Cycle(seq))) == half + 1, "connected order of C" + std::to_string(n));
    }
  });

  all &= timed(2, "connectify width bound with exact-width seeds", 300, [&](Tally& t) {
    for (const auto& [name, g] : corpus) {
      auto dist = distance_matrix(g);
      auto seed = exact_treewidth(g).decomposition;
      // Both the raw seed and its atomized form.
      for (const auto& d : {seed, atomize(g, seed)}) {
        auto dn = geodesic_d_navi(g, dist, d);
        t.expect(check_d_navi(g, dn, d).ok(), name + ": D-navi check");
        auto r = connectify(g, d, dn);
        t.expect(oracle::valid_decomposition(g, r.decomposition), name + ": invalid output");
        t.expect(oracle::connected_bags(g, r.decomposition), name + ": disconnected bag");
        t.expect(r.width_after <= connectify_width_bound(d.width(), dn.length()), name + ": width over bound");
      }
    }
  });

  all &= timed(3, "pipeline width within the tw-k bound", 0, [&](Tally& t) {
    for (const auto& [name, g] : corpus) {
      auto r = ctw_upper_bound(g);
      const int tw = oracle::treewidth(g);
      int k = 1;
      for (const auto& c : oracle::geodesic_cycles(g)) k = std::max(k, static_cast<int>(c.size()));
      t.expect(r.tw == tw && r.tw_certified, name + ": seed width is not the treewidth");
      t.expect(r.k == k, name + ": longest geodesic cycle");
      t.expect(oracle::valid_decomposition(g, r.ctd) && oracle::connected_bags(g, r.ctd), name + ": not connected");
      t.expect(r.width_after <= theorem1_bound(tw, k), name + ": width over bound");
    }
  });

  all &= timed(4, "geodesic navi consistency, geodesy and lexicographic minimality", 0, [](Tally& t) {
    auto small = random_corpus(200, 10, 404);
    for (const auto& s : structured_corpus())
      if (s.graph.vertex_count() <= 10 && is_connected(s.graph)) small.push_back(s);
    for (const auto& [name, g] : small) {
      auto fw = oracle::floyd_warshall(g);
      auto navi = build_geodesic_navi(g);
      t.expect(check_subnavi(g, navi).ok(), name + ": subpath consistency");
      for (const auto& [key, p] : navi.paths()) {
        t.expect(static_cast<int>(p.size()) - 1 == fw[key.first][key.second], name + ": not geodesic");
        auto paths = oracle::geodesic_paths(g, key.first, key.second);
        bool minimal = std::find(paths.begin(), paths.end(), p) != paths.end();
        for (const auto& q : paths) minimal = minimal && !oracle::char_vector_less(q, p);
        t.expect(minimal, name + ": not lexicographically minimal");
      }
    }
  });

  all &= timed(5, "atomizer postconditions and fatness descent", 0, [&](Tally& t) {
    for (const auto& [name, g] : corpus) {
      std::vector<TreeDecomposition> seeds{exact_treewidth(g).decomposition, oracle::random_decomposition(g, 11),
                                           oracle::random_decomposition(g, 12)};
      for (const auto& seed : seeds) {
        auto res = atomize_with_log(g, seed);
        const auto& out = res.decomposition;
        t.expect(oracle::valid_decomposition(g, out), name + ": invalid output");
        t.expect(oracle::non_containment_violation(out).empty(), name + ": " + oracle::non_containment_violation(out));
        t.expect(oracle::split_violation(g, out).empty(), name + ": " + oracle::split_violation(g, out));
        t.expect(oracle::adhesion_violation(g, out).empty(), name + ": " + oracle::adhesion_violation(g, out));
        t.expect(fatness(g, out) <= fatness(g, seed), name + ": fatness increased");
        for (const auto& m : res.moves) t.expect(m.after < m.before, name + ": move did not decrease fatness");
      }
    }
  });

  all &= timed(6, "closure distance and closure paths", 0, [&](Tally& t) {
    std::mt19937_64 rng(66);
    for (const auto& [name, g] : corpus) {
      auto dist = distance_matrix(g);
      auto fw = oracle::floyd_warshall(g);
      auto cycles = enumerate_geodesic_cycles(g, dist);
      const int k = longest_geodesic_cycle(g, dist);
      const int n = g.vertex_count();
      for (int sample = 0; sample < 20; ++sample) {
        VertexSet x(n);
        const int size = 1 + static_cast<int>(rng() % 4);
        while (x.count() < size) x.insert(static_cast<Vertex>(rng() % static_cast<unsigned>(n)));
        auto r = closure_distance_bound(g, dist, cycles, k, x);
        if (!r.preconditions_hold) continue;
        int far = 0;
        for (Vertex a : x.to_vector())
          for (Vertex b : x.to_vector()) far = std::max(far, fw[a][b]);
        t.expect(far == r.max_distance && far <= k * (x.count() - 1), name + ": closure distance over k(|X|-1)");
      }
      auto d = atomize(g, exact_treewidth(g).decomposition);
      for (NodeId s = 0; s < d.node_count(); ++s) {
        auto m = d.bag(s).to_vector();
        for (std::size_t i = 0; i < m.size(); ++i)
          for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (g.has_edge(m[i], m[j])) continue;
            auto ac = adhesion_cycle(g, d, s, m[i], m[j]);
            auto ctx = split_context(g, d, s, ac.t0);
            auto p = find_closure_path(g, ctx.adhesion, ctx.far_side, ctx.near_side, ac.far_path, ac.near_path, cycles);
            auto cl = c_closure(g, cycles, ctx.adhesion);
            bool ok = p.size() >= 2 && p.front() == m[i] && p.back() == m[j];
            for (std::size_t q = 1; ok && q < p.size(); ++q) {
              int e = g.edge_index(p[q - 1], p[q]);
              ok = e >= 0 && cl.edges.contains(e);
            }
            VertexSet seen(n);
            for (Vertex v : p) {
              ok = ok && !seen.contains(v);
              seen.insert(v);
            }
            t.expect(ok, name + ": closure path");
          }
      }
    }
  });

  all &= timed(7, "geodesic cycles span the cycle space", 0, [&](Tally& t) {
    for (const auto& [name, g] : corpus) {
      auto basis = geodesic_cycle_basis(g);
      const int c = static_cast<int>(components(g).size());
      t.expect(static_cast<int>(basis.size()) == g.edge_count() - g.vertex_count() + c, name + ": rank");
      for (const auto& cyc : enumerate_geodesic_cycles(g)) {
        auto z = EdgeVector::of_cycle(g, cyc);
        auto coeff = decompose(g, z, basis);
        EdgeVector sum(g.edge_count());
        for (std::size_t i = 0; i < basis.size(); ++i)
          if (coeff[i]) sum += EdgeVector::of_cycle(g, basis[i]);
        t.expect(sum == z, name + ": decompose round trip");
      }
    }
  });

  all &= timed(8, "connected order of geodesic cycle brambles", 0, [&](Tally& t) {
    for (const auto& [name, g] : corpus) {
      int taken = 0;
      for (const auto& c : enumerate_geodesic_cycles(g)) {
        if (c.length() < 4 || c.length() > 10 || taken >= 6) continue;
        ++taken;
        auto b = cycle_bramble(g, c);
        const int co = oracle::min_connected_cover(g, masks(b));
        t.expect(connected_order(g, b) == co, name + ": solver disagrees with brute force");
        t.expect(co >= (c.length() + 1) / 2 + 1, name + ": connected order below ceil(n/2)+1");
      }
    }
  });

  all &= timed(9, "bramble solvers and exact treewidth against oracles", 0, [&](Tally& t) {
    std::vector<NamedGraph> small;
    for (const auto& s : corpus)
      if (s.graph.vertex_count() <= 10) small.push_back(s);
    for (const auto& s : structured_corpus())
      if (s.graph.vertex_count() <= 10 && is_connected(s.graph)) small.push_back(s);
    for (const auto& [name, g] : small)
      for (const auto& b : probe_brambles(g)) {
        auto ms = masks(b);
        t.expect(order(g, b) == oracle::min_cover(g, ms), name + ": order");
        t.expect(connected_order(g, b) == oracle::min_connected_cover(g, ms), name + ": connected order");
      }
    for (int n = 2; n <= 12; ++n) t.expect(exact_treewidth(path_graph(n)).width == 1, "path treewidth");
    t.expect(exact_treewidth(star_graph(6)).width == 1, "star treewidth");
    for (int n = 3; n <= 14; ++n) t.expect(exact_treewidth(cycle_graph(n)).width == 2, "cycle treewidth");
    t.expect(exact_treewidth(grid_graph(3, 3)).width == 3, "3x3 grid treewidth");
    for (int r = 1; r <= 9; ++r) t.expect(exact_treewidth(complete_graph(r)).width == r - 1, "K_r treewidth");
    for (const auto& [name, g] : corpus) t.expect(exact_treewidth(g).width == oracle::treewidth(g), name + ": treewidth");
  });

  all &= timed(10, "duality constant and pipeline width below g(k)", 0, [&](Tally& t) {
    t.expect(duality_bound_g(3) == 87, "g(3)");
    for (const auto& [name, g] : corpus) {
      int k = 0;
      for (const auto& b : probe_brambles(g)) k = std::max(k, connected_order(g, b));
      t.expect(ctw_upper_bound(g).width_after < duality_bound_g(k), name + ": width not below g(k)");
    }
  });

  return all ? 0 : 1;
}
