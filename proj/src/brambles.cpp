#include "ctwkit/brambles.hpp"

#include <algorithm>
#include <set>

#include "ctwkit/errors.hpp"

namespace ctwkit {

bool touching(const Graph& g, const VertexSet& a, const VertexSet& b) {
  return a.intersects(b) || neighborhood(g, a).intersects(b);
}

BrambleReport validate_bramble(const Graph& g, const Bramble& b) {
  BrambleReport r;
  const int n = g.vertex_count();
  for (std::size_t i = 0; i < b.sets.size(); ++i) {
    const auto& s = b.sets[i];
    if (s.universe() != n) {
      r = {false, static_cast<int>(i), -1, "set " + std::to_string(i) + " has the wrong vertex universe"};
      return r;
    }
    if (!is_connected_set(g, s)) {
      r = {false, static_cast<int>(i), -1, "set " + std::to_string(i) + " is empty or disconnected"};
      return r;
    }
  }
  for (std::size_t i = 0; i < b.sets.size(); ++i)
    for (std::size_t j = i + 1; j < b.sets.size(); ++j)
      if (!touching(g, b.sets[i], b.sets[j])) {
        r = {false, static_cast<int>(i), static_cast<int>(j),
             "sets " + std::to_string(i) + " and " + std::to_string(j) + " do not touch"};
        return r;
      }
  return r;
}

namespace {

void require_valid(const Graph& g, const Bramble& b) {
  auto r = validate_bramble(g, b);
  if (!r.ok) throw PreconditionError("invalid bramble: " + r.first_violation);
}

std::vector<int> uncovered(const Bramble& b, const VertexSet& x) {
  std::vector<int> out;
  for (std::size_t i = 0; i < b.sets.size(); ++i)
    if (!b.sets[i].intersects(x)) out.push_back(static_cast<int>(i));
  return out;
}

VertexSet greedy_cover(const Graph& g, const Bramble& b) {
  const int n = g.vertex_count();
  VertexSet x(n);
  for (auto open = uncovered(b, x); !open.empty(); open = uncovered(b, x)) {
    Vertex best = -1;
    int hits = 0;
    for (Vertex v = 0; v < n; ++v) {
      int h = 0;
      for (int i : open) h += b.sets[static_cast<std::size_t>(i)].contains(v) ? 1 : 0;
      if (h > hits) {
        hits = h;
        best = v;
      }
    }
    x.insert(best);
  }
  return x;
}

class HittingSetSearch {
 public:
  HittingSetSearch(const Bramble& b, VertexSet incumbent) : b_(b), best_(std::move(incumbent)) {}

  Cover run(int n) {
    search(VertexSet(n), VertexSet(n), 0);
    return {best_.count(), best_};
  }

 private:
  void search(VertexSet chosen, VertexSet banned, int size) {
    auto open = uncovered(b_, chosen);
    if (open.empty()) {
      if (size < best_.count()) best_ = chosen;
      return;
    }
    // Lower bound: sets that stay pairwise disjoint after removing banned vertices.
    std::vector<VertexSet> avail;
    for (int i : open) {
      avail.push_back(b_.sets[static_cast<std::size_t>(i)] - banned);
      if (avail.back().empty()) return;
    }
    std::vector<std::size_t> by_size(avail.size());
    for (std::size_t i = 0; i < by_size.size(); ++i) by_size[i] = i;
    std::stable_sort(by_size.begin(), by_size.end(),
                     [&](std::size_t l, std::size_t r) { return avail[l].count() < avail[r].count(); });
    VertexSet used(chosen.universe());
    int packing = 0;
    for (std::size_t i : by_size)
      if (!avail[i].intersects(used)) {
        used |= avail[i];
        ++packing;
      }
    if (size + packing >= best_.count()) return;

    const VertexSet& branch = avail[by_size.front()];
    for (Vertex v = branch.first(); v >= 0; v = branch.next(v)) {
      VertexSet next = chosen;
      next.insert(v);
      search(std::move(next), banned, size + 1);
      banned.insert(v);
    }
  }

  const Bramble& b_;
  VertexSet best_;
};

// Shortest-path attachment of the greedy cover's vertices, one at a time.
VertexSet greedy_connected_cover(const Graph& g, const Bramble& b) {
  VertexSet cover = greedy_cover(g, b);
  Vertex start = cover.first();
  if (start < 0) return cover;
  VertexSet x(g.vertex_count(), {start});
  while (!cover.subset_of(x)) {
    // Multi-source BFS from x.
    std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Vertex> queue = x.to_vector();
    for (Vertex v : queue) parent[static_cast<std::size_t>(v)] = v;
    Vertex hit = -1;
    for (std::size_t head = 0; head < queue.size() && hit < 0; ++head)
      for (Vertex w : g.neighbors(queue[head])) {
        if (parent[static_cast<std::size_t>(w)] >= 0) continue;
        parent[static_cast<std::size_t>(w)] = queue[head];
        queue.push_back(w);
        if (cover.contains(w)) {
          hit = w;
          break;
        }
      }
    if (hit < 0) throw PreconditionError("connected covers need a connected graph");
    for (Vertex v = hit; !x.contains(v); v = parent[static_cast<std::size_t>(v)]) x.insert(v);
  }
  return x;
}

class ConnectedCoverSearch {
 public:
  ConnectedCoverSearch(const Graph& g, const Bramble& b, VertexSet incumbent)
      : g_(g), b_(b), best_(std::move(incumbent)) {}

  Cover run() {
    const int n = g_.vertex_count();
    // Every cover meets the smallest set, so seeds come from it alone.
    auto smallest = std::min_element(b_.sets.begin(), b_.sets.end(),
                                     [](const VertexSet& l, const VertexSet& r) { return l.count() < r.count(); });
    VertexSet banned(n);
    for (Vertex s = smallest->first(); s >= 0; s = smallest->next(s)) {
      search(VertexSet(n, {s}), banned);
      banned.insert(s);
    }
    return {best_.count(), best_};
  }

 private:
  void search(const VertexSet& x, VertexSet banned) {
    const int size = x.count();
    if (size >= best_.count()) return;
    auto open = uncovered(b_, x);
    if (open.empty()) {
      best_ = x;
      return;
    }
    const int n = g_.vertex_count();
    // Distance from x to each vertex through non-banned vertices.
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> queue = x.to_vector();
    for (Vertex v : queue) dist[static_cast<std::size_t>(v)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (Vertex w : g_.neighbors(queue[head]))
        if (dist[static_cast<std::size_t>(w)] < 0 && !banned.contains(w)) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(queue[head])] + 1;
          queue.push_back(w);
        }
    int need = 0;
    for (int i : open) {
      int nearest = -1;
      b_.sets[static_cast<std::size_t>(i)].for_each([&](Vertex v) {
        int dv = dist[static_cast<std::size_t>(v)];
        if (dv >= 0 && (nearest < 0 || dv < nearest)) nearest = dv;
      });
      if (nearest < 0) return;
      need = std::max(need, nearest);
    }
    if (size + need >= best_.count()) return;

    Vertex grow = -1;
    for (Vertex v = 0; v < n && grow < 0; ++v)
      if (dist[static_cast<std::size_t>(v)] == 1) grow = v;
    if (grow < 0) return;
    VertexSet with = x;
    with.insert(grow);
    search(with, banned);
    banned.insert(grow);
    search(x, std::move(banned));
  }

  const Graph& g_;
  const Bramble& b_;
  VertexSet best_;
};

}  // namespace

Cover minimum_cover(const Graph& g, const Bramble& b) {
  require_valid(g, b);
  if (b.sets.empty()) return {0, g.empty_set()};
  return HittingSetSearch(b, greedy_cover(g, b)).run(g.vertex_count());
}

int order(const Graph& g, const Bramble& b) { return minimum_cover(g, b).size; }

Cover minimum_connected_cover(const Graph& g, const Bramble& b) {
  require_valid(g, b);
  if (!is_connected(g)) throw PreconditionError("connected order needs a connected graph");
  if (b.sets.empty()) return {0, g.empty_set()};
  return ConnectedCoverSearch(g, b, greedy_connected_cover(g, b)).run();
}

int connected_order(const Graph& g, const Bramble& b) { return minimum_connected_cover(g, b).size; }

Bramble cycle_bramble(const Graph& g, const Cycle& c) {
  if (!is_cycle_of(g, c.vertices())) throw PreconditionError("not a cycle of the graph");
  const int n = c.length();
  const int arc = n / 2;
  Bramble b;
  for (int i = 0; i < n; ++i) {
    VertexSet s(g.vertex_count());
    for (int j = 0; j < arc; ++j) s.insert(c[(i + j) % n]);
    b.sets.push_back(std::move(s));
  }
  return b;
}

NodeId part_cover_witness(const Graph& g, const TreeDecomposition& d, const Bramble& b) {
  auto valid = validate(g, d);
  if (!valid.valid()) throw PreconditionError("invalid decomposition: " + valid.first_violation);
  require_valid(g, b);
  if (d.node_count() == 0) throw PreconditionError("decomposition has no nodes");

  NodeId t = 0;
  for (int step = 0; step <= d.node_count(); ++step) {
    const VertexSet& bag = d.bag(t);
    auto missed = std::find_if(b.sets.begin(), b.sets.end(), [&](const VertexSet& s) { return !s.intersects(bag); });
    if (missed == b.sets.end()) return t;
    // The missed set is connected and avoids V_t, so its bags sit behind one
    // neighbor of t.
    const Vertex probe = missed->first();
    std::vector<NodeId> via(static_cast<std::size_t>(d.node_count()), -1);
    std::vector<NodeId> queue;
    for (NodeId s : d.neighbors(t)) {
      via[static_cast<std::size_t>(s)] = s;
      queue.push_back(s);
    }
    NodeId next = -1;
    for (std::size_t head = 0; head < queue.size() && next < 0; ++head) {
      NodeId u = queue[head];
      if (d.bag(u).contains(probe)) {
        next = via[static_cast<std::size_t>(u)];
        break;
      }
      for (NodeId w : d.neighbors(u))
        if (w != t && via[static_cast<std::size_t>(w)] < 0) {
          via[static_cast<std::size_t>(w)] = via[static_cast<std::size_t>(u)];
          queue.push_back(w);
        }
    }
    if (next < 0) throw InternalError("bramble set vertex found in no bag");
    t = next;
  }
  throw InternalError("orientation walk did not reach a covering bag");
}

long long duality_bound_g(int k) {
  if (k < 0) throw PreconditionError("k must be non-negative");
  const long long kk = k;
  return kk + (kk + 1) * kk / 2 * ((2 * kk - 1) * kk - 1);
}

namespace {

void maximal_cliques(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // Pivot on the vertex with most neighbors in p.
  const VertexSet px = p | x;
  Vertex pivot = px.first();
  int best = -1;
  px.for_each([&](Vertex u) {
    int c = (VertexSet::from(g.vertex_count(), g.neighbors(u)) & p).count();
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  const VertexSet pivot_nb = VertexSet::from(g.vertex_count(), g.neighbors(pivot));
  for (Vertex v : (p - pivot_nb).to_vector()) {
    const VertexSet nb = VertexSet::from(g.vertex_count(), g.neighbors(v));
    VertexSet r2 = r;
    r2.insert(v);
    maximal_cliques(g, r2, p & nb, x & nb, out);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

std::vector<Bramble> probe_brambles(const Graph& g) {
  const int n = g.vertex_count();
  const DistanceMatrix dist = distance_matrix(g);
  std::vector<Bramble> out;
  for (const auto& c : enumerate_geodesic_cycles(g, dist)) out.push_back(cycle_bramble(g, c));

  std::vector<VertexSet> cliques;
  maximal_cliques(g, VertexSet(n), g.all_vertices(), VertexSet(n), cliques);
  std::sort(cliques.begin(), cliques.end());
  for (const auto& q : cliques) {
    Bramble b;
    q.for_each([&](Vertex v) { b.sets.push_back(VertexSet(n, {v})); });
    out.push_back(std::move(b));
  }

  if (n > 0 && is_connected(g)) {
    const int diam = dist.diameter();
    const int r = diam / 2;  // smallest r with diam <= 2r + 1
    std::set<VertexSet> balls;
    for (Vertex v = 0; v < n; ++v) {
      VertexSet ball(n);
      for (Vertex u = 0; u < n; ++u)
        if (dist.at(v, u) <= r) ball.insert(u);
      balls.insert(std::move(ball));
    }
    out.push_back(Bramble{{balls.begin(), balls.end()}});
  }
  return out;
}

}  // namespace ctwkit
