#include "ctwkit/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "ctwkit/errors.hpp"

namespace ctwkit {

Graph::Graph(int n, std::span<const Edge> edges) : adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw PreconditionError("negative vertex count");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an endpoint out of range");
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw PreconditionError("parallel edge (" + std::to_string(dup->first) + "," +
                            std::to_string(dup->second) + ")");

  for (auto [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  adj_edge_.resize(adj_.size());
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    auto& nb = adj_[u];
    std::sort(nb.begin(), nb.end());
    adj_edge_[u].reserve(nb.size());
    for (Vertex v : nb) {
      Edge key{std::min<Vertex>(static_cast<Vertex>(u), v), std::max<Vertex>(static_cast<Vertex>(u), v)};
      auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
      adj_edge_[u].push_back(static_cast<int>(it - edges_.begin()));
    }
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return -1;
  const auto& nb = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return adj_edge_[static_cast<std::size_t>(u)][static_cast<std::size_t>(it - nb.begin())];
}

std::vector<Vertex> Subgraph::from_parent(int parent_n) const {
  std::vector<Vertex> map(static_cast<std::size_t>(parent_n), -1);
  for (std::size_t i = 0; i < to_parent.size(); ++i)
    map[static_cast<std::size_t>(to_parent[i])] = static_cast<Vertex>(i);
  return map;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  Subgraph sub;
  sub.to_parent = keep.to_vector();
  auto local = sub.from_parent(g.vertex_count());
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (keep.contains(u) && keep.contains(v))
      edges.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
  sub.graph = Graph(static_cast<int>(sub.to_parent.size()), edges);
  return sub;
}

int DistanceMatrix::diameter() const {
  int best = 0;
  for (int d : d_)
    if (d != kUnreachable) best = std::max(best, d);
  return best;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source, const VertexSet& allowed) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), DistanceMatrix::kUnreachable);
  if (!allowed.contains(source)) return dist;
  std::vector<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      auto& dw = dist[static_cast<std::size_t>(w)];
      if (dw == DistanceMatrix::kUnreachable && allowed.contains(w)) {
        dw = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  return bfs_distances(g, source, g.all_vertices());
}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.vertex_count();
  DistanceMatrix dm(n);
  const VertexSet all = g.all_vertices();
#pragma omp parallel for schedule(dynamic, 8)
  for (int s = 0; s < n; ++s) {
    auto d = bfs_distances(g, s, all);
    std::copy(d.begin(), d.end(), dm.row(s).begin());
  }
  return dm;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& forbidden) {
  const int n = g.vertex_count();
  std::vector<VertexSet> out;
  VertexSet seen = forbidden;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(n);
    stack.assign(1, s);
    seen.insert(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.insert(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.empty_set()); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_connected_set(const Graph& g, const VertexSet& s) {
  Vertex start = s.first();
  if (start < 0) return false;
  auto dist = bfs_distances(g, start, s);
  bool ok = true;
  s.for_each([&](Vertex v) { ok = ok && dist[static_cast<std::size_t>(v)] != DistanceMatrix::kUnreachable; });
  return ok;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out(g.vertex_count());
  s.for_each([&](Vertex u) {
    for (Vertex w : g.neighbors(u))
      if (!s.contains(w)) out.insert(w);
  });
  return out;
}

Path shortest_path(const Graph& g, Vertex u, Vertex v, const VertexSet& allowed) {
  if (!allowed.contains(u) || !allowed.contains(v)) return {};
  std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Vertex> queue{u};
  parent[static_cast<std::size_t>(u)] = u;
  for (std::size_t head = 0; head < queue.size() && parent[static_cast<std::size_t>(v)] < 0; ++head) {
    Vertex x = queue[head];
    for (Vertex w : g.neighbors(x)) {
      if (parent[static_cast<std::size_t>(w)] < 0 && allowed.contains(w)) {
        parent[static_cast<std::size_t>(w)] = x;
        queue.push_back(w);
      }
    }
  }
  if (parent[static_cast<std::size_t>(v)] < 0) return {};
  Path path{v};
  while (path.back() != u) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

BlockForest blocks(const Graph& g) {
  // Iterative Hopcroft-Tarjan over an explicit edge stack.
  const int n = g.vertex_count();
  BlockForest out;
  out.cut_vertices = VertexSet(n);
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edge_stack;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    if (g.degree(root) == 0) {
      out.blocks.push_back(VertexSet(n, {root}));
      disc[static_cast<std::size_t>(root)] = timer++;
      continue;
    }
    int root_children = 0;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (w == f.parent) continue;
        auto& dw = disc[static_cast<std::size_t>(w)];
        if (dw < 0) {
          edge_stack.emplace_back(f.v, w);
          dw = low[static_cast<std::size_t>(w)] = timer++;
          if (f.v == root) ++root_children;
          stack.push_back({w, f.v, 0});
        } else if (dw < disc[static_cast<std::size_t>(f.v)]) {
          edge_stack.emplace_back(f.v, w);
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], dw);
        }
        continue;
      }
      Vertex child = f.v;
      Vertex parent = f.parent;
      stack.pop_back();
      if (parent < 0) continue;
      auto& lp = low[static_cast<std::size_t>(parent)];
      lp = std::min(lp, low[static_cast<std::size_t>(child)]);
      if (low[static_cast<std::size_t>(child)] >= disc[static_cast<std::size_t>(parent)]) {
        if (parent != root) out.cut_vertices.insert(parent);
        VertexSet block(n);
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.insert(e.first);
          block.insert(e.second);
          if (e == Edge{parent, child}) break;
        }
        out.blocks.push_back(std::move(block));
      }
    }
    if (root_children > 1) out.cut_vertices.insert(root);
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

}  // namespace ctwkit
