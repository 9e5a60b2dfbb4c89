#include "ctwkit/tree_decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "ctwkit/errors.hpp"

namespace ctwkit {

NodeId TreeDecomposition::add_node(VertexSet bag) {
  if (bag.universe() != universe_) throw PreconditionError("bag universe does not match decomposition");
  bags_.push_back(std::move(bag));
  adj_.emplace_back();
  return node_count() - 1;
}

void TreeDecomposition::add_edge(NodeId a, NodeId b) {
  if (a < 0 || b < 0 || a >= node_count() || b >= node_count() || a == b)
    throw PreconditionError("tree edge (" + std::to_string(a) + "," + std::to_string(b) + ") is invalid");
  if (has_edge(a, b)) return;
  auto insert_sorted = [](std::vector<NodeId>& v, NodeId x) { v.insert(std::lower_bound(v.begin(), v.end(), x), x); };
  insert_sorted(adj_[static_cast<std::size_t>(a)], b);
  insert_sorted(adj_[static_cast<std::size_t>(b)], a);
}

bool TreeDecomposition::has_edge(NodeId a, NodeId b) const {
  if (a < 0 || b < 0 || a >= node_count() || b >= node_count()) return false;
  const auto& nb = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<std::pair<NodeId, NodeId>> TreeDecomposition::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (NodeId a = 0; a < node_count(); ++a)
    for (NodeId b : neighbors(a))
      if (a < b) out.emplace_back(a, b);
  return out;
}

int TreeDecomposition::edge_count() const {
  std::size_t total = 0;
  for (const auto& nb : adj_) total += nb.size();
  return static_cast<int>(total / 2);
}

int TreeDecomposition::width() const {
  int best = -1;
  for (const auto& b : bags_) best = std::max(best, b.count() - 1);
  return best;
}

void TreeDecomposition::remove_node(NodeId t) {
  bags_.erase(bags_.begin() + t);
  adj_.erase(adj_.begin() + t);
  for (auto& nb : adj_) {
    std::erase(nb, t);
    for (auto& x : nb)
      if (x > t) --x;
  }
}

TreeDecomposition trivial_decomposition(const Graph& g) {
  TreeDecomposition d(g.vertex_count());
  d.add_node(g.all_vertices());
  return d;
}

namespace {

std::string label(int v, int offset) { return std::to_string(v + offset); }

// BFS over the nodes accepted by `inside`; returns the number reached from `start`.
template <typename Pred>
int reach_count(const TreeDecomposition& d, NodeId start, Pred inside) {
  std::vector<char> seen(static_cast<std::size_t>(d.node_count()), 0);
  std::vector<NodeId> queue{start};
  seen[static_cast<std::size_t>(start)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (NodeId w : d.neighbors(queue[head]))
      if (!seen[static_cast<std::size_t>(w)] && inside(w)) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
  return static_cast<int>(queue.size());
}

}  // namespace

ValidationReport validate(const Graph& g, const TreeDecomposition& d, int label_offset) {
  const int n = g.vertex_count();
  if (d.vertex_universe() != n)
    throw FormatError("decomposition is over " + std::to_string(d.vertex_universe()) +
                      " vertices but the graph has " + std::to_string(n));
  ValidationReport r;
  auto note = [&r](std::string msg) {
    if (r.first_violation.empty()) r.first_violation = std::move(msg);
  };

  const int nodes = d.node_count();
  r.tree_ok = nodes > 0 && d.edge_count() == nodes - 1 && reach_count(d, 0, [](NodeId) { return true; }) == nodes;
  if (!r.tree_ok) note("tree violated: decomposition tree is not a tree");

  VertexSet covered(n);
  for (const auto& b : d.bags()) covered |= b;
  r.t1_ok = covered.count() == n;
  if (!r.t1_ok) note("T1 violated: vertex " + label((g.all_vertices() - covered).first(), label_offset) + " in no bag");

  r.t2_ok = true;
  for (auto [u, v] : g.edges()) {
    bool found = std::any_of(d.bags().begin(), d.bags().end(),
                             [&](const VertexSet& b) { return b.contains(u) && b.contains(v); });
    if (!found) {
      r.t2_ok = false;
      note("T2 violated: edge (" + label(u, label_offset) + "," + label(v, label_offset) + ")");
      break;
    }
  }

  r.t3_ok = true;
  for (Vertex x = 0; x < n && r.t3_ok; ++x) {
    NodeId start = -1;
    int holding = 0;
    for (NodeId t = 0; t < nodes; ++t) {
      if (d.bag(t).contains(x)) {
        if (start < 0) start = t;
        ++holding;
      }
    }
    if (holding == 0) continue;
    int reached = reach_count(d, start, [&](NodeId t) { return d.bag(t).contains(x); });
    if (reached != holding) {
      r.t3_ok = false;
      note("T3 violated: bags containing vertex " + label(x, label_offset) + " are not a subtree");
    }
  }

  r.connected_parts = std::all_of(d.bags().begin(), d.bags().end(),
                                  [&](const VertexSet& b) { return is_connected_set(g, b); });
  r.width = d.width();
  return r;
}

ValidationReport validate(const Graph& g, const TreeDecomposition& d) { return validate(g, d, 0); }

Fatness fatness(const Graph& g, const TreeDecomposition& d) {
  const int n = g.vertex_count();
  Fatness f;
  f.counts.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& b : d.bags()) ++f.counts[static_cast<std::size_t>(n - b.count())];
  return f;
}

TreeDecomposition contract_edge(const TreeDecomposition& d, NodeId r, NodeId s) {
  if (!d.has_edge(r, s))
    throw PreconditionError("(" + std::to_string(r) + "," + std::to_string(s) + ") is not a tree edge");
  TreeDecomposition out = d;
  out.bag(r) |= d.bag(s);
  for (NodeId w : d.neighbors(s))
    if (w != r) out.add_edge(r, w);
  out.remove_node(s);
  return out;
}

bool SplitContext::is_split(const VertexSet& bag) const {
  return std::none_of(pieces.begin(), pieces.end(), [&](const VertexSet& p) { return bag.subset_of(p); });
}

SplitContext split_context(const Graph& g, const TreeDecomposition& d, NodeId s, NodeId t0) {
  if (!d.has_edge(s, t0))
    throw PreconditionError("(" + std::to_string(s) + "," + std::to_string(t0) + ") is not a tree edge");
  const int n = g.vertex_count();
  SplitContext ctx;
  ctx.s = s;
  ctx.t0 = t0;
  ctx.adhesion = d.bag(s) & d.bag(t0);

  std::vector<char> far(static_cast<std::size_t>(d.node_count()), 0);
  std::vector<NodeId> queue{t0};
  far[static_cast<std::size_t>(t0)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (NodeId w : d.neighbors(queue[head]))
      if (!far[static_cast<std::size_t>(w)] && w != s) {
        far[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }

  ctx.far_side = VertexSet(n);
  ctx.near_side = VertexSet(n);
  for (NodeId t = 0; t < d.node_count(); ++t) {
    if (far[static_cast<std::size_t>(t)]) {
      ctx.far_nodes.push_back(t);
      ctx.far_side |= d.bag(t);
    } else {
      ctx.near_nodes.push_back(t);
      ctx.near_side |= d.bag(t);
    }
  }

  VertexSet forbidden = g.all_vertices() - (ctx.far_side - ctx.adhesion);
  ctx.components = components(g, forbidden);
  for (const auto& c : ctx.components) {
    ctx.neighborhoods.push_back(neighborhood(g, c));
    ctx.pieces.push_back(c | ctx.neighborhoods.back());
  }
  return ctx;
}

TreeDecomposition prune_empty_bags(TreeDecomposition d) {
  for (;;) {
    if (d.node_count() <= 1) return d;
    NodeId empty = -1;
    for (NodeId t = 0; t < d.node_count() && empty < 0; ++t)
      if (d.bag(t).empty()) empty = t;
    if (empty < 0) return d;
    if (d.neighbors(empty).empty()) {
      d.remove_node(empty);
    } else {
      NodeId keep = d.neighbors(empty).front();
      d = contract_edge(d, keep, empty);
    }
  }
}

TreeDecomposition split_at_edge(const Graph& g, const TreeDecomposition& d, const SplitContext& ctx) {
  (void)g;
  TreeDecomposition out = d;
  const auto& far = ctx.far_nodes;
  const std::size_t pieces = ctx.pieces.size();

  if (pieces == 0) {
    for (auto it = far.rbegin(); it != far.rend(); ++it) out.remove_node(*it);
    return prune_empty_bags(std::move(out));
  }

  for (NodeId t : far) out.bag(t) = d.bag(t) & ctx.pieces[0];

  for (std::size_t i = 1; i < pieces; ++i) {
    std::vector<NodeId> copy_of(static_cast<std::size_t>(d.node_count()), -1);
    for (NodeId t : far) copy_of[static_cast<std::size_t>(t)] = out.add_node(d.bag(t) & ctx.pieces[i]);
    for (NodeId t : far)
      for (NodeId w : d.neighbors(t))
        if (t < w && copy_of[static_cast<std::size_t>(w)] >= 0)
          out.add_edge(copy_of[static_cast<std::size_t>(t)], copy_of[static_cast<std::size_t>(w)]);
    out.add_edge(ctx.s, copy_of[static_cast<std::size_t>(ctx.t0)]);
  }
  return prune_empty_bags(std::move(out));
}

TreeDecomposition decontract_part(const Graph& g, const TreeDecomposition& d, NodeId s, Vertex u, Vertex v) {
  if (s < 0 || s >= d.node_count()) throw PreconditionError("node " + std::to_string(s) + " does not exist");
  const VertexSet& part = d.bag(s);
  if (u == v) throw PreconditionError("u and v must be distinct");
  if (!part.contains(u) || !part.contains(v)) throw PreconditionError("u and v must both lie in the bag of s");
  if (g.has_edge(u, v)) throw PreconditionError("uv is an edge of the graph");
  for (NodeId t : d.neighbors(s))
    if (d.bag(t).contains(u) && d.bag(t).contains(v))
      throw PreconditionError("neighbor node " + std::to_string(t) + " already shares both u and v with s");

  VertexSet with_u = part;
  with_u.erase(v);
  VertexSet with_v = part;
  with_v.erase(u);
  TreeDecomposition out(d.vertex_universe());
  for (NodeId t = 0; t < d.node_count(); ++t) out.add_node(t == s ? with_u : d.bag(t));
  const NodeId tv = out.add_node(with_v);
  std::vector<NodeId> moving;
  for (NodeId t : d.neighbors(s))
    if (d.bag(t).contains(v)) moving.push_back(t);
  for (auto [a, b] : d.edges()) {
    NodeId other = a == s ? b : (b == s ? a : -1);
    if (other >= 0 && std::find(moving.begin(), moving.end(), other) != moving.end())
      out.add_edge(tv, other);
    else
      out.add_edge(a, b);
  }
  out.add_edge(s, tv);
  return out;
}

namespace {

bool valid_on(const Graph& g, const TreeDecomposition& d) {
  const int nodes = d.node_count();
  if (nodes == 0 || d.edge_count() != nodes - 1 || reach_count(d, 0, [](NodeId) { return true; }) != nodes)
    return false;
  VertexSet covered(g.vertex_count());
  for (const auto& b : d.bags()) covered |= b;
  for (auto [u, v] : g.edges()) {
    if (!covered.contains(u) || !covered.contains(v)) continue;
    if (std::none_of(d.bags().begin(), d.bags().end(),
                     [&](const VertexSet& b) { return b.contains(u) && b.contains(v); }))
      return false;
  }
  bool ok = true;
  covered.for_each([&](Vertex x) {
    NodeId start = -1;
    int holding = 0;
    for (NodeId t = 0; t < nodes; ++t)
      if (d.bag(t).contains(x)) {
        if (start < 0) start = t;
        ++holding;
      }
    ok = ok && reach_count(d, start, [&](NodeId t) { return d.bag(t).contains(x); }) == holding;
  });
  return ok;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
};

}  // namespace

TreeDecomposition glue_block_decompositions(const Graph& g, const std::vector<TreeDecomposition>& per_block) {
  const int n = g.vertex_count();
  if (per_block.empty()) throw PreconditionError("no block decompositions to glue");
  TreeDecomposition out(n);
  std::vector<NodeId> offset;
  for (std::size_t i = 0; i < per_block.size(); ++i) {
    const auto& d = per_block[i];
    if (d.vertex_universe() != n || !valid_on(g, d))
      throw PreconditionError("block decomposition " + std::to_string(i) + " is invalid for its block");
    offset.push_back(out.node_count());
    for (const auto& b : d.bags()) out.add_node(b);
    for (auto [a, b] : d.edges()) out.add_edge(offset.back() + a, offset.back() + b);
  }

  DisjointSets trees(out.node_count());
  for (auto [a, b] : out.edges()) trees.unite(a, b);

  const BlockForest forest = blocks(g);
  forest.cut_vertices.for_each([&](Vertex x) {
    NodeId hub = -1;
    for (std::size_t i = 0; i < per_block.size(); ++i) {
      const auto& d = per_block[i];
      for (NodeId t = 0; t < d.node_count(); ++t) {
        if (!d.bag(t).contains(x)) continue;
        NodeId global = offset[i] + t;
        if (hub < 0) {
          hub = global;
        } else {
          if (!trees.unite(hub, global))
            throw PreconditionError("block decompositions do not follow the block structure at vertex " +
                                    std::to_string(x));
          out.add_edge(hub, global);
        }
        break;
      }
    }
  });

  for (NodeId t = 1; t < out.node_count(); ++t)
    if (trees.unite(0, t)) out.add_edge(0, t);

  auto report = validate(g, out);
  if (!report.valid()) throw PreconditionError("glued decomposition is invalid: " + report.first_violation);
  return out;
}

TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.vertex_count();
  TreeDecomposition d(n);
  if (n == 0) {
    d.add_node(VertexSet(0));
    return d;
  }
  if (static_cast<int>(order.size()) != n) throw PreconditionError("elimination ordering must list every vertex once");
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || position[static_cast<std::size_t>(v)] >= 0)
      throw PreconditionError("elimination ordering must list every vertex once");
    position[static_cast<std::size_t>(v)] = i;
  }
  std::vector<VertexSet> fill(static_cast<std::size_t>(n), VertexSet(n));
  for (auto [u, v] : g.edges()) {
    fill[static_cast<std::size_t>(u)].insert(v);
    fill[static_cast<std::size_t>(v)].insert(u);
  }
  std::vector<NodeId> parent(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[static_cast<std::size_t>(i)];
    VertexSet later = fill[static_cast<std::size_t>(v)];
    VertexSet bag = later;
    bag.insert(v);
    d.add_node(bag);
    int first = n;
    later.for_each([&](Vertex w) {
      first = std::min(first, position[static_cast<std::size_t>(w)]);
      fill[static_cast<std::size_t>(w)] |= later;
      fill[static_cast<std::size_t>(w)].erase(w);
      fill[static_cast<std::size_t>(w)].erase(v);
    });
    parent[static_cast<std::size_t>(i)] = first < n ? first : -1;
  }
  NodeId previous_root = -1;
  for (int i = 0; i < n; ++i) {
    if (parent[static_cast<std::size_t>(i)] >= 0) {
      d.add_edge(i, parent[static_cast<std::size_t>(i)]);
    } else {
      if (previous_root >= 0) d.add_edge(previous_root, i);
      previous_root = i;
    }
  }
  return d;
}

}  // namespace ctwkit
