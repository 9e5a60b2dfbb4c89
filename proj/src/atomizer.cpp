#include "ctwkit/atomizer.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

#include "ctwkit/errors.hpp"

namespace ctwkit {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

class EliminationSearch {
 public:
  explicit EliminationSearch(const Graph& g) : n_(g.vertex_count()), adj_(static_cast<std::size_t>(n_), 0) {
    for (auto [u, v] : g.edges()) {
      adj_[static_cast<std::size_t>(u)] |= bit(v);
      adj_[static_cast<std::size_t>(v)] |= bit(u);
    }
    all_ = n_ == 64 ? ~Mask{0} : (bit(n_) - 1);
  }

  // Vertices outside eliminated ∪ {v} reachable from v through eliminated vertices.
  Mask later_neighbors(Mask eliminated, Vertex v) const {
    Mask comp = bit(v);
    Mask frontier = bit(v);
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
      next &= eliminated & ~comp;
      comp |= next;
      frontier = next;
    }
    Mask reach = 0;
    for (Mask c = comp; c; c &= c - 1) reach |= adj_[static_cast<std::size_t>(std::countr_zero(c))];
    return reach & ~eliminated & ~bit(v);
  }

  bool decide(int k) {
    failed_.clear();
    order_.clear();
    return search(0, k);
  }

  std::vector<Vertex> order() const {
    std::vector<Vertex> out = order_;
    Mask used = 0;
    for (Vertex v : out) used |= bit(v);
    for (Vertex v = 0; v < n_; ++v)
      if (!(used & bit(v))) out.push_back(v);
    return out;
  }

 private:
  bool search(Mask eliminated, int k) {
    if (std::popcount(all_ & ~eliminated) <= k + 1) return true;
    if (failed_.contains(eliminated)) return false;
    for (Vertex v = 0; v < n_; ++v) {
      if (eliminated & bit(v)) continue;
      if (std::popcount(later_neighbors(eliminated, v)) > k) continue;
      order_.push_back(v);
      if (search(eliminated | bit(v), k)) return true;
      order_.pop_back();
    }
    failed_.insert(eliminated);
    return false;
  }

  int n_;
  std::vector<Mask> adj_;
  Mask all_ = 0;
  std::unordered_set<Mask> failed_;
  std::vector<Vertex> order_;
};

int degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  int best = 0;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!gone[static_cast<std::size_t>(v)] && (pick < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]))
        pick = v;
    best = std::max(best, deg[static_cast<std::size_t>(pick)]);
    gone[static_cast<std::size_t>(pick)] = 1;
    for (Vertex w : g.neighbors(pick))
      if (!gone[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
  }
  return best;
}

}  // namespace

TreewidthResult min_degree_decomposition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexSet> fill(static_cast<std::size_t>(n), VertexSet(n));
  for (auto [u, v] : g.edges()) {
    fill[static_cast<std::size_t>(u)].insert(v);
    fill[static_cast<std::size_t>(v)].insert(u);
  }
  VertexSet alive = g.all_vertices();
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    alive.for_each([&](Vertex v) {
      if (pick < 0 || fill[static_cast<std::size_t>(v)].count() < fill[static_cast<std::size_t>(pick)].count()) pick = v;
    });
    order.push_back(pick);
    alive.erase(pick);
    const VertexSet nb = fill[static_cast<std::size_t>(pick)];
    nb.for_each([&](Vertex w) {
      auto& fw = fill[static_cast<std::size_t>(w)];
      fw |= nb;
      fw.erase(w);
      fw.erase(pick);
    });
  }
  TreewidthResult r;
  r.decomposition = decomposition_from_elimination(g, order);
  r.width = r.decomposition.width();
  return r;
}

TreewidthResult exact_treewidth(const Graph& g, int max_n) {
  const int n = g.vertex_count();
  if (n > max_n || n > 64)
    throw LimitError("exact treewidth is limited to " + std::to_string(std::min(max_n, 64)) +
                     " vertices (graph has " + std::to_string(n) + "); supply a tree decomposition instead");
  TreewidthResult heuristic = min_degree_decomposition(g);
  if (n == 0) return heuristic;
  EliminationSearch search(g);
  for (int k = degeneracy(g); k < heuristic.width; ++k) {
    if (search.decide(k)) {
      TreewidthResult r;
      r.decomposition = decomposition_from_elimination(g, search.order());
      r.width = r.decomposition.width();
      if (r.width != k) throw InternalError("elimination search produced width " + std::to_string(r.width));
      return r;
    }
  }
  return heuristic;
}

namespace {

std::optional<TreeDecomposition> containment_move(const TreeDecomposition& d, AtomizeMove& move) {
  for (auto [a, b] : d.edges()) {
    if (d.bag(a).subset_of(d.bag(b))) {
      move.kind = MoveKind::kContract;
      move.s = a;
      move.t = b;
      return contract_edge(d, b, a);
    }
    if (d.bag(b).subset_of(d.bag(a))) {
      move.kind = MoveKind::kContract;
      move.s = b;
      move.t = a;
      return contract_edge(d, a, b);
    }
  }
  return std::nullopt;
}

std::optional<TreeDecomposition> split_move(const Graph& g, const TreeDecomposition& d, AtomizeMove& move) {
  for (auto [a, b] : d.edges()) {
    for (auto [s, t0] : {std::pair{a, b}, std::pair{b, a}}) {
      SplitContext ctx = split_context(g, d, s, t0);
      const int adhesion = ctx.adhesion.count();
      bool big_split = std::any_of(ctx.far_nodes.begin(), ctx.far_nodes.end(), [&](NodeId t) {
        return d.bag(t).count() > adhesion && ctx.is_split(d.bag(t));
      });
      if (!big_split) continue;
      move.kind = MoveKind::kSplit;
      move.s = s;
      move.t = t0;
      return split_at_edge(g, d, ctx);
    }
  }
  return std::nullopt;
}

bool shared_with_neighbor(const TreeDecomposition& d, NodeId s, Vertex u, Vertex v) {
  return std::any_of(d.neighbors(s).begin(), d.neighbors(s).end(),
                     [&](NodeId t) { return d.bag(t).contains(u) && d.bag(t).contains(v); });
}

std::optional<TreeDecomposition> decontract_move(const Graph& g, const TreeDecomposition& d, AtomizeMove& move) {
  for (NodeId s = 0; s < d.node_count(); ++s) {
    auto members = d.bag(s).to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        Vertex u = members[i];
        Vertex v = members[j];
        if (g.has_edge(u, v) || shared_with_neighbor(d, s, u, v)) continue;
        move.kind = MoveKind::kDecontract;
        move.s = s;
        move.t = -1;
        move.u = u;
        move.v = v;
        return decontract_part(g, d, s, u, v);
      }
  }
  return std::nullopt;
}

}  // namespace

AtomizeResult atomize_with_log(const Graph& g, const TreeDecomposition& d) {
  if (!is_connected(g)) throw PreconditionError("atomize requires a connected graph; decompose per component first");
  auto report = validate(g, d);
  if (!report.valid()) throw PreconditionError("atomize requires a valid decomposition: " + report.first_violation);

  AtomizeResult result;
  result.decomposition = d;
  Fatness current = fatness(g, d);
  for (;;) {
    AtomizeMove move{};
    std::optional<TreeDecomposition> next = containment_move(result.decomposition, move);
    if (!next) next = split_move(g, result.decomposition, move);
    if (!next) next = decontract_move(g, result.decomposition, move);
    if (!next) break;
    Fatness after = fatness(g, *next);
    if (!(after < current)) throw InternalError("atomize move did not decrease the fatness");
    move.before = current;
    move.after = after;
    result.moves.push_back(std::move(move));
    result.decomposition = std::move(*next);
    current = std::move(after);
  }
  return result;
}

TreeDecomposition atomize(const Graph& g, const TreeDecomposition& d) {
  return atomize_with_log(g, d).decomposition;
}

AtomicPropertyReport check_atomic_properties(const Graph& g, const TreeDecomposition& d) {
  AtomicPropertyReport r;
  auto note = [&r](std::string msg) {
    if (r.first_violation.empty()) r.first_violation = std::move(msg);
  };
  for (NodeId a = 0; a < d.node_count(); ++a)
    for (NodeId b = 0; b < d.node_count(); ++b)
      if (a != b && d.bag(a).subset_of(d.bag(b))) {
        r.non_containment = false;
        note("bag of node " + std::to_string(a) + " is contained in bag of node " + std::to_string(b));
      }
  for (auto [a, b] : d.edges())
    for (auto [s, t0] : {std::pair{a, b}, std::pair{b, a}}) {
      SplitContext ctx = split_context(g, d, s, t0);
      for (NodeId t : ctx.far_nodes)
        if (ctx.is_split(d.bag(t))) {
          r.no_split = false;
          note("bag of node " + std::to_string(t) + " is split at edge (" + std::to_string(s) + "," +
               std::to_string(t0) + ")");
        }
    }
  for (NodeId s = 0; s < d.node_count(); ++s) {
    auto members = d.bag(s).to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (!g.has_edge(members[i], members[j]) && !shared_with_neighbor(d, s, members[i], members[j])) {
          r.edge_or_shared_adhesion = false;
          note("vertices " + std::to_string(members[i]) + "," + std::to_string(members[j]) + " of node " +
               std::to_string(s) + " are neither adjacent nor in a common adhesion");
        }
  }
  return r;
}

AdhesionCycle adhesion_cycle(const Graph& g, const TreeDecomposition& d, NodeId s, Vertex u, Vertex v) {
  if (s < 0 || s >= d.node_count()) throw PreconditionError("node " + std::to_string(s) + " does not exist");
  if (u == v || !d.bag(s).contains(u) || !d.bag(s).contains(v))
    throw PreconditionError("u and v must be distinct vertices of the bag of s");
  if (g.has_edge(u, v)) throw PreconditionError("u and v are adjacent");
  NodeId t0 = -1;
  for (NodeId t : d.neighbors(s))
    if (d.bag(t).contains(u) && d.bag(t).contains(v)) {
      t0 = t;
      break;
    }
  if (t0 < 0) throw PreconditionError("no neighbor of s shares both u and v");

  // Path through the component of (side - X) meeting the bag at the side's end.
  auto side_path = [&](NodeId near, NodeId far) -> Path {
    SplitContext ctx = split_context(g, d, near, far);
    for (const auto& c : ctx.components) {
      if (!c.intersects(d.bag(far))) continue;
      VertexSet allowed = c;
      allowed.insert(u);
      allowed.insert(v);
      return shortest_path(g, u, v, allowed);
    }
    return {};
  };

  AdhesionCycle out;
  out.t0 = t0;
  out.far_path = side_path(s, t0);
  out.near_path = side_path(t0, s);
  if (out.far_path.empty() || out.near_path.empty())
    throw PreconditionError("adhesion does not see both u and v from each side; decomposition is not atomic");
  out.cycle = out.far_path;
  for (auto it = out.near_path.rbegin() + 1; it + 1 != out.near_path.rend(); ++it) out.cycle.push_back(*it);
  return out;
}

}  // namespace ctwkit
