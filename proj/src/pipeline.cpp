#include "ctwkit/pipeline.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <unordered_map>

#include "ctwkit/cycles.hpp"
#include "ctwkit/errors.hpp"
#include "ctwkit/navi.hpp"

namespace ctwkit {

long long theorem1_bound(int tw, int k) {
  const long long t = tw;
  return t + (t + 1) * t / 2 * (static_cast<long long>(k) * t - 1);
}

namespace {

struct BlockSeed {
  TreeDecomposition decomposition;
  bool certified = false;
};

TreeDecomposition restrict_to(const TreeDecomposition& d, const Subgraph& sub, int parent_n) {
  const auto local = sub.from_parent(parent_n);
  TreeDecomposition out(sub.graph.vertex_count());
  for (const auto& bag : d.bags()) {
    VertexSet b(sub.graph.vertex_count());
    bag.for_each([&](Vertex v) {
      if (local[static_cast<std::size_t>(v)] >= 0) b.insert(local[static_cast<std::size_t>(v)]);
    });
    out.add_node(std::move(b));
  }
  for (auto [a, b] : d.edges()) out.add_edge(a, b);
  return prune_empty_bags(std::move(out));
}

BlockSeed seed_for_block(const Subgraph& sub, const std::optional<TreeDecomposition>& seed, int parent_n,
                         int exact_limit) {
  const Graph& b = sub.graph;
  const bool exact_ok = b.vertex_count() <= exact_limit;
  if (seed) {
    BlockSeed s{restrict_to(*seed, sub, parent_n), false};
    if (exact_ok) s.certified = exact_treewidth(b, exact_limit).width == s.decomposition.width();
    return s;
  }
  if (exact_ok) return {exact_treewidth(b, exact_limit).decomposition, true};
  return {min_degree_decomposition(b).decomposition, false};
}

TreeDecomposition lift(const TreeDecomposition& d, const Subgraph& sub, int parent_n) {
  TreeDecomposition out(parent_n);
  for (const auto& bag : d.bags()) {
    VertexSet b(parent_n);
    bag.for_each([&](Vertex v) { b.insert(sub.to_parent[static_cast<std::size_t>(v)]); });
    out.add_node(std::move(b));
  }
  for (auto [a, b] : d.edges()) out.add_edge(a, b);
  return out;
}

}  // namespace

PipelineResult ctw_upper_bound(const Graph& g, const std::optional<TreeDecomposition>& seed, int exact_limit) {
  const int n = g.vertex_count();
  if (n == 0) throw PreconditionError("graph has no vertices");
  if (seed) {
    auto report = validate(g, *seed);
    if (!report.valid()) throw PreconditionError("seed decomposition is invalid: " + report.first_violation);
  }

  PipelineResult r;
  r.n = n;
  r.m = g.edge_count();
  r.tw_certified = true;
  r.k = longest_geodesic_cycle(g);

  std::vector<TreeDecomposition> parts;
  for (const auto& block : blocks(g).blocks) {
    if (block.count() <= 2) {
      // Bridge or isolated vertex: one bag.
      TreeDecomposition one(n);
      one.add_node(block);
      r.tw = std::max(r.tw, block.count() - 1);
      r.width_before = std::max(r.width_before, block.count() - 1);
      parts.push_back(std::move(one));
      continue;
    }
    const Subgraph sub = induced_subgraph(g, block);
    BlockSeed s = seed_for_block(sub, seed, n, exact_limit);
    r.tw = std::max(r.tw, s.decomposition.width());
    r.tw_certified = r.tw_certified && s.certified;

    const DistanceMatrix dist = distance_matrix(sub.graph);
    const TreeDecomposition atomic = atomize(sub.graph, s.decomposition);
    const SubNavi dnavi = geodesic_d_navi(sub.graph, dist, atomic);
    const ConnectifyResult c = connectify(sub.graph, atomic, dnavi);
    r.width_before = std::max(r.width_before, c.width_before);
    r.l_navi = std::max(r.l_navi, c.navi_length);
    parts.push_back(lift(c.decomposition, sub, n));
  }

  r.ctd = glue_block_decompositions(g, parts);
  auto report = validate(g, r.ctd);
  if (!report.valid() || !report.connected_parts)
    throw InternalError("pipeline produced a decomposition that is not connected and valid");
  r.width_after = r.ctd.width();
  r.theorem1_bound = theorem1_bound(r.tw, r.k);
  r.bound_satisfied = r.width_after <= r.theorem1_bound;
  return r;
}

int exact_ctw_limit() {
  if (const char* env = std::getenv("CTWKIT_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 64) return static_cast<int>(v);
  }
  return kDefaultExactCtwLimit;
}

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

// Decides whether a set S (with N(S) inside the parent bag P) can be placed
// in a subtree hanging below P whose bags are connected and have at most
// w + 1 vertices. The subtree root R is connected, holds N(S), lies in
// S ∪ P and meets S; the components of S - R are grouped, and each group is
// solved below R.
class ConnectedWidthSearch {
 public:
  explicit ConnectedWidthSearch(const Graph& g) : n_(g.vertex_count()), adj_(static_cast<std::size_t>(n_), 0) {
    for (auto [u, v] : g.edges()) {
      adj_[static_cast<std::size_t>(u)] |= bit(v);
      adj_[static_cast<std::size_t>(v)] |= bit(u);
    }
    all_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
  }

  bool decide(int w) {
    w_ = w;
    memo_.clear();
    return solve(all_, 0);
  }

  TreeDecomposition witness() {
    TreeDecomposition d(n_);
    build(all_, 0, -1, d);
    return d;
  }

 private:
  struct Choice {
    bool ok = false;
    Mask root = 0;
    std::vector<Mask> groups;
  };

  struct KeyHash {
    std::size_t operator()(const std::pair<Mask, Mask>& k) const {
      return std::hash<Mask>()(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
    }
  };

  Mask neighbors(Mask s) const {
    Mask out = 0;
    for (Mask m = s; m; m &= m - 1) out |= adj_[static_cast<std::size_t>(std::countr_zero(m))];
    return out & ~s;
  }

  bool connected(Mask s) const {
    if (!s) return false;
    Mask comp = s & (~s + 1);
    for (Mask grow = comp; grow;) {
      Mask next = neighbors(comp) & s & ~comp;
      comp |= next;
      grow = next;
    }
    return comp == s;
  }

  std::vector<Mask> components(Mask s) const {
    std::vector<Mask> out;
    while (s) {
      Mask comp = s & (~s + 1);
      for (Mask grow = comp; grow;) {
        Mask next = neighbors(comp) & s & ~comp;
        comp |= next;
        grow = next;
      }
      out.push_back(comp);
      s &= ~comp;
    }
    return out;
  }

  // Set partitions of comps[i..], built as groups in `current`.
  bool partitions(const std::vector<Mask>& comps, std::size_t i, std::vector<Mask>& current, Mask root,
                  std::vector<Mask>& found) {
    if (i == comps.size()) {
      for (Mask grp : current)
        if (!solve(grp, root)) return false;
      found = current;
      return true;
    }
    for (std::size_t j = 0; j < current.size(); ++j) {
      current[j] |= comps[i];
      bool ok = partitions(comps, i + 1, current, root, found);
      current[j] &= ~comps[i];
      if (ok) return true;
    }
    current.push_back(comps[i]);
    bool ok = partitions(comps, i + 1, current, root, found);
    current.pop_back();
    return ok;
  }

  bool solve(Mask s, Mask p) {
    auto key = std::make_pair(s, p);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.ok;
    memo_[key] = Choice{};

    const Mask required = neighbors(s) & p;
    const Mask optional = (s | p) & ~required;
    Choice best;
    // Enumerate R = required ∪ extra over all subsets extra of optional.
    for (Mask extra = optional;; extra = (extra - 1) & optional) {
      Mask root = required | extra;
      if ((root & s) && std::popcount(root) <= w_ + 1 && connected(root)) {
        auto comps = components(s & ~root);
        std::vector<Mask> current, found;
        if (partitions(comps, 0, current, root, found)) {
          best = {true, root, found};
          break;
        }
      }
      if (!extra) break;
    }
    memo_[key] = best;
    return best.ok;
  }

  void build(Mask s, Mask p, NodeId parent, TreeDecomposition& d) {
    const Choice& c = memo_.at({s, p});
    VertexSet bag(n_);
    for (Mask m = c.root; m; m &= m - 1) bag.insert(std::countr_zero(m));
    NodeId t = d.add_node(bag);
    if (parent >= 0) d.add_edge(parent, t);
    const Mask root = c.root;
    const std::vector<Mask> groups = c.groups;
    for (Mask grp : groups) build(grp, root, t, d);
  }

  int n_;
  std::vector<Mask> adj_;
  Mask all_ = 0;
  int w_ = 0;
  std::unordered_map<std::pair<Mask, Mask>, Choice, KeyHash> memo_;
};

}  // namespace

ExactCtwResult exact_ctw_with_witness(const Graph& g, int max_n) {
  const int n = g.vertex_count();
  if (n == 0) throw PreconditionError("graph has no vertices");
  if (n > max_n || n > 64)
    throw LimitError("exact connected tree-width is limited to " + std::to_string(std::min(max_n, 64)) +
                     " vertices (graph has " + std::to_string(n) + ")");
  ConnectedWidthSearch search(g);
  for (int w = 0;; ++w)
    if (search.decide(w)) return {w, search.witness()};
}

int exact_ctw_small(const Graph& g, int max_n) { return exact_ctw_with_witness(g, max_n).width; }

int exact_ctw_small(const Graph& g) { return exact_ctw_small(g, exact_ctw_limit()); }

}  // namespace ctwkit
