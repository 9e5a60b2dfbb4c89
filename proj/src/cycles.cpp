#include "ctwkit/cycles.hpp"

#include <algorithm>
#include <optional>

#include "ctwkit/errors.hpp"

namespace ctwkit {

Cycle::Cycle(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) return;
  auto least = std::min_element(vertices_.begin(), vertices_.end());
  std::rotate(vertices_.begin(), least, vertices_.end());
  if (vertices_.size() > 2 && vertices_.back() < vertices_[1]) std::reverse(vertices_.begin() + 1, vertices_.end());
}

bool is_cycle_of(const Graph& g, const std::vector<Vertex>& vertices) {
  const int n = g.vertex_count();
  if (vertices.size() < 3) return false;
  VertexSet seen(n);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex v = vertices[i];
    if (v < 0 || v >= n || seen.contains(v)) return false;
    seen.insert(v);
    if (!g.has_edge(v, vertices[(i + 1) % vertices.size()])) return false;
  }
  return true;
}

EdgeVector EdgeVector::of_cycle(const Graph& g, const Cycle& c) {
  EdgeVector z(g.edge_count());
  const int k = c.length();
  for (int i = 0; i < k; ++i) {
    int e = g.edge_index(c[i], c[(i + 1) % k]);
    if (e < 0) throw PreconditionError("cycle uses a non-edge");
    z.toggle(e);
  }
  return z;
}

EdgeVector EdgeVector::of_path(const Graph& g, const Path& p) {
  EdgeVector z(g.edge_count());
  for (std::size_t i = 1; i < p.size(); ++i) {
    int e = g.edge_index(p[i - 1], p[i]);
    if (e < 0) throw PreconditionError("path uses a non-edge");
    z.toggle(e);
  }
  return z;
}

std::vector<int> EdgeVector::edges() const {
  std::vector<int> out;
  for (auto p = bits_.find_first(); p != boost::dynamic_bitset<std::uint64_t>::npos; p = bits_.find_next(p))
    out.push_back(static_cast<int>(p));
  return out;
}

bool EdgeVector::in_cycle_space(const Graph& g) const {
  std::vector<int> parity(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int e : edges()) {
    parity[static_cast<std::size_t>(g.edge(e).first)] ^= 1;
    parity[static_cast<std::size_t>(g.edge(e).second)] ^= 1;
  }
  return std::none_of(parity.begin(), parity.end(), [](int p) { return p != 0; });
}

VertexSet EdgeVector::support(const Graph& g) const {
  VertexSet s(g.vertex_count());
  for (int e : edges()) {
    s.insert(g.edge(e).first);
    s.insert(g.edge(e).second);
  }
  return s;
}

bool is_geodesic_cycle(const Graph& g, const DistanceMatrix& dist, const Cycle& c) {
  if (!is_cycle_of(g, c.vertices())) throw PreconditionError("not a cycle of the graph");
  const int k = c.length();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (dist.at(c[i], c[j]) != std::min(j - i, k - (j - i))) return false;
  return true;
}

bool is_geodesic_cycle(const Graph& g, const Cycle& c) { return is_geodesic_cycle(g, distance_matrix(g), c); }

namespace {

// Depth-first growth of a path rooted at the least vertex of the cycle. Each
// pair on the path pins the cycle length: a shortcut (distance < path gap)
// forces k = distance + gap, a geodesic gap g requires k ≥ 2g.
class RootedCycleSearch {
 public:
  RootedCycleSearch(const Graph& g, const DistanceMatrix& dist, Vertex root, int max_length,
                    const std::function<void(const Cycle&)>& visit)
      : g_(g), dist_(dist), root_(root), max_length_(max_length), visit_(visit), on_path_(g.vertex_count()) {}

  void run() {
    path_.push_back(root_);
    on_path_.insert(root_);
    extend(0, 3);
  }

 private:
  void extend(int forced, int min_k) {
    const int size = static_cast<int>(path_.size());
    const Vertex last = path_.back();
    if (size >= 3 && g_.has_edge(last, root_) && path_[1] < last && (forced == 0 || forced == size) &&
        min_k <= size) {
      Cycle c(path_);
      if (is_geodesic_cycle(g_, dist_, c)) visit_(c);
    }
    const int limit = forced != 0 ? forced : max_length_;
    if (size >= limit) return;
    for (Vertex x : g_.neighbors(last)) {
      if (x <= root_ || on_path_.contains(x)) continue;
      int f = forced;
      int lo = std::max(min_k, size + 1);
      bool ok = true;
      for (int i = 0; i < size && ok; ++i) {
        const int gap = size - i;
        const int d = dist_.at(path_[static_cast<std::size_t>(i)], x);
        if (d == gap) {
          lo = std::max(lo, 2 * gap);
        } else if (f == 0 || f == d + gap) {
          f = d + gap;
        } else {
          ok = false;
        }
      }
      if (!ok || (f != 0 && f < lo) || lo > max_length_) continue;
      path_.push_back(x);
      on_path_.insert(x);
      extend(f, lo);
      on_path_.erase(x);
      path_.pop_back();
    }
  }

  const Graph& g_;
  const DistanceMatrix& dist_;
  Vertex root_;
  int max_length_;
  const std::function<void(const Cycle&)>& visit_;
  std::vector<Vertex> path_;
  VertexSet on_path_;
};

int cycle_length_cap(const DistanceMatrix& dist) { return 2 * dist.diameter() + 1; }

}  // namespace

void geodesic_cycles_from_root(const Graph& g, const DistanceMatrix& dist, Vertex root, int max_length,
                               const std::function<void(const Cycle&)>& visit) {
  RootedCycleSearch(g, dist, root, max_length, visit).run();
}

std::vector<Cycle> enumerate_geodesic_cycles(const Graph& g, const DistanceMatrix& dist) {
  const int n = g.vertex_count();
  const int cap = cycle_length_cap(dist);
  std::vector<std::vector<Cycle>> per_root(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
  for (int root = 0; root < n; ++root) {
    auto& bucket = per_root[static_cast<std::size_t>(root)];
    geodesic_cycles_from_root(g, dist, root, cap, [&bucket](const Cycle& c) { bucket.push_back(c); });
  }
  std::vector<Cycle> out;
  for (auto& bucket : per_root) out.insert(out.end(), bucket.begin(), bucket.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cycle> enumerate_geodesic_cycles(const Graph& g) { return enumerate_geodesic_cycles(g, distance_matrix(g)); }

int longest_geodesic_cycle(const Graph& g, const DistanceMatrix& dist) {
  const int cap = cycle_length_cap(dist);
  int best = 1;
  for (Vertex root = 0; root < g.vertex_count() && best < cap; ++root)
    geodesic_cycles_from_root(g, dist, root, cap, [&best](const Cycle& c) { best = std::max(best, c.length()); });
  return best;
}

int longest_geodesic_cycle(const Graph& g) { return longest_geodesic_cycle(g, distance_matrix(g)); }

Closure c_closure(const Graph& g, const std::vector<Cycle>& cycles, const VertexSet& x) {
  Closure cl{VertexSet(g.vertex_count()), EdgeVector(g.edge_count()), {}};
  std::vector<char> edge_in(static_cast<std::size_t>(g.edge_count()), 0);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& c = cycles[i];
    bool meets = std::any_of(c.vertices().begin(), c.vertices().end(), [&](Vertex v) { return x.contains(v); });
    if (!meets) continue;
    cl.contributing.push_back(static_cast<int>(i));
    for (int j = 0; j < c.length(); ++j) {
      cl.vertices.insert(c[j]);
      int e = g.edge_index(c[j], c[(j + 1) % c.length()]);
      if (e < 0) throw PreconditionError("cycle uses a non-edge");
      edge_in[static_cast<std::size_t>(e)] = 1;
    }
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (edge_in[static_cast<std::size_t>(e)]) cl.edges.toggle(e);
  return cl;
}

namespace {

// Connectivity of the subgraph formed by an edge set (plus isolated `extra` vertices).
bool edge_subgraph_connected(const Graph& g, const EdgeVector& edges, const VertexSet& vertices) {
  Vertex start = vertices.first();
  if (start < 0) return false;
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g.vertex_count()));
  for (int e : edges.edges()) {
    auto [u, v] = g.edge(e);
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  VertexSet seen(g.vertex_count());
  std::vector<Vertex> stack{start};
  seen.insert(start);
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adj[static_cast<std::size_t>(u)])
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
  }
  return vertices.subset_of(seen);
}

}  // namespace

ClosureDistanceReport closure_distance_bound(const Graph& g, const DistanceMatrix& dist,
                                             const std::vector<Cycle>& cycles, int k, const VertexSet& x) {
  ClosureDistanceReport r;
  auto members = x.to_vector();
  r.bound = static_cast<long long>(k) * (static_cast<long long>(members.size()) - 1);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      r.max_distance = std::max(r.max_distance, dist.at(members[i], members[j]));

  if (members.empty()) {
    r.failed_precondition = "X is empty";
    return r;
  }
  if (members.size() == 1) {
    r.preconditions_hold = true;
    r.bound = 0;
    return r;
  }
  if (std::any_of(cycles.begin(), cycles.end(), [k](const Cycle& c) { return c.length() > k; })) {
    r.failed_precondition = "a cycle is longer than k";
    return r;
  }
  Closure cl = c_closure(g, cycles, x);
  if (!x.subset_of(cl.vertices)) {
    r.failed_precondition = "X is not contained in its closure";
    return r;
  }
  if (!edge_subgraph_connected(g, cl.edges, cl.vertices)) {
    r.failed_precondition = "the closure of X is disconnected";
    return r;
  }
  r.preconditions_hold = true;
  if (r.max_distance > r.bound) throw InternalError("closure distance bound violated");
  return r;
}

int cycle_space_dimension(const Graph& g) {
  return g.edge_count() - g.vertex_count() + static_cast<int>(components(g).size());
}

namespace {

// Incremental GF(2) row echelon form; each row remembers which generators
// were summed to produce it.
class Gf2Basis {
 public:
  Gf2Basis(int dimension, int generators) : dimension_(dimension), generators_(generators) {}

  // Returns true when the vector raised the rank.
  bool add(EdgeVector v, int generator) {
    boost::dynamic_bitset<std::uint64_t> combo(static_cast<std::size_t>(generators_));
    combo.set(static_cast<std::size_t>(generator));
    reduce(v, combo);
    if (v.empty()) return false;
    rows_.push_back({std::move(v), std::move(combo)});
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

  // Generator combination summing to z, or nullopt when z is outside the span.
  std::optional<boost::dynamic_bitset<std::uint64_t>> solve(EdgeVector z) const {
    boost::dynamic_bitset<std::uint64_t> combo(static_cast<std::size_t>(generators_));
    reduce(z, combo);
    if (!z.empty()) return std::nullopt;
    return combo;
  }

 private:
  struct Row {
    EdgeVector vec;
    boost::dynamic_bitset<std::uint64_t> combo;
  };

  void reduce(EdgeVector& v, boost::dynamic_bitset<std::uint64_t>& combo) const {
    for (const auto& row : rows_) {
      if (v.contains(row.vec.lowest())) {
        v += row.vec;
        combo ^= row.combo;
      }
    }
  }

  int dimension_;
  int generators_;
  // Pivots are the lowest edge of each row; rows are fully reduced against
  // earlier pivots as they are inserted, so one forward pass suffices.
  std::vector<Row> rows_;
};

}  // namespace

std::vector<Cycle> geodesic_cycle_basis(const Graph& g, const DistanceMatrix& dist) {
  const int target = cycle_space_dimension(g);
  std::vector<Cycle> all = enumerate_geodesic_cycles(g, dist);
  Gf2Basis basis(g.edge_count(), static_cast<int>(all.size()));
  std::vector<Cycle> out;
  for (std::size_t i = 0; i < all.size() && basis.rank() < target; ++i)
    if (basis.add(EdgeVector::of_cycle(g, all[i]), static_cast<int>(i))) out.push_back(all[i]);
  if (basis.rank() != target)
    throw InternalError("geodesic cycles span rank " + std::to_string(basis.rank()) + " instead of " +
                        std::to_string(target));
  return out;
}

std::vector<Cycle> geodesic_cycle_basis(const Graph& g) { return geodesic_cycle_basis(g, distance_matrix(g)); }

std::vector<int> decompose(const Graph& g, const EdgeVector& z, const std::vector<Cycle>& generators) {
  if (!z.in_cycle_space(g)) throw PreconditionError("edge set has a vertex of odd degree");
  Gf2Basis basis(g.edge_count(), static_cast<int>(generators.size()));
  for (std::size_t i = 0; i < generators.size(); ++i)
    basis.add(EdgeVector::of_cycle(g, generators[i]), static_cast<int>(i));
  auto combo = basis.solve(z);
  if (!combo) throw PreconditionError("edge set is outside the span of the given cycles");
  std::vector<int> coeff(generators.size(), 0);
  for (std::size_t i = 0; i < generators.size(); ++i) coeff[i] = combo->test(i) ? 1 : 0;
  return coeff;
}

Path find_closure_path(const Graph& g, const VertexSet& separator, const VertexSet& far_side,
                       const VertexSet& near_side, const Path& far_path, const Path& near_path,
                       const std::vector<Cycle>& cycles) {
  if (!((far_side | near_side) == g.all_vertices()) || !((far_side & near_side) == separator))
    throw PreconditionError("sides do not form a separation with the given separator");
  const VertexSet far_only = far_side - separator;
  const VertexSet near_only = near_side - separator;
  for (auto [u, v] : g.edges())
    if ((far_only.contains(u) && near_only.contains(v)) || (far_only.contains(v) && near_only.contains(u)))
      throw PreconditionError("an edge joins the two sides outside the separator");

  if (far_path.size() < 2 || near_path.size() < 2 || far_path.front() != near_path.front() ||
      far_path.back() != near_path.back())
    throw PreconditionError("both paths must run between the same two vertices");
  const Vertex x = far_path.front();
  const Vertex y = far_path.back();
  for (std::size_t i = 1; i + 1 < far_path.size(); ++i)
    if (!far_only.contains(far_path[i])) throw PreconditionError("far path leaves the far side");
  for (Vertex v : near_path)
    if (!near_side.contains(v)) throw PreconditionError("near path leaves the near side");

  std::vector<Vertex> loop = far_path;
  for (auto it = near_path.rbegin() + 1; it + 1 != near_path.rend(); ++it) loop.push_back(*it);
  if (!is_cycle_of(g, loop)) throw PreconditionError("the two paths do not form a cycle");

  const EdgeVector far_edges = EdgeVector::of_path(g, far_path);
  const EdgeVector cycle = far_edges + EdgeVector::of_path(g, near_path);
  const auto coeff = decompose(g, cycle, cycles);

  EdgeVector walk = far_edges;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (!coeff[i]) continue;
    const auto& vs = cycles[i].vertices();
    if (std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return far_only.contains(v); }))
      walk += EdgeVector::of_cycle(g, cycles[i]);
  }

  // `walk` has odd degree exactly at x and y, so they share a component.
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g.vertex_count()));
  for (int e : walk.edges()) {
    auto [u, v] = g.edge(e);
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Vertex> queue{x};
  parent[static_cast<std::size_t>(x)] = x;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Vertex w : adj[static_cast<std::size_t>(queue[head])])
      if (parent[static_cast<std::size_t>(w)] < 0) {
        parent[static_cast<std::size_t>(w)] = queue[head];
        queue.push_back(w);
      }
  if (parent[static_cast<std::size_t>(y)] < 0) throw InternalError("no x-y path in the far path plus far cycles");
  Path out{y};
  while (out.back() != x) out.push_back(parent[static_cast<std::size_t>(out.back())]);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace ctwkit
