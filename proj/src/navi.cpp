#include "ctwkit/navi.hpp"

#include <algorithm>

#include "ctwkit/errors.hpp"

namespace ctwkit {

void SubNavi::set_path(Path path) {
  if (path.empty()) throw PreconditionError("cannot store an empty path");
  if (path.front() > path.back()) std::reverse(path.begin(), path.end());
  PairKey key{path.front(), path.back()};
  paths_[key] = std::move(path);
}

Path SubNavi::path(Vertex x, Vertex y) const {
  auto it = paths_.find(pair_key(x, y));
  if (it == paths_.end())
    throw PreconditionError("navi has no path for {" + std::to_string(x) + "," + std::to_string(y) + "}");
  Path p = it->second;
  if (p.front() != x) std::reverse(p.begin(), p.end());
  return p;
}

int SubNavi::length() const {
  int best = 0;
  for (const auto& [key, p] : paths_) best = std::max(best, static_cast<int>(p.size()) - 1);
  return best;
}

Path lex_min_geodesic(const Graph& g, const DistanceMatrix& dist, Vertex x, Vertex y) {
  const int target = dist.at(x, y);
  if (target == DistanceMatrix::kUnreachable) return {};
  if (x == y) return {x};
  const int n = g.vertex_count();

  VertexSet allowed(n);
  for (Vertex v = 0; v < n; ++v) {
    int dx = dist.at(x, v);
    int dy = dist.at(v, y);
    if (dx != DistanceMatrix::kUnreachable && dy != DistanceMatrix::kUnreachable && dx + dy == target)
      allowed.insert(v);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == x || v == y || !allowed.contains(v)) continue;
    allowed.erase(v);
    if (bfs_distances(g, x, allowed)[static_cast<std::size_t>(y)] != target) allowed.insert(v);
  }

  Path path(static_cast<std::size_t>(target) + 1, -1);
  allowed.for_each([&](Vertex v) {
    auto& slot = path[static_cast<std::size_t>(dist.at(x, v))];
    if (slot >= 0) throw InternalError("two geodesic paths share a vertex set");
    slot = v;
  });
  for (std::size_t i = 0; i < path.size(); ++i)
    if (path[i] < 0 || (i > 0 && !g.has_edge(path[i - 1], path[i])))
      throw InternalError("greedy geodesic selection did not leave a path");
  return path;
}

SubNavi build_geodesic_navi(const Graph& g, const DistanceMatrix& dist) {
  if (!is_connected(g)) throw PreconditionError("geodesic navis need a connected graph");
  const int n = g.vertex_count();
  std::vector<PairKey> keys;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x; y < n; ++y) keys.emplace_back(x, y);
  std::vector<Path> paths(keys.size());
  const long long count = static_cast<long long>(keys.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < count; ++i) {
    auto [x, y] = keys[static_cast<std::size_t>(i)];
    paths[static_cast<std::size_t>(i)] = lex_min_geodesic(g, dist, x, y);
  }
  SubNavi navi(true);
  for (auto& p : paths) navi.set_path(std::move(p));
  return navi;
}

SubNavi build_geodesic_navi(const Graph& g) { return build_geodesic_navi(g, distance_matrix(g)); }

namespace {

Path segment(const Path& p, std::size_t i, std::size_t j) {
  Path s(p.begin() + static_cast<std::ptrdiff_t>(i), p.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  if (s.front() > s.back()) std::reverse(s.begin(), s.end());
  return s;
}

std::string pair_text(Vertex a, Vertex b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

}  // namespace

NaviReport check_subnavi(const Graph& g, const DistanceMatrix& dist, const SubNavi& navi) {
  NaviReport r;
  auto fail = [&r](NaviViolation v, Vertex x, Vertex y, Vertex a, Vertex b, std::string msg) {
    r.violation = v;
    r.x = x;
    r.y = y;
    r.a = a;
    r.b = b;
    r.message = std::move(msg);
    return r;
  };

  // Shorter paths first, so a witness names the shortest offending path.
  std::vector<const std::pair<const PairKey, Path>*> order;
  for (const auto& entry : navi.paths()) order.push_back(&entry);
  std::stable_sort(order.begin(), order.end(),
                   [](auto* l, auto* r2) { return l->second.size() < r2->second.size(); });

  const int n = g.vertex_count();
  for (const auto* entry : order) {
    const auto& [key, p] = *entry;
    auto [x, y] = key;
    if (p.empty() || p.front() != x || p.back() != y)
      return fail(NaviViolation::kWrongEndpoints, x, y, -1, -1, "path stored for " + pair_text(x, y) + " has other endpoints");
    VertexSet seen(n);
    for (std::size_t i = 0; i < p.size(); ++i) {
      Vertex v = p[i];
      if (v < 0 || v >= n || seen.contains(v) || (i > 0 && !g.has_edge(p[i - 1], v)))
        return fail(NaviViolation::kNotAPath, x, y, -1, -1, "sequence stored for " + pair_text(x, y) + " is not a path");
      seen.insert(v);
    }
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i; j < p.size(); ++j) {
        PairKey sub = pair_key(p[i], p[j]);
        auto it = navi.paths().find(sub);
        if (it == navi.paths().end())
          return fail(NaviViolation::kMissingKey, x, y, p[i], p[j],
                      "pair " + pair_text(p[i], p[j]) + " on path " + pair_text(x, y) + " has no key");
        if (it->second != segment(p, i, j))
          return fail(NaviViolation::kInconsistent, x, y, p[i], p[j],
                      "path for " + pair_text(p[i], p[j]) + " differs from its segment on path " + pair_text(x, y));
      }
    if (navi.geodesic() && static_cast<int>(p.size()) - 1 != dist.at(x, y))
      return fail(NaviViolation::kNotGeodesic, x, y, -1, -1, "path for " + pair_text(x, y) + " is not geodesic");
  }
  return r;
}

NaviReport check_subnavi(const Graph& g, const SubNavi& navi) {
  return check_subnavi(g, distance_matrix(g), navi);
}

namespace {

void add_with_segments(SubNavi& out, const Path& p, const SubNavi* source) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i; j < p.size(); ++j) {
      if (out.contains(p[i], p[j])) continue;
      out.set_path(source ? source->path(p[i], p[j]) : segment(p, i, j));
    }
}

std::vector<PairKey> in_bag_pairs(const TreeDecomposition& d) {
  std::vector<PairKey> keys;
  for (const auto& bag : d.bags()) {
    auto members = bag.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i; j < members.size(); ++j) keys.emplace_back(members[i], members[j]);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

}  // namespace

SubNavi extract_d_navi(const SubNavi& navi, const TreeDecomposition& d) {
  SubNavi out(navi.geodesic());
  for (auto [x, y] : in_bag_pairs(d)) add_with_segments(out, navi.path(x, y), &navi);
  return out;
}

SubNavi geodesic_d_navi(const Graph& g, const DistanceMatrix& dist, const TreeDecomposition& d) {
  auto keys = in_bag_pairs(d);
  std::vector<Path> paths(keys.size());
  const long long count = static_cast<long long>(keys.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < count; ++i) {
    auto [x, y] = keys[static_cast<std::size_t>(i)];
    paths[static_cast<std::size_t>(i)] = lex_min_geodesic(g, dist, x, y);
  }
  SubNavi out(true);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (paths[i].empty()) throw PreconditionError("geodesic D-navis need a connected graph");
    add_with_segments(out, paths[i], nullptr);
  }
  return out;
}

NaviReport check_d_navi(const Graph& g, const SubNavi& navi, const TreeDecomposition& d) {
  NaviReport r = check_subnavi(g, navi);
  if (!r.ok()) return r;
  for (auto [x, y] : in_bag_pairs(d))
    if (!navi.contains(x, y)) {
      r.violation = NaviViolation::kMissingKey;
      r.x = x;
      r.y = y;
      r.message = "in-bag pair " + pair_text(x, y) + " has no key";
      return r;
    }
  return r;
}

long long connectify_width_bound(int width, int navi_length) {
  const long long w = width;
  return w + (w + 1) * w / 2 * (static_cast<long long>(navi_length) - 1);
}

ConnectifyResult connectify(const Graph& g, const TreeDecomposition& d, const SubNavi& dnavi) {
  if (!is_connected(g)) throw PreconditionError("connectify requires a connected graph");
  auto valid = validate(g, d);
  if (!valid.valid()) throw PreconditionError("connectify requires a valid decomposition: " + valid.first_violation);
  auto check = check_d_navi(g, dnavi, d);
  if (!check.ok()) throw PreconditionError("not a D-navi: " + check.message);

  ConnectifyResult r;
  r.decomposition = d;
  for (NodeId t = 0; t < d.node_count(); ++t) {
    auto members = d.bag(t).to_vector();
    VertexSet grown = d.bag(t);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        for (Vertex v : dnavi.path(members[i], members[j])) grown.insert(v);
    r.decomposition.bag(t) = std::move(grown);
  }
  r.width_before = d.width();
  r.width_after = r.decomposition.width();
  r.navi_length = dnavi.length();
  r.width_bound = connectify_width_bound(r.width_before, r.navi_length);
  if (r.width_after > r.width_bound) throw InternalError("connectify exceeded its width bound");
  return r;
}

}  // namespace ctwkit
