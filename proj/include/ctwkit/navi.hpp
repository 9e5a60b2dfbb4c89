#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ctwkit/graph.hpp"
#include "ctwkit/tree_decomposition.hpp"

namespace ctwkit {

/// Unordered vertex pair stored as (min, max); (x, x) keys the trivial path.
using PairKey = std::pair<Vertex, Vertex>;

inline PairKey pair_key(Vertex x, Vertex y) { return x <= y ? PairKey{x, y} : PairKey{y, x}; }

/// A partial system of paths, one per key, closed under taking subpaths.
///
/// The path stored under (x, y) runs from the smaller to the larger vertex.
class SubNavi {
 public:
  SubNavi() = default;
  explicit SubNavi(bool geodesic) : geodesic_(geodesic) {}

  /// Stores a path for its endpoint pair; the path may be given in either direction.
  void set_path(Path path);
  bool contains(Vertex x, Vertex y) const { return paths_.contains(pair_key(x, y)); }
  /// Path from x to y. Throws PreconditionError when the key is missing.
  Path path(Vertex x, Vertex y) const;

  const std::map<PairKey, Path>& paths() const { return paths_; }
  std::size_t size() const { return paths_.size(); }

  bool geodesic() const { return geodesic_; }
  void set_geodesic(bool g) { geodesic_ = g; }

  /// Longest stored path, in edges.
  int length() const;

 private:
  std::map<PairKey, Path> paths_;
  bool geodesic_ = false;
};

/// The geodesic x-y path whose characteristic vector is lexicographically
/// minimal, comparing coordinates in vertex order with 0 < 1: earlier
/// vertices are avoided whenever some geodesic allows it.
/// Returns an empty path when x and y are disconnected.
Path lex_min_geodesic(const Graph& g, const DistanceMatrix& dist, Vertex x, Vertex y);

/// All pairs {x, y} (x ≤ y), computed in parallel, merged in key order.
/// Throws PreconditionError when g is disconnected.
SubNavi build_geodesic_navi(const Graph& g);
SubNavi build_geodesic_navi(const Graph& g, const DistanceMatrix& dist);

enum class NaviViolation { kNone, kNotAPath, kWrongEndpoints, kMissingKey, kInconsistent, kNotGeodesic };

struct NaviReport {
  NaviViolation violation = NaviViolation::kNone;
  // Witness: stored path P_xy and, for consistency failures, the pair a, b on it.
  Vertex x = -1, y = -1, a = -1, b = -1;
  std::string message;

  bool ok() const { return violation == NaviViolation::kNone; }
};

NaviReport check_subnavi(const Graph& g, const SubNavi& navi);
NaviReport check_subnavi(const Graph& g, const DistanceMatrix& dist, const SubNavi& navi);

/// Keys: every in-bag pair, then every pair on a stored path. Throws
/// PreconditionError when the navi lacks an in-bag pair.
SubNavi extract_d_navi(const SubNavi& navi, const TreeDecomposition& d);

/// Like extract_d_navi over the lexicographically minimal geodesic navi,
/// computing only the paths for in-bag pairs.
SubNavi geodesic_d_navi(const Graph& g, const DistanceMatrix& dist, const TreeDecomposition& d);

/// Checks that `navi` is a sub-navi holding every in-bag pair of d.
NaviReport check_d_navi(const Graph& g, const SubNavi& navi, const TreeDecomposition& d);

/// w + C(w+1, 2) * (l - 1).
long long connectify_width_bound(int width, int navi_length);

struct ConnectifyResult {
  TreeDecomposition decomposition;
  int width_before = 0;
  int width_after = 0;
  int navi_length = 0;
  long long width_bound = 0;
};

/// Replaces each bag by the union of the stored paths between its members.
/// Requires g connected, d valid and `dnavi` a D-navi for d.
ConnectifyResult connectify(const Graph& g, const TreeDecomposition& d, const SubNavi& dnavi);

}  // namespace ctwkit
