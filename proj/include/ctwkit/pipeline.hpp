#pragma once

#include <optional>
#include <vector>

#include "ctwkit/atomizer.hpp"
#include "ctwkit/graph.hpp"
#include "ctwkit/tree_decomposition.hpp"

namespace ctwkit {

/// tw + C(tw+1, 2) * (k*tw - 1).
long long theorem1_bound(int tw, int k);

struct PipelineResult {
  TreeDecomposition ctd;
  int n = 0;
  int m = 0;
  int tw = 0;                 // seed width (max over blocks)
  bool tw_certified = false;  // seed width known to equal the treewidth
  int k = 1;                  // longest geodesic cycle, 1 for forests
  int l_navi = 0;             // longest stored path over the block D-navis
  int width_before = 0;       // max width of the atomized block decompositions
  int width_after = 0;
  long long theorem1_bound = 0;
  bool bound_satisfied = false;
};

/// Block-wise construction of a connected tree decomposition: bridges and
/// isolated vertices get one bag; each 2-connected block gets a seed
/// (restricted from `seed`, or exact treewidth, or min-degree above
/// `exact_limit`), which is atomized and connectified along a geodesic
/// D-navi. The block results are glued at cut vertices.
///
/// Throws PreconditionError for an empty graph or an invalid seed.
PipelineResult ctw_upper_bound(const Graph& g, const std::optional<TreeDecomposition>& seed = std::nullopt,
                               int exact_limit = kDefaultExactTreewidthLimit);

inline constexpr int kDefaultExactCtwLimit = 8;

/// kDefaultExactCtwLimit unless CTWKIT_MAX_N holds a positive integer.
int exact_ctw_limit();

struct ExactCtwResult {
  int width = 0;
  TreeDecomposition decomposition;  // a connected decomposition of that width
};

/// Minimum width over connected tree decompositions, by exhaustive search
/// over rooted decompositions with connected bags. Throws LimitError above
/// `max_n` vertices and PreconditionError for an empty graph.
ExactCtwResult exact_ctw_with_witness(const Graph& g, int max_n);
int exact_ctw_small(const Graph& g, int max_n);
int exact_ctw_small(const Graph& g);

}  // namespace ctwkit
