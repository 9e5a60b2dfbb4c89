#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctwkit/graph.hpp"
#include "ctwkit/tree_decomposition.hpp"

namespace ctwkit {

inline constexpr int kDefaultExactTreewidthLimit = 20;

struct TreewidthResult {
  int width = 0;
  TreeDecomposition decomposition;
};

/// Exact treewidth by searching elimination orderings over vertex subsets
/// (iterative deepening on the width, failed subsets memoized).
/// Throws LimitError when g has more than `max_n` vertices.
TreewidthResult exact_treewidth(const Graph& g, int max_n = kDefaultExactTreewidthLimit);

/// Greedy minimum-degree elimination; an upper bound only.
TreewidthResult min_degree_decomposition(const Graph& g);

enum class MoveKind { kContract, kSplit, kDecontract };

struct AtomizeMove {
  MoveKind kind;
  NodeId s;            // contract: removed node; split: near end; decontract: the part
  NodeId t;            // contract: surviving node; split: far end t0; decontract: unused (-1)
  Vertex u = -1;       // decontract only
  Vertex v = -1;
  Fatness before;
  Fatness after;
};

struct AtomizeResult {
  TreeDecomposition decomposition;
  std::vector<AtomizeMove> moves;
};

/// Applies contract / split / decontract moves until none decreases the
/// fatness. Requires g connected and d valid; throws PreconditionError
/// otherwise.
///
/// Moves are scanned in a fixed order and the first applicable one is taken:
///  1. contract a tree edge rs with V_r ⊆ V_s;
///  2. split at an oriented tree edge (s, t0) when some far-side part larger
///     than the adhesion is split;
///  3. decontract a part V_s at non-adjacent u, v that no neighboring part
///     shares with it.
/// Every applied move strictly decreases the fatness (checked), so the loop
/// terminates.
AtomizeResult atomize_with_log(const Graph& g, const TreeDecomposition& d);
TreeDecomposition atomize(const Graph& g, const TreeDecomposition& d);

/// Witness of a failed atomic-decomposition property, empty when all hold.
struct AtomicPropertyReport {
  bool non_containment = true;
  bool no_split = true;
  bool edge_or_shared_adhesion = true;
  std::string first_violation;

  bool ok() const { return non_containment && no_split && edge_or_shared_adhesion; }
};

AtomicPropertyReport check_atomic_properties(const Graph& g, const TreeDecomposition& d);

struct AdhesionCycle {
  NodeId t0 = -1;     // neighbor of s whose adhesion holds u and v
  Path far_path;      // u..v, interior in G_0 - X
  Path near_path;     // u..v, interior in G_s - X
  std::vector<Vertex> cycle;  // far_path followed by near_path reversed, closed implicitly
};

/// The cycle through u and v made of a path through the far side of the
/// first adhesion holding both and a path through the near side.
/// Throws PreconditionError when u, v are not both in V_s, are adjacent,
/// share no adhesion with a neighbor, or a side offers no path.
AdhesionCycle adhesion_cycle(const Graph& g, const TreeDecomposition& d, NodeId s, Vertex u, Vertex v);

}  // namespace ctwkit
