#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ctwkit/graph.hpp"

namespace ctwkit {

using NodeId = int;

/// A tree (or, while under construction, a forest) whose nodes carry bags.
///
/// Node ids are dense 0..node_count()-1. Operations that remove nodes
/// renumber the survivors in increasing order of their old ids.
class TreeDecomposition {
 public:
  TreeDecomposition() = default;
  explicit TreeDecomposition(int vertex_universe) : universe_(vertex_universe) {}

  int vertex_universe() const { return universe_; }
  int node_count() const { return static_cast<int>(bags_.size()); }

  NodeId add_node(VertexSet bag);
  void add_edge(NodeId a, NodeId b);
  bool has_edge(NodeId a, NodeId b) const;

  const VertexSet& bag(NodeId t) const { return bags_[static_cast<std::size_t>(t)]; }
  VertexSet& bag(NodeId t) { return bags_[static_cast<std::size_t>(t)]; }
  const std::vector<VertexSet>& bags() const { return bags_; }
  const std::vector<NodeId>& neighbors(NodeId t) const { return adj_[static_cast<std::size_t>(t)]; }

  /// Tree edges as (a, b) with a < b, sorted.
  std::vector<std::pair<NodeId, NodeId>> edges() const;
  int edge_count() const;

  /// Largest bag size minus one; -1 for a decomposition without nodes.
  int width() const;

  /// Removes t; its neighbors are left disconnected from each other.
  void remove_node(NodeId t);

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;

 private:
  int universe_ = 0;
  std::vector<VertexSet> bags_;
  std::vector<std::vector<NodeId>> adj_;  // sorted
};

/// Single-bag decomposition whose bag is every vertex.
TreeDecomposition trivial_decomposition(const Graph& g);

struct ValidationReport {
  bool tree_ok = false;   // connected and acyclic, at least one node
  bool t1_ok = false;     // bags cover V(G)
  bool t2_ok = false;     // every edge inside a bag
  bool t3_ok = false;     // bags containing a vertex form a subtree
  bool connected_parts = false;
  int width = -1;
  std::string first_violation;  // empty when valid

  bool valid() const { return tree_ok && t1_ok && t2_ok && t3_ok; }
};

/// Checks the three axioms independently. Throws FormatError if a bag is
/// not over the graph's vertex range.
ValidationReport validate(const Graph& g, const TreeDecomposition& d);
/// As above; vertex labels in violation messages are shifted by label_offset.
ValidationReport validate(const Graph& g, const TreeDecomposition& d, int label_offset);

/// Entry h counts bags of size n - h, h = 0..n. Compared lexicographically,
/// so fewer big bags means a smaller fatness.
struct Fatness {
  std::vector<int> counts;

  friend auto operator<=>(const Fatness&, const Fatness&) = default;
};

Fatness fatness(const Graph& g, const TreeDecomposition& d);

/// Contracts tree edge rs: r keeps bag V_r ∪ V_s and inherits s's neighbors,
/// s is removed. Throws PreconditionError when rs is not a tree edge.
TreeDecomposition contract_edge(const TreeDecomposition& d, NodeId r, NodeId s);

/// The split situation at tree edge (s, t0).
struct SplitContext {
  NodeId s = -1;
  NodeId t0 = -1;
  VertexSet adhesion;           // X = V_s ∩ V_t0
  std::vector<NodeId> far_nodes;   // T_0, the component of T - st0 holding t0, sorted
  std::vector<NodeId> near_nodes;  // T_s, sorted
  VertexSet far_side;           // G_0: union of bags in T_0
  VertexSet near_side;          // G_s: union of bags in T_s
  std::vector<VertexSet> components;     // C_i: components of G_0 - X
  std::vector<VertexSet> neighborhoods;  // N_i = N(C_i), each inside X
  std::vector<VertexSet> pieces;         // G_i = C_i ∪ N_i

  /// True when V_t is not inside any G_i.
  bool is_split(const VertexSet& bag) const;
};

SplitContext split_context(const Graph& g, const TreeDecomposition& d, NodeId s, NodeId t0);

/// Replaces T_0 by one copy per component C_i, attached at s, with bags
/// V_t ∩ G_i. Copy 0 keeps the original node ids; the copies for i ≥ 1 get
/// fresh ids numbered by (i, original id). Nodes left with empty bags are
/// contracted into a neighbor afterwards.
TreeDecomposition split_at_edge(const Graph& g, const TreeDecomposition& d, const SplitContext& ctx);

/// Replaces node s by two adjacent nodes with bags V_s - v and V_s - u.
///
/// The node with bag V_s - v reuses id s; the other is appended. Neighbors
/// whose bag lacks v attach to the first, the rest to the second.
/// Throws PreconditionError naming the violated clause.
TreeDecomposition decontract_part(const Graph& g, const TreeDecomposition& d, NodeId s, Vertex u, Vertex v);

/// Contracts every node with an empty bag into a neighbor (lowest id first).
TreeDecomposition prune_empty_bags(TreeDecomposition d);

/// Joins per-block decompositions (bags in the graph's own vertex ids) into a
/// decomposition of g following the block structure: for each cut vertex,
/// one node containing it is picked from every input decomposition that has
/// it, and these are joined by a star; remaining trees (one per connected
/// component of g) are chained in input order.
TreeDecomposition glue_block_decompositions(const Graph& g, const std::vector<TreeDecomposition>& per_block);

/// Builds the decomposition induced by an elimination ordering: vertex order[i]
/// gets bag {order[i]} ∪ (its neighbors in the fill graph eliminated later).
TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<Vertex>& order);

}  // namespace ctwkit
