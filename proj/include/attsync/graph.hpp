#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace attsync {

/// 1-based node ids throughout, to match how topologies are written down.
using NodeId = std::size_t;
using Edge = std::pair<NodeId, NodeId>;  // (tail, head)

/// Node-by-edge matrix: +1 at the tail of each edge, -1 at its head.
using IncidenceMatrix = Eigen::MatrixXi;

/// Undirected, unweighted communication graph. Each edge keeps the orientation
/// it was given in, which fixes the sign convention of the incidence matrix.
class Graph {
 public:
  Graph() = default;

  /// Throws ContractViolation on out-of-range ids, self-loops or duplicate
  /// undirected edges.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Sorted neighbor ids of node i.
  const std::vector<NodeId>& neighbors(NodeId i) const;
  std::size_t degree(NodeId i) const { return neighbors(i).size(); }

  IncidenceMatrix incidence_matrix() const;
  bool is_connected() const;
  std::size_t component_count() const;

 private:
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
};

/// The five-node topology used in the simulation study:
/// 1-2, 2-3, 2-4, 3-4, 4-5.
Graph reference_topology();

}  // namespace attsync
