#include "attsync/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "attsync/errors.hpp"

namespace attsync {

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  std::set<Edge> seen;
  for (const auto& [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw ContractViolation("graph: edge (" + std::to_string(a) + "," + std::to_string(b) +
                              ") references a node outside [1, " + std::to_string(n) + "]");
    if (a == b) throw ContractViolation("graph: self-loop at node " + std::to_string(a));
    if (!seen.insert(std::minmax(a, b)).second)
      throw ContractViolation("graph: duplicate edge {" + std::to_string(a) + "," +
                              std::to_string(b) + "}");
  }
  return Graph(n, std::move(edges));
}

Graph::Graph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adjacency_(n) {
  for (const auto& [a, b] : edges_) {
    adjacency_[a - 1].push_back(b);
    adjacency_[b - 1].push_back(a);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

const std::vector<NodeId>& Graph::neighbors(NodeId i) const {
  if (i < 1 || i > n_)
    throw ContractViolation("graph: node id " + std::to_string(i) + " out of range");
  return adjacency_[i - 1];
}

IncidenceMatrix Graph::incidence_matrix() const {
  IncidenceMatrix b = IncidenceMatrix::Zero(static_cast<Eigen::Index>(n_),
                                            static_cast<Eigen::Index>(edges_.size()));
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto col = static_cast<Eigen::Index>(k);
    b(static_cast<Eigen::Index>(edges_[k].first - 1), col) = 1;
    b(static_cast<Eigen::Index>(edges_[k].second - 1), col) = -1;
  }
  return b;
}

std::size_t Graph::component_count() const {
  std::vector<std::size_t> parent(n_);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = n_;
  for (const auto& [a, b] : edges_) {
    const auto ra = find(a - 1);
    const auto rb = find(b - 1);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components;
}

bool Graph::is_connected() const { return component_count() <= 1; }

Graph reference_topology() {
  return Graph::from_edges(5, {{1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
}

}  // namespace attsync
