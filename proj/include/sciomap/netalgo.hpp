#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>

#include "sciomap/graph.hpp"

namespace sciomap::netalgo {

/// d = 1 / w. Throws PreconditionError for non-positive weights.
DistanceGraph to_distance(const WeightedGraph& g);
/// Inverse of to_distance, used to carry PFNET edges back to similarities.
WeightedGraph to_similarity(const DistanceGraph& g);

/// Minkowski exponent r (>= 1, possibly infinite) and maximum path length q in
/// edges. q == 0 stands for n - 1.
struct PathfinderParams {
  double r = std::numeric_limits<double>::infinity();
  std::size_t q = 0;

  static PathfinderParams minimax() { return {}; }
};

/// Keeps an edge iff no path of at most q edges is strictly cheaper under the
/// Minkowski-r path cost. Dense dynamic programme, O(q n^3) in general and
/// O(n^3) when q = n - 1. `jobs` bounds worker threads; output does not
/// depend on it.
DistanceGraph pathfinder(const DistanceGraph& g, const PathfinderParams& params, unsigned jobs = 1);

/// PFNET(r = inf, q = n - 1) as the union of all minimum spanning forests.
DistanceGraph pathfinder_mst(const DistanceGraph& g);

struct CentralityReport {
  std::map<NodeId, std::size_t> degree;
  std::map<NodeId, double> normalized_degree;
  std::map<NodeId, double> strength;
  std::map<NodeId, double> betweenness;
};

/// Fills degree, normalized_degree (degree / (n - 1), 0 when n == 1) and
/// strength.
template <class Tag>
CentralityReport degree_centrality(const BasicGraph<Tag>& g) {
  CentralityReport report;
  const std::size_t n = g.node_count();
  for (const auto& [id, info] : g.nodes()) {
    report.degree[id] = 0;
    report.strength[id] = 0.0;
  }
  for (const auto& [key, w] : g.edges()) {
    ++report.degree[key.first()];
    ++report.degree[key.second()];
    report.strength[key.first()] += w;
    report.strength[key.second()] += w;
  }
  for (const auto& [id, d] : report.degree)
    report.normalized_degree[id] = n > 1 ? static_cast<double>(d) / static_cast<double>(n - 1) : 0.0;
  return report;
}

/// Brandes betweenness, unnormalized, each unordered pair counted once.
/// Weighted mode reads edge weights as distances; otherwise hop counts.
std::map<NodeId, double> betweenness(const AdjacencyView& view, bool weighted, unsigned jobs = 1);

template <class Tag>
CentralityReport betweenness_centrality(const BasicGraph<Tag>& g, bool weighted, unsigned jobs = 1) {
  CentralityReport report;
  report.betweenness = betweenness(AdjacencyView::of(g), weighted, jobs);
  return report;
}

struct CommunityPartition {
  std::map<NodeId, std::size_t> assignment;
  double modularity = 0.0;
  std::size_t community_count = 0;
};

/// Newman modularity with resolution gamma (1 for the standard Q).
/// Throws PreconditionError when a node has no community.
double modularity(const WeightedGraph& g, const std::map<NodeId, std::size_t>& assignment,
                  double resolution = 1.0);

/// Multi-level greedy modularity optimisation (local moving then
/// aggregation). Visit order is a seeded shuffle, so equal seeds give equal
/// partitions. Community ids are renumbered by first appearance in node-id
/// order; the reported modularity is the standard Q of the final assignment.
CommunityPartition louvain_communities(const WeightedGraph& g, double resolution = 1.0,
                                       std::uint64_t seed = 42);

}  // namespace sciomap::netalgo
