#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sciomap/error.hpp"

namespace sciomap {

using NodeId = std::string;

struct NodeInfo {
  std::string label;
  std::set<std::string> specialties;
  std::size_t article_count = 0;

  bool operator==(const NodeInfo&) const = default;
};

/// Unordered node pair, stored with `first < second`.
class EdgeKey {
 public:
  EdgeKey(NodeId a, NodeId b) {
    if (b < a) std::swap(a, b);
    first_ = std::move(a);
    second_ = std::move(b);
  }
  const NodeId& first() const { return first_; }
  const NodeId& second() const { return second_; }

  auto operator<=>(const EdgeKey&) const = default;

 private:
  NodeId first_;
  NodeId second_;
};

struct SimilarityWeights {};
struct DistanceWeights {};

/// Undirected graph with positive edge weights and no self-loops. The tag
/// keeps similarity and distance graphs from being mixed up.
template <class Tag>
class BasicGraph {
 public:
  using NodeMap = std::map<NodeId, NodeInfo>;
  using EdgeMap = std::map<EdgeKey, double>;

  /// Inserts the node or replaces its attributes.
  void add_node(const NodeId& id, NodeInfo info = {}) { nodes_[id] = std::move(info); }
  bool has_node(const NodeId& id) const { return nodes_.contains(id); }
  const NodeInfo& node(const NodeId& id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw PreconditionError("unknown node " + id);
    return it->second;
  }
  NodeInfo& node(const NodeId& id) {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw PreconditionError("unknown node " + id);
    return it->second;
  }

  /// Missing endpoints are created with default attributes.
  void set_edge(const NodeId& a, const NodeId& b, double weight) {
    check_edge(a, b, weight);
    ensure_node(a);
    ensure_node(b);
    edges_[EdgeKey(a, b)] = weight;
  }
  void add_to_edge(const NodeId& a, const NodeId& b, double delta) {
    ensure_node(a);
    ensure_node(b);
    double& w = edges_[EdgeKey(a, b)];
    w += delta;
    check_edge(a, b, w);
  }
  void remove_edge(const NodeId& a, const NodeId& b) { edges_.erase(EdgeKey(a, b)); }
  std::optional<double> weight(const NodeId& a, const NodeId& b) const {
    auto it = edges_.find(EdgeKey(a, b));
    if (it == edges_.end()) return std::nullopt;
    return it->second;
  }

  /// Removes the node and its incident edges.
  void remove_node(const NodeId& id) {
    nodes_.erase(id);
    std::erase_if(edges_, [&](const auto& e) { return e.first.first() == id || e.first.second() == id; });
  }

  const NodeMap& nodes() const { return nodes_; }
  const EdgeMap& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return nodes_.empty(); }

  /// Same nodes and edges, different weights. `fn` maps old to new weight.
  template <class OtherTag, class Fn>
  BasicGraph<OtherTag> reweighted(Fn&& fn) const {
    BasicGraph<OtherTag> out;
    for (const auto& [id, info] : nodes_) out.add_node(id, info);
    for (const auto& [key, w] : edges_) out.set_edge(key.first(), key.second(), fn(w));
    return out;
  }

  BasicGraph induced(const std::set<NodeId>& keep) const {
    BasicGraph out;
    for (const auto& [id, info] : nodes_)
      if (keep.contains(id)) out.add_node(id, info);
    for (const auto& [key, w] : edges_)
      if (keep.contains(key.first()) && keep.contains(key.second())) out.edges_.emplace(key, w);
    return out;
  }

  bool operator==(const BasicGraph&) const = default;

 private:
  void ensure_node(const NodeId& id) {
    if (!nodes_.contains(id)) nodes_.emplace(id, NodeInfo{id, {}, 0});
  }
  static void check_edge(const NodeId& a, const NodeId& b, double weight) {
    if (a == b) throw PreconditionError("self-loop on " + a);
    if (!(weight > 0.0)) throw PreconditionError("non-positive weight on edge " + a + " -- " + b);
  }

  NodeMap nodes_;
  EdgeMap edges_;
};

using WeightedGraph = BasicGraph<SimilarityWeights>;
using DistanceGraph = BasicGraph<DistanceWeights>;

/// Dense integer view of a graph: nodes in id order, adjacency lists sorted by
/// neighbour index.
struct AdjacencyView {
  std::vector<NodeId> ids;
  std::vector<std::vector<std::pair<std::size_t, double>>> neighbours;

  std::size_t size() const { return ids.size(); }
  std::size_t index_of(const NodeId& id) const;

  template <class Tag>
  static AdjacencyView of(const BasicGraph<Tag>& g) {
    AdjacencyView view;
    std::map<NodeId, std::size_t> index;
    for (const auto& [id, info] : g.nodes()) {
      index.emplace(id, view.ids.size());
      view.ids.push_back(id);
    }
    view.neighbours.resize(view.ids.size());
    for (const auto& [key, w] : g.edges()) {
      const std::size_t a = index.at(key.first());
      const std::size_t b = index.at(key.second());
      view.neighbours[a].emplace_back(b, w);
      view.neighbours[b].emplace_back(a, w);
    }
    for (auto& list : view.neighbours) std::sort(list.begin(), list.end());
    return view;
  }
};

}  // namespace sciomap
