#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "sciomap/catalog.hpp"
#include "sciomap/corpus.hpp"
#include "sciomap/graph.hpp"

namespace sciomap::cocite {

enum class Level { Journal, Specialty };

enum class Counting {
  Entries,  // +1 per citing entry per node pair
  Pairs,    // +1 per co-cited article pair
};

/// Co-citation graph over journals (ids are canonical ISSNs) or specialties
/// (ids are labels). Only co-cited nodes appear. At specialty level a label
/// pair counts only when the two labels come from articles in different
/// journals, so one journal's own multi-label assignment adds nothing.
/// `titles` supplies journal labels; ids are used when absent.
WeightedGraph build_cocitation_graph(std::span<const corpus::CitationRecord> records, Level level,
                                     Counting counting = Counting::Entries,
                                     const catalog::JournalIndex* titles = nullptr);

/// Drops edges with weight strictly below `min_weight`.
WeightedGraph prune_threshold(const WeightedGraph& g, double min_weight);
WeightedGraph drop_isolates(const WeightedGraph& g);
/// Divides by the maximum weight so the largest becomes exactly 1.
WeightedGraph normalize_weights(const WeightedGraph& g);

struct ComponentPartition {
  std::map<NodeId, std::size_t> assignment;
  std::vector<std::size_t> sizes;  // descending; index = component id
};

/// Components numbered by descending size, ties by smallest member id.
ComponentPartition components(const WeightedGraph& g);
WeightedGraph largest_component(const WeightedGraph& g);

}  // namespace sciomap::cocite
