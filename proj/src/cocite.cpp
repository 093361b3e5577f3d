#include "sciomap/cocite.hpp"

#include <algorithm>
#include <numeric>

namespace sciomap::cocite {

namespace {

struct JournalCitations {
  std::set<std::string> articles;
  const catalog::SpecialtySet* labels = nullptr;
};

using EntryJournals = std::map<catalog::CanonicalIssn, JournalCitations>;

std::map<corpus::EntryId, EntryJournals> group_by_entry(std::span<const corpus::CitationRecord> records) {
  std::map<corpus::EntryId, EntryJournals> out;
  for (const auto& r : records) {
    auto& j = out[r.entry][r.journal];
    j.articles.insert(r.article_id);
    if (j.labels == nullptr) j.labels = &r.specialties;
  }
  return out;
}

void build_journal_level(const std::map<corpus::EntryId, EntryJournals>& entries, Counting counting,
                         const catalog::JournalIndex* titles, WeightedGraph& g) {
  std::map<NodeId, std::set<std::string>> involved;
  std::map<NodeId, const catalog::SpecialtySet*> labels;
  for (const auto& [entry, journals] : entries) {
    if (journals.size() < 2) continue;
    for (auto a = journals.begin(); a != journals.end(); ++a) {
      involved[a->first.value()].insert(a->second.articles.begin(), a->second.articles.end());
      labels.emplace(a->first.value(), a->second.labels);
      for (auto b = std::next(a); b != journals.end(); ++b) {
        const double delta = counting == Counting::Entries
                                 ? 1.0
                                 : static_cast<double>(a->second.articles.size() * b->second.articles.size());
        g.add_to_edge(a->first.value(), b->first.value(), delta);
      }
    }
  }
  for (const auto& [id, articles] : involved) {
    NodeInfo info{id, *labels.at(id), articles.size()};
    if (titles != nullptr)
      if (const auto* j = titles->find(*catalog::try_normalize_issn(id))) info.label = j->title;
    g.add_node(id, std::move(info));
  }
}

void build_specialty_level(const std::map<corpus::EntryId, EntryJournals>& entries, Counting counting,
                           WeightedGraph& g) {
  std::map<NodeId, std::set<std::string>> involved;
  for (const auto& [entry, journals] : entries) {
    if (journals.size() < 2) continue;
    std::map<EdgeKey, double> increments;
    for (auto a = journals.begin(); a != journals.end(); ++a) {
      for (auto b = std::next(a); b != journals.end(); ++b) {
        const auto& la = *a->second.labels;
        const auto& lb = *b->second.labels;
        std::set<EdgeKey> label_pairs;
        for (const auto& x : la)
          for (const auto& y : lb)
            if (x != y) label_pairs.emplace(x, y);
        const double per_pair = counting == Counting::Entries
                                    ? 1.0
                                    : static_cast<double>(a->second.articles.size() * b->second.articles.size());
        if (label_pairs.empty()) continue;
        for (const auto& key : label_pairs) {
          if (counting == Counting::Entries) increments[key] = 1.0;
          else increments[key] += per_pair;
        }
        for (const auto* side : {&a->second, &b->second})
          for (const auto& label : *side->labels) involved[label].insert(side->articles.begin(), side->articles.end());
      }
    }
    for (const auto& [key, delta] : increments) g.add_to_edge(key.first(), key.second(), delta);
  }
  for (const auto& [label, articles] : involved)
    if (g.has_node(label)) g.add_node(label, NodeInfo{label, {label}, articles.size()});
}

}  // namespace

WeightedGraph build_cocitation_graph(std::span<const corpus::CitationRecord> records, Level level, Counting counting,
                                     const catalog::JournalIndex* titles) {
  const auto entries = group_by_entry(records);
  WeightedGraph g;
  if (level == Level::Journal) build_journal_level(entries, counting, titles, g);
  else build_specialty_level(entries, counting, g);
  return g;
}

WeightedGraph prune_threshold(const WeightedGraph& g, double min_weight) {
  if (min_weight < 0) throw PreconditionError("min_weight must be non-negative");
  WeightedGraph out;
  for (const auto& [id, info] : g.nodes()) out.add_node(id, info);
  for (const auto& [key, w] : g.edges())
    if (!(w < min_weight)) out.set_edge(key.first(), key.second(), w);
  return out;
}

WeightedGraph drop_isolates(const WeightedGraph& g) {
  std::set<NodeId> keep;
  for (const auto& [key, w] : g.edges()) {
    keep.insert(key.first());
    keep.insert(key.second());
  }
  return g.induced(keep);
}

WeightedGraph normalize_weights(const WeightedGraph& g) {
  if (g.edges().empty()) return g;
  double max_w = 0.0;
  for (const auto& [key, w] : g.edges()) max_w = std::max(max_w, w);
  return g.reweighted<SimilarityWeights>([max_w](double w) { return w / max_w; });
}

ComponentPartition components(const WeightedGraph& g) {
  const auto view = AdjacencyView::of(g);
  const std::size_t n = view.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw(n, kUnset);
  std::vector<std::size_t> raw_sizes;  // discovery order = order of smallest member
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (raw[s] != kUnset) continue;
    const std::size_t c = raw_sizes.size();
    raw_sizes.push_back(0);
    raw[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      ++raw_sizes[c];
      for (const auto& [u, w] : view.neighbours[v]) {
        if (raw[u] == kUnset) {
          raw[u] = c;
          stack.push_back(u);
        }
      }
    }
  }
  std::vector<std::size_t> order(raw_sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return raw_sizes[a] > raw_sizes[b]; });
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  ComponentPartition out;
  for (std::size_t i : order) out.sizes.push_back(raw_sizes[i]);
  for (std::size_t v = 0; v < n; ++v) out.assignment.emplace(view.ids[v], rank[raw[v]]);
  return out;
}

WeightedGraph largest_component(const WeightedGraph& g) {
  if (g.empty()) return g;
  const auto partition = components(g);
  std::set<NodeId> keep;
  for (const auto& [id, c] : partition.assignment)
    if (c == 0) keep.insert(id);
  return g.induced(keep);
}

}  // namespace sciomap::cocite
