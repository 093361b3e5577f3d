#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "sciomap/cocite.hpp"

using namespace sciomap;
using cocite::Counting;
using cocite::Level;

namespace {

corpus::CitationRecord cite(const std::string& page, const std::string& article, std::uint32_t journal,
                            catalog::SpecialtySet labels) {
  return {{"en", page}, article, gen::make_issn(journal), std::move(labels), Date{2015, 1, 1}, 2015, ""};
}

WeightedGraph weighted(std::initializer_list<std::tuple<const char*, const char*, double>> edges) {
  WeightedGraph g;
  for (const auto& [a, b, w] : edges) g.set_edge(a, b, w);
  return g;
}

}  // namespace

TEST_CASE("co-citation basics") {
  SUBCASE("an entry citing one article adds nothing") {
    const std::vector records{cite("P", "a", 1, {"X"})};
    CHECK(cocite::build_cocitation_graph(records, Level::Journal, Counting::Entries).empty());
  }
  SUBCASE("three journals in one entry form a unit triangle") {
    const std::vector records{cite("P", "a", 1, {"X"}), cite("P", "b", 2, {"Y"}), cite("P", "c", 3, {"Z"})};
    const auto g = cocite::build_cocitation_graph(records, Level::Journal, Counting::Entries);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
    for (const auto& [key, w] : g.edges()) CHECK(w == 1.0);
  }
  SUBCASE("pairs counting multiplies article counts") {
    const std::vector records{cite("P", "a1", 1, {"X"}), cite("P", "a2", 1, {"X"}), cite("P", "b1", 2, {"Y"}),
                              cite("Q", "a1", 1, {"X"}), cite("Q", "b2", 2, {"Y"})};
    const auto j1 = gen::make_issn(1).value();
    const auto j2 = gen::make_issn(2).value();
    CHECK(cocite::build_cocitation_graph(records, Level::Journal, Counting::Entries).weight(j1, j2) == 2.0);
    CHECK(cocite::build_cocitation_graph(records, Level::Journal, Counting::Pairs).weight(j1, j2) == 3.0);
    const auto g = cocite::build_cocitation_graph(records, Level::Journal, Counting::Entries);
    CHECK(g.node(j1).article_count == 2);
    CHECK(g.node(j2).article_count == 2);
  }
  SUBCASE("one multi-specialty journal does not co-cite its own labels") {
    const std::vector records{cite("P", "a", 1, {"History", "Philosophy"}), cite("P", "b", 1, {"History", "Philosophy"})};
    CHECK(cocite::build_cocitation_graph(records, Level::Specialty, Counting::Entries).empty());
  }
  SUBCASE("specialty pairs come from different journals only") {
    const std::vector records{cite("P", "a", 1, {"History", "Philosophy"}), cite("P", "b", 2, {"History"})};
    const auto g = cocite::build_cocitation_graph(records, Level::Specialty, Counting::Entries);
    CHECK(g.edge_count() == 1);
    CHECK(g.weight("History", "Philosophy") == 1.0);
  }
}

TEST_CASE("co-citation graph equals pair enumeration on random corpora") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto records = gen::random_corpus(rng);
    for (Level level : {Level::Journal, Level::Specialty}) {
      for (Counting counting : {Counting::Entries, Counting::Pairs}) {
        const auto g = cocite::build_cocitation_graph(records, level, counting);
        REQUIRE(oracle::edges_of(g) == oracle::cocitation_edges(records, level, counting));
        std::map<std::string, std::size_t> counts;
        for (const auto& [id, info] : g.nodes()) counts[id] = info.article_count;
        CHECK(counts == oracle::cocitation_article_counts(records, level));
      }
    }
  }
}

TEST_CASE("pruning, isolates and normalization") {
  const auto g = weighted({{"a", "b", 2}, {"b", "c", 6}, {"c", "d", 9}});
  const auto pruned = cocite::prune_threshold(g, 6);
  CHECK(pruned.edge_count() == 2);
  CHECK(pruned.weight("b", "c") == 6.0);
  CHECK_FALSE(pruned.weight("a", "b").has_value());
  CHECK(cocite::prune_threshold(g, 0) == g);
  CHECK_THROWS(cocite::prune_threshold(g, -1));

  const auto no_isolates = cocite::drop_isolates(pruned);
  CHECK(no_isolates.node_count() == 3);
  CHECK_FALSE(no_isolates.has_node("a"));
  CHECK(cocite::drop_isolates(g) == g);

  WeightedGraph three;
  three.add_node("x");
  three.set_edge("y", "z", 1);
  CHECK(cocite::drop_isolates(three).node_count() == 2);

  const auto normalized = cocite::normalize_weights(weighted({{"a", "b", 2}, {"b", "c", 4}, {"c", "d", 8}}));
  CHECK(normalized.weight("a", "b") == 0.25);
  CHECK(normalized.weight("b", "c") == 0.5);
  CHECK(normalized.weight("c", "d") == 1.0);
  CHECK(cocite::normalize_weights(weighted({{"a", "b", 7}})).weight("a", "b") == 1.0);
  WeightedGraph lonely;
  lonely.add_node("q");
  CHECK(cocite::normalize_weights(lonely) == lonely);
}

TEST_CASE("components") {
  const auto g = weighted({{"a", "b", 1}, {"b", "c", 1}, {"d", "e", 1}});
  const auto p = cocite::components(g);
  CHECK(p.sizes == std::vector<std::size_t>{3, 2});
  CHECK(p.assignment.at("a") == p.assignment.at("c"));
  CHECK(p.assignment.at("a") != p.assignment.at("d"));
  const auto main = cocite::largest_component(g);
  CHECK(main.node_count() == 3);
  CHECK(main.edge_count() == 2);
  const auto connected = weighted({{"a", "b", 1}, {"b", "c", 3}});
  CHECK(cocite::largest_component(connected) == connected);
  CHECK(cocite::components(WeightedGraph{}).sizes.empty());
  CHECK(cocite::largest_component(WeightedGraph{}).empty());
}

TEST_CASE("pipeline rule properties on random graphs") {
  gen::Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen::uniform_int(rng, 1, 14);
    auto g = gen::random_graph<SimilarityWeights>(rng, n, gen::uniform_real(rng, 0.05, 0.6), true, 10);

    const double t1 = gen::uniform_int(rng, 0, 10);
    const double t2 = t1 + gen::uniform_int(rng, 0, 5);
    CHECK(cocite::prune_threshold(cocite::prune_threshold(g, t1), t2) == cocite::prune_threshold(g, t2));
    const auto pruned = cocite::prune_threshold(g, 6);
    for (const auto& [key, w] : g.edges()) CHECK((w >= 6) == pruned.weight(key.first(), key.second()).has_value());

    const auto normalized = cocite::normalize_weights(g);
    if (!g.edges().empty()) {
      double max_w = 0;
      for (const auto& [key, w] : normalized.edges()) max_w = std::max(max_w, w);
      CHECK(max_w == 1.0);
    }
    REQUIRE(normalized.edge_count() == g.edge_count());
    for (const auto& [k1, w1] : g.edges())
      for (const auto& [k2, w2] : g.edges()) {
        const double n1 = *normalized.weight(k1.first(), k1.second());
        const double n2 = *normalized.weight(k2.first(), k2.second());
        CHECK((w1 < w2) == (n1 < n2));
      }

    const auto groups = oracle::components(g);
    std::size_t largest = 0;
    for (const auto& c : groups) largest = std::max(largest, c.size());
    const auto main = cocite::largest_component(g);
    CHECK(main.node_count() == largest);
    CHECK(oracle::components(main).size() <= 1);
    const auto p = cocite::components(g);
    CHECK(p.sizes.size() == groups.size());
    CHECK(std::is_sorted(p.sizes.rbegin(), p.sizes.rend()));
  }
}
