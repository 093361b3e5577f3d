#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sciomap/corpus.hpp"
#include "sciomap/graph.hpp"
#include "sciomap/stats.hpp"

namespace sciomap::exporter {

/// A graph plus the per-node attributes to publish. Attributes missing for a
/// node are written as 0.
struct GraphDocument {
  WeightedGraph graph;
  std::map<NodeId, std::size_t> community;
  std::map<NodeId, std::size_t> degree;
  std::map<NodeId, double> betweenness;
  int precision = 6;
};

/// Pajek `.net`: vertices in id order, 1-based, labelled with their node id.
std::string format_pajek(const GraphDocument& doc);
WeightedGraph parse_pajek(std::string_view content);
void write_pajek(const GraphDocument& doc, const std::filesystem::path& path);

/// Undirected GEXF 1.2 with node attributes community, degree, betweenness
/// and article_count.
std::string format_gexf(const GraphDocument& doc);
/// Reads documents produced by format_gexf back into a graph plus attributes.
GraphDocument parse_gexf(std::string_view content);
void write_gexf(const GraphDocument& doc, const std::filesystem::path& path);

std::string format_dot(const GraphDocument& doc);
void write_dot(const GraphDocument& doc, const std::filesystem::path& path);

inline constexpr int kSvgWidth = 960;
inline constexpr int kSvgHeight = 540;

/// Bars for yearly citations on the left axis, a polyline for mean citations
/// per article on the right axis. Throws PreconditionError on an empty series.
std::string render_annual_svg(std::span<const stats::AnnualPoint> series);
void write_annual_svg(std::span<const stats::AnnualPoint> series, const std::filesystem::path& path);

// CSV tables. Headers carry the row field names.
std::string stats_csv(const stats::DistributionTables& tables);
std::string specialty_csv(std::span<const stats::SpecialtyRow> rows);
std::string journal_csv(std::span<const stats::JournalRow> rows);
std::string coverage_csv(std::span<const stats::CoverageRow> rows);
std::string annual_csv(std::span<const stats::AnnualPoint> series);

/// Graph interchange used between pipeline stages: node attributes and full
/// precision weights as JSON.
std::string format_graph_json(const WeightedGraph& g);
WeightedGraph parse_graph_json(std::string_view content);

}  // namespace sciomap::exporter
