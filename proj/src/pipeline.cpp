#include "sciomap/pipeline.hpp"

#include <cmath>
#include <cstdlib>

#include <json.hpp>

#include "sciomap/digest.hpp"
#include "sciomap/error.hpp"
#include "sciomap/export.hpp"
#include "sciomap/ingest.hpp"
#include "sciomap/stats.hpp"
#include "sciomap/text.hpp"

namespace sciomap::pipeline {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Configuration

std::optional<corpus::YearWindow> parse_window(std::string_view s) {
  s = text::trim(s);
  if (s.empty() || text::to_lower_ascii(s) == "none") return std::nullopt;
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) throw FormatError("window must be Y1:Y2, got '" + std::string(s) + "'");
  const auto lo = text::parse_int(s.substr(0, colon));
  const auto hi = text::parse_int(s.substr(colon + 1));
  if (!lo || !hi) throw FormatError("window must be Y1:Y2, got '" + std::string(s) + "'");
  return corpus::YearWindow{static_cast<int>(*lo), static_cast<int>(*hi)};
}

double parse_minkowski_r(std::string_view s) {
  s = text::trim(s);
  const auto lower = text::to_lower_ascii(s);
  if (lower == "inf" || lower == "infinity") return std::numeric_limits<double>::infinity();
  const auto r = text::parse_double(s);
  if (!r || *r < 1.0) throw FormatError("r must be 'inf' or a number >= 1, got '" + std::string(s) + "'");
  return *r;
}

std::size_t parse_max_path_length(std::string_view s) {
  s = text::trim(s);
  if (text::to_lower_ascii(s) == "max") return 0;
  const auto q = text::parse_int(s);
  if (!q || *q < 1) throw FormatError("q must be 'max' or a positive integer, got '" + std::string(s) + "'");
  return static_cast<std::size_t>(*q);
}

namespace {

std::string unquote(std::string_view value, std::size_t line_no) {
  value = text::trim(value);
  if (!value.starts_with('"')) {
    if (auto hash = value.find('#'); hash != std::string_view::npos) value = text::trim(value.substr(0, hash));
    return std::string(value);
  }
  std::string out;
  for (std::size_t i = 1; i < value.size(); ++i) {
    const char c = value[i];
    if (c == '\\' && i + 1 < value.size()) {
      out.push_back(value[++i]);
    } else if (c == '"') {
      const auto rest = text::trim(value.substr(i + 1));
      if (!rest.empty() && !rest.starts_with('#'))
        throw FormatError("config line " + std::to_string(line_no) + ": trailing characters after string");
      return out;
    } else {
      out.push_back(c);
    }
  }
  throw FormatError("config line " + std::to_string(line_no) + ": unterminated string");
}

bool parse_bool(const std::string& key, std::string_view v) {
  const auto lower = text::to_lower_ascii(v);
  if (lower == "true") return true;
  if (lower == "false") return false;
  throw FormatError(key + " must be true or false");
}

double parse_number(const std::string& key, std::string_view v) {
  const auto d = text::parse_double(v);
  if (!d) throw FormatError(key + " must be a number");
  return *d;
}

}  // namespace

PipelineConfig parse_config(std::string_view content, const fs::path& base_dir) {
  PipelineConfig c;
  std::string section;
  std::size_t line_no = 0;
  auto path_of = [&](const std::string& v) { return v.empty() ? fs::path{} : (base_dir / v).lexically_normal(); };

  for (const auto& raw : text::split(content, '\n')) {
    ++line_no;
    const auto line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw FormatError("config line " + std::to_string(line_no) + ": bad section header");
      section = std::string(text::trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw FormatError("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = (section.empty() ? "" : section + ".") + std::string(text::trim(line.substr(0, eq)));
    const std::string v = unquote(line.substr(eq + 1), line_no);

    if (key == "inputs.mentions") c.mentions = path_of(v);
    else if (key == "inputs.sources") c.sources = path_of(v);
    else if (key == "inputs.labels") c.labels = path_of(v);
    else if (key == "inputs.lookup_fixtures") c.lookup_fixtures = path_of(v);
    else if (key == "inputs.lookup_endpoint") c.lookup_endpoint = v;
    else if (key == "inputs.cache") c.cache = path_of(v);
    else if (key == "rules.discipline") c.discipline = v;
    else if (key == "rules.window") c.window = parse_window(v);
    else if (key == "rules.require_date") c.require_date = parse_bool(key, v);
    else if (key == "rules.date_source") {
      if (v == "mention") c.date_source = corpus::DateSource::Mention;
      else if (v == "article_year") c.date_source = corpus::DateSource::ArticleYear;
      else throw FormatError("rules.date_source must be mention or article_year");
    } else if (key == "rules.min_weight") c.min_weight = parse_number(key, v);
    else if (key == "rules.counting") {
      if (v == "entries") c.counting = cocite::Counting::Entries;
      else if (v == "pairs") c.counting = cocite::Counting::Pairs;
      else throw FormatError("rules.counting must be entries or pairs");
    } else if (key == "rules.level") {
      if (v != "journal" && v != "specialty" && v != "both") throw FormatError("rules.level must be journal, specialty or both");
      c.journal_level = v != "specialty";
      c.specialty_level = v != "journal";
    } else if (key == "rules.pathfinder_r") c.pathfinder.r = parse_minkowski_r(v);
    else if (key == "rules.pathfinder_q") c.pathfinder.q = parse_max_path_length(v);
    else if (key == "rules.louvain_resolution") c.louvain_resolution = parse_number(key, v);
    else if (key == "rules.louvain_seed") {
      const auto seed = text::parse_int(v);
      if (!seed || *seed < 0) throw FormatError("rules.louvain_seed must be a non-negative integer");
      c.louvain_seed = static_cast<std::uint64_t>(*seed);
    } else if (key == "rules.top_k") {
      const auto k = text::parse_int(v);
      if (!k || *k < 1) throw FormatError("rules.top_k must be a positive integer");
      c.top_k = static_cast<std::size_t>(*k);
    } else if (key == "rules.betweenness_weighted") c.betweenness_weighted = parse_bool(key, v);
    else if (key == "rules.offline") c.offline = parse_bool(key, v);
    else if (key == "output.dir") c.out_dir = path_of(v);
    else throw FormatError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
  }
  return c;
}

PipelineConfig load_config(const fs::path& path) {
  return parse_config(text::read_file(path), path.has_parent_path() ? path.parent_path() : fs::path("."));
}

void validate(const PipelineConfig& c) {
  auto require_file = [](const fs::path& p, const char* what) {
    if (p.empty()) throw PreconditionError(std::string(what) + " path is not configured");
    if (!fs::is_regular_file(p)) throw PreconditionError(std::string(what) + " not found: " + p.string());
  };
  require_file(c.mentions, "mentions");
  require_file(c.sources, "sources");
  require_file(c.labels, "label vocabulary");
  if (!c.lookup_fixtures.empty() && !fs::is_directory(c.lookup_fixtures))
    throw PreconditionError("lookup fixture directory not found: " + c.lookup_fixtures.string());
  if (c.min_weight < 0) throw PreconditionError("min_weight must be >= 0");
  if (c.window && c.window->lo > c.window->hi) throw PreconditionError("window lower bound exceeds upper bound");
  if (!(c.pathfinder.r >= 1.0)) throw PreconditionError("pathfinder r must be >= 1");
  if (!(c.louvain_resolution > 0.0)) throw PreconditionError("louvain resolution must be positive");
  if (c.top_k < 1) throw PreconditionError("top_k must be >= 1");
  if (!c.journal_level && !c.specialty_level) throw PreconditionError("no graph level selected");
}

// ---------------------------------------------------------------------------
// Stages

std::string stage_name(Stage stage) {
  switch (stage) {
    case Stage::Ingest: return "ingest";
    case Stage::Enrich: return "enrich";
    case Stage::Link: return "link";
    case Stage::Dedupe: return "dedupe";
    case Stage::Filter: return "filter";
    case Stage::Summary: return "summary";
    case Stage::Cocite: return "cocite";
    case Stage::Prune: return "prune";
    case Stage::Pathfinder: return "pathfinder";
    case Stage::Centrality: return "centrality";
    case Stage::Cluster: return "cluster";
    case Stage::Tables: return "tables";
    case Stage::Plot: return "plot";
    case Stage::Export: return "export";
  }
  return "unknown";
}

std::string stage_dir_name(Stage stage) {
  const int number = static_cast<int>(stage) + 1;
  return std::string("stage-") + (number < 10 ? "0" : "") + std::to_string(number) + "-" + stage_name(stage);
}

namespace {

fs::path stage_dir(const PipelineConfig& c, Stage stage) { return c.out_dir / stage_dir_name(stage); }

fs::path stage_file(const PipelineConfig& c, Stage stage, const std::string& name) {
  return stage_dir(c, stage) / name;
}

std::string read_stage(const PipelineConfig& c, Stage stage, const std::string& name) {
  const auto path = stage_file(c, stage, name);
  if (!fs::exists(path))
    throw PreconditionError("missing " + path.string() + "; run the " + stage_name(stage) + " stage first");
  return text::read_file(path);
}

void write_json(const fs::path& path, const ordered_json& doc) { text::write_file(path, doc.dump(2) + "\n"); }

ordered_json report_json(const ingest::ParseReport& r) {
  ordered_json issues = ordered_json::array();
  for (const auto& i : r.issues) issues.push_back({{"line", i.line}, {"reason", i.reason}});
  return {{"rows", r.rows}, {"skipped", r.skipped}, {"issues", issues}};
}

std::vector<std::string> levels(const PipelineConfig& c) {
  std::vector<std::string> out;
  if (c.journal_level) out.emplace_back("journal");
  if (c.specialty_level) out.emplace_back("specialty");
  return out;
}

catalog::IndexBuild load_index(const PipelineConfig& c) {
  auto sources = ingest::parse_scopus_text(read_stage(c, Stage::Ingest, "sources.csv"));
  return catalog::build_journal_index(std::move(sources.journals));
}

std::vector<corpus::CitationRecord> load_corpus(const PipelineConfig& c) {
  return corpus::parse_corpus_tsv(read_stage(c, Stage::Filter, "corpus.tsv"));
}

WeightedGraph load_graph(const PipelineConfig& c, Stage stage, const std::string& name) {
  return exporter::parse_graph_json(read_stage(c, stage, name));
}

fs::path cache_path(const PipelineConfig& c) {
  if (!c.cache.empty()) return c.cache;
  if (const char* env = std::getenv("SCIOMAP_CACHE"); env != nullptr && *env != '\0') return env;
  return c.out_dir / "cache" / "issn-cache.json";
}

std::unique_ptr<ingest::IssnLookupClient> make_client(const PipelineConfig& c) {
  if (!c.offline && !c.lookup_endpoint.empty()) return std::make_unique<ingest::MediaWikiLookupClient>(c.lookup_endpoint);
  if (!c.lookup_fixtures.empty()) return std::make_unique<ingest::FixtureLookupClient>(c.lookup_fixtures);
  return std::make_unique<ingest::NullLookupClient>();
}

void stage_ingest(const PipelineConfig& c) {
  const auto mentions = ingest::parse_altmetric_export(c.mentions);
  const auto sources = ingest::parse_scopus_source_list(c.sources);
  text::write_file(stage_file(c, Stage::Ingest, "mentions.csv"), ingest::format_altmetric_export(mentions.mentions));
  text::write_file(stage_file(c, Stage::Ingest, "sources.csv"), ingest::format_scopus_source_list(sources.journals));
  write_json(stage_file(c, Stage::Ingest, "report.json"),
             {{"mentions", report_json(mentions.report)}, {"sources", report_json(sources.report)}});
}

void stage_enrich(const PipelineConfig& c) {
  auto mentions = ingest::parse_altmetric_text(read_stage(c, Stage::Ingest, "mentions.csv"));
  auto client = make_client(c);
  const auto result = ingest::enrich_issn(std::move(mentions.mentions), *client, cache_path(c));
  text::write_file(stage_file(c, Stage::Enrich, "mentions.csv"), ingest::format_altmetric_export(result.mentions));
  // Cache hits are left out: the cache outlives the run and would make reruns differ.
  const auto& r = result.report;
  write_json(stage_file(c, Stage::Enrich, "report.json"), {{"passthrough", r.passthrough},
                                                           {"lookups", r.lookups},
                                                           {"resolved", r.resolved},
                                                           {"misses", r.misses},
                                                           {"failures", r.failures}});
}

void stage_link(const PipelineConfig& c) {
  const auto mentions = ingest::parse_altmetric_text(read_stage(c, Stage::Enrich, "mentions.csv"));
  const auto built = load_index(c);
  const auto vocabulary = catalog::LabelVocabulary::load(c.labels);
  const auto result = corpus::link_mentions(mentions.mentions, built.index, vocabulary, c.date_source);
  text::write_file(stage_file(c, Stage::Link, "citations.tsv"), corpus::format_corpus_tsv(result.records));
  ordered_json conflicts = ordered_json::array();
  for (const auto& k : built.conflicts)
    conflicts.push_back({{"issn", k.issn.hyphenated()}, {"kept", k.kept_title}, {"rejected", k.rejected_title}});
  const auto& r = result.report;
  write_json(stage_file(c, Stage::Link, "report.json"), {{"input", r.input},
                                                         {"linked", r.linked},
                                                         {"no_issn", r.no_issn},
                                                         {"unknown_issn", r.unknown_issn},
                                                         {"undated", r.undated},
                                                         {"unclassifiable", r.unclassifiable},
                                                         {"unknown_codes", r.unknown_codes},
                                                         {"issn_conflicts", conflicts}});
}

void stage_dedupe(const PipelineConfig& c) {
  const auto records = corpus::parse_corpus_tsv(read_stage(c, Stage::Link, "citations.tsv"));
  const auto result = corpus::dedupe_citations(records);
  text::write_file(stage_file(c, Stage::Dedupe, "corpus.tsv"), corpus::format_corpus_tsv(result.records));
  write_json(stage_file(c, Stage::Dedupe, "report.json"),
             {{"input", result.report.input}, {"removed", result.report.removed}, {"output", result.records.size()}});
}

void stage_filter(const PipelineConfig& c) {
  const auto records = corpus::parse_corpus_tsv(read_stage(c, Stage::Dedupe, "corpus.tsv"));
  const auto link_report = nlohmann::json::parse(read_stage(c, Stage::Link, "report.json"));
  corpus::FilterRules rules;
  rules.require_date = c.require_date;
  rules.window = c.window;
  if (!c.discipline.empty()) {
    const auto vocabulary = catalog::LabelVocabulary::load(c.labels);
    auto labels = vocabulary.discipline_labels(c.discipline);
    if (labels.empty()) throw PreconditionError("discipline '" + c.discipline + "' has no labels in the vocabulary");
    rules.discipline = corpus::DisciplineRule{c.discipline, std::move(labels)};
  }
  const auto result = corpus::filter_corpus(records, rules, link_report.at("undated").get<std::size_t>());
  text::write_file(stage_file(c, Stage::Filter, "corpus.tsv"), corpus::format_corpus_tsv(result.records));
  const auto& r = result.report;
  write_json(stage_file(c, Stage::Filter, "report.json"), {{"input", r.input},
                                                           {"undated_at_link", r.undated_at_link},
                                                           {"removed_discipline", r.removed_discipline},
                                                           {"removed_before_window", r.removed_before_window},
                                                           {"removed_after_window", r.removed_after_window},
                                                           {"output", r.output}});
}

void stage_summary(const PipelineConfig& c) {
  const auto s = corpus::summarize_corpus(load_corpus(c));
  write_json(stage_file(c, Stage::Summary, "summary.json"), {{"entries", s.entries},
                                                             {"citations", s.citations},
                                                             {"articles", s.articles},
                                                             {"journals", s.journals},
                                                             {"language_shares", s.language_shares}});
}

void stage_cocite(const PipelineConfig& c) {
  const auto records = load_corpus(c);
  const auto built = load_index(c);
  for (const auto& level : levels(c)) {
    const auto g = cocite::build_cocitation_graph(
        records, level == "journal" ? cocite::Level::Journal : cocite::Level::Specialty, c.counting, &built.index);
    text::write_file(stage_file(c, Stage::Cocite, level + ".json"), exporter::format_graph_json(g));
  }
}

void stage_prune(const PipelineConfig& c) {
  ordered_json report;
  for (const auto& level : levels(c)) {
    const auto raw = load_graph(c, Stage::Cocite, level + ".json");
    const auto pruned = cocite::drop_isolates(cocite::prune_threshold(raw, c.min_weight));
    const auto normalized = cocite::normalize_weights(pruned);
    const auto main = cocite::largest_component(normalized);
    const auto partition = cocite::components(normalized);
    text::write_file(stage_file(c, Stage::Prune, level + ".pruned.json"), exporter::format_graph_json(pruned));
    text::write_file(stage_file(c, Stage::Prune, level + ".main.json"), exporter::format_graph_json(main));
    report[level] = {{"cocited_nodes", raw.node_count()}, {"cocited_edges", raw.edge_count()},
                     {"pruned_nodes", pruned.node_count()}, {"pruned_edges", pruned.edge_count()},
                     {"components", partition.sizes}, {"main_nodes", main.node_count()},
                     {"main_edges", main.edge_count()}};
    if (level == "journal") {
      const auto unfiltered = cocite::largest_component(raw);
      text::write_file(stage_file(c, Stage::Prune, "journal.unfiltered-main.json"),
                       exporter::format_graph_json(unfiltered));
      report[level]["unfiltered_main_nodes"] = unfiltered.node_count();
      report[level]["unfiltered_main_edges"] = unfiltered.edge_count();
    }
  }
  write_json(stage_file(c, Stage::Prune, "report.json"), report);
}

void stage_pathfinder(const PipelineConfig& c) {
  ordered_json report;
  for (const auto& level : levels(c)) {
    const auto main = load_graph(c, Stage::Prune, level + ".main.json");
    const auto pfnet = netalgo::pathfinder(netalgo::to_distance(main), c.pathfinder, c.jobs);
    // Keep the similarity weights of the surviving edges.
    WeightedGraph out;
    for (const auto& [id, info] : main.nodes()) out.add_node(id, info);
    for (const auto& [key, d] : pfnet.edges()) out.set_edge(key.first(), key.second(), *main.weight(key.first(), key.second()));
    text::write_file(stage_file(c, Stage::Pathfinder, level + ".pfnet.json"), exporter::format_graph_json(out));
    report[level] = {{"nodes", out.node_count()}, {"edges", out.edge_count()}};
  }
  write_json(stage_file(c, Stage::Pathfinder, "report.json"), report);
}

template <class Tag>
std::map<NodeId, double> node_betweenness(const BasicGraph<Tag>& similarity, bool weighted, unsigned jobs) {
  if (!weighted) return netalgo::betweenness_centrality(similarity, false, jobs).betweenness;
  return netalgo::betweenness_centrality(netalgo::to_distance(similarity), true, jobs).betweenness;
}

void stage_centrality(const PipelineConfig& c) {
  for (const auto& level : levels(c)) {
    const auto pfnet = load_graph(c, Stage::Pathfinder, level + ".pfnet.json");
    const auto main = load_graph(c, Stage::Prune, level + ".main.json");
    const auto degrees = netalgo::degree_centrality(pfnet);
    const auto between = node_betweenness(pfnet, c.betweenness_weighted, c.jobs);
    const auto between_main = node_betweenness(main, c.betweenness_weighted, c.jobs);
    std::string csv = text::csv_line(
        {"node", "label", "degree", "normalized_degree", "strength", "betweenness", "betweenness_pruned"});
    for (const auto& [id, info] : pfnet.nodes()) {
      csv += text::csv_line({id, info.label, std::to_string(degrees.degree.at(id)),
                             text::format_shortest(degrees.normalized_degree.at(id)),
                             text::format_shortest(degrees.strength.at(id)), text::format_shortest(between.at(id)),
                             text::format_shortest(between_main.at(id))});
    }
    text::write_file(stage_file(c, Stage::Centrality, level + ".centrality.csv"), csv);
  }
}

void stage_cluster(const PipelineConfig& c) {
  ordered_json report;
  for (const auto& level : levels(c)) {
    const auto pfnet = load_graph(c, Stage::Pathfinder, level + ".pfnet.json");
    std::string csv = text::csv_line({"node", "label", "community"});
    if (pfnet.empty()) {
      report[level] = {{"communities", 0}, {"modularity", 0.0}};
    } else {
      const auto partition = netalgo::louvain_communities(pfnet, c.louvain_resolution, c.louvain_seed);
      for (const auto& [id, info] : pfnet.nodes())
        csv += text::csv_line({id, info.label, std::to_string(partition.assignment.at(id))});
      report[level] = {{"communities", partition.community_count}, {"modularity", partition.modularity}};
    }
    text::write_file(stage_file(c, Stage::Cluster, level + ".communities.csv"), csv);
  }
  write_json(stage_file(c, Stage::Cluster, "report.json"), report);
}

void stage_tables(const PipelineConfig& c) {
  const auto records = load_corpus(c);
  const auto built = load_index(c);
  const auto vocabulary = catalog::LabelVocabulary::load(c.labels);
  const auto discipline = c.discipline.empty() ? std::set<std::string>{} : vocabulary.discipline_labels(c.discipline);
  text::write_file(stage_file(c, Stage::Tables, "table1_distribution.csv"),
                   exporter::stats_csv(stats::distribution_tables(records)));
  text::write_file(stage_file(c, Stage::Tables, "table2_specialties.csv"),
                   exporter::specialty_csv(stats::specialty_table(records)));
  text::write_file(stage_file(c, Stage::Tables, "table3_journals.csv"),
                   exporter::journal_csv(stats::journal_ranking(records, built.index, c.top_k)));
  const auto aggregates = stats::scopus_aggregates(built.index.journals(), vocabulary, discipline);
  text::write_file(stage_file(c, Stage::Tables, "table4_coverage.csv"),
                   exporter::coverage_csv(stats::coverage_table(records, aggregates)));
}

void stage_plot(const PipelineConfig& c) {
  const auto series = stats::annual_series(load_corpus(c));
  text::write_file(stage_file(c, Stage::Plot, "annual.csv"), exporter::annual_csv(series));
  exporter::write_annual_svg(series, stage_file(c, Stage::Plot, "annual.svg"));
}

std::map<std::string, std::map<std::string, std::string>> read_node_table(const std::string& csv) {
  std::map<std::string, std::map<std::string, std::string>> out;
  const auto rows = text::parse_csv(csv);
  if (rows.empty()) return out;
  const auto& header = rows.front().fields;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    auto& row = out[rows[r].fields.at(0)];
    for (std::size_t i = 0; i < header.size() && i < rows[r].fields.size(); ++i) row[header[i]] = rows[r].fields[i];
  }
  return out;
}

void stage_export(const PipelineConfig& c) {
  for (const auto& level : levels(c)) {
    exporter::GraphDocument doc;
    doc.graph = load_graph(c, Stage::Pathfinder, level + ".pfnet.json");
    const auto centrality = read_node_table(read_stage(c, Stage::Centrality, level + ".centrality.csv"));
    const auto communities = read_node_table(read_stage(c, Stage::Cluster, level + ".communities.csv"));
    for (const auto& [id, row] : centrality) {
      doc.degree[id] = static_cast<std::size_t>(text::parse_int(row.at("degree")).value_or(0));
      doc.betweenness[id] = text::parse_double(row.at("betweenness")).value_or(0.0);
    }
    for (const auto& [id, row] : communities)
      doc.community[id] = static_cast<std::size_t>(text::parse_int(row.at("community")).value_or(0));
    exporter::write_pajek(doc, stage_file(c, Stage::Export, level + ".pfnet.net"));
    exporter::write_gexf(doc, stage_file(c, Stage::Export, level + ".pfnet.gexf"));
    exporter::write_dot(doc, stage_file(c, Stage::Export, level + ".pfnet.dot"));

    if (level == "journal") {
      exporter::GraphDocument unfiltered;
      unfiltered.graph = load_graph(c, Stage::Prune, "journal.unfiltered-main.json");
      unfiltered.degree = netalgo::degree_centrality(unfiltered.graph).degree;
      exporter::write_pajek(unfiltered, stage_file(c, Stage::Export, "journal.unfiltered-main.net"));
      exporter::write_gexf(unfiltered, stage_file(c, Stage::Export, "journal.unfiltered-main.gexf"));
    }
  }
}

ordered_json effective_rules(const PipelineConfig& c) {
  auto digest_of = [](const fs::path& p) -> ordered_json {
    if (p.empty() || !fs::is_regular_file(p)) return nullptr;
    return sha256_file(p);
  };
  ordered_json rules;
  rules["discipline"] = c.discipline;
  rules["window"] = c.window ? ordered_json{c.window->lo, c.window->hi} : ordered_json(nullptr);
  rules["require_date"] = c.require_date;
  rules["date_source"] = c.date_source == corpus::DateSource::Mention ? "mention" : "article_year";
  rules["min_weight"] = c.min_weight;
  rules["counting"] = c.counting == cocite::Counting::Entries ? "entries" : "pairs";
  rules["levels"] = levels(c);
  rules["pathfinder_r"] = std::isinf(c.pathfinder.r) ? ordered_json("inf") : ordered_json(c.pathfinder.r);
  rules["pathfinder_q"] = c.pathfinder.q == 0 ? ordered_json("max") : ordered_json(c.pathfinder.q);
  rules["louvain_resolution"] = c.louvain_resolution;
  rules["louvain_seed"] = c.louvain_seed;
  rules["top_k"] = c.top_k;
  rules["betweenness_weighted"] = c.betweenness_weighted;
  ordered_json inputs;
  inputs["mentions"] = digest_of(c.mentions);
  inputs["sources"] = digest_of(c.sources);
  inputs["labels"] = digest_of(c.labels);
  return {{"rules", rules}, {"inputs_sha256", inputs}};
}

}  // namespace

void run_stage(Stage stage, const PipelineConfig& config) {
  std::error_code ec;
  fs::remove_all(stage_dir(config, stage), ec);
  fs::create_directories(stage_dir(config, stage));
  switch (stage) {
    case Stage::Ingest: return stage_ingest(config);
    case Stage::Enrich: return stage_enrich(config);
    case Stage::Link: return stage_link(config);
    case Stage::Dedupe: return stage_dedupe(config);
    case Stage::Filter: return stage_filter(config);
    case Stage::Summary: return stage_summary(config);
    case Stage::Cocite: return stage_cocite(config);
    case Stage::Prune: return stage_prune(config);
    case Stage::Pathfinder: return stage_pathfinder(config);
    case Stage::Centrality: return stage_centrality(config);
    case Stage::Cluster: return stage_cluster(config);
    case Stage::Tables: return stage_tables(config);
    case Stage::Plot: return stage_plot(config);
    case Stage::Export: return stage_export(config);
  }
}

RunResult run_pipeline(const PipelineConfig& config) {
  RunResult result;
  fs::create_directories(config.out_dir);
  result.manifest = config.out_dir / "manifest.json";
  std::error_code ec;
  fs::remove(result.manifest, ec);
  for (Stage stage : kAllStages) fs::remove_all(stage_dir(config, stage), ec);

  try {
    validate(config);
  } catch (const Error& e) {
    result.ok = false;
    result.failed_stage = "config";
    result.error = e.what();
  }
  if (result.ok) {
    for (Stage stage : kAllStages) {
      try {
        run_stage(stage, config);
      } catch (const std::exception& e) {
        result.ok = false;
        result.failed_stage = stage_dir_name(stage);
        result.error = e.what();
        break;
      }
    }
  }

  std::vector<fs::path> files;
  for (Stage stage : kAllStages) {
    const auto dir = stage_dir(config, stage);
    if (!fs::is_directory(dir)) continue;
    for (const auto& e : fs::recursive_directory_iterator(dir))
      if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());

  ordered_json manifest;
  manifest["status"] = result.ok ? "ok" : "failed";
  manifest["failed_stage"] = result.ok ? ordered_json(nullptr) : ordered_json(result.failed_stage);
  manifest["error"] = result.ok ? ordered_json(nullptr) : ordered_json(result.error);
  manifest["config"] = effective_rules(config);
  ordered_json outputs = ordered_json::array();
  for (const auto& f : files) {
    const auto content = text::read_file(f);
    outputs.push_back({{"path", f.lexically_relative(config.out_dir).generic_string()},
                       {"bytes", content.size()},
                       {"sha256", sha256_hex(content)}});
  }
  manifest["outputs"] = outputs;
  write_json(result.manifest, manifest);
  return result;
}

}  // namespace sciomap::pipeline
