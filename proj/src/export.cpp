#include "sciomap/export.hpp"

#include <algorithm>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <json.hpp>

#include "sciomap/error.hpp"
#include "sciomap/text.hpp"

namespace sciomap::exporter {

namespace {

template <class Map, class Value = typename Map::mapped_type>
Value attr_or_zero(const Map& m, const NodeId& id) {
  auto it = m.find(id);
  return it == m.end() ? Value{} : it->second;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::string pajek_label(std::string_view s) {
  std::string out(s);
  std::replace(out.begin(), out.end(), '"', '\'');
  std::replace(out.begin(), out.end(), '\n', ' ');
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Pajek

std::string format_pajek(const GraphDocument& doc) {
  const auto& g = doc.graph;
  std::map<NodeId, std::size_t> number;
  std::string out = "*Vertices " + std::to_string(g.node_count()) + "\n";
  for (const auto& [id, info] : g.nodes()) {
    const std::size_t k = number.size() + 1;
    number.emplace(id, k);
    out += std::to_string(k) + " \"" + pajek_label(id) + "\"\n";
  }
  out += "*Edges\n";
  for (const auto& [key, w] : g.edges()) {
    out += std::to_string(number.at(key.first())) + " " + std::to_string(number.at(key.second())) + " " +
           text::format_decimal(w, doc.precision) + "\n";
  }
  return out;
}

WeightedGraph parse_pajek(std::string_view content) {
  WeightedGraph g;
  std::map<std::size_t, NodeId> ids;
  enum class Section { None, Vertices, Edges } section = Section::None;
  std::size_t line_no = 0;
  for (const auto& raw : text::split(content, '\n')) {
    ++line_no;
    const auto line = text::trim(raw);
    if (line.empty() || line.front() == '%') continue;
    auto fail = [&](const std::string& why) { throw FormatError("pajek line " + std::to_string(line_no) + ": " + why); };
    if (line.front() == '*') {
      const auto keyword = text::to_lower_ascii(line.substr(0, line.find(' ')));
      if (keyword == "*vertices") section = Section::Vertices;
      else if (keyword == "*edges") section = Section::Edges;
      else fail("unsupported section " + std::string(line));
      continue;
    }
    if (section == Section::Vertices) {
      const auto space = line.find(' ');
      const auto number = text::parse_int(line.substr(0, space));
      if (!number || *number < 1) fail("bad vertex number");
      std::string_view rest = space == std::string_view::npos ? std::string_view{} : text::trim(line.substr(space));
      std::string label;
      if (rest.starts_with('"')) {
        const auto close = rest.find('"', 1);
        if (close == std::string_view::npos) fail("unterminated label");
        label = std::string(rest.substr(1, close - 1));
      } else {
        label = std::string(rest.substr(0, rest.find(' ')));
      }
      if (label.empty()) label = std::to_string(*number);
      ids.emplace(static_cast<std::size_t>(*number), label);
      g.add_node(label, NodeInfo{label, {}, 0});
    } else if (section == Section::Edges) {
      std::istringstream ss{std::string(line)};
      std::string a, b, w;
      ss >> a >> b >> w;
      const auto ia = text::parse_int(a);
      const auto ib = text::parse_int(b);
      const auto weight = w.empty() ? std::optional<double>(1.0) : text::parse_double(w);
      if (!ia || !ib || !weight) fail("bad edge line");
      auto na = ids.find(static_cast<std::size_t>(*ia));
      auto nb = ids.find(static_cast<std::size_t>(*ib));
      if (na == ids.end() || nb == ids.end()) fail("edge references an unknown vertex");
      g.set_edge(na->second, nb->second, *weight);
    } else {
      fail("data before any section");
    }
  }
  return g;
}

void write_pajek(const GraphDocument& doc, const std::filesystem::path& path) {
  text::write_file(path, format_pajek(doc));
}

// ---------------------------------------------------------------------------
// GEXF

std::string format_gexf(const GraphDocument& doc) {
  const auto& g = doc.graph;
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<gexf xmlns=\"http://www.gexf.net/1.2draft\" version=\"1.2\">\n"
      "  <graph mode=\"static\" defaultedgetype=\"undirected\">\n"
      "    <attributes class=\"node\">\n"
      "      <attribute id=\"0\" title=\"community\" type=\"integer\"/>\n"
      "      <attribute id=\"1\" title=\"degree\" type=\"integer\"/>\n"
      "      <attribute id=\"2\" title=\"betweenness\" type=\"double\"/>\n"
      "      <attribute id=\"3\" title=\"article_count\" type=\"integer\"/>\n"
      "    </attributes>\n"
      "    <nodes>\n";
  for (const auto& [id, info] : g.nodes()) {
    out += "      <node id=\"" + xml_escape(id) + "\" label=\"" + xml_escape(info.label) + "\">\n";
    out += "        <attvalues>\n";
    out += "          <attvalue for=\"0\" value=\"" + std::to_string(attr_or_zero(doc.community, id)) + "\"/>\n";
    out += "          <attvalue for=\"1\" value=\"" + std::to_string(attr_or_zero(doc.degree, id)) + "\"/>\n";
    out += "          <attvalue for=\"2\" value=\"" +
           text::format_decimal(attr_or_zero(doc.betweenness, id), doc.precision) + "\"/>\n";
    out += "          <attvalue for=\"3\" value=\"" + std::to_string(info.article_count) + "\"/>\n";
    out += "        </attvalues>\n";
    out += "      </node>\n";
  }
  out += "    </nodes>\n    <edges>\n";
  std::size_t edge_id = 0;
  for (const auto& [key, w] : g.edges()) {
    out += "      <edge id=\"" + std::to_string(edge_id++) + "\" source=\"" + xml_escape(key.first()) + "\" target=\"" +
           xml_escape(key.second()) + "\" weight=\"" + text::format_decimal(w, doc.precision) + "\"/>\n";
  }
  out += "    </edges>\n  </graph>\n</gexf>\n";
  return out;
}

GraphDocument parse_gexf(std::string_view content) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    std::istringstream in{std::string(content)};
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw FormatError(std::string("invalid GEXF: ") + e.what());
  }
  const auto* graph = tree.get_child_optional("gexf.graph").get_ptr();
  if (graph == nullptr) throw FormatError("GEXF document has no graph element");

  std::map<std::string, std::string> title_of;
  for (const auto& [tag, child] : *graph) {
    if (tag != "attributes") continue;
    for (const auto& [atag, attr] : child)
      if (atag == "attribute") title_of[attr.get<std::string>("<xmlattr>.id")] = attr.get<std::string>("<xmlattr>.title");
  }

  GraphDocument doc;
  if (const auto nodes = graph->get_child_optional("nodes")) {
    for (const auto& [tag, node] : *nodes) {
      if (tag != "node") continue;
      const auto id = node.get<std::string>("<xmlattr>.id");
      NodeInfo info{node.get<std::string>("<xmlattr>.label", id), {}, 0};
      if (const auto values = node.get_child_optional("attvalues")) {
        for (const auto& [vtag, v] : *values) {
          if (vtag != "attvalue") continue;
          const auto title = title_of[v.get<std::string>("<xmlattr>.for")];
          const auto value = v.get<std::string>("<xmlattr>.value");
          if (title == "community") doc.community[id] = static_cast<std::size_t>(text::parse_int(value).value_or(0));
          else if (title == "degree") doc.degree[id] = static_cast<std::size_t>(text::parse_int(value).value_or(0));
          else if (title == "betweenness") doc.betweenness[id] = text::parse_double(value).value_or(0.0);
          else if (title == "article_count") info.article_count = static_cast<std::size_t>(text::parse_int(value).value_or(0));
        }
      }
      doc.graph.add_node(id, std::move(info));
    }
  }
  if (const auto edges = graph->get_child_optional("edges")) {
    for (const auto& [tag, edge] : *edges) {
      if (tag != "edge") continue;
      const auto weight = text::parse_double(edge.get<std::string>("<xmlattr>.weight", "1"));
      if (!weight) throw FormatError("GEXF edge with a non-numeric weight");
      doc.graph.set_edge(edge.get<std::string>("<xmlattr>.source"), edge.get<std::string>("<xmlattr>.target"), *weight);
    }
  }
  return doc;
}

void write_gexf(const GraphDocument& doc, const std::filesystem::path& path) {
  text::write_file(path, format_gexf(doc));
}

// ---------------------------------------------------------------------------
// Graphviz

std::string format_dot(const GraphDocument& doc) {
  const auto& g = doc.graph;
  if (g.empty()) return "graph G { }\n";
  std::string out = "graph G {\n";
  for (const auto& [id, info] : g.nodes())
    out += "  \"" + dot_escape(id) + "\" [label=\"" + dot_escape(info.label) + "\"];\n";
  for (const auto& [key, w] : g.edges()) {
    const auto weight = text::format_decimal(w, doc.precision);
    out += "  \"" + dot_escape(key.first()) + "\" -- \"" + dot_escape(key.second()) + "\" [weight=" + weight +
           ", label=\"" + weight + "\"];\n";
  }
  out += "}\n";
  return out;
}

void write_dot(const GraphDocument& doc, const std::filesystem::path& path) {
  text::write_file(path, format_dot(doc));
}

// ---------------------------------------------------------------------------
// SVG chart

std::string render_annual_svg(std::span<const stats::AnnualPoint> series) {
  if (series.empty()) throw PreconditionError("render_annual_svg needs at least one point");
  constexpr double left = 80, right = 880, top = 40, bottom = 480;
  constexpr double plot_w = right - left, plot_h = bottom - top;
  auto num = [](double v) { return text::format_decimal(v, 2); };

  std::size_t max_citations = 0;
  double max_mean = 0.0;
  for (const auto& p : series) {
    max_citations = std::max(max_citations, p.citations);
    max_mean = std::max(max_mean, p.mean_citations_per_article);
  }
  const double slot = plot_w / static_cast<double>(series.size());

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(kSvgWidth) +
         "\" height=\"" + std::to_string(kSvgHeight) + "\" viewBox=\"0 0 " + std::to_string(kSvgWidth) + " " +
         std::to_string(kSvgHeight) + "\">\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"" + std::to_string(kSvgWidth) + "\" height=\"" + std::to_string(kSvgHeight) +
         "\" fill=\"white\"/>\n";
  out += "  <line class=\"axis\" x1=\"" + num(left) + "\" y1=\"" + num(bottom) + "\" x2=\"" + num(right) + "\" y2=\"" +
         num(bottom) + "\" stroke=\"black\"/>\n";
  out += "  <line class=\"axis\" x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" + num(left) + "\" y2=\"" +
         num(bottom) + "\" stroke=\"black\"/>\n";
  out += "  <line class=\"axis\" x1=\"" + num(right) + "\" y1=\"" + num(top) + "\" x2=\"" + num(right) + "\" y2=\"" +
         num(bottom) + "\" stroke=\"black\"/>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& p = series[i];
    const double h = max_citations == 0 ? 0.0 : plot_h * static_cast<double>(p.citations) / static_cast<double>(max_citations);
    const double x = left + slot * static_cast<double>(i) + slot * 0.15;
    out += "  <rect class=\"bar\" data-year=\"" + std::to_string(p.year) + "\" data-citations=\"" +
           std::to_string(p.citations) + "\" x=\"" + num(x) + "\" y=\"" + num(bottom - h) + "\" width=\"" +
           num(slot * 0.7) + "\" height=\"" + num(h) + "\" fill=\"#4e79a7\"/>\n";
    out += "  <text x=\"" + num(left + slot * (static_cast<double>(i) + 0.5)) + "\" y=\"" + num(bottom + 18) +
           "\" font-size=\"12\" text-anchor=\"middle\">" + std::to_string(p.year) + "</text>\n";
  }

  std::string points;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double mean = series[i].mean_citations_per_article;
    const double y = max_mean == 0.0 ? bottom : bottom - plot_h * mean / max_mean;
    if (i) points.push_back(' ');
    points += num(left + slot * (static_cast<double>(i) + 0.5)) + "," + num(y);
  }
  out += "  <polyline class=\"mean\" points=\"" + points + "\" fill=\"none\" stroke=\"#e15759\" stroke-width=\"2\"/>\n";

  out += "  <text x=\"" + num(left - 8) + "\" y=\"" + num(bottom) + "\" font-size=\"12\" text-anchor=\"end\">0</text>\n";
  out += "  <text x=\"" + num(left - 8) + "\" y=\"" + num(top + 4) + "\" font-size=\"12\" text-anchor=\"end\">" +
         std::to_string(max_citations) + "</text>\n";
  out += "  <text x=\"" + num(right + 8) + "\" y=\"" + num(bottom) + "\" font-size=\"12\">0</text>\n";
  out += "  <text x=\"" + num(right + 8) + "\" y=\"" + num(top + 4) + "\" font-size=\"12\">" +
         text::format_decimal(max_mean, 2) + "</text>\n";
  out += "  <text x=\"" + num((left + right) / 2) + "\" y=\"" + num(kSvgHeight - 20) +
         "\" font-size=\"14\" text-anchor=\"middle\">Year</text>\n";
  out += "  <text x=\"20\" y=\"" + num((top + bottom) / 2) + "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
         num((top + bottom) / 2) + ")\">Citations</text>\n";
  out += "  <text x=\"" + num(kSvgWidth - 20) + "\" y=\"" + num((top + bottom) / 2) +
         "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(90 " + num(kSvgWidth - 20) + " " +
         num((top + bottom) / 2) + ")\">Mean citations per article</text>\n";
  out += "</svg>\n";
  return out;
}

void write_annual_svg(std::span<const stats::AnnualPoint> series, const std::filesystem::path& path) {
  text::write_file(path, render_annual_svg(series));
}

// ---------------------------------------------------------------------------
// CSV tables

namespace {

std::string num(double v) { return text::format_shortest(v); }

}  // namespace

std::string stats_csv(const stats::DistributionTables& tables) {
  std::string out = text::csv_line({"distribution", "mean", "median", "mode", "std_dev", "range", "min", "max", "n"});
  auto row = [&](const char* name, const stats::StatsSummary& s) {
    out += text::csv_line({name, num(s.mean), num(s.median), num(s.mode), num(s.std_dev), num(s.range), num(s.min),
                           num(s.max), std::to_string(s.n)});
  };
  row("per_entry", tables.per_entry);
  row("per_article", tables.per_article);
  return out;
}

std::string specialty_csv(std::span<const stats::SpecialtyRow> rows) {
  std::string out = text::csv_line({"specialty", "journals_cited", "share_journals", "share_journals_raw",
                                     "articles_cited", "citations", "share_citations", "share_citations_raw",
                                     "mean_citations_per_article", "std_citations_per_article"});
  for (const auto& r : rows) {
    out += text::csv_line({r.specialty, std::to_string(r.journals_cited), num(r.share_journals),
                           num(r.share_journals_raw), std::to_string(r.articles_cited), std::to_string(r.citations),
                           num(r.share_citations), num(r.share_citations_raw), num(r.mean_citations_per_article),
                           num(r.std_citations_per_article)});
  }
  return out;
}

std::string journal_csv(std::span<const stats::JournalRow> rows) {
  std::string out = text::csv_line(
      {"rank", "title", "issn", "citations", "articles_cited", "mean_citations", "open_access", "top_journal"});
  for (const auto& r : rows) {
    out += text::csv_line({std::to_string(r.rank), r.title, r.issn, std::to_string(r.citations),
                           std::to_string(r.articles_cited), num(r.mean_citations), r.open_access ? "true" : "false",
                           r.top_journal ? "true" : "false"});
  }
  return out;
}

std::string coverage_csv(std::span<const stats::CoverageRow> rows) {
  std::string out = text::csv_line(
      {"specialty", "wiki_article_share", "wiki_citation_share", "scopus_article_share", "scopus_citation_share"});
  for (const auto& r : rows) {
    out += text::csv_line({r.specialty, num(r.wiki_article_share), num(r.wiki_citation_share),
                           num(r.scopus_article_share), num(r.scopus_citation_share)});
  }
  return out;
}

std::string annual_csv(std::span<const stats::AnnualPoint> series) {
  std::string out = text::csv_line({"year", "citations", "mean_citations_per_article"});
  for (const auto& p : series)
    out += text::csv_line({std::to_string(p.year), std::to_string(p.citations), num(p.mean_citations_per_article)});
  return out;
}

// ---------------------------------------------------------------------------
// Stage interchange

std::string format_graph_json(const WeightedGraph& g) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["nodes"] = ordered_json::array();
  for (const auto& [id, info] : g.nodes()) {
    ordered_json node;
    node["id"] = id;
    node["label"] = info.label;
    node["specialties"] = info.specialties;
    node["article_count"] = info.article_count;
    doc["nodes"].push_back(std::move(node));
  }
  doc["edges"] = ordered_json::array();
  for (const auto& [key, w] : g.edges()) {
    ordered_json edge;
    edge["source"] = key.first();
    edge["target"] = key.second();
    edge["weight"] = w;
    doc["edges"].push_back(std::move(edge));
  }
  return doc.dump(1) + "\n";
}

WeightedGraph parse_graph_json(std::string_view content) {
  WeightedGraph g;
  try {
    const auto doc = nlohmann::json::parse(content);
    for (const auto& node : doc.at("nodes")) {
      g.add_node(node.at("id").get<std::string>(),
                 NodeInfo{node.at("label").get<std::string>(), node.at("specialties").get<std::set<std::string>>(),
                          node.at("article_count").get<std::size_t>()});
    }
    for (const auto& edge : doc.at("edges")) {
      const auto a = edge.at("source").get<std::string>();
      const auto b = edge.at("target").get<std::string>();
      if (!g.has_node(a) || !g.has_node(b)) throw FormatError("edge references an unknown node");
      g.set_edge(a, b, edge.at("weight").get<double>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid graph document: ") + e.what());
  }
  return g;
}

}  // namespace sciomap::exporter
