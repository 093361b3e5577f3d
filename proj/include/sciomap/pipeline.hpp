#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sciomap/cocite.hpp"
#include "sciomap/corpus.hpp"
#include "sciomap/netalgo.hpp"

namespace sciomap::pipeline {

struct PipelineConfig {
  // inputs
  std::filesystem::path mentions;
  std::filesystem::path sources;
  std::filesystem::path labels;
  std::filesystem::path lookup_fixtures;
  std::string lookup_endpoint;
  std::filesystem::path cache;  // empty: $SCIOMAP_CACHE, then <out>/cache/issn-cache.json

  // rules
  std::string discipline = "Arts and Humanities";
  std::optional<corpus::YearWindow> window = corpus::YearWindow{2007, 2017};
  bool require_date = true;
  corpus::DateSource date_source = corpus::DateSource::Mention;
  double min_weight = 6.0;
  cocite::Counting counting = cocite::Counting::Entries;
  bool journal_level = true;
  bool specialty_level = true;
  netalgo::PathfinderParams pathfinder;
  double louvain_resolution = 1.0;
  std::uint64_t louvain_seed = 42;
  std::size_t top_k = 25;
  bool betweenness_weighted = false;
  bool offline = false;

  // execution; never affects outputs
  unsigned jobs = 1;
  std::filesystem::path out_dir = "out";
};

/// TOML-style `key = value` lines grouped in [inputs], [rules] and [output]
/// sections. Relative input paths resolve against `base_dir`.
PipelineConfig parse_config(std::string_view text, const std::filesystem::path& base_dir);
PipelineConfig load_config(const std::filesystem::path& path);

/// Throws PreconditionError for missing inputs or inconsistent rules.
void validate(const PipelineConfig& config);

/// `Y1:Y2`, or `none` to disable the window.
std::optional<corpus::YearWindow> parse_window(std::string_view text);
/// `inf` or a number >= 1.
double parse_minkowski_r(std::string_view text);
/// `max` (stored as 0) or a positive integer.
std::size_t parse_max_path_length(std::string_view text);

enum class Stage {
  Ingest,
  Enrich,
  Link,
  Dedupe,
  Filter,
  Summary,
  Cocite,
  Prune,
  Pathfinder,
  Centrality,
  Cluster,
  Tables,
  Plot,
  Export,
};

inline constexpr Stage kAllStages[] = {
    Stage::Ingest,     Stage::Enrich,     Stage::Link,    Stage::Dedupe, Stage::Filter,
    Stage::Summary,    Stage::Cocite,     Stage::Prune,   Stage::Pathfinder,
    Stage::Centrality, Stage::Cluster,    Stage::Tables,  Stage::Plot,   Stage::Export,
};

/// `stage-NN-name`.
std::string stage_dir_name(Stage stage);
std::string stage_name(Stage stage);

/// Runs one stage, reading earlier stage outputs from the output directory.
void run_stage(Stage stage, const PipelineConfig& config);

struct RunResult {
  bool ok = true;
  std::string failed_stage;
  std::string error;
  std::filesystem::path manifest;
};

/// Every stage in order, then `manifest.json` with the SHA-256 of each output
/// file. On failure the manifest records the failing stage and earlier outputs
/// are kept.
RunResult run_pipeline(const PipelineConfig& config);

}  // namespace sciomap::pipeline
