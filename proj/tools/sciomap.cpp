// Stage-by-stage command-line front end for the sciomap pipeline.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sciomap/error.hpp"
#include "sciomap/pipeline.hpp"

namespace {

using sciomap::pipeline::PipelineConfig;
using sciomap::pipeline::Stage;

struct Overrides {
  std::string config;
  std::optional<std::string> out;
  std::optional<double> min_weight;
  std::optional<std::string> window;
  std::optional<std::string> counting;
  std::optional<std::string> level;
  std::optional<std::string> r;
  std::optional<std::string> q;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> top_k;
  bool offline = false;
  unsigned jobs = 1;
};

void add_options(CLI::App& cmd, Overrides& o) {
  cmd.add_option("--config", o.config, "pipeline configuration file")->required()->check(CLI::ExistingFile);
  cmd.add_option("--out", o.out, "output directory");
  cmd.add_option("--min-weight", o.min_weight, "minimum co-citation weight kept (default 6)");
  cmd.add_option("--window", o.window, "year window Y1:Y2 or none (default 2007:2017)");
  cmd.add_option("--counting", o.counting, "entries|pairs")->check(CLI::IsMember({"entries", "pairs"}));
  cmd.add_option("--level", o.level, "journal|specialty|both")->check(CLI::IsMember({"journal", "specialty", "both"}));
  cmd.add_option("--r", o.r, "Pathfinder Minkowski parameter: inf or a number >= 1");
  cmd.add_option("--q", o.q, "Pathfinder maximum path length: N or max");
  cmd.add_option("--seed", o.seed, "Louvain seed");
  cmd.add_option("--top-k", o.top_k, "rows in the journal ranking (default 25)");
  cmd.add_flag("--offline", o.offline, "never contact the MediaWiki API");
  cmd.add_option("--jobs", o.jobs, "worker threads; results do not depend on it")->check(CLI::PositiveNumber);
}

PipelineConfig resolve(const Overrides& o) {
  namespace pl = sciomap::pipeline;
  PipelineConfig c = pl::load_config(o.config);
  if (o.out) c.out_dir = *o.out;
  if (o.min_weight) c.min_weight = *o.min_weight;
  if (o.window) c.window = pl::parse_window(*o.window);
  if (o.counting) c.counting = *o.counting == "pairs" ? sciomap::cocite::Counting::Pairs : sciomap::cocite::Counting::Entries;
  if (o.level) {
    c.journal_level = *o.level != "specialty";
    c.specialty_level = *o.level != "journal";
  }
  if (o.r) c.pathfinder.r = pl::parse_minkowski_r(*o.r);
  if (o.q) c.pathfinder.q = pl::parse_max_path_length(*o.q);
  if (o.seed) c.louvain_seed = *o.seed;
  if (o.top_k) c.top_k = *o.top_k;
  if (o.offline) c.offline = true;
  c.jobs = o.jobs;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wikipedia co-citation science mapping"};
  app.require_subcommand(1);
  Overrides overrides;

  std::map<CLI::App*, std::optional<Stage>> commands;
  for (Stage stage : sciomap::pipeline::kAllStages) {
    auto* cmd = app.add_subcommand(sciomap::pipeline::stage_name(stage), "run the " + sciomap::pipeline::stage_name(stage) + " stage");
    add_options(*cmd, overrides);
    commands[cmd] = stage;
  }
  auto* run = app.add_subcommand("run", "run every stage and write manifest.json");
  add_options(*run, overrides);
  commands[run] = std::nullopt;

  CLI11_PARSE(app, argc, argv);

  try {
    const PipelineConfig config = resolve(overrides);
    for (const auto& [cmd, stage] : commands) {
      if (!cmd->parsed()) continue;
      if (!stage) {
        const auto result = sciomap::pipeline::run_pipeline(config);
        if (!result.ok) {
          std::cerr << "sciomap: " << result.failed_stage << ": " << result.error << "\n";
          return 1;
        }
        std::cout << result.manifest.string() << "\n";
        return 0;
      }
      sciomap::pipeline::validate(config);
      sciomap::pipeline::run_stage(*stage, config);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "sciomap: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
