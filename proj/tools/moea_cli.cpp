// moea: run single configurations or whole experiment presets and write CSV.
//
//   moea run --algo nsga2-t --benchmark m-omm --n 8 --m 4 --runs 5
//   moea preset fig1-small --out fig1.csv
//   moea list-presets

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "moea/moea.hpp"

namespace {

constexpr int kUsageError = 2;

struct RunOptions {
  std::string algo = "nsga2-t";
  std::string benchmark;
  std::size_t n = 0;
  std::size_t m = 2;
  std::size_t k = 0;
  std::size_t pop_size = 0;
  std::string selection = "random";
  std::string mutation = "bitwise";
  double crossover_rate = 0.0;
  std::uint64_t seed = 1;
  std::size_t runs = 1;
  std::uint64_t budget = 1'000'000;
  bool trace_mei = false;
};

struct PresetOptions {
  std::string name;
  std::optional<std::size_t> runs;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::size_t threads = 1;
  bool summary = false;
};

template <typename T>
T require(std::optional<T> v, const std::string& what) {
  if (!v) throw moea::ConfigError("unknown " + what);
  return *v;
}

std::vector<moea::CsvRow> execute_run(const RunOptions& o) {
  const auto algo = require(moea::parse_algorithm(o.algo), "algorithm '" + o.algo + "'");
  const auto kind = require(moea::parse_benchmark(o.benchmark), "benchmark '" + o.benchmark + "'");
  const moea::Benchmark benchmark(moea::BenchmarkSpec{kind, o.n, o.m, o.k});

  moea::AlgorithmConfig cfg;
  cfg.algo = algo;
  cfg.population_size = o.pop_size > 0 ? o.pop_size : benchmark.front_size();
  cfg.variation.selection = require(moea::parse_selection(o.selection), "selection '" + o.selection + "'");
  cfg.variation.mutation = require(moea::parse_mutation(o.mutation), "mutation '" + o.mutation + "'");
  cfg.variation.crossover_rate = o.crossover_rate;
  cfg.budget = o.budget;
  cfg.stop = o.trace_mei ? moea::StopRule::BudgetOnly : moea::StopRule::FrontCovered;
  cfg.trace = o.trace_mei;
  if (o.trace_mei && kind != moea::BenchmarkKind::OneMinMax) {
    throw moea::ConfigError("--trace-mei requires the omm benchmark");
  }
  if (o.runs < 1) throw moea::ConfigError("--runs must be at least 1");

  std::vector<moea::CsvRow> rows;
  const bool gsemo = algo == moea::AlgorithmKind::Gsemo;
  for (std::size_t r = 0; r < o.runs; ++r) {
    cfg.seed = moea::derive_seed(o.seed, "run", algo, o.n, cfg.population_size, r);
    cfg.validate();
    const auto result = moea::run(cfg, benchmark);

    moea::CsvRow base;
    base.algo = o.algo;
    base.benchmark = o.benchmark;
    base.n = o.n;
    base.m = benchmark.m();
    if (kind == moea::BenchmarkKind::OJZJ || kind == moea::BenchmarkKind::MOJZJ) base.k = o.k;
    if (!gsemo) base.N = cfg.population_size;
    base.run = r;
    base.seed = cfg.seed;

    auto evals = base;
    evals.metric = moea::metric::kEvaluationsToCover;
    if (result.covered_at) evals.value = static_cast<double>(*result.covered_at);
    rows.push_back(evals);
    auto gens = base;
    gens.metric = moea::metric::kGenerationsToCover;
    if (result.covered_at_generation) gens.value = static_cast<double>(*result.covered_at_generation);
    rows.push_back(gens);

    for (const auto& rec : result.trace) {
      auto row = base;
      row.metric = moea::metric::kMei;
      row.generation = rec.generation;
      if (rec.mei) row.value = static_cast<double>(*rec.mei);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<moea::CsvRow> execute_preset(const PresetOptions& o) {
  auto cfg = moea::make_preset(o.name);
  if (o.runs) cfg.runs = *o.runs;
  if (o.seed) cfg.master_seed = *o.seed;
  if (o.budget) {
    for (auto& cell : cfg.cells) cell.budget = *o.budget;
  }
  auto rows = moea::run_preset(cfg, o.threads);
  if (!o.summary) return rows;
  std::vector<moea::CsvRow> summary;
  for (auto s : {moea::Statistic::Q1, moea::Statistic::Median, moea::Statistic::Q3}) {
    auto part = moea::aggregate(rows, s);
    summary.insert(summary.end(), part.begin(), part.end());
  }
  return summary;
}

void emit(const std::vector<moea::CsvRow>& rows, const std::string& path) {
  if (path.empty() || path == "-") {
    moea::write_csv(std::cout, rows);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw moea::ConfigError("cannot open output file '" + path + "'");
  moea::write_csv(out, rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-objective evolutionary optimization with the truthful crowding distance"};
  app.set_config("--config", "", "TOML/INI file with option values; command-line flags take precedence");
  app.require_subcommand(1);

  std::string out_path;

  RunOptions run_opts;
  auto* run_cmd = app.add_subcommand("run", "Run one algorithm configuration and report coverage");
  run_cmd->add_option("--algo", run_opts.algo, "nsga2, nsga2-seq, nsga2-t, nsga2-t-seq or gsemo")->capture_default_str();
  run_cmd->add_option("--benchmark", run_opts.benchmark, "omm, cocz, lotz, ojzj, m-omm, m-cocz, m-lotz or m-ojzj")
      ->required();
  run_cmd->add_option("--n", run_opts.n, "Problem size")->required();
  run_cmd->add_option("--m", run_opts.m, "Number of objectives")->capture_default_str();
  run_cmd->add_option("--k", run_opts.k, "Jump parameter (ojzj, m-ojzj)");
  run_cmd->add_option("--pop-size", run_opts.pop_size, "Population size N (default: Pareto front size)");
  run_cmd->add_option("--selection", run_opts.selection, "fair or random")->capture_default_str();
  run_cmd->add_option("--mutation", run_opts.mutation, "one-bit or bitwise")->capture_default_str();
  run_cmd->add_option("--crossover-rate", run_opts.crossover_rate, "Crossover probability in [0, 1)")
      ->capture_default_str();
  run_cmd->add_option("--seed", run_opts.seed, "Master seed")->capture_default_str();
  run_cmd->add_option("--runs", run_opts.runs, "Number of independent runs")->capture_default_str();
  run_cmd->add_option("--budget", run_opts.budget, "Maximum fitness evaluations per run")->capture_default_str();
  run_cmd->add_flag("--trace-mei", run_opts.trace_mei, "Emit the MEI of every generation (omm only); runs to budget");
  run_cmd->add_option("--out", out_path, "CSV output path (default: standard output)");

  PresetOptions preset_opts;
  auto* preset_cmd = app.add_subcommand("preset", "Run an experiment preset");
  preset_cmd->add_option("name", preset_opts.name, "Preset name (see list-presets)")->required();
  preset_cmd->add_option("--runs", preset_opts.runs, "Override the number of runs per cell");
  preset_cmd->add_option("--seed", preset_opts.seed, "Override the master seed");
  preset_cmd->add_option("--budget", preset_opts.budget, "Override the evaluation budget of every cell");
  preset_cmd->add_option("--threads", preset_opts.threads, "Worker threads")->capture_default_str();
  preset_cmd->add_flag("--summary", preset_opts.summary, "Emit q1/median/q3 per group instead of raw rows");
  preset_cmd->add_option("--out", out_path, "CSV output path (default: standard output)");

  auto* list_cmd = app.add_subcommand("list-presets", "List the available presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (list_cmd->parsed()) {
      for (auto name : moea::preset_names()) {
        std::cout << name << '\t' << moea::make_preset(name).description << '\n';
      }
      return 0;
    }
    if (run_cmd->parsed()) emit(execute_run(run_opts), out_path);
    if (preset_cmd->parsed()) emit(execute_preset(preset_opts), out_path);
  } catch (const moea::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return 0;
}
