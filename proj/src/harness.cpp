#include "moea/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "moea/metrics.hpp"

namespace moea {
namespace {

template <typename T>
void put(std::ostream& out, const std::optional<T>& v) {
  if (v) out << *v;
}

void put_number(std::ostream& out, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  out.write(buf, res.ptr - buf);
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

/// Population size 1.5 * M, rounded up.
std::size_t one_and_a_half(std::size_t front) { return ceil_div(3 * front, 2); }

ExperimentCell make_cell(AlgorithmKind algo, BenchmarkSpec spec, std::size_t N, std::uint64_t budget) {
  return ExperimentCell{algo, spec, N, budget};
}

ExperimentConfig many_objective_cover(std::string name, std::vector<std::size_t> sizes, std::uint64_t budget) {
  ExperimentConfig cfg;
  cfg.name = std::move(name);
  cfg.description = "4-objective OneMinMax, evaluations to cover the front; nsga2-t and nsga2-t-seq with N in {M, 2M}, gsemo";
  cfg.kind = ExperimentKind::CoverTime;
  for (auto n : sizes) {
    const BenchmarkSpec spec{BenchmarkKind::MOneMinMax, n, 4, 0};
    const std::size_t M = Benchmark(spec).front_size();
    for (auto algo : {AlgorithmKind::Nsga2T, AlgorithmKind::Nsga2TSeq}) {
      cfg.cells.push_back(make_cell(algo, spec, M, budget));
      cfg.cells.push_back(make_cell(algo, spec, 2 * M, budget));
    }
    cfg.cells.push_back(make_cell(AlgorithmKind::Gsemo, spec, 0, budget));
  }
  return cfg;
}

ExperimentConfig bi_objective_cover(std::string name, std::vector<std::size_t> sizes, std::uint64_t budget) {
  ExperimentConfig cfg;
  cfg.name = std::move(name);
  cfg.description = "OneMinMax, evaluations to cover the front; nsga2 with N in {M, 1.5M}, nsga2-t with N in {M, 1.5M}, gsemo";
  cfg.kind = ExperimentKind::CoverTime;
  for (auto n : sizes) {
    const BenchmarkSpec spec{BenchmarkKind::OneMinMax, n, 2, 0};
    const std::size_t M = Benchmark(spec).front_size();
    cfg.cells.push_back(make_cell(AlgorithmKind::Nsga2, spec, M, budget));
    cfg.cells.push_back(make_cell(AlgorithmKind::Nsga2, spec, one_and_a_half(M), budget));
    cfg.cells.push_back(make_cell(AlgorithmKind::Nsga2T, spec, M, budget));
    cfg.cells.push_back(make_cell(AlgorithmKind::Nsga2T, spec, one_and_a_half(M), budget));
    cfg.cells.push_back(make_cell(AlgorithmKind::Gsemo, spec, 0, budget));
  }
  return cfg;
}

ExperimentConfig approximation(std::string name, std::size_t n, std::vector<std::size_t> sizes,
                               std::vector<AlgorithmKind> algos, std::vector<GenerationWindow> windows,
                               std::uint64_t generations_budget) {
  ExperimentConfig cfg;
  cfg.name = std::move(name);
  cfg.kind = ExperimentKind::Approximation;
  cfg.windows = std::move(windows);
  const BenchmarkSpec spec{BenchmarkKind::OneMinMax, n, 2, 0};
  for (auto N : sizes) {
    for (auto algo : algos) cfg.cells.push_back(make_cell(algo, spec, N, N * generations_budget));
  }
  std::ostringstream desc;
  desc << "OneMinMax n=" << n << ", MEI in generation windows after both extremes are found";
  cfg.description = desc.str();
  return cfg;
}

const std::vector<std::string_view>& names() {
  static const std::vector<std::string_view> kNames{"fig1", "fig1-small", "fig2", "fig2-small", "fig3", "fig3-small"};
  return kNames;
}

CsvRow base_row(const ExperimentConfig& cfg, const ExperimentCell& cell, std::size_t run_index, std::uint64_t seed) {
  CsvRow row;
  row.preset = cfg.name;
  row.algo = std::string(algorithm_id(cell.algo));
  row.benchmark = std::string(benchmark_id(cell.benchmark.kind));
  row.n = cell.benchmark.n;
  row.m = cell.benchmark.m;
  if (cell.benchmark.kind == BenchmarkKind::OJZJ || cell.benchmark.kind == BenchmarkKind::MOJZJ) {
    row.k = cell.benchmark.k;
  }
  if (cell.algo != AlgorithmKind::Gsemo) row.N = cell.population_size;
  row.run = run_index;
  row.seed = seed;
  return row;
}

std::uint64_t fnv1a(std::string_view text) noexcept {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.preset << ',' << r.algo << ',' << r.benchmark << ',' << r.n << ',' << r.m << ',';
    put(out, r.k);
    out << ',';
    put(out, r.N);
    out << ',';
    put(out, r.run);
    out << ',';
    put(out, r.seed);
    out << ',' << r.metric << ',';
    put(out, r.generation);
    out << ',';
    if (r.value) put_number(out, *r.value);
    out << '\n';
  }
}

std::string to_csv(const std::vector<CsvRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

void ExperimentConfig::validate() const {
  if (runs < 1) throw ConfigError("experiment needs at least one run");
  if (cells.empty()) throw ConfigError("experiment has no cells");
  variation.validate();
  for (std::size_t i = 0; i < windows.size(); ++i) {
    if (windows[i].first > windows[i].last) throw ConfigError("window bounds out of order");
    if (i > 0 && windows[i].first <= windows[i - 1].last) throw ConfigError("windows must be increasing");
  }
  if (kind == ExperimentKind::Approximation) {
    if (windows.empty()) throw ConfigError("approximation experiment needs at least one window");
    for (const auto& c : cells) {
      if (c.benchmark.kind != BenchmarkKind::OneMinMax) throw ConfigError("MEI is defined for OneMinMax only");
    }
  }
}

std::vector<std::string_view> preset_names() { return names(); }

ExperimentConfig make_preset(std::string_view name) {
  ExperimentConfig cfg;
  if (name == "fig1") {
    cfg = many_objective_cover("fig1", {4, 8, 12, 16, 20}, 10'000'000);
  } else if (name == "fig1-small") {
    cfg = many_objective_cover("fig1-small", {4, 8}, 1'000'000);
  } else if (name == "fig2") {
    cfg = bi_objective_cover("fig2", {25, 50, 100, 200}, 10'000'000);
  } else if (name == "fig2-small") {
    cfg = bi_objective_cover("fig2-small", {10, 20, 30}, 1'000'000);
  } else if (name == "fig3") {
    const std::size_t n = 601;
    cfg = approximation("fig3", n, {ceil_div(n + 1, 2), ceil_div(n + 1, 4), ceil_div(n + 1, 8)},
                        {AlgorithmKind::Nsga2, AlgorithmKind::Nsga2Seq, AlgorithmKind::Nsga2T, AlgorithmKind::Nsga2TSeq},
                        {{1, 100}, {3001, 3100}}, 20'000);
  } else if (name == "fig3-small") {
    cfg = approximation("fig3-small", 61, {16}, {AlgorithmKind::Nsga2Seq, AlgorithmKind::Nsga2TSeq},
                        {{1, 100}, {301, 400}}, 10'000);
  } else {
    throw ConfigError("unknown preset '" + std::string(name) + "'");
  }
  cfg.validate();
  return cfg;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view preset, AlgorithmKind algo, std::size_t n,
                          std::size_t N, std::size_t run_index) noexcept {
  std::uint64_t h = mix64(master_seed);
  h = mix64(h ^ fnv1a(preset));
  h = mix64(h ^ static_cast<std::uint64_t>(algo));
  h = mix64(h ^ n);
  h = mix64(h ^ N);
  return mix64(h ^ run_index);
}

std::vector<CsvRow> run_experiment_cell(const ExperimentConfig& cfg, const ExperimentCell& cell,
                                        std::size_t run_index) {
  const std::uint64_t seed =
      derive_seed(cfg.master_seed, cfg.name, cell.algo, cell.benchmark.n, cell.population_size, run_index);
  const Benchmark benchmark(cell.benchmark);

  AlgorithmConfig alg;
  alg.algo = cell.algo;
  alg.population_size = cell.population_size;
  alg.variation = cfg.variation;
  alg.seed = seed;
  alg.budget = cell.budget;

  std::vector<CsvRow> rows;
  const CsvRow base = base_row(cfg, cell, run_index, seed);

  if (cfg.kind == ExperimentKind::CoverTime) {
    alg.stop = StopRule::FrontCovered;
    const auto result = run(alg, benchmark);
    CsvRow evals = base;
    evals.metric = metric::kEvaluationsToCover;
    if (result.covered_at) evals.value = static_cast<double>(*result.covered_at);
    CsvRow gens = base;
    gens.metric = metric::kGenerationsToCover;
    if (result.covered_at_generation) gens.value = static_cast<double>(*result.covered_at_generation);
    rows.push_back(std::move(evals));
    rows.push_back(std::move(gens));
    return rows;
  }

  alg.stop = StopRule::BudgetOnly;
  const std::size_t horizon = cfg.windows.back().last;
  const std::size_t n = cell.benchmark.n;
  std::optional<std::size_t> found;
  std::vector<CsvRow> trace;
  auto observer = [&](std::size_t generation, const Population& population) {
    if (!found && has_one_min_max_extremes(population, n)) found = generation;
    if (!found) return true;
    const std::size_t rel = generation - *found;
    for (const auto& w : cfg.windows) {
      if (rel >= w.first && rel <= w.last) {
        CsvRow row = base;
        row.metric = metric::kMei;
        row.generation = rel;
        row.value = static_cast<double>(mei(population, n));
        trace.push_back(std::move(row));
        break;
      }
    }
    return rel < horizon;
  };
  (void)run(alg, benchmark, observer);

  CsvRow anchor = base;
  anchor.metric = metric::kExtremesGeneration;
  if (found) anchor.value = static_cast<double>(*found);
  rows.push_back(std::move(anchor));
  rows.insert(rows.end(), std::make_move_iterator(trace.begin()), std::make_move_iterator(trace.end()));
  return rows;
}

std::vector<CsvRow> run_preset(const ExperimentConfig& cfg, std::size_t threads) {
  cfg.validate();
  const std::size_t tasks = cfg.cells.size() * cfg.runs;
  std::vector<std::vector<CsvRow>> slots(tasks);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t t = next++; t < tasks; t = next++) {
      slots[t] = run_experiment_cell(cfg, cfg.cells[t / cfg.runs], t % cfg.runs);
    }
  };

  threads = std::clamp<std::size_t>(threads, 1, tasks);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  std::vector<CsvRow> rows;
  for (auto& slot : slots) rows.insert(rows.end(), std::make_move_iterator(slot.begin()), std::make_move_iterator(slot.end()));
  return rows;
}

std::string_view to_string(Statistic s) noexcept {
  switch (s) {
    case Statistic::Median: return "median";
    case Statistic::Q1: return "q1";
    case Statistic::Q3: return "q3";
  }
  return "?";
}

double order_statistic(std::vector<double> values, Statistic s) {
  if (values.empty()) throw ContractViolation("order_statistic: empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t count = values.size();
  if (s == Statistic::Median) {
    if (count % 2 == 1) return values[count / 2];
    return (values[count / 2 - 1] + values[count / 2]) / 2.0;
  }
  const double q = s == Statistic::Q1 ? 0.25 : 0.75;
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(count)));
  return values[std::max<std::size_t>(rank, 1) - 1];
}

std::vector<CsvRow> aggregate(const std::vector<CsvRow>& rows, Statistic s) {
  using Key = std::tuple<std::string, std::string, std::string, std::size_t, std::size_t, std::optional<std::size_t>,
                         std::optional<std::size_t>, std::string, std::optional<std::size_t>>;
  std::map<Key, std::size_t> slot_of;
  std::vector<CsvRow> heads;
  std::vector<std::vector<double>> samples;
  for (const auto& r : rows) {
    Key key{r.preset, r.algo, r.benchmark, r.n, r.m, r.k, r.N, r.metric, r.generation};
    auto [it, inserted] = slot_of.try_emplace(key, heads.size());
    if (inserted) {
      CsvRow head = r;
      head.run.reset();
      head.seed.reset();
      head.value.reset();
      head.metric = r.metric + "_" + std::string(to_string(s));
      heads.push_back(std::move(head));
      samples.emplace_back();
    }
    if (r.value) samples[it->second].push_back(*r.value);
  }

  std::vector<CsvRow> out;
  for (std::size_t i = 0; i < heads.size(); ++i) {
    if (samples[i].empty()) continue;
    heads[i].value = order_statistic(std::move(samples[i]), s);
    out.push_back(std::move(heads[i]));
  }
  return out;
}

}  // namespace moea
