#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "moea/moea.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;

namespace {

std::vector<double> as_doubles(const std::vector<moea::CrowdingValue>& values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.to_double());
  return out;
}

moea::Benchmark make_benchmark(const std::string& name, std::size_t n, std::size_t m, std::size_t k) {
  const auto kind = moea::parse_benchmark(name);
  if (!kind) throw moea::ConfigError("unknown benchmark '" + name + "'");
  return moea::Benchmark(moea::BenchmarkSpec{*kind, n, m, k});
}

template <typename T>
T parse_or_throw(std::optional<T> v, const std::string& what) {
  if (!v) throw moea::ConfigError("unknown " + what);
  return *v;
}

py::dict run_config(const std::string& algo, const std::string& benchmark, std::size_t n, std::size_t m,
                    std::size_t k, std::size_t pop_size, std::uint64_t seed, std::uint64_t budget,
                    const std::string& selection, const std::string& mutation, double crossover_rate) {
  const auto bench = make_benchmark(benchmark, n, m, k);
  moea::AlgorithmConfig cfg;
  cfg.algo = parse_or_throw(moea::parse_algorithm(algo), "algorithm '" + algo + "'");
  cfg.population_size = pop_size > 0 ? pop_size : bench.front_size();
  cfg.variation.selection = parse_or_throw(moea::parse_selection(selection), "selection '" + selection + "'");
  cfg.variation.mutation = parse_or_throw(moea::parse_mutation(mutation), "mutation '" + mutation + "'");
  cfg.variation.crossover_rate = crossover_rate;
  cfg.seed = seed;
  cfg.budget = budget;

  moea::RunResult result;
  {
    py::gil_scoped_release release;
    result = moea::run(cfg, bench);
  }
  py::dict out;
  out["evaluations_used"] = result.evaluations_used;
  out["generations"] = result.generations;
  out["covered_at"] = result.covered_at ? py::cast(*result.covered_at) : py::none();
  out["front_size"] = bench.front_size();
  out["final_objectives"] = result.final_population.objective_vectors();
  return out;
}

std::string run_preset_csv(const std::string& name, std::optional<std::size_t> runs,
                           std::optional<std::uint64_t> seed, std::size_t threads) {
  auto cfg = moea::make_preset(name);
  if (runs) cfg.runs = *runs;
  if (seed) cfg.master_seed = *seed;
  std::vector<moea::CsvRow> rows;
  {
    py::gil_scoped_release release;
    rows = moea::run_preset(cfg, threads);
  }
  return moea::to_csv(rows);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "NSGA-II with classic and truthful crowding distance, GSEMO, and bitstring benchmarks";

  py::register_exception<moea::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<moea::ContractViolation>(m, "ContractViolation", PyExc_ValueError);

  m.def(
      "compare_dominance",
      [](const moea::ObjectiveVector& u, const moea::ObjectiveVector& v) {
        return std::string(moea::to_string(moea::compare_dominance(u, v)));
      },
      py::arg("u"), py::arg("v"),
      "Pareto relation under maximization: 'first-dominates', 'second-dominates', 'equal' or 'incomparable'.");

  m.def(
      "non_dominated_sort",
      [](const std::vector<moea::ObjectiveVector>& objectives) { return moea::non_dominated_sort(objectives); },
      py::arg("objectives"), "Fronts as lists of input positions, best front first.");

  m.def(
      "truthful_crowding_distance",
      [](const std::vector<moea::ObjectiveVector>& front) {
        return as_doubles(moea::truthful_crowding_distance(front));
      },
      py::arg("front"));

  m.def(
      "classic_crowding_distance",
      [](const std::vector<moea::ObjectiveVector>& front) {
        return as_doubles(moea::classic_crowding_distance(front));
      },
      py::arg("front"));

  m.def(
      "evaluate",
      [](const std::string& benchmark, const std::string& bits, std::size_t m, std::size_t k) {
        const auto x = moea::BitVector::from_string(bits);
        return make_benchmark(benchmark, x.size(), m, k).evaluate(x);
      },
      py::arg("benchmark"), py::arg("bits"), py::arg("m") = 2, py::arg("k") = 0);

  m.def(
      "front_size",
      [](const std::string& benchmark, std::size_t n, std::size_t m, std::size_t k) {
        return make_benchmark(benchmark, n, m, k).front_size();
      },
      py::arg("benchmark"), py::arg("n"), py::arg("m") = 2, py::arg("k") = 0);

  m.def(
      "mei", [](const std::vector<moea::ObjectiveValue>& f1, std::size_t n) { return moea::mei(f1, n); },
      py::arg("f1_values"), py::arg("n"), "Maximum empty interval of OneMinMax f1 values, padded with 0 and n.");

  m.def("run", &run_config, py::arg("algo"), py::arg("benchmark"), py::arg("n"), py::arg("m") = 2,
        py::arg("k") = 0, py::arg("pop_size") = 0, py::arg("seed") = 1, py::arg("budget") = 1'000'000,
        py::arg("selection") = "random", py::arg("mutation") = "bitwise", py::arg("crossover_rate") = 0.0,
        "Run until the Pareto front is covered or the budget is spent.");

  m.def(
      "list_presets",
      []() {
        std::vector<std::string> names;
        for (auto n : moea::preset_names()) names.emplace_back(n);
        return names;
      });

  m.def("run_preset", &run_preset_csv, py::arg("name"), py::arg("runs") = py::none(), py::arg("seed") = py::none(),
        py::arg("threads") = 1, "Run an experiment preset and return its CSV text.");

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
