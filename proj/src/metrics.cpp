#include "moea/metrics.hpp"

#include <algorithm>
#include <vector>

namespace moea {

std::size_t mei(std::span<const ObjectiveValue> first_objective_values, std::size_t n) {
  if (first_objective_values.empty()) throw ContractViolation("mei: empty population");
  const auto top = static_cast<ObjectiveValue>(n);
  std::vector<ObjectiveValue> covered(first_objective_values.begin(), first_objective_values.end());
  covered.push_back(0);
  covered.push_back(top);
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  if (covered.front() < 0 || covered.back() > top) throw ContractViolation("mei: f1 value outside [0..n]");

  ObjectiveValue widest = 0;
  for (std::size_t i = 1; i < covered.size(); ++i) widest = std::max(widest, covered[i] - covered[i - 1]);
  return static_cast<std::size_t>(widest);
}

std::size_t mei(const Population& population, std::size_t n) {
  std::vector<ObjectiveValue> f1;
  f1.reserve(population.size());
  for (const auto& x : population) f1.push_back(x.objectives.at(0));
  return mei(f1, n);
}

std::size_t mei_lower_bound(std::size_t n, std::size_t N) {
  if (N < 2) throw ContractViolation("mei_lower_bound: N must be at least 2");
  return (n + N - 2) / (N - 1);
}

double mei_guarantee(std::size_t n, std::size_t N) {
  if (N < 2) throw ContractViolation("mei_guarantee: N must be at least 2");
  return std::max(2.0 * static_cast<double>(n) / static_cast<double>(N - 1), 1.0);
}

bool has_one_min_max_extremes(const Population& population, std::size_t n) {
  const auto top = static_cast<ObjectiveValue>(n);
  bool zeros = false;
  bool ones = false;
  for (const auto& x : population) {
    if (x.objectives.size() != 2) return false;
    zeros = zeros || (x.objectives[0] == top && x.objectives[1] == 0);
    ones = ones || (x.objectives[0] == 0 && x.objectives[1] == top);
  }
  return zeros && ones;
}

}  // namespace moea
