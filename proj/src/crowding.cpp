#include "moea/crowding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace moea {

CrowdingValue CrowdingValue::finite(double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ContractViolation("CrowdingValue: finite values must be non-negative reals");
  }
  return CrowdingValue(false, value);
}

double CrowdingValue::value() const {
  if (infinite_) throw ContractViolation("CrowdingValue: no finite value for infinity");
  return value_;
}

double CrowdingValue::to_double() const noexcept {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

namespace {

using FrontRefs = std::span<const ObjectiveVector* const>;

std::vector<const ObjectiveVector*> refs_of(std::span<const ObjectiveVector> front) {
  std::vector<const ObjectiveVector*> refs;
  refs.reserve(front.size());
  for (const auto& v : front) refs.push_back(&v);
  return refs;
}

std::size_t checked_objective_count(FrontRefs front) {
  if (front.empty()) throw ContractViolation("crowding: empty front");
  const std::size_t m = front.front()->size();
  if (m == 0) throw ContractViolation("crowding: need at least one objective");
  for (const auto* v : front) {
    if (v->size() != m) throw ContractViolation("crowding: objective count mismatch");
  }
  return m;
}

SortedViews sort_views(FrontRefs front) {
  const std::size_t m = checked_objective_count(front);
  const std::size_t k = front.size();
  SortedViews views;
  views.orders.resize(m);
  views.denominators.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto& order = views.orders[i];
    order.resize(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto& fa = *front[a];
      const auto& fb = *front[b];
      if (fa[i] != fb[i]) return fa[i] > fb[i];
      if (fa != fb) return fa > fb;
      return a < b;
    });
    views.denominators[i] =
        static_cast<double>((*front[order.front()])[i] - (*front[order.back()])[i]);
  }
  return views;
}

double l1(std::span<const double> denominators, std::span<const ObjectiveValue> a,
          std::span<const ObjectiveValue> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < denominators.size(); ++i) {
    if (denominators[i] == 0.0) continue;  // 0/0 counts as zero
    sum += static_cast<double>(std::abs(a[i] - b[i])) / denominators[i];
  }
  return sum;
}

std::vector<CrowdingValue> truthful(FrontRefs front) {
  const SortedViews views = sort_views(front);
  const std::size_t k = front.size();

  // The pairwise distance does not depend on which order is being scanned.
  std::vector<double> dist(k * k, 0.0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const double d = l1(views.denominators, *front[a], *front[b]);
      dist[a * k + b] = d;
      dist[b * k + a] = d;
    }
  }

  std::vector<double> sum(k, 0.0);
  std::vector<bool> heads(k, false);
  for (const auto& order : views.orders) {
    heads[order.front()] = true;
    for (std::size_t j = 1; j < k; ++j) {
      const std::size_t x = order[j];
      double nearest = std::numeric_limits<double>::infinity();
      for (std::size_t q = 0; q < j; ++q) nearest = std::min(nearest, dist[x * k + order[q]]);
      sum[x] += nearest;
    }
  }

  std::vector<CrowdingValue> out;
  out.reserve(k);
  for (std::size_t x = 0; x < k; ++x) {
    out.push_back(heads[x] ? CrowdingValue::infinity() : CrowdingValue::finite(sum[x]));
  }
  return out;
}

std::vector<CrowdingValue> classic(FrontRefs front) {
  const SortedViews views = sort_views(front);
  const std::size_t k = front.size();
  std::vector<double> sum(k, 0.0);
  std::vector<bool> boundary(k, false);
  for (std::size_t i = 0; i < views.orders.size(); ++i) {
    const auto& order = views.orders[i];
    boundary[order.front()] = true;
    boundary[order.back()] = true;
    const double den = views.denominators[i];
    if (den == 0.0) continue;
    for (std::size_t j = 1; j + 1 < k; ++j) {
      const auto gap = std::abs((*front[order[j - 1]])[i] - (*front[order[j + 1]])[i]);
      sum[order[j]] += static_cast<double>(gap) / den;
    }
  }
  std::vector<CrowdingValue> out;
  out.reserve(k);
  for (std::size_t x = 0; x < k; ++x) {
    out.push_back(boundary[x] ? CrowdingValue::infinity() : CrowdingValue::finite(sum[x]));
  }
  return out;
}

std::vector<CrowdingValue> compute(CrowdingKind kind, FrontRefs front) {
  return kind == CrowdingKind::Truthful ? truthful(front) : classic(front);
}

}  // namespace

SortedViews correlated_sort(std::span<const ObjectiveVector> front) {
  const auto refs = refs_of(front);
  return sort_views(refs);
}

double normalized_l1(std::span<const double> denominators, std::span<const ObjectiveValue> a,
                     std::span<const ObjectiveValue> b) {
  if (a.size() != denominators.size() || b.size() != denominators.size()) {
    throw ContractViolation("normalized_l1: length mismatch");
  }
  return l1(denominators, a, b);
}

std::vector<CrowdingValue> truthful_crowding_distance(std::span<const ObjectiveVector> front) {
  const auto refs = refs_of(front);
  return truthful(refs);
}

std::vector<CrowdingValue> classic_crowding_distance(std::span<const ObjectiveVector> front) {
  const auto refs = refs_of(front);
  return classic(refs);
}

std::vector<CrowdingValue> crowding_distance(CrowdingKind kind, std::span<const ObjectiveVector> front) {
  const auto refs = refs_of(front);
  return compute(kind, refs);
}

Population survival_select(const Population& combined, std::size_t N, CrowdingKind kind, SelectionMode mode,
                           Rng& rng) {
  if (N == 0) throw ContractViolation("survival_select: N must be positive");
  if (combined.size() < N) throw ContractViolation("survival_select: fewer individuals than N");

  const auto fronts = non_dominated_sort(combined);
  std::vector<std::size_t> keep;
  keep.reserve(combined.size());
  std::vector<std::size_t> critical;
  for (const auto& front : fronts) {
    if (keep.size() + front.size() <= N) {
      keep.insert(keep.end(), front.begin(), front.end());
      if (keep.size() == N) break;
      continue;
    }
    critical = front;
    break;
  }

  if (!critical.empty()) {
    const std::size_t removals = keep.size() + critical.size() - N;
    std::vector<const ObjectiveVector*> refs;
    refs.reserve(critical.size());
    for (auto p : critical) refs.push_back(&combined[p].objectives);

    auto values = compute(kind, refs);
    std::vector<std::size_t> minima;
    for (std::size_t r = 0; r < removals; ++r) {
      const auto smallest = *std::min_element(values.begin(), values.end());
      minima.clear();
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (values[j] == smallest) minima.push_back(j);
      }
      std::size_t victim = minima.front();
      if (minima.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(0, minima.size() - 1);
        victim = minima[pick(rng)];
      }
      const bool zero_removed = !smallest.is_infinite() && smallest.value() == 0.0;
      critical.erase(critical.begin() + static_cast<std::ptrdiff_t>(victim));
      refs.erase(refs.begin() + static_cast<std::ptrdiff_t>(victim));
      values.erase(values.begin() + static_cast<std::ptrdiff_t>(victim));

      if (mode != SelectionMode::Sequential || r + 1 == removals) continue;
      // A zero truthful distance means an identical vector precedes the
      // removed member in every order, so no other value can change.
      if (kind == CrowdingKind::Truthful && zero_removed) continue;
      values = compute(kind, refs);
    }
    keep.insert(keep.end(), critical.begin(), critical.end());
  }

  std::sort(keep.begin(), keep.end());
  return combined.subset(keep);
}

}  // namespace moea
