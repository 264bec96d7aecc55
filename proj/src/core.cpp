#include "expknap/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace expknap {

double buck_per_bang(const Item& item) {
  if (item.value <= 0.0) {
    throw ArgumentError("buck-per-bang undefined for item " +
                        std::to_string(item.id) + ": value must be positive");
  }
  return item.weight / item.value;
}

double Instance::total_value() const {
  double sum = 0.0;
  for (const Item& item : items) sum += item.value;
  return sum;
}

double Instance::total_weight() const {
  double sum = 0.0;
  for (const Item& item : items) sum += item.weight;
  return sum;
}

Instance make_instance(std::vector<Item> items) {
  const int n = static_cast<int>(items.size());
  std::vector<bool> seen(items.size(), false);
  for (const Item& item : items) {
    if (item.id < 0 || item.id >= n || seen[item.id]) {
      throw ArgumentError("item ids must be unique and cover 0.." +
                          std::to_string(n - 1) + "; got id " +
                          std::to_string(item.id));
    }
    seen[item.id] = true;
    if (!(item.value > 0.0) || !std::isfinite(item.value)) {
      throw ArgumentError("item " + std::to_string(item.id) +
                          ": value must be a positive finite number");
    }
    if (!(item.weight > 0.0) || item.weight > 1.0) {
      throw ArgumentError("item " + std::to_string(item.id) +
                          ": weight must lie in (0, 1] after normalization");
    }
  }
  return Instance{std::move(items)};
}

bool is_permutation(const ArrivalOrder& order, int n) {
  if (order.n() != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int id : order.positions) {
    if (id < 0 || id >= n || seen[id]) return false;
    seen[id] = true;
  }
  return true;
}

bool RunOutcome::contains_id(int id) const {
  return std::any_of(selected.begin(), selected.end(),
                     [id](const Selection& s) { return s.id == id; });
}

ArrivalOrder random_permutation(int n, std::uint64_t seed) {
  if (n < 1) throw EmptyInstanceError("permutation needs n >= 1");
  Rng rng(seed);
  ArrivalOrder order;
  random_permutation_into(order.positions, n, rng);
  return order;
}

void random_permutation_into(std::vector<int>& positions, int n, Rng& rng) {
  positions.resize(static_cast<std::size_t>(n));
  std::iota(positions.begin(), positions.end(), 0);
  shuffle(std::span<int>(positions), rng);
}

std::vector<Item> best_k_subset(std::span<const Item> items, int k) {
  if (k < 0) throw ArgumentError("best_k_subset: k must be >= 0");
  std::vector<Item> sorted(items.begin(), items.end());
  std::sort(sorted.begin(), sorted.end(), better_value);
  const std::size_t keep =
      std::min(sorted.size(), static_cast<std::size_t>(k));
  sorted.resize(keep);
  return sorted;
}

double Rng::exponential(double rate) {
  return -std::log(unit_positive()) / rate;
}

}  // namespace expknap
