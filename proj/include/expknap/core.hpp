#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "expknap/errors.hpp"
#include "expknap/rng.hpp"

namespace expknap {

/// One selectable unit of the online stream. Weights are normalized so the
/// base capacity is 1; values are positive (a zero value would make the
/// buck-per-bang ratio undefined).
struct Item {
  int id = 0;
  double value = 0.0;
  double weight = 0.0;
};

/// Weight-to-value ratio w(i)/v(i); lower is better.
double buck_per_bang(const Item& item);

/// True if `a` beats `b` under the deterministic (value, -id) order used for
/// every "best so far" comparison. Distinct values are the intended setting;
/// the id tie-break just makes runs reproducible when values collide.
inline bool better_value(const Item& a, const Item& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.id < b.id;
}

/// The full item set. Ids are 0..n-1; n == 0 is allowed only for the offline
/// oracles, never for algorithm runs.
struct Instance {
  std::vector<Item> items;

  int n() const { return static_cast<int>(items.size()); }
  double total_value() const;
  double total_weight() const;
};

/// Validates ids, values and weights; throws ArgumentError on violation and
/// returns the instance unchanged otherwise.
Instance make_instance(std::vector<Item> items);

/// A permutation of item ids defining the online stream: positions[p] is the
/// id arriving at (0-based) position p.
struct ArrivalOrder {
  std::vector<int> positions;

  int n() const { return static_cast<int>(positions.size()); }
};

/// True iff `order` is a bijection over 0..n-1.
bool is_permutation(const ArrivalOrder& order, int n);

/// One irrevocable selection: the 1-based arrival position and the item id.
struct Selection {
  int position = 0;
  int id = 0;

  friend bool operator==(const Selection&, const Selection&) = default;
};

/// Per-run record of what an algorithm selected, in arrival order.
struct RunOutcome {
  std::vector<Selection> selected;
  double total_value = 0.0;
  double total_weight = 0.0;

  int count() const { return static_cast<int>(selected.size()); }
  bool contains_id(int id) const;
};

/// Uniform random permutation of 0..n-1 from a dedicated generator seeded
/// with `seed`; identical seeds give identical orders.
ArrivalOrder random_permutation(int n, std::uint64_t seed);

/// Shuffles an existing id buffer in place (resized and re-filled with
/// 0..n-1 first). Scratch-friendly form used by the trial harness.
void random_permutation_into(std::vector<int>& positions, int n, Rng& rng);

/// The min(k, |items|) items of largest value, ties broken by smaller id;
/// result sorted by descending (value, -id).
std::vector<Item> best_k_subset(std::span<const Item> items, int k);

}  // namespace expknap
