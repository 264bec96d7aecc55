#include "expknap/secretary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

namespace expknap::secretary {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_phase(int n, int t) {
  if (n == 0) throw EmptyInstanceError("secretary run needs at least one item");
  if (t < 0 || t > n) {
    throw ArgumentError("observation length t must satisfy 0 <= t <= n");
  }
}

// Shared scan over an arrival stream given by accessors. Selection uses the
// strict comparison v > best-so-far; ties lose.
template <typename ValueAt, typename Select>
void record_scan(int n, int t, ValueAt value_at, Select select) {
  double best = kNegInf;
  for (int p = 0; p < n; ++p) {
    const double v = value_at(p);
    if (p >= t && v > best) {
      if (!select(p)) return;
    }
    best = std::max(best, v);
  }
}

struct StreamView {
  const Instance* instance = nullptr;
  const ArrivalOrder* order = nullptr;
  std::span<const double> values;

  int n() const {
    return instance ? instance->n() : static_cast<int>(values.size());
  }
  double value_at(int p) const {
    return instance ? instance->items[order->positions[p]].value : values[p];
  }
  // Raw value streams carry implicit unit weights and arrival-index ids.
  void append(RunOutcome& out, int p) const {
    if (instance) {
      const Item& item = instance->items[order->positions[p]];
      out.selected.push_back({p + 1, item.id});
      out.total_value += item.value;
      out.total_weight += item.weight;
    } else {
      out.selected.push_back({p + 1, p});
      out.total_value += values[p];
      out.total_weight += 1.0;
    }
  }
};

RunOutcome run_t_threshold(const StreamView& stream, int t) {
  check_phase(stream.n(), t);
  RunOutcome out;
  record_scan(
      stream.n(), t, [&](int p) { return stream.value_at(p); },
      [&](int p) {
        stream.append(out, p);
        return true;
      });
  return out;
}

RunOutcome run_classical(const StreamView& stream, int t) {
  check_phase(stream.n(), t);
  RunOutcome out;
  record_scan(
      stream.n(), t, [&](int p) { return stream.value_at(p); },
      [&](int p) {
        stream.append(out, p);
        return false;  // terminate on the first selection
      });
  return out;
}

RunOutcome run_ksec(const StreamView& stream, int k, int t) {
  check_phase(stream.n(), t);
  if (k < 1) throw ArgumentError("k-secretary run needs k >= 1");
  const int n = stream.n();

  // Heap whose top() is the weakest member of the best-k reference set,
  // under the deterministic (value, -arrival index) order.
  struct Entry {
    double value;
    int position;
  };
  auto stronger = [](const Entry& a, const Entry& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.position < b.position;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(stronger)> reference(
      stronger);

  RunOutcome out;
  for (int p = 0; p < n; ++p) {
    const double v = stream.value_at(p);
    if (p < t) {
      reference.push({v, p});
      if (static_cast<int>(reference.size()) > k) reference.pop();
      continue;
    }
    const double weakest = static_cast<int>(reference.size()) < k
                               ? kNegInf
                               : reference.top().value;
    if (v > weakest) {
      stream.append(out, p);
      if (static_cast<int>(reference.size()) == k) reference.pop();
      reference.push({v, p});
    }
  }
  return out;
}

}  // namespace

int default_observation_length(int n) {
  return static_cast<int>(std::floor(static_cast<double>(n) / std::numbers::e));
}

int strict_observation_length(int n) { return default_observation_length(n) + 1; }

RunOutcome t_threshold_run(std::span<const double> values, int t) {
  return run_t_threshold(StreamView{nullptr, nullptr, values}, t);
}

RunOutcome t_threshold_run(const Instance& instance, const ArrivalOrder& order,
                           int t) {
  return run_t_threshold(StreamView{&instance, &order, {}}, t);
}

RunOutcome classical_secretary_run(std::span<const double> values, int t) {
  return run_classical(StreamView{nullptr, nullptr, values}, t);
}

RunOutcome classical_secretary_run(const Instance& instance,
                                   const ArrivalOrder& order, int t) {
  return run_classical(StreamView{&instance, &order, {}}, t);
}

RunOutcome ksec_t_threshold_run(std::span<const double> values, int k, int t) {
  return run_ksec(StreamView{nullptr, nullptr, values}, k, t);
}

RunOutcome ksec_t_threshold_run(const Instance& instance,
                                const ArrivalOrder& order, int k, int t) {
  return run_ksec(StreamView{&instance, &order, {}}, k, t);
}

CountBound expected_count_bound(int n, int t, int k) {
  if (n < 1) throw ArgumentError("expected_count_bound needs n >= 1");
  if (t < 0 || t > n) throw ArgumentError("t must satisfy 0 <= t <= n");
  if (k < 1) throw ArgumentError("expected_count_bound needs k >= 1");
  double sum = 0.0;
  for (int l = n; l > t; --l) sum += 1.0 / l;  // small terms first
  return CountBound{k * sum, t >= 1};
}

}  // namespace expknap::secretary
