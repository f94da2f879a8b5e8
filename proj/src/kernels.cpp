#include "coxeter/kernels.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <unordered_map>

#include "coxeter/center.hpp"
#include "coxeter/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coxeter::kernels {

namespace {

struct TupleHash {
  std::size_t operator()(const std::vector<int>& t) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int v : t) {
      h ^= static_cast<std::size_t>(v + 1024);
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

using LabelTable = std::unordered_map<std::vector<int>, std::vector<int>, TupleHash>;

struct Edge {
  int from;
  int to;
  std::int64_t weight;
};

// Finite bounds of the tuple as scaled difference constraints.
std::vector<Edge> constraint_edges(const CoxeterSpec& spec, std::span<const int> t) {
  const int n = spec.n();
  const std::int64_t scale = n + 1;
  std::vector<Edge> edges;
  edges.reserve(t.size() * 2);
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++idx) {
      const int ti = t[static_cast<std::size_t>(idx)];
      // x_i - x_j > t  <=>  x_j - x_i < -t : edge i -> j.
      if (ti > spec.min_interval()) edges.push_back({i, j, scale * (-ti) - 1});
      // x_i - x_j < t + 1 : edge j -> i.
      if (ti < spec.max_interval()) edges.push_back({j, i, scale * (ti + 1) - 1});
    }
  }
  return edges;
}

// Bellman-Ford from a virtual source joined to every node by a zero edge.
// Returns false on a negative cycle.
bool shortest_potentials(int n, const std::vector<Edge>& edges, std::vector<std::int64_t>& dist) {
  dist.assign(static_cast<std::size_t>(n), 0);
  for (int round = 0; round <= n; ++round) {
    bool relaxed = false;
    for (const auto& e : edges) {
      const auto candidate = dist[static_cast<std::size_t>(e.from)] + e.weight;
      if (candidate < dist[static_cast<std::size_t>(e.to)]) {
        dist[static_cast<std::size_t>(e.to)] = candidate;
        relaxed = true;
      }
    }
    if (!relaxed) return true;
  }
  return false;
}

std::vector<int> base_label(int n) { return std::vector<int>(static_cast<std::size_t>(n), 1); }

std::vector<int> closed_form_label(const CoxeterSpec& spec, std::span<const int> t) {
  const int n = spec.n();
  auto label = base_label(n);
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++idx) {
      const int ti = t[static_cast<std::size_t>(idx)];
      // x_i - x_j > m for m in [1,k]: target j.
      label[static_cast<std::size_t>(j)] += std::clamp(ti, 0, spec.k());
      // x_j - x_i > m for m in [0,l]: target i.
      label[static_cast<std::size_t>(i)] += std::clamp(-ti, 0, spec.l() + 1);
    }
  }
  return label;
}

struct PairCoords {
  int i;
  int j;
};

std::vector<PairCoords> pair_table(int n) {
  std::vector<PairCoords> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  }
  return out;
}

struct Candidate {
  std::vector<int> t;
  std::vector<int> label;
};

// Feasible neighbors of one region within the window, with their labels as
// obtained by crossing the separating hyperplane.
std::vector<Candidate> expand(const CoxeterSpec& spec, IntervalWindow window,
                              const std::vector<PairCoords>& pairs, const std::vector<int>& t,
                              const std::vector<int>& label) {
  std::vector<Candidate> out;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (int step : {-1, 1}) {
      const int to = t[p] + step;
      if (to < window.lo || to > window.hi) continue;
      std::vector<int> next = t;
      next[p] = to;
      if (!feasible_unchecked(spec, next)) continue;
      const auto cross = crossing(pairs[p].i, pairs[p].j, t[p], to);
      std::vector<int> next_label = label;
      next_label[static_cast<std::size_t>(cross.target - 1)] += cross.delta;
      out.push_back({std::move(next), std::move(next_label)});
    }
  }
  return out;
}

void check_cap(std::size_t found, std::uint64_t cap) {
  if (found > cap) {
    throw ResourceLimit("region enumeration exceeded the cap of " + std::to_string(cap) +
                        " regions");
  }
}

// Inserts a candidate, verifying the label agrees with any earlier visit.
// Returns true when the region is new.
bool record(LabelTable& visited, Candidate& c) {
  auto [it, inserted] = visited.try_emplace(c.t, c.label);
  if (!inserted && it->second != c.label) {
    throw InternalError("Pak-Stanley labeling is path dependent at a region");
  }
  return inserted;
}

std::vector<TupleLabel> sorted_output(LabelTable& visited) {
  std::vector<TupleLabel> out;
  out.reserve(visited.size());
  for (auto& [t, label] : visited) out.push_back({t, label});
  std::sort(out.begin(), out.end(),
            [](const TupleLabel& a, const TupleLabel& b) { return a.t < b.t; });
  return out;
}

void decode_tuple(std::uint64_t index, int base, int offset, std::vector<int>& t) {
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    *it = static_cast<int>(index % static_cast<std::uint64_t>(base)) + offset;
    index /= static_cast<std::uint64_t>(base);
  }
}

std::uint64_t checked_power(int base, int exponent) {
  std::uint64_t result = 1;
  for (int e = 0; e < exponent; ++e) {
    if (result > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(base)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result *= static_cast<std::uint64_t>(base);
  }
  return result;
}

}  // namespace

IntervalWindow full_window(const CoxeterSpec& spec) {
  return {spec.min_interval(), spec.max_interval()};
}

IntervalWindow fundamental_window(const CoxeterSpec& spec) { return {0, spec.max_interval()}; }

bool feasible_unchecked(const CoxeterSpec& spec, std::span<const int> t) {
  std::vector<std::int64_t> dist;
  return shortest_potentials(spec.n(), constraint_edges(spec, t), dist);
}

bool feasible_potentials(const CoxeterSpec& spec, std::span<const int> t,
                         std::vector<std::int64_t>& potentials) {
  return shortest_potentials(spec.n(), constraint_edges(spec, t), potentials);
}

Crossing crossing(int i, int j, int from, int to) {
  // The hyperplane between slabs (a-1, a) and (a, a+1) is x_i - x_j = a.
  const int a = std::max(from, to);
  const bool upward = to > from;
  const int target = normalize(i, j, a).increment_target();
  // R0 has x_i - x_j in (0,1): it lies below hyperplanes with a >= 1.
  const bool away = (a >= 1) == upward;
  return {target, away ? 1 : -1};
}

std::vector<TupleLabel> bfs_serial(const CoxeterSpec& spec, IntervalWindow window,
                                   std::uint64_t cap) {
  const auto pairs = pair_table(spec.n());
  LabelTable visited;
  std::vector<int> start(pairs.size(), 0);
  visited.emplace(start, base_label(spec.n()));
  std::deque<std::vector<int>> queue{start};
  while (!queue.empty()) {
    const auto t = std::move(queue.front());
    queue.pop_front();
    const auto label = visited.at(t);
    for (auto& c : expand(spec, window, pairs, t, label)) {
      if (record(visited, c)) {
        check_cap(visited.size(), cap);
        queue.push_back(std::move(c.t));
      }
    }
  }
  return sorted_output(visited);
}

std::vector<TupleLabel> bfs_parallel(const CoxeterSpec& spec, IntervalWindow window,
                                     std::uint64_t cap) {
  const auto pairs = pair_table(spec.n());
  LabelTable visited;
  std::vector<int> start(pairs.size(), 0);
  visited.emplace(start, base_label(spec.n()));
  std::vector<TupleLabel> frontier{{start, base_label(spec.n())}};
  while (!frontier.empty()) {
    std::vector<std::vector<Candidate>> expanded(frontier.size());
    const auto count = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t f = 0; f < count; ++f) {
      const auto& node = frontier[static_cast<std::size_t>(f)];
      expanded[static_cast<std::size_t>(f)] = expand(spec, window, pairs, node.t, node.label);
    }
    // Single-writer merge keeps membership decisions atomic and ordered.
    std::vector<TupleLabel> next;
    for (auto& batch : expanded) {
      for (auto& c : batch) {
        if (record(visited, c)) {
          check_cap(visited.size(), cap);
          next.push_back({std::move(c.t), std::move(c.label)});
        }
      }
    }
    frontier = std::move(next);
  }
  return sorted_output(visited);
}

std::vector<std::vector<int>> exhaustive_serial(const CoxeterSpec& spec) {
  const int base = spec.k() + spec.l() + 2;
  const auto total = checked_power(base, spec.pair_count());
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(spec.pair_count()));
  for (std::uint64_t index = 0; index < total; ++index) {
    decode_tuple(index, base, spec.min_interval(), t);
    if (feasible_unchecked(spec, t)) out.push_back(t);
  }
  return out;  // mixed-radix order is already lexicographic
}

std::vector<std::vector<int>> exhaustive_parallel(const CoxeterSpec& spec) {
  const int base = spec.k() + spec.l() + 2;
  const auto total = static_cast<std::int64_t>(checked_power(base, spec.pair_count()));
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::vector<std::vector<std::vector<int>>> per_thread(static_cast<std::size_t>(threads));
#pragma omp parallel
  {
    int id = 0;
#ifdef _OPENMP
    id = omp_get_thread_num();
#endif
    auto& local = per_thread[static_cast<std::size_t>(id)];
    std::vector<int> t(static_cast<std::size_t>(spec.pair_count()));
    // Static contiguous chunks: thread order equals index order.
#pragma omp for schedule(static)
    for (std::int64_t index = 0; index < total; ++index) {
      decode_tuple(static_cast<std::uint64_t>(index), base, spec.min_interval(), t);
      if (feasible_unchecked(spec, t)) local.push_back(t);
    }
  }
  std::vector<std::vector<int>> out;
  for (auto& local : per_thread) {
    for (auto& t : local) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> label_batch_serial(const CoxeterSpec& spec,
                                                 const std::vector<std::vector<int>>& tuples) {
  std::vector<std::vector<int>> out;
  out.reserve(tuples.size());
  for (const auto& t : tuples) out.push_back(closed_form_label(spec, t));
  return out;
}

std::vector<std::vector<int>> label_batch_parallel(const CoxeterSpec& spec,
                                                   const std::vector<std::vector<int>>& tuples) {
  std::vector<std::vector<int>> out(tuples.size());
  const auto count = static_cast<std::int64_t>(tuples.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    out[static_cast<std::size_t>(idx)] =
        closed_form_label(spec, tuples[static_cast<std::size_t>(idx)]);
  }
  return out;
}

namespace {

bool catalan_raw(std::span<const int> b, int m) {
  return is_m_catalan(Label(std::vector<int>(b.begin(), b.end())), m);
}

}  // namespace

std::vector<std::vector<int>> catalan_box_serial(int n, int m, int max_entry) {
  const auto total = checked_power(max_entry, n);
  std::vector<std::vector<int>> out;
  std::vector<int> b(static_cast<std::size_t>(n));
  for (std::uint64_t index = 0; index < total; ++index) {
    decode_tuple(index, max_entry, 1, b);
    if (catalan_raw(b, m)) out.push_back(b);
  }
  return out;
}

std::vector<std::vector<int>> catalan_box_parallel(int n, int m, int max_entry) {
  const auto total = static_cast<std::int64_t>(checked_power(max_entry, n));
  std::vector<char> keep(static_cast<std::size_t>(total), 0);
#pragma omp parallel
  {
    std::vector<int> b(static_cast<std::size_t>(n));
#pragma omp for schedule(static)
    for (std::int64_t index = 0; index < total; ++index) {
      decode_tuple(static_cast<std::uint64_t>(index), max_entry, 1, b);
      keep[static_cast<std::size_t>(index)] = catalan_raw(b, m) ? 1 : 0;
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> b(static_cast<std::size_t>(n));
  for (std::int64_t index = 0; index < total; ++index) {
    if (!keep[static_cast<std::size_t>(index)]) continue;
    decode_tuple(static_cast<std::uint64_t>(index), max_entry, 1, b);
    out.push_back(b);
  }
  return out;
}

}  // namespace coxeter::kernels
