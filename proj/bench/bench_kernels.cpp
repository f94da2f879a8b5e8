// Serial reference vs OpenMP kernels on desk-scale arrangements.
//
//   coxeter_bench [--repeat N] [--threads T]

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"

#include "coxeter/kernels.hpp"
#include "coxeter/regions.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double best_of(int repeat, const std::function<std::size_t()>& run, std::size_t& result) {
  double best = 1e300;
  for (int r = 0; r < repeat; ++r) {
    const auto start = Clock::now();
    result = run();
    const std::chrono::duration<double, std::milli> elapsed = Clock::now() - start;
    best = std::min(best, elapsed.count());
  }
  return best;
}

void report(const std::string& name, int repeat, const std::function<std::size_t()>& serial,
            const std::function<std::size_t()>& parallel) {
  std::size_t serial_result = 0;
  std::size_t parallel_result = 0;
  const double ts = best_of(repeat, serial, serial_result);
  const double tp = best_of(repeat, parallel, parallel_result);
  std::printf("%-28s %10zu %12.2f %12.2f %8.2fx %s\n", name.c_str(), serial_result, ts, tp,
              tp > 0 ? ts / tp : 0.0, serial_result == parallel_result ? "" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"benchmark serial vs OpenMP enumeration kernels"};
  int repeat = 3;
  int threads = 0;
  app.add_option("--repeat", repeat, "repetitions (best time kept)");
  app.add_option("--threads", threads, "OpenMP threads (default: runtime choice)");
  CLI11_PARSE(app, argc, argv);
  if (threads > 0) omp_set_num_threads(threads);

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %10s %12s %12s %9s\n", "kernel", "items", "serial ms", "parallel ms",
              "speedup");

  using namespace coxeter;
  using namespace coxeter::kernels;
  for (auto [n, k, l] : std::vector<std::tuple<int, int, int>>{{4, 2, 2}, {5, 1, 1}, {5, 2, 1}}) {
    const CoxeterSpec spec(n, k, l);
    const auto tag = "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
    report("bfs " + tag, repeat,
           [&] { return bfs_serial(spec, full_window(spec), 10'000'000).size(); },
           [&] { return bfs_parallel(spec, full_window(spec), 10'000'000).size(); });
    if (tuple_count(spec) <= 2'000'000) {
      report("exhaustive " + tag, repeat, [&] { return exhaustive_serial(spec).size(); },
             [&] { return exhaustive_parallel(spec).size(); });
    }
  }
  for (auto [n, m] : std::vector<std::pair<int, int>>{{4, 2}, {5, 1}, {5, 2}}) {
    const auto tag = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
    const int max_entry = n + m * (n - 1);
    report("catalan box " + tag, repeat, [&] { return catalan_box_serial(n, m, max_entry).size(); },
           [&] { return catalan_box_parallel(n, m, max_entry).size(); });
  }
  return 0;
}
