// Timing harness comparing the serial reference implementations against the
// OpenMP-parallel kernels: whole classification sweeps at several worker
// counts, and single-graph construction for a few large specs.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "comaximal/factor_model.hpp"
#include "comaximal/theorems.hpp"

using namespace comaximal;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string spec_name(const std::vector<int>& counts) {
  std::string s = "(";
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(counts[i]);
  }
  return s + ")";
}

}  // namespace

int main(int argc, char** argv) {
  int max_c = 5;
  if (argc > 1) max_c = std::max(1, std::atoi(argv[1]));

  SweepOptions options;
  options.max_factors = 4;
  options.max_proper_ideals = max_c;

  std::printf("sweep: n <= %d, c <= %d (%zu specs)\n", options.max_factors, max_c,
              canonical_specs(options.max_factors, max_c).size());

  auto t0 = std::chrono::steady_clock::now();
  SweepResult serial = run_sweep_serial(options);
  double serial_time = seconds_since(t0);
  std::printf("  serial reference: %8.3fs  (all_ok=%s)\n", serial_time,
              serial.all_ok() ? "yes" : "no");

  for (int workers : {1, 2, 4, 8}) {
    options.workers = workers;
    t0 = std::chrono::steady_clock::now();
    SweepResult parallel = run_sweep(options);
    double time = seconds_since(t0);
    bool same = parallel.entries.size() == serial.entries.size() &&
                parallel.all_ok() == serial.all_ok();
    std::printf("  parallel x%-2d:     %8.3fs  speedup %5.2fx  (match=%s)\n", workers,
                time, serial_time / time, same ? "yes" : "no");
  }

  std::printf("graph construction:\n");
  for (const auto& counts :
       {std::vector<int>{6, 6, 6, 6}, std::vector<int>{5, 5, 5, 5}, std::vector<int>{6, 6, 6}}) {
    auto spec = ProductRingSpec::from_counts(counts);
    t0 = std::chrono::steady_clock::now();
    Graph a = build_graph_serial(spec);
    double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    Graph b = build_graph(spec);
    double tp = seconds_since(t0);
    std::printf("  %-12s V=%-6lld  serial %7.3fs  parallel %7.3fs  speedup %5.2fx  (equal=%s)\n",
                spec_name(counts).c_str(), vertex_count(spec), ts, tp, ts / tp,
                a == b ? "yes" : "no");
  }
  return 0;
}
