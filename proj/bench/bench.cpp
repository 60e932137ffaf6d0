// Serial reference against OpenMP kernels, and scalar ideal arithmetic
// against the word-level kernels. Prints one line per pair with the median
// of several repetitions.
#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "nsdeg/herzog.hpp"
#include "nsdeg/ideal.hpp"
#include "nsdeg/lab.hpp"
#include "nsdeg/reference.hpp"
#include "nsdeg/sweep.hpp"

using namespace nsdeg;

namespace {

double median_seconds(int reps, const std::function<void()>& fn) {
  std::vector<double> t;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

void line(const char* name, double base, double fast) {
  std::printf("%-32s baseline %9.4f s  kernel %9.4f s  speedup %6.2fx\n", name, base, fast, base / fast);
}

}  // namespace

int main(int argc, char** argv) {
  const int genus = argc > 1 ? std::atoi(argv[1]) : 14;
  const int threads = omp_get_max_threads();
  std::printf("threads: %d, sweep genus: %d\n", threads, genus);

  SweepConfig cfg;
  cfg.max_genus = genus;
  cfg.check_conjecture = true;
  cfg.check_herzog = true;
  const double sweep_serial = median_seconds(3, [&] { run_sweep_serial(cfg); });
  cfg.parallelism = threads;
  const double sweep_parallel = median_seconds(3, [&] { run_sweep(cfg); });
  line("sweep (serial vs OpenMP)", sweep_serial, sweep_parallel);

  const double herzog_serial = median_seconds(3, [] { herzog_family_serial(40); });
  const double herzog_parallel = median_seconds(3, [&] { herzog_family(40, threads); });
  line("herzog family <= 40", herzog_serial, herzog_parallel);

  // Pairwise products and colons over the ideals of a mid-sized semigroup.
  const auto s = share(NumericalSemigroup::from_generators({8, 11, 13, 15}));
  const auto ideals = enumerate_ideals(s);
  const std::size_t n = std::min<std::size_t>(ideals.size(), 120);
  auto pairs = [&](auto op) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; j += 7) op(ideals[i], ideals[j].shifted(static_cast<std::int64_t>(j % 5)));
  };
  line("ideal product", median_seconds(3, [&] { pairs([](auto& a, auto b) { reference::product(a, b); }); }),
       median_seconds(3, [&] { pairs([](auto& a, auto b) { product(a, b); }); }));
  line("ideal colon", median_seconds(3, [&] { pairs([](auto& a, auto b) { reference::colon(a, b); }); }),
       median_seconds(3, [&] { pairs([](auto& a, auto b) { colon(a, b); }); }));
  line("ideal subset", median_seconds(3, [&] { pairs([](auto& a, auto b) { reference::subset_of(a, b); }); }),
       median_seconds(3, [&] { pairs([](auto& a, auto b) { a.subset_of(b); }); }));
  return 0;
}
