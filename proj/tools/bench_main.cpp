// Benchmarks the OpenMP subset-sweep kernels against the serial reference
// implementations on synthetic inputs and checks that both produce
// identical results.

#include <chrono>
#include <cstdio>
#include <random>

#include "ordpat/completion.hpp"
#include "ordpat/poset.hpp"
#include "ordpat/setup.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

ordpat::Poset random_poset(std::size_t n, double density, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution edge(density);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i)
    ids.push_back("e" + std::to_string(i / 10) + std::to_string(i % 10));
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) rel.emplace_back(ids[i], ids[j]);
  return ordpat::Poset::from_relation(ids, rel);
}

ordpat::PatternSetup random_itemset_setup(std::size_t objects,
                                          std::size_t attrs,
                                          std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution has(0.5);
  std::vector<std::string> attr_ids;
  for (std::size_t a = 0; a < attrs; ++a)
    attr_ids.push_back(std::string(1, static_cast<char>('a' + a)));
  std::vector<std::string> ids;
  std::vector<ordpat::Description> delta;
  for (std::size_t g = 0; g < objects; ++g) {
    ids.push_back("g" + std::to_string(g / 10) + std::to_string(g % 10));
    std::vector<std::string> items;
    for (const auto& a : attr_ids)
      if (has(rng)) items.push_back(a);
    delta.push_back(ordpat::Description::itemset(items));
  }
  return ordpat::PatternSetup(
      ids, std::make_shared<ordpat::ItemsetSpace>(attr_ids), delta);
}

template <class F>
void run_case(const char* name, F&& body) {
  auto t0 = Clock::now();
  bool match_serial = body(ordpat::Exec::Serial);
  double serial_ms = ms_since(t0);
  t0 = Clock::now();
  bool match_parallel = body(ordpat::Exec::Parallel);
  double parallel_ms = ms_since(t0);
  std::printf("%-34s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx  %s\n",
              name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              match_serial && match_parallel ? "ok" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp enabled\n");
#else
  std::printf("openmp disabled; both columns run the serial path\n");
#endif

  ordpat::PatternSetup setup = random_itemset_setup(16, 8, 7);
  auto closed_ref = ordpat::support_closed_set(setup, ordpat::Exec::Serial);
  run_case("support_closed_set  |G|=16", [&](ordpat::Exec ex) {
    return ordpat::support_closed_set(setup, ex) == closed_ref;
  });

  auto multi_ref = ordpat::is_multistructure(setup, ordpat::Exec::Serial);
  run_case("is_multistructure   |G|=16", [&](ordpat::Exec ex) {
    auto r = ordpat::is_multistructure(setup, ex);
    return r.verdict == multi_ref.verdict && r.failures == multi_ref.failures;
  });

  ordpat::Poset mid = random_poset(14, 0.25, 11);
  auto classify_ref = ordpat::classify(mid, ordpat::Exec::Serial);
  run_case("classify sweep      |P|=14", [&](ordpat::Exec ex) {
    return ordpat::classify(mid, ex).is_multilattice ==
           classify_ref.is_multilattice;
  });

  ordpat::Poset wide = random_poset(30, 0.08, 3);
  auto chains_ref =
      ordpat::enumerate_antichains(wide, 50000000, ordpat::Exec::Serial);
  std::printf("antichain workload: %zu antichains\n", chains_ref.size());
  run_case("enumerate_antichains |P|=30", [&](ordpat::Exec ex) {
    return ordpat::enumerate_antichains(wide, 50000000, ex) == chains_ref;
  });

  return 0;
}
