#include <benchmark/benchmark.h>

#include "absolim/absolute.hpp"
#include "absolim/instances.hpp"
#include "absolim/lattice.hpp"

using namespace absolim;

namespace {

Lat chain(int n) {
  Lat l;
  l.n = n;
  l.leq.assign(size_t(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) l.leq[size_t(x) * n + y] = 1;
  return l;
}

Lat diamond() {
  Lat l;
  l.n = 4;
  l.leq.assign(16, 0);
  auto set = [&](int x, int y) { l.leq[size_t(x) * 4 + y] = 1; };
  for (int x = 0; x < 4; ++x) set(x, x);
  set(0, 1);
  set(0, 2);
  set(0, 3);
  set(1, 3);
  set(2, 3);
  return l;
}

void bimorphism_count(benchmark::State& state, bool parallel) {
  auto a = diamond(), b = diamond(), c = chain(4);
  for (auto _ : state) benchmark::DoNotOptimize(count_bimorphisms(a, b, c, parallel));
}

void BM_bimorphisms_serial(benchmark::State& state) { bimorphism_count(state, false); }
void BM_bimorphisms_openmp(benchmark::State& state) { bimorphism_count(state, true); }

// Full enumeration sweep over every candidate cocone and cone of a worked
// example. The unsplit idempotent has the largest candidate space.
void audit_sweep(benchmark::State& state, ExecMode mode) {
  AuditSetup setup = audit_setup(fixture("idempotent-unsplit"));
  for (auto _ : state) benchmark::DoNotOptimize(bijection_audit(setup, 4, mode));
}

void BM_audit_serial(benchmark::State& state) { audit_sweep(state, ExecMode::serial); }
void BM_audit_openmp(benchmark::State& state) { audit_sweep(state, ExecMode::openmp); }

}  // namespace

BENCHMARK(BM_bimorphisms_serial);
BENCHMARK(BM_bimorphisms_openmp);
BENCHMARK(BM_audit_serial);
BENCHMARK(BM_audit_openmp);

BENCHMARK_MAIN();
