// Compares the two orbifold-Euler-characteristic kernels on the regular
// action of a mid-size semidirect product: the naive serial triple loop
// versus the bitmap kernel (OpenMP-parallel pair sum).  Run with
// OMP_NUM_THREADS=1 to isolate the bitmap speedup from threading.
#include <benchmark/benchmark.h>

#include "orbidual/duality.hpp"
#include "orbidual/poly.hpp"

namespace {

using namespace orbidual;

struct Fixture {
  SemidirectGroup sd;
  GSet regular;
  Subgp actor;

  static const Fixture& get() {
    static Fixture f = make();
    return f;
  }

 private:
  Fixture(SemidirectGroup s, GSet r, Subgp a)
      : sd(std::move(s)), regular(std::move(r)), actor(std::move(a)) {}

  static Fixture make() {
    // Periodic loop with p = (2,2), k = 2: abelian part of order 15,
    // shift group of order 2, concrete group of order 30.
    InvertiblePolynomial f = build_periodic_loop({Int(2), Int(2)}, 2);
    FinAbGroup a(f.exponent_matrix());
    PermGroup s = loop_shift_group(2, 2);
    SemidirectGroup sd = make_semidirect_perm(a, s);
    Subgp full = Subgp::full(sd.concrete());
    GSet reg = coset_gset(full, Subgp::trivial(sd.concrete()));
    return Fixture(std::move(sd), std::move(reg), std::move(full));
  }
};

void bm_chi_orb_serial(benchmark::State& state) {
  const Fixture& f = Fixture::get();
  for (auto _ : state) {
    Int v = chi_orb_set_serial(f.regular, f.actor);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(bm_chi_orb_serial);

void bm_chi_orb_bitmap(benchmark::State& state) {
  const Fixture& f = Fixture::get();
  for (auto _ : state) {
    Int v = chi_orb_set(f.regular, f.actor);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(bm_chi_orb_bitmap);

}  // namespace

BENCHMARK_MAIN();
