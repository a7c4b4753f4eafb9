// Two implementations of the orbifold Euler characteristic of a finite
// h-set:
//   chi_orb_set_serial — naive reference: triple loop over (g, h, point),
//   chi_orb_set        — production kernel: per-element fixed-point bitmaps,
//                        pair sum = popcount of ANDed bitmaps, parallelized
//                        over the first element with OpenMP.
// Both compute (1/|h|) * sum over commuting pairs of common fixed points
// and require the division to be exact.  The benchmark target compares
// them; tests assert they agree on randomized instances.
#include <cstdint>

#include "orbidual/burnside.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orbidual {

namespace {

void require_actor(const GSet& x, const Subgp& h) {
  if (!x.domain().contains_all(h))
    throw ValidationError("chi_orb: actor outside the action domain");
}

Int exact_divide(unsigned long long total, long long order) {
  if (order <= 0) throw ValidationError("chi_orb: empty actor");
  if (total % static_cast<unsigned long long>(order) != 0)
    throw ArithmeticError("chi_orb: commuting-pair sum not divisible by the group order");
  return Int(total / static_cast<unsigned long long>(order));
}

}  // namespace

Int chi_orb_set_serial(const GSet& x, const Subgp& h) {
  require_actor(x, h);
  const FiniteGroup& fg = *h.group();
  unsigned long long total = 0;
  for (int a : h.elems())
    for (int b : h.elems()) {
      if (fg.mul(a, b) != fg.mul(b, a)) continue;
      for (int p = 0; p < x.points(); ++p)
        if (x.apply(a, p) == p && x.apply(b, p) == p) ++total;
    }
  return exact_divide(total, h.order());
}

Int chi_orb_set(const GSet& x, const Subgp& h) {
  require_actor(x, h);
  const FiniteGroup& fg = *h.group();
  const std::vector<int>& es = h.elems();
  const int m = static_cast<int>(es.size());
  const int words = (x.points() + 63) / 64;
  // fix[i] = bitmap of points fixed by es[i].
  std::vector<uint64_t> fix(static_cast<size_t>(m) * words, 0);
  for (int i = 0; i < m; ++i)
    for (int p = 0; p < x.points(); ++p)
      if (x.apply(es[i], p) == p)
        fix[static_cast<size_t>(i) * words + p / 64] |= (uint64_t(1) << (p % 64));

  unsigned long long total = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
#endif
  for (int i = 0; i < m; ++i) {
    const uint64_t* fa = &fix[static_cast<size_t>(i) * words];
    unsigned long long local = 0;
    for (int j = 0; j < m; ++j) {
      if (fg.mul(es[i], es[j]) != fg.mul(es[j], es[i])) continue;
      const uint64_t* fb = &fix[static_cast<size_t>(j) * words];
      for (int w = 0; w < words; ++w) local += static_cast<unsigned long long>(__builtin_popcountll(fa[w] & fb[w]));
    }
    total += local;
  }
  return exact_divide(total, h.order());
}

}  // namespace orbidual
