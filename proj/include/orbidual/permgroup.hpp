// Finite permutation groups on {1..n} as explicit sorted element lists,
// subgroup enumeration, and the parity condition.
//
// A PermGroup is the closure of a generating set under composition.  The
// closure size is capped (default 120 elements <=> |S_5|); larger closures
// throw CapExceeded.  Element lists are kept sorted so equal groups compare
// equal and all iteration orders are deterministic.
//
// The parity condition holds for a group S acting on {1..n} when every
// subgroup T <= S satisfies  orbit_count(T) == n (mod 2).  Equivalently:
// the number of orbits of each subgroup has the same parity as the number
// of points.  is_pc reports the first violating subgroup as a witness.
#pragma once

#include <string>
#include <vector>

#include "orbidual/numeric.hpp"
#include "orbidual/perm.hpp"

namespace orbidual {

struct PermGroupCaps {
  long long max_elements = 120;
};

class PermGroup {
 public:
  // Closure of `gens` inside Sym({1..n}).  Empty gens = trivial group.
  PermGroup(int n, std::vector<Perm> gens, const PermGroupCaps& caps = {});

  int n() const { return n_; }
  const std::vector<Perm>& elements() const { return elems_; }
  const std::vector<Perm>& generators() const { return gens_; }
  long long order() const { return static_cast<long long>(elems_.size()); }
  bool contains(const Perm& s) const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool operator==(const PermGroup& o) const { return n_ == o.n_ && elems_ == o.elems_; }

 private:
  int n_;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;  // sorted
};

// Convenience constructors.
PermGroup trivial_perm_group(int n);
PermGroup symmetric_group(int n, const PermGroupCaps& caps = {});
PermGroup cyclic_generated(int n, const Perm& s, const PermGroupCaps& caps = {});

// The cyclic group generated by i -> i + l (mod k*l) acting on {1..k*l},
// i.e. the shift by one block of length l on a cycle of k*l points.
PermGroup loop_shift_group(int l, int k, const PermGroupCaps& caps = {});

// All subgroups of g, deduplicated, sorted by (order, element list).
// Computed by closing the set {trivial, cyclic subgroups} under joins.
std::vector<PermGroup> all_subgroups(const PermGroup& g, const PermGroupCaps& caps = {});

// Number of orbits of the subgroup generated by `gens` on {1..n}.
// For the parity condition this is the dimension datum of a fixed locus.
long long fixed_dim(const PermGroup& t);

struct PcReport {
  bool holds = true;
  // When !holds: generators of the first violating subgroup, its orbit
  // count, and the ambient point count.
  std::vector<Perm> witness_subgroup;
  long long witness_orbits = 0;
  int points = 0;
};

// Check the parity condition for s acting on {1..n}: every subgroup's
// orbit count is congruent to n mod 2.
PcReport is_pc(const PermGroup& s, const PermGroupCaps& caps = {});

}  // namespace orbidual
