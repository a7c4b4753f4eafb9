// Semidirect products A x| S of a finite abelian lattice-quotient group by
// a permutation group, their concrete multiplication-table realizations,
// subgroups of the shape H x| T, and the two Saito duality operations
// (abelian and semidirect) on Burnside elements.
//
// A SemidirectGroup packages:
//  - the abelian part A = Z^n/L,
//  - the permutation part S,
//  - one integer automorphism matrix Phi_sigma per element sigma of S
//    (for polynomial symmetry groups Phi_sigma is the permutation matrix
//    of sigma; for dual groups it is the transported matrix
//    (L Phi_{sigma^-1} L^-1)^T ),
//  - a concrete FiniteGroup whose element (a, sigma) has index
//    a_index * |S| + s_index, with multiplication
//    (a, s)(a', s') = (a + Phi_s a', s s').
//
// The dual context replaces A by A* (the transposed-lattice quotient) and
// transports the automorphisms so that the pairing is equivariant:
// <Phi_sigma a, Phi*_sigma b> = <a, b>.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "orbidual/abgrp.hpp"
#include "orbidual/burnside.hpp"
#include "orbidual/permgroup.hpp"

namespace orbidual {

class SemidirectGroup {
 public:
  SemidirectGroup(FinAbGroup a, PermGroup s, std::vector<IMat> phi,
                  const FiniteGroupCaps& caps = {});

  const FinAbGroup& abelian() const { return a_; }
  const PermGroup& perm() const { return s_; }
  const GroupRef& concrete() const { return fg_; }
  const std::vector<AbElement>& ab_elements() const { return a_elems_; }

  int a_index(const AbElement& x) const;
  int s_index(const Perm& p) const;
  int encode(int ai, int si) const { return ai * static_cast<int>(s_.order()) + si; }
  std::pair<int, int> decode(int idx) const {
    int m = static_cast<int>(s_.order());
    return {idx / m, idx % m};
  }
  const IMat& phi_matrix(const Perm& p) const;
  AbElement apply_auto(const Perm& p, const AbElement& x) const;

 private:
  FinAbGroup a_;
  PermGroup s_;
  std::vector<IMat> phi_;  // indexed like s_.elements()
  std::vector<AbElement> a_elems_;
  GroupRef fg_;
};

// Semidirect product with the natural permutation action of S on A
// (requires every sigma in S to preserve A's lattice presentation).
SemidirectGroup make_semidirect_perm(const FinAbGroup& a, const PermGroup& s,
                                     const FiniteGroupCaps& caps = {});
// General form with explicit automorphism matrices per permutation.
SemidirectGroup make_semidirect(const FinAbGroup& a, const PermGroup& s,
                                const std::function<IMat(const Perm&)>& phi,
                                const FiniteGroupCaps& caps = {});
// Dual context: A* = Z^n / L^T with automorphisms (L Phi_{s^-1} L^-1)^T.
SemidirectGroup dual_semidirect(const SemidirectGroup& sd, const FiniteGroupCaps& caps = {});

// A subgroup of the shape H x| T: H a subgroup of the abelian part,
// T a subgroup of S, with every sigma in T preserving H.
struct SemidirectSubgp {
  AbSubgroup h;
  PermGroup t;
};

// Validates shape (T <= S, T-invariance of H) and returns the element set
// {(h, sigma)} as a subgroup of the concrete group.
Subgp materialize(const SemidirectGroup& sd, const SemidirectSubgp& ht);
SemidirectSubgp semidirect_subgp(const SemidirectGroup& sd, AbSubgroup h, PermGroup t);

// One term coeff * [Ghat / H x| T]; context-free data.
struct SdTerm {
  AbSubgroup h;
  PermGroup t;
  Int coeff;
};

using SemidirectBurnside = std::vector<SdTerm>;

// Realize terms as a Burnside element over the full concrete group of sd.
BurnsideElement to_burnside(const SemidirectGroup& sd, const SemidirectBurnside& b);

// Inverse direction: reinterpret a Burnside element whose every term
// subgroup has the set shape {(h, sigma) : h in H, sigma in T}.  Terms not
// of that shape are an error (the semidirect Grothendieck group is a
// proper subgroup of the Burnside group).
SemidirectBurnside to_semidirect(const SemidirectGroup& sd, const BurnsideElement& b);

// Abelian Saito duality D: A(H) -> A(H*), [H/K] |-> [H*/K~].  src must
// have a trivial permutation part; dst must be the dual context of src
// (same lattice as src.abelian().dual()).
BurnsideElement saito_dual_abelian(const SemidirectGroup& src, const SemidirectGroup& dst,
                                   const BurnsideElement& b);

// Semidirect Saito duality D: [Ghat / H x| T] |-> [Ghat* / H~ x| T].
SemidirectBurnside saito_dual_semidirect(const SemidirectGroup& src, const SemidirectBurnside& b);

// Returns (conjugate in Ghat, duals conjugate in Ghat*).  The two booleans
// agreeing on every pair is the well-definedness of the semidirect duality.
std::pair<bool, bool> check_conjugacy_duality(const SemidirectGroup& sd,
                                              const SemidirectGroup& sd_dual,
                                              const SemidirectSubgp& s1,
                                              const SemidirectSubgp& s2);

// Commutativity of duality with induction along S' <= S: for terms over
// A x| S' (every t <= S'), compare
//   induce(dual terms over A* x| S')  ==  dual(induce(terms) over A x| S)
// as Burnside elements over the full dual concrete group.
bool check_induction_diagram(const SemidirectGroup& sd, const SemidirectGroup& sd_dual,
                             const PermGroup& s_small, const SemidirectBurnside& b);

// All semidirect subgroups (H, T) of sd: H runs over subgroups of the
// abelian part, T over subgroups of S with T-invariant H.
std::vector<SemidirectSubgp> enumerate_semidirect_subgps(const SemidirectGroup& sd,
                                                         const EnumerationCaps& caps = {});

}  // namespace orbidual
