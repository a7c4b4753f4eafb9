#pragma once

// Finite abelian groups presented as lattice quotients.
//
// A group is given by a nonsingular integer matrix L (columns generate a
// finite-index sublattice of Z^n).  Its elements are the rational vectors
//
//     A(L) = { a in Q^n mod Z^n : L a is integral },
//
// a group of order |det L| isomorphic to Z^n / L Z^n (multiply by L).  For
// the diagonal symmetry group of an invertible polynomial f, L is the
// exponent matrix E of f: a encodes the symmetry x_j -> exp(2 pi i a_j) x_j.
//
// Subgroups correspond to intermediate lattices L Z^n <= M Z^n <= Z^n and
// are stored as the canonical Hermite basis M; membership of a is the
// integrality of M^-1 (L a), and the order is |det L| / |det M|.
//
// The dual group (characters) is presented on the transposed lattice:
// A(L)^* = A(L^T), with the exact pairing
//
//     <a, b> = (L a)^T b  mod 1,   a in A(L), b in A(L^T),
//
// which is well defined, bilinear and nondegenerate.  The annihilator of
// the subgroup M <= A(L) is the subgroup hnf((M^-1 L)^T) <= A(L^T).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orbidual/intmat.hpp"
#include "orbidual/perm.hpp"

namespace orbidual {

struct AbElement {
  std::vector<Rat> x;  // each entry canonical in [0,1)

  AbElement() = default;
  explicit AbElement(std::vector<Rat> v);

  int n() const { return static_cast<int>(x.size()); }
  bool is_zero() const;
  bool operator==(const AbElement& o) const { return x == o.x; }
  bool operator<(const AbElement& o) const { return x < o.x; }
};

AbElement ab_add(const AbElement& a, const AbElement& b);
AbElement ab_neg(const AbElement& a);
AbElement ab_scale(const Int& k, const AbElement& a);
AbElement perm_act(const Perm& s, const AbElement& a);  // (s a)_i = a_{s^-1(i)}
IMat perm_matrix(const Perm& s);                        // P e_j = e_{s(j)}
std::string to_string(const AbElement& a);              // "1/3,1/3"
AbElement parse_ab_element(const std::string& text, int n);

class FinAbGroup {
 public:
  explicit FinAbGroup(IMat lattice);

  int n() const { return lattice_.rows; }
  const IMat& lattice() const { return lattice_; }
  Int order() const { return order_; }
  const std::vector<Int>& invariant_factors() const { return snf_.d; }
  Int exponent() const { return snf_.d.back(); }

  bool contains(const AbElement& a) const;
  void require_member(const AbElement& a) const;

  // All elements in canonical (lexicographically sorted) order.
  std::vector<AbElement> elements() const;

  // Coordinates of a in the invariant-factor decomposition (y_i mod d_i).
  std::vector<Int> canonical_coords(const AbElement& a) const;
  AbElement from_canonical_coords(const std::vector<Int>& y) const;

  // Generators corresponding to invariant factors d_i > 1.
  std::vector<AbElement> generators() const;

  Int element_order(const AbElement& a) const;

  FinAbGroup dual() const { return FinAbGroup(transpose(lattice_)); }

  // True iff the coordinate permutation s maps A(L) onto itself.
  bool preserved_by(const Perm& s) const;

  bool operator==(const FinAbGroup& o) const { return lattice_ == o.lattice_; }

 private:
  // The matrix L is kept exactly as given: the element set {a : L a
  // integral} depends on L itself (e.g. on the exponent matrix of a
  // polynomial), not only on the column lattice it spans.
  IMat lattice_;
  Int order_;
  SnfResult snf_;     // of lattice_
  IMat snf_u_inv_;
  FracMat lat_inv_;   // lattice_^-1
};

class AbSubgroup {
 public:
  AbSubgroup(const FinAbGroup& parent, IMat m);  // m: any basis of the intermediate lattice

  const FinAbGroup& parent() const { return parent_; }
  const IMat& basis() const { return m_; }  // canonical HNF
  Int order() const;
  bool contains(const AbElement& a) const;
  std::vector<AbElement> elements() const;     // canonical order
  std::vector<AbElement> generators() const;   // invariant-factor generators
  bool is_trivial() const { return order() == 1; }
  bool is_full() const { return order() == parent_.order(); }

  // The subgroup as a group in its own right is not materialized; use
  // elements() with the parent's operations.

  bool operator==(const AbSubgroup& o) const;
  bool operator<(const AbSubgroup& o) const;  // by (order, basis) - deterministic

 private:
  FinAbGroup parent_;
  IMat m_;
};

AbSubgroup trivial_subgroup(const FinAbGroup& g);
AbSubgroup full_subgroup(const FinAbGroup& g);
AbSubgroup subgroup_generated(const FinAbGroup& g, const std::vector<AbElement>& gens);
AbSubgroup subgroup_sum(const AbSubgroup& a, const AbSubgroup& b);
AbSubgroup subgroup_intersection(const AbSubgroup& a, const AbSubgroup& b);
Int intersection_order(const AbSubgroup& a, const AbSubgroup& b);  // fast path

// Annihilator subgroup in the dual group; |K| * |dual(K)| = |parent|.
AbSubgroup dual_subgroup(const AbSubgroup& k);

// Exact pairing <a,b> = (L a)^T b mod 1 between A(L) and A(L^T).
Rat pairing(const FinAbGroup& g, const AbElement& a, const AbElement& b);

// Is the subgroup invariant under the coordinate permutation s?
bool subgroup_invariant(const AbSubgroup& k, const Perm& s);

// All subgroups (optionally only those invariant under every permutation in
// s_action), canonically ordered.  Enumerates Hermite bases row by row with
// integrality pruning.  Throws CapExceeded if the parent order exceeds
// max_order or more than max_subgroups would be returned.
struct EnumerationCaps {
  Int max_order = 10000;
  long long max_subgroups = 100000;
};
std::vector<AbSubgroup> enumerate_subgroups(const FinAbGroup& g,
                                            const std::vector<Perm>& s_action = {},
                                            const EnumerationCaps& caps = {});

// Homomorphism A(L_dom) -> A(L_cod), a |-> phi a, with phi integral and
// L_cod phi L_dom^-1 integral.
class AbHom {
 public:
  AbHom(const FinAbGroup& dom, const FinAbGroup& cod, IMat phi);

  const FinAbGroup& dom() const { return dom_; }
  const FinAbGroup& cod() const { return cod_; }
  const IMat& matrix() const { return phi_; }

  AbElement apply(const AbElement& a) const;

 private:
  FinAbGroup dom_, cod_;
  IMat phi_;
};

// a |-> a - (s a); requires s to preserve the group.
AbHom a_delta(const FinAbGroup& g, const Perm& s);

// Dual homomorphism A(L_cod^T) -> A(L_dom^T) with <phi a, b> = <a, phi* b>.
AbHom dual_hom(const AbHom& h);

AbSubgroup image_of(const AbHom& h, const AbSubgroup& k);     // k <= dom
AbSubgroup preimage_of(const AbHom& h, const AbSubgroup& k);  // k <= cod
AbSubgroup kernel_of(const AbHom& h);

}  // namespace orbidual
