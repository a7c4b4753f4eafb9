// Concrete finite groups given by multiplication tables, their subgroups,
// finite group actions (G-sets), equivariant Euler characteristics valued
// in the Burnside group, orbifold Euler characteristics, reduction and
// induction.
//
// Conventions:
//  - A FiniteGroup is an index set {0..n-1} with a full multiplication
//    table, an identity, and display names for the elements.  Group axioms
//    are validated at construction (associativity exhaustively for n <= 128,
//    by seeded random sampling above that).
//  - A Subgp is a sorted list of ambient element indices; it doubles as a
//    "group view" (e.g. the full group) and as a subgroup of such a view.
//  - A GSet stores the action of a domain subgroup on {0..points-1} as an
//    explicit table; actions of smaller subgroups are restrictions.
//  - A BurnsideElement over a group view H is an integer combination of
//    classes [H/K]; terms are keyed by the canonical representative of the
//    conjugacy class of K in H (the lexicographically smallest sorted
//    element list among H-conjugates), so equal elements compare equal.
//  - chi of a finite set is its cardinality.  The orbifold Euler
//    characteristic of a finite H-set X is
//        chi_orb(X, H) = (1/|H|) * sum over commuting pairs (g,h) in H^2
//                         of #{points fixed by both g and h};
//    the division must be exact (a remainder signals an action bug).
//    chi_orb(pt, H) = number of conjugacy classes of elements of H.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "orbidual/numeric.hpp"

namespace orbidual {

struct FiniteGroupCaps {
  int max_order = 2000;
};

class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::string> names, std::vector<int> mul_table, int identity,
              const FiniteGroupCaps& caps = {});

  int size() const { return n_; }
  int id() const { return id_; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  const std::string& name(int i) const { return names_[i]; }

 private:
  int n_ = 0;
  int id_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
};

using GroupRef = std::shared_ptr<const FiniteGroup>;

GroupRef make_group(std::vector<std::string> names, std::vector<int> mul_table, int identity,
                    const FiniteGroupCaps& caps = {});

class Subgp {
 public:
  // Validates: non-empty, contains the identity, closed under product and
  // inverse.  The element list is sorted.
  Subgp(GroupRef g, std::vector<int> elems);
  static Subgp full(GroupRef g);
  static Subgp trivial(GroupRef g);

  const GroupRef& group() const { return g_; }
  const std::vector<int>& elems() const { return elems_; }
  long long order() const { return static_cast<long long>(elems_.size()); }
  bool contains(int e) const;
  bool contains_all(const Subgp& other) const;
  bool operator==(const Subgp& o) const { return g_.get() == o.g_.get() && elems_ == o.elems_; }
  bool operator<(const Subgp& o) const {
    if (elems_.size() != o.elems_.size()) return elems_.size() < o.elems_.size();
    return elems_ < o.elems_;
  }

 private:
  GroupRef g_;
  std::vector<int> elems_;
};

Subgp generated_subgroup(const GroupRef& g, const std::vector<int>& gens);
Subgp conjugate_subgroup(const Subgp& k, int by);  // by . K . by^-1
// True iff w a w^-1 = b for some w in ambient; the first such w (in element
// order) is stored in *witness when given.
bool are_conjugate_in(const Subgp& a, const Subgp& b, const Subgp& ambient, int* witness = nullptr);
// Lexicographically smallest sorted element list among {w K w^-1 : w in
// within}; *witness receives a w achieving it.
std::vector<int> canonical_conjugacy_key(const Subgp& k, const Subgp& within, int* witness = nullptr);
// Number of conjugacy classes of elements of h.
long long conj_class_count(const Subgp& h);
// All subgroups of h (join-closure over cyclic subgroups), sorted.
std::vector<Subgp> all_subgroups_of(const Subgp& h);

class GSet {
 public:
  // table has domain.order() rows of `points` columns; row r gives the
  // action of domain.elems()[r].  Action axioms are validated.
  GSet(Subgp domain, int points, std::vector<int> table);

  const Subgp& domain() const { return domain_; }
  int points() const { return points_; }
  // Action of an ambient element (must belong to the domain).
  int apply(int ambient_elem, int point) const;
  int row_of(int ambient_elem) const;  // -1 when undefined

 private:
  Subgp domain_;
  int points_ = 0;
  std::vector<int> table_;
  std::vector<int> row_;
};

// Left cosets of k in g with g acting by left translation.  Requires k <= g.
GSet coset_gset(const Subgp& g, const Subgp& k);
GSet point_gset(const Subgp& g);
GSet disjoint_union_gset(const std::vector<GSet>& parts);  // common domain required
// Rename points: old point p becomes new_of_old[p] (a bijection).
GSet relabel_gset(const GSet& x, const std::vector<int>& new_of_old);

class BurnsideElement {
 public:
  explicit BurnsideElement(Subgp group);

  const Subgp& group() const { return group_; }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }
  // Adds coeff * [group/k]; k is canonicalized by conjugation within group.
  void add_term(const Subgp& k, const Int& coeff);
  BurnsideElement& operator+=(const BurnsideElement& o);
  BurnsideElement& operator-=(const BurnsideElement& o);
  BurnsideElement negated() const;
  bool operator==(const BurnsideElement& o) const {
    return group_ == o.group_ && terms_ == o.terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  // Sum of coeff * [group : K] (the cardinality of the virtual set).
  Int total_points() const;
  std::string to_string() const;

 private:
  Subgp group_;
  std::map<std::vector<int>, Int> terms_;
};

// Equivariant Euler characteristic of a finite h-set: sum over orbit
// strata of (#orbits whose stabilizer lies in the class [K]) * [h/K].
// Stabilizers are merged only when conjugate by an explicit witness.
BurnsideElement equivariant_chi(const GSet& x, const Subgp& h);

// Orbifold Euler characteristic of a finite h-set, by the commuting-pair
// definition.  chi_orb_set uses fixed-point bitmaps and runs the pair sum
// in parallel; chi_orb_set_serial is the naive reference implementation.
Int chi_orb_set(const GSet& x, const Subgp& h);
Int chi_orb_set_serial(const GSet& x, const Subgp& h);

// Linear extension of chi_orb_set over the terms of b: each class
// [group/K] is realized as its coset set, restricted to `actor`, and
// evaluated there.  Requires actor <= b.group().
Int chi_orb_burnside(const BurnsideElement& b, const Subgp& actor);

// Restriction to a subgroup h <= b.group(): every class [group/K] is
// re-expressed as the h-equivariant Euler characteristic of its coset set.
BurnsideElement reduce_to(const BurnsideElement& b, const Subgp& h);

// Induction to a supergroup g >= b.group(): term-wise [H/K] -> [g/K].
BurnsideElement induce_to(const BurnsideElement& b, const Subgp& g);

}  // namespace orbidual
