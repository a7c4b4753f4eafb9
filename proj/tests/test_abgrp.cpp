#include <doctest.h>

#include <algorithm>
#include <set>

#include "orbidual/abgrp.hpp"
#include "orbidual/poly.hpp"

using namespace orbidual;

namespace {

IMat rows(const std::vector<std::vector<Int>>& r) { return IMat::from_rows(r); }

FinAbGroup loop22_group() {  // x1^2*x2 + x2^2*x1
  return FinAbGroup(parse_polynomial("x1^2*x2 + x2^2*x1").exponent_matrix());
}

FinAbGroup loop222_group() {  // x1^2*x2 + x2^2*x3 + x3^2*x1
  return FinAbGroup(build_periodic_loop({2}, 3).exponent_matrix());
}

AbElement el(const std::string& text, int n) { return parse_ab_element(text, n); }

}  // namespace

TEST_CASE("element arithmetic and canonical representatives") {
  AbElement a = el("2/3,5/6", 2);
  CHECK(a.x[0] == Rat(2, 3));
  AbElement b = ab_add(a, a);
  CHECK(b.x[0] == Rat(1, 3));  // 4/3 reduced into [0,1)
  CHECK(b.x[1] == Rat(2, 3));
  CHECK(ab_add(a, ab_neg(a)).is_zero());
  CHECK(ab_scale(6, a).is_zero());
  CHECK(ab_scale(-1, a) == ab_neg(a));
  CHECK(to_string(el("1/3,0", 2)) == "1/3,0");
  CHECK_THROWS_AS(parse_ab_element("1/3", 2), ValidationError);
  CHECK_THROWS_AS(parse_ab_element("1/3,x", 2), ValidationError);
}

TEST_CASE("two-variable loop: order 3 group with self-pairing 2/3") {
  FinAbGroup g = loop22_group();
  CHECK(g.order() == 3);
  CHECK(g.invariant_factors() == std::vector<Int>{1, 3});
  CHECK(g.exponent() == 3);

  std::vector<AbElement> els = g.elements();
  REQUIRE(els.size() == 3);
  CHECK(std::is_sorted(els.begin(), els.end()));

  AbElement gen = el("1/3,1/3", 2);
  CHECK(g.contains(gen));
  CHECK(!g.contains(el("1/3,0", 2)));
  CHECK(g.element_order(gen) == 3);
  CHECK(g.element_order(el("0,0", 2)) == 1);

  // The pairing of the generator with itself in the (self-transpose) dual.
  CHECK(pairing(g, gen, gen) == Rat(2, 3));
}

TEST_CASE("three-variable loop: order 9, dual group, pairing") {
  FinAbGroup g = loop222_group();
  CHECK(g.order() == 9);

  AbElement gen = el("1/9,7/9,4/9", 3);
  CHECK(g.contains(gen));
  CHECK(g.element_order(gen) == 9);  // single generator: group is cyclic Z/9

  // Scaling the generator runs through all nine elements.
  std::set<AbElement> seen;
  for (int k = 0; k < 9; ++k) seen.insert(ab_scale(k, gen));
  CHECK(seen.size() == 9);
  std::vector<AbElement> els = g.elements();
  CHECK(std::set<AbElement>(els.begin(), els.end()) == seen);

  FinAbGroup gd = g.dual();
  CHECK(gd.order() == 9);
  AbElement dgen = el("1/9,4/9,7/9", 3);
  CHECK(gd.contains(dgen));
  CHECK(pairing(g, gen, dgen) == Rat(7, 9));

  // Bilinearity and nondegeneracy of the pairing on full element sets.
  std::vector<AbElement> dels = gd.elements();
  for (const AbElement& a : els) {
    bool all_zero = true;
    for (const AbElement& b : dels) {
      Rat pab = pairing(g, a, b);
      CHECK(pairing(g, ab_add(a, a), b) == (pab + pab - (pab + pab >= 1 ? Rat(1) : Rat(0))));
      if (pab != 0) all_zero = false;
    }
    CHECK(all_zero == a.is_zero());
  }

  CHECK_THROWS_AS(pairing(g, gen, el("1/3,0,0", 3)), ValidationError);
}

TEST_CASE("dual of dual returns the original lattice") {
  for (const char* s : {"x1^2*x2 + x2^2*x1", "x1^3*x2 + x2^2", "x1^5 + x2^2*x3 + x3^3*x2"}) {
    FinAbGroup g(parse_polynomial(s).exponent_matrix());
    CHECK(g.dual().dual() == g);
    CHECK(g.dual().order() == g.order());
  }
}

TEST_CASE("canonical coordinates invert from_canonical_coords") {
  FinAbGroup g = loop222_group();
  for (const AbElement& a : g.elements()) {
    std::vector<Int> y = g.canonical_coords(a);
    CHECK(g.from_canonical_coords(y) == a);
  }
  std::vector<AbElement> gens = g.generators();
  REQUIRE(gens.size() == 1);  // cyclic of order 9
  CHECK(g.element_order(gens[0]) == 9);
}

TEST_CASE("subgroup lattice of the three-variable loop") {
  FinAbGroup g = loop222_group();
  std::vector<AbSubgroup> subs = enumerate_subgroups(g);
  CHECK(subs.size() == 3);  // Z/9: orders 1, 3, 9

  std::vector<Int> orders;
  for (const AbSubgroup& s : subs) orders.push_back(s.order());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<Int>{1, 3, 9});

  // All subgroups of the cyclic group survive the shift-invariance filter.
  Perm rot = parse_cycles("(1 2 3)", 3);
  CHECK(g.preserved_by(rot));
  std::vector<AbSubgroup> inv = enumerate_subgroups(g, {rot});
  CHECK(inv.size() == 3);
  for (const AbSubgroup& s : subs) CHECK(subgroup_invariant(s, rot));

  AbSubgroup full = full_subgroup(g);
  AbSubgroup triv = trivial_subgroup(g);
  CHECK(full.order() == 9);
  CHECK(triv.order() == 1);
  CHECK(full.is_full());
  CHECK(triv.is_trivial());
  CHECK(subgroup_sum(full, triv) == full);
  CHECK(subgroup_intersection(full, triv) == triv);

  // Generated subgroups: 3*gen spans the order-3 subgroup.
  AbElement gen = el("1/9,7/9,4/9", 3);
  AbSubgroup mid = subgroup_generated(g, {ab_scale(3, gen)});
  CHECK(mid.order() == 3);
  CHECK(subgroup_sum(mid, mid) == mid);
  CHECK(intersection_order(mid, full) == 3);
  CHECK(intersection_order(mid, triv) == 1);
  CHECK(subgroup_generated(g, {gen}) == full);
  CHECK(subgroup_generated(g, {}) == triv);

  // Membership and element listing agree.
  std::vector<AbElement> mels = mid.elements();
  REQUIRE(mels.size() == 3);
  for (const AbElement& a : g.elements())
    CHECK(mid.contains(a) == (std::find(mels.begin(), mels.end(), a) != mels.end()));
}

TEST_CASE("elementary abelian (Z/2)^5 has 374 subgroups") {
  IMat l = IMat::identity(5);
  for (int i = 0; i < 5; ++i) l.at(i, i) = 2;
  FinAbGroup g(l);
  CHECK(g.order() == 32);
  std::vector<AbSubgroup> subs = enumerate_subgroups(g);
  CHECK(subs.size() == 374);
  // Deterministic canonical order.
  CHECK(std::is_sorted(subs.begin(), subs.end()));
}

TEST_CASE("annihilator duality on subgroups") {
  FinAbGroup g = loop222_group();
  std::vector<AbSubgroup> subs = enumerate_subgroups(g);
  for (const AbSubgroup& k : subs) {
    AbSubgroup kd = dual_subgroup(k);
    CHECK(k.order() * kd.order() == g.order());
    CHECK(dual_subgroup(kd) == k);  // involution through the double dual
    // The annihilator pairs to zero with everything in k.
    for (const AbElement& a : k.elements())
      for (const AbElement& b : kd.elements()) CHECK(pairing(g, a, b) == 0);
  }

  // Order reversal swaps sums and intersections.
  FinAbGroup h(rows({{2, 0}, {0, 4}}));
  std::vector<AbSubgroup> hs = enumerate_subgroups(h);
  for (const AbSubgroup& a : hs)
    for (const AbSubgroup& b : hs) {
      CHECK(dual_subgroup(subgroup_sum(a, b)) ==
            subgroup_intersection(dual_subgroup(a), dual_subgroup(b)));
      CHECK(dual_subgroup(subgroup_intersection(a, b)) ==
            subgroup_sum(dual_subgroup(a), dual_subgroup(b)));
    }
}

TEST_CASE("enumeration caps throw instead of running away") {
  IMat l = IMat::identity(4);
  for (int i = 0; i < 4; ++i) l.at(i, i) = 2;
  FinAbGroup g(l);
  EnumerationCaps tight;
  tight.max_order = 8;
  CHECK_THROWS_AS(enumerate_subgroups(g, {}, tight), CapExceeded);
  EnumerationCaps few;
  few.max_subgroups = 10;
  CHECK_THROWS_AS(enumerate_subgroups(g, {}, few), CapExceeded);
}

TEST_CASE("homomorphisms: difference endomorphism of the rotation") {
  FinAbGroup g = loop222_group();
  Perm rot = parse_cycles("(1 2 3)", 3);
  AbHom d = a_delta(g, rot);

  // a - rot(a) for the generator, checked by hand.
  AbElement gen = el("1/9,7/9,4/9", 3);
  AbElement rg = perm_act(rot, gen);
  CHECK(d.apply(gen) == ab_add(gen, ab_neg(rg)));

  AbSubgroup img = image_of(d, full_subgroup(g));
  AbSubgroup ker = kernel_of(d);
  CHECK(img.order() == 3);
  CHECK(ker.order() == 3);
  CHECK(img == ker);  // image equals kernel for this rotation

  // Preimage of the image is everything (first isomorphism theorem sizes).
  CHECK(preimage_of(d, img).order() == 9);
  CHECK(preimage_of(d, trivial_subgroup(g)) == ker);

  // Constructor validation: a matrix that does not map the group to itself.
  CHECK_THROWS_AS(AbHom(g, g, rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})), ValidationError);
}

TEST_CASE("dual homomorphism is the exact pairing adjoint") {
  FinAbGroup g = loop222_group();
  Perm rot = parse_cycles("(1 2 3)", 3);
  AbHom d = a_delta(g, rot);
  AbHom dd = dual_hom(d);
  CHECK(dd.dom().lattice() == transpose(g.lattice()));

  // <phi a, b> = <a, phi* b> over every pair of elements.
  FinAbGroup gd = g.dual();
  for (const AbElement& a : g.elements())
    for (const AbElement& b : gd.elements())
      CHECK(pairing(g, d.apply(a), b) == pairing(g, a, dd.apply(b)));

  // Annihilator exchange: dual(preimage(K)) == image under the dual map of dual(K).
  for (const AbSubgroup& k : enumerate_subgroups(g)) {
    CHECK(dual_subgroup(preimage_of(d, k)) == image_of(dd, dual_subgroup(k)));
    CHECK(dual_subgroup(image_of(d, k)) == preimage_of(dd, dual_subgroup(k)));
  }
}

TEST_CASE("permutation action on elements matches the permutation matrix") {
  FinAbGroup g = loop222_group();
  Perm rot = parse_cycles("(1 2 3)", 3);
  IMat p = perm_matrix(rot);
  for (const AbElement& a : g.elements()) {
    AbElement lhs = perm_act(rot, a);
    std::vector<Rat> rhs = mat_apply(p, a.x);
    for (int i = 0; i < 3; ++i) CHECK(lhs.x[i] == rhs[i]);
  }
  // preserved_by: the swap (1 2) does not preserve this group.
  CHECK(!g.preserved_by(parse_cycles("(1 2)", 3)));
}
