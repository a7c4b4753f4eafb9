#include <doctest.h>

#include "orbidual/poly.hpp"

using namespace orbidual;

namespace {

IMat rows(const std::vector<std::vector<Int>>& r) { return IMat::from_rows(r); }

}  // namespace

TEST_CASE("parse: two-variable loop") {
  InvertiblePolynomial f = parse_polynomial("x1^2*x2 + x2^2*x1");
  CHECK(f.n == 2);
  CHECK(f.exponent_matrix() == rows({{2, 1}, {1, 2}}));
  CHECK(det(f.exponent_matrix()) == 3);

  std::vector<Atom> atoms = classify_atoms(f);
  REQUIRE(atoms.size() == 1);
  CHECK(atoms[0].is_loop);
  CHECK(atoms[0].variables == std::vector<int>{0, 1});
  CHECK(atoms[0].exponents == std::vector<Int>{2, 2});

  std::vector<Rat> q = weights(f);
  CHECK(q[0] == Rat(1, 3));
  CHECK(q[1] == Rat(1, 3));
}

TEST_CASE("parse: chain and mixed sums") {
  InvertiblePolynomial f = parse_polynomial("x1^3*x2 + x2^2");
  CHECK(f.exponent_matrix() == rows({{3, 1}, {0, 2}}));
  std::vector<Atom> atoms = classify_atoms(f);
  REQUIRE(atoms.size() == 1);
  CHECK(!atoms[0].is_loop);
  CHECK(atoms[0].variables == std::vector<int>{0, 1});

  std::vector<Rat> q = weights(f);
  CHECK(q[0] == Rat(1, 6));
  CHECK(q[1] == Rat(1, 2));

  // Fermat monomial and a 2-loop living on disjoint variables.
  InvertiblePolynomial g = parse_polynomial("x1^5 + x2^2*x3 + x3^3*x2");
  std::vector<Atom> gat = classify_atoms(g);
  REQUIRE(gat.size() == 2);
  CHECK(!gat[0].is_loop);  // x1^5 is a length-1 chain
  CHECK(gat[0].variables == std::vector<int>{0});
  CHECK(gat[1].is_loop);
  CHECK(gat[1].variables == std::vector<int>{1, 2});
}

TEST_CASE("parse: whitespace, exponent syntax, order preserved") {
  InvertiblePolynomial f = parse_polynomial("  x2^2*x1+x1 ^ 2 * x2 ");
  CHECK(f.n == 2);
  // Monomials stay in input order: first row is x2^2*x1.
  CHECK(f.exponent_matrix() == rows({{1, 2}, {2, 1}}));
  CHECK(to_string(f) == "x1*x2^2 + x1^2*x2");
}

TEST_CASE("parse: grammar errors carry positions") {
  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1^2 +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("y1^2"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1^0 + x2^2"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("3*x1^2"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1^2 ; x2^2"), ParseError);
}

TEST_CASE("parse: structural validation rejects non-atomic sums") {
  // x2 has exponent 1 in its own monomial: below the minimum of 2.
  CHECK_THROWS_AS(parse_polynomial("x1^2 + x2"), ValidationError);
  // Neither variable reaches exponent 2 in the first monomial.
  CHECK_THROWS_AS(parse_polynomial("x1*x2 + x2^2"), ValidationError);
  // Singular exponent matrix (duplicate monomial).
  CHECK_THROWS_AS(parse_polynomial("x1^2*x2 + x1^2*x2"), ValidationError);
  // Variable gap: x1, x3 but no x2.
  CHECK_THROWS_AS(parse_polynomial("x1^2 + x3^2 + x3^2*x1"), ValidationError);
  // Wrong count: 1 monomial, 2 variables.
  CHECK_THROWS_AS(parse_polynomial("x1^2*x2"), ValidationError);
  // 3 monomials over 2 variables.
  CHECK_THROWS_AS(parse_polynomial("x1^2*x2 + x2^2*x1 + x1^2"), ValidationError);
  // Three variables in one monomial.
  CHECK_THROWS_AS(parse_polynomial("x1^2*x2*x3 + x2^2 + x3^2"), ValidationError);
  // x2 is the tail of two different monomials (two atoms share it).
  CHECK_THROWS_AS(parse_polynomial("x1^2*x2 + x3^2*x2 + x2^2"), ValidationError);
  // Self-link x1^2*x1 = x1^3 parses as a Fermat term, but an explicit
  // exponent pattern x1^2*x2 + x2*x2 collapses to x2^2 ... check a genuine
  // self-loop instead: head and tail equal after merging is a cube, fine,
  // so verify the merged form is accepted as a chain of length 1.
  InvertiblePolynomial cube = parse_polynomial("x1^2*x1");
  std::vector<Atom> atoms = classify_atoms(cube);
  REQUIRE(atoms.size() == 1);
  CHECK(!atoms[0].is_loop);
  CHECK(atoms[0].exponents == std::vector<Int>{3});
}

TEST_CASE("transpose: exponent matrix is transposed, involution") {
  InvertiblePolynomial f = parse_polynomial("x1^3*x2 + x2^2");
  InvertiblePolynomial ft = transpose(f);
  CHECK(ft.exponent_matrix() == transpose(f.exponent_matrix()));
  CHECK(transpose(ft).exponent_matrix() == f.exponent_matrix());
  // Chain transposes to the reversed chain: x1^3*x2 + x2^2 -> x1^3 + x1*x2^2.
  std::vector<Atom> atoms = classify_atoms(ft);
  REQUIRE(atoms.size() == 1);
  CHECK(!atoms[0].is_loop);

  // Loops transpose to loops traversed backwards.
  InvertiblePolynomial g = build_periodic_loop({2, 3}, 2);
  std::vector<Atom> gat = classify_atoms(transpose(g));
  REQUIRE(gat.size() == 1);
  CHECK(gat[0].is_loop);
  CHECK(gat[0].variables.size() == 4);
}

TEST_CASE("build_periodic_loop matches the parsed equivalent") {
  InvertiblePolynomial f = build_periodic_loop({2}, 3);
  InvertiblePolynomial g = parse_polynomial("x1^2*x2 + x2^2*x3 + x3^2*x1");
  CHECK(f.exponent_matrix() == g.exponent_matrix());
  CHECK(det(f.exponent_matrix()) == 9);

  InvertiblePolynomial h = build_periodic_loop({2, 2}, 2);
  InvertiblePolynomial h2 = parse_polynomial("x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x1");
  CHECK(h.exponent_matrix() == h2.exponent_matrix());

  // Mixed exponent pattern p = (2,3) repeated twice.
  InvertiblePolynomial m = build_periodic_loop({2, 3}, 2);
  InvertiblePolynomial m2 = parse_polynomial("x1^2*x2 + x2^3*x3 + x3^2*x4 + x4^3*x1");
  CHECK(m.exponent_matrix() == m2.exponent_matrix());

  CHECK_THROWS_AS(build_periodic_loop({1}, 3), ValidationError);
  CHECK_THROWS_AS(build_periodic_loop({}, 3), ValidationError);
  CHECK_THROWS_AS(build_periodic_loop({2}, 0), ValidationError);
  // k*l must be at least 2 so the result is a genuine loop.
  CHECK_THROWS_AS(build_periodic_loop({2}, 1), ValidationError);
}

TEST_CASE("check_invariance and row_permutation") {
  InvertiblePolynomial f = build_periodic_loop({2}, 3);
  Perm rot = parse_cycles("(1 2 3)", 3);
  Perm swap12 = parse_cycles("(1 2)", 3);
  CHECK(check_invariance(f, rot));
  CHECK(!check_invariance(f, swap12));

  // The cyclic shift advances every monomial to the next one.
  Perm r = row_permutation(f, rot);
  CHECK(r(0) == 1);
  CHECK(r(1) == 2);
  CHECK(r(2) == 0);

  // Homomorphism: row_permutation(s1 s2) = row_permutation(s1) row_permutation(s2).
  Perm rot2 = compose(rot, rot);
  CHECK(row_permutation(f, rot2) == compose(row_permutation(f, rot), row_permutation(f, rot)));

  // Identity fixes all rows.
  Perm id(3);
  Perm ri = row_permutation(f, id);
  for (int i = 0; i < 3; ++i) CHECK(ri(i) == i);

  CHECK_THROWS_AS(row_permutation(f, swap12), ValidationError);

  // The periodic pattern (2,3) is invariant under shift by l=2, not by 1.
  InvertiblePolynomial m = build_periodic_loop({2, 3}, 2);
  Perm shift2 = parse_cycles("(1 3)(2 4)", 4);
  Perm shift1 = parse_cycles("(1 2 3 4)", 4);
  CHECK(check_invariance(m, shift2));
  CHECK(!check_invariance(m, shift1));
}

TEST_CASE("to_string round trip") {
  for (const char* s : {"x1^2*x2 + x2^2*x1", "x1^3*x2 + x2^2", "x1^5 + x2^2*x3 + x3^3*x2"}) {
    InvertiblePolynomial f = parse_polynomial(s);
    InvertiblePolynomial g = parse_polynomial(to_string(f));
    CHECK(f.monomials == g.monomials);
  }
}
