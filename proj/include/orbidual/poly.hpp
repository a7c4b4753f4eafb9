#pragma once

// Invertible polynomials in the Kreuzer-Skarke atomic normal form: a sum of
// n monomials in n variables whose exponent matrix E (row i = exponents of
// monomial i) is nonsingular, and which decomposes as a disjoint union of
//
//   chains:  x1^p1 x2 + x2^p2 x3 + ... + xm^pm          (m >= 1)
//   loops:   x1^p1 x2 + x2^p2 x3 + ... + xm^pm x1        (m >= 2)
//
// over disjoint variable sets, with every exponent p_i >= 2.  All
// coefficients are fixed to 1.
//
// Input grammar (whitespace insignificant, no coefficients):
//   poly   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := var ('^' posint)?
//   var    := 'x' posint
// Variables must be exactly x1..xn with no gaps.

#include <string>
#include <vector>

#include "orbidual/intmat.hpp"
#include "orbidual/perm.hpp"

namespace orbidual {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& m, size_t pos)
      : std::runtime_error(m + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct Monomial {
  std::vector<Int> exponents;  // length n, entries >= 0
  bool operator==(const Monomial& o) const { return exponents == o.exponents; }
  bool operator<(const Monomial& o) const { return exponents < o.exponents; }
};

struct Atom {
  bool is_loop = false;
  std::vector<int> variables;  // 0-based, in chain/loop order; loops start at min index
  std::vector<Int> exponents;  // p_i for variables[i]
};

struct InvertiblePolynomial {
  int n = 0;
  std::vector<Monomial> monomials;  // exactly n, in input order

  IMat exponent_matrix() const;
};

// Parse and fully validate (grammar, contiguous variables, square shape,
// nonzero determinant, atomic normal form with all p_i >= 2).
InvertiblePolynomial parse_polynomial(const std::string& text);

// Validation used by parse_polynomial and by programmatic constructors.
void validate_polynomial(const InvertiblePolynomial& f);

// Chain/loop decomposition (requires a valid polynomial).
std::vector<Atom> classify_atoms(const InvertiblePolynomial& f);

// Berglund-Huebsch transpose: exponent matrix E^T, monomial i = column i of E.
InvertiblePolynomial transpose(const InvertiblePolynomial& f);

// Unique exact solution q of E q = (1,...,1)^T.
std::vector<Rat> weights(const InvertiblePolynomial& f);

// x1^p..x_l^p.. pattern repeated k times around a cycle of length k*l:
// monomial i (0-based) is x_i^{p[i mod l]} * x_{i+1 mod kl}.
InvertiblePolynomial build_periodic_loop(const std::vector<Int>& p, int k);

// True iff permuting the variables by s maps the monomial set onto itself.
bool check_invariance(const InvertiblePolynomial& f, const Perm& s);

// For an invariance s of f, the induced permutation of the monomials:
// row_permutation(f,s)(i) = j where permuting variables turns monomial i
// into monomial j.  This is a group homomorphism, and it gives the action
// of s on the transposed polynomial's variables (the dual action).
Perm row_permutation(const InvertiblePolynomial& f, const Perm& s);

std::string to_string(const InvertiblePolynomial& f);
std::string to_string(const Atom& a);

}  // namespace orbidual
