#pragma once

// Exact integer matrix utilities: determinants, Hermite and Smith normal
// forms, rational inverses.  All lattices in this project are full-rank
// sublattices of Z^n given by a square basis matrix whose *columns*
// generate the lattice.
//
// Hermite normal form convention (column style): H is lower triangular,
// H[i][i] > 0, and 0 <= H[i][j] < H[i][i] for j < i.  Two integer matrices
// generate the same column lattice iff their HNFs are identical, so HNF
// matrices serve as canonical lattice representatives throughout.

#include <vector>

#include "orbidual/numeric.hpp"

namespace orbidual {

struct IMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const IMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
  bool operator<(const IMat& o) const {
    if (rows != o.rows) return rows < o.rows;
    if (cols != o.cols) return cols < o.cols;
    return a < o.a;
  }

  static IMat identity(int n);
  static IMat from_rows(const std::vector<std::vector<Int>>& rows);
};

IMat transpose(const IMat& m);
IMat mul(const IMat& x, const IMat& y);
IMat hconcat(const IMat& x, const IMat& y);
bool is_zero(const IMat& m);
std::string to_string(const IMat& m);

// Determinant by fraction-free (Bareiss) elimination.
Int det(const IMat& m);

// Integer matrix divided by a positive scalar denominator.  Used for exact
// inverses: inverse(L) = adjugate-like matrix / det.
struct FracMat {
  IMat num;
  Int den = 1;  // > 0

  bool is_integral() const;
  IMat to_imat() const;  // requires is_integral()
  void normalize();      // divide by gcd(all entries, den)
};

FracMat frac_mul(const FracMat& x, const FracMat& y);
FracMat frac_of(const IMat& m);
std::vector<Rat> frac_apply(const FracMat& m, const std::vector<Rat>& v);

// Exact inverse of a nonsingular square integer matrix.
FracMat inverse(const IMat& m);

// Column-style Hermite normal form of the lattice generated by the columns
// of m (rows x cols, cols >= rows, full row rank required).  Returns the
// canonical square basis described above.
IMat hnf(const IMat& m);

struct SnfResult {
  IMat u, v;            // unimodular, u * m * v = diag(d)
  std::vector<Int> d;   // d[0] | d[1] | ... , all > 0
};

// Smith normal form of a nonsingular square integer matrix.
SnfResult snf(const IMat& m);

std::vector<Rat> mat_apply(const IMat& m, const std::vector<Rat>& v);
std::vector<Int> mat_apply_int(const IMat& m, const std::vector<Int>& v);

}  // namespace orbidual
