#include "orbidual/intmat.hpp"

#include <boost/integer/common_factor_rt.hpp>
#include <sstream>

namespace orbidual {

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat IMat::from_rows(const std::vector<std::vector<Int>>& rows) {
  IMat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols)
      throw ValidationError("ragged matrix rows");
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IMat transpose(const IMat& m) {
  IMat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

IMat mul(const IMat& x, const IMat& y) {
  if (x.cols != y.rows) throw ValidationError("matrix dimension mismatch in mul");
  IMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& xv = x.at(i, k);
      if (xv == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += xv * y.at(k, j);
    }
  return r;
}

IMat hconcat(const IMat& x, const IMat& y) {
  if (x.rows != y.rows) throw ValidationError("row mismatch in hconcat");
  IMat r(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
  }
  return r;
}

bool is_zero(const IMat& m) {
  for (const auto& v : m.a)
    if (v != 0) return false;
  return true;
}

std::string to_string(const IMat& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows; ++i) {
    os << "[";
    for (int j = 0; j < m.cols; ++j) {
      os << m.at(i, j).str();
      if (j + 1 < m.cols) os << ",";
    }
    os << "]";
    if (i + 1 < m.rows) os << ",";
  }
  os << "]";
  return os.str();
}

Int det(const IMat& m) {
  if (m.rows != m.cols) throw ValidationError("det of non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  IMat w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        w.at(i, j) = t / prev;  // exact by Bareiss
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

bool FracMat::is_integral() const {
  for (const auto& v : num.a)
    if (v % den != 0) return false;
  return true;
}

IMat FracMat::to_imat() const {
  if (!is_integral()) throw ArithmeticError("FracMat not integral");
  IMat r = num;
  for (auto& v : r.a) v /= den;
  return r;
}

void FracMat::normalize() {
  if (den < 0) { den = -den; for (auto& v : num.a) v = -v; }
  Int g = den;
  for (const auto& v : num.a) {
    g = boost::integer::gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1) {
    den /= g;
    for (auto& v : num.a) v /= g;
  }
}

FracMat frac_mul(const FracMat& x, const FracMat& y) {
  FracMat r{mul(x.num, y.num), x.den * y.den};
  r.normalize();
  return r;
}

FracMat frac_of(const IMat& m) { return FracMat{m, 1}; }

std::vector<Rat> frac_apply(const FracMat& m, const std::vector<Rat>& v) {
  std::vector<Rat> r(m.num.rows, Rat(0));
  for (int i = 0; i < m.num.rows; ++i) {
    Rat s = 0;
    for (int j = 0; j < m.num.cols; ++j) s += Rat(m.num.at(i, j)) * v[j];
    r[i] = s / Rat(m.den);
  }
  return r;
}

FracMat inverse(const IMat& m) {
  if (m.rows != m.cols) throw ValidationError("inverse of non-square matrix");
  int n = m.rows;
  // Gauss-Jordan over exact rationals.
  std::vector<std::vector<Rat>> w(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = Rat(m.at(i, j));
    w[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (w[i][c] != 0) { p = i; break; }
    if (p < 0) throw ValidationError("singular matrix has no inverse");
    std::swap(w[c], w[p]);
    Rat pivot = w[c][c];
    for (int j = 0; j < 2 * n; ++j) w[c][j] /= pivot;
    for (int i = 0; i < n; ++i) {
      if (i == c || w[i][c] == 0) continue;
      Rat f = w[i][c];
      for (int j = 0; j < 2 * n; ++j) w[i][j] -= f * w[c][j];
    }
  }
  Int den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) den = boost::integer::lcm(den, rat_den(w[i][n + j]));
  FracMat r{IMat(n, n), den};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& q = w[i][n + j];
      r.num.at(i, j) = rat_num(q) * (den / rat_den(q));
    }
  r.normalize();
  return r;
}

namespace {

// Extended gcd for signed big integers: returns g > 0 with a*x + b*y == g.
Int xgcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    x = (a < 0) ? -1 : 1;
    y = 0;
    return a < 0 ? Int(-a) : a;
  }
  Int x1, y1;
  Int g = xgcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Combine columns c1, c2 of w so that row r holds (gcd, 0); unimodular.
void gcd_columns(IMat& w, int r, int c1, int c2) {
  Int a = w.at(r, c1), b = w.at(r, c2);
  if (b == 0) return;
  if (a == 0) {
    for (int i = 0; i < w.rows; ++i) std::swap(w.at(i, c1), w.at(i, c2));
    return;
  }
  if (b % a == 0) {
    Int q = b / a;  // col_c2 -= q * col_c1; keeps col_c1 (and entries small)
    for (int i = 0; i < w.rows; ++i) w.at(i, c2) -= q * w.at(i, c1);
    return;
  }
  Int x, y;
  Int g = xgcd(a, b, x, y);  // a*x + b*y == g
  Int a1 = a / g, b1 = b / g;
  for (int i = 0; i < w.rows; ++i) {
    Int u = w.at(i, c1), v = w.at(i, c2);
    w.at(i, c1) = x * u + y * v;
    w.at(i, c2) = -b1 * u + a1 * v;
  }
}

}  // namespace

IMat hnf(const IMat& m) {
  int n = m.rows;
  if (m.cols < n) throw ValidationError("hnf: fewer columns than rows");
  IMat w = m;
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < w.cols; ++c) gcd_columns(w, r, r, c);
    if (w.at(r, r) == 0) throw ValidationError("hnf: matrix not of full row rank");
    if (w.at(r, r) < 0)
      for (int i = 0; i < n; ++i) w.at(i, r) = -w.at(i, r);
  }
  IMat h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) h.at(i, j) = w.at(i, j);
  // Reduce the entries left of each pivot into [0, pivot).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      Int q = h.at(i, j) / h.at(i, i);
      if (h.at(i, j) - q * h.at(i, i) < 0) --q;
      if (q == 0) continue;
      for (int k = i; k < n; ++k) h.at(k, j) -= q * h.at(k, i);
    }
  return h;
}

SnfResult snf(const IMat& m) {
  if (m.rows != m.cols) throw ValidationError("snf expects a square matrix");
  int n = m.rows;
  IMat w = m, u = IMat::identity(n), v = IMat::identity(n);

  // Both steps leave the pivot row/column intact when the pivot already
  // divides the target entry (plain elimination); the full Bezout mix runs
  // only when it strictly shrinks |pivot|.  Replacing the pivot row by a
  // Bezout combination in the divisible case would drag the other row's
  // entries into already-cleared positions and the row/column passes could
  // then undo each other forever.
  auto row_gcd_step = [&](int k, int i) {
    // Rows k and i, pivot column k: make w[i][k] zero; unimodular on left.
    Int a = w.at(k, k), b = w.at(i, k);
    if (b == 0) return;
    if (a == 0) {
      for (int j = 0; j < n; ++j) { std::swap(w.at(k, j), w.at(i, j)); std::swap(u.at(k, j), u.at(i, j)); }
      return;
    }
    if (b % a == 0) {
      Int q = b / a;  // row_i -= q * row_k
      for (int j = 0; j < n; ++j) {
        w.at(i, j) -= q * w.at(k, j);
        u.at(i, j) -= q * u.at(k, j);
      }
      return;
    }
    Int x, y;
    Int g = xgcd(a, b, x, y);
    Int a1 = a / g, b1 = b / g;
    for (int j = 0; j < n; ++j) {
      Int p = w.at(k, j), q = w.at(i, j);
      w.at(k, j) = x * p + y * q;
      w.at(i, j) = -b1 * p + a1 * q;
      Int up = u.at(k, j), uq = u.at(i, j);
      u.at(k, j) = x * up + y * uq;
      u.at(i, j) = -b1 * up + a1 * uq;
    }
  };
  auto col_gcd_step = [&](int k, int j) {
    Int a = w.at(k, k), b = w.at(k, j);
    if (b == 0) return;
    if (a == 0) {
      for (int i = 0; i < n; ++i) { std::swap(w.at(i, k), w.at(i, j)); std::swap(v.at(i, k), v.at(i, j)); }
      return;
    }
    if (b % a == 0) {
      Int q = b / a;  // col_j -= q * col_k
      for (int i = 0; i < n; ++i) {
        w.at(i, j) -= q * w.at(i, k);
        v.at(i, j) -= q * v.at(i, k);
      }
      return;
    }
    Int x, y;
    Int g = xgcd(a, b, x, y);
    Int a1 = a / g, b1 = b / g;
    for (int i = 0; i < n; ++i) {
      Int p = w.at(i, k), q = w.at(i, j);
      w.at(i, k) = x * p + y * q;
      w.at(i, j) = -b1 * p + a1 * q;
      Int vp = v.at(i, k), vq = v.at(i, j);
      v.at(i, k) = x * vp + y * vq;
      v.at(i, j) = -b1 * vp + a1 * vq;
    }
  };

  for (int k = 0; k < n; ++k) {
    // Move a nonzero pivot into (k,k).
    if (w.at(k, k) == 0) {
      bool found = false;
      for (int i = k; i < n && !found; ++i)
        for (int j = k; j < n && !found; ++j)
          if (w.at(i, j) != 0) {
            if (i != k)
              for (int c = 0; c < n; ++c) { std::swap(w.at(k, c), w.at(i, c)); std::swap(u.at(k, c), u.at(i, c)); }
            if (j != k)
              for (int r = 0; r < n; ++r) { std::swap(w.at(r, k), w.at(r, j)); std::swap(v.at(r, k), v.at(r, j)); }
            found = true;
          }
      if (!found) throw ValidationError("snf: singular matrix");
    }
    bool dirty = true;
    while (dirty) {
      for (int i = k + 1; i < n; ++i) row_gcd_step(k, i);
      for (int j = k + 1; j < n; ++j) col_gcd_step(k, j);
      dirty = false;
      for (int i = k + 1; i < n && !dirty; ++i)
        if (w.at(i, k) != 0) dirty = true;
      if (!dirty) {
        // Enforce divisibility: w[k][k] must divide the rest of the block.
        for (int i = k + 1; i < n && !dirty; ++i)
          for (int j = k + 1; j < n && !dirty; ++j)
            if (w.at(i, j) % w.at(k, k) != 0) {
              // Add column j to column k and restart elimination.
              for (int r = 0; r < n; ++r) { w.at(r, k) += w.at(r, j); v.at(r, k) += v.at(r, j); }
              dirty = true;
            }
      }
    }
    if (w.at(k, k) < 0) {
      for (int j = 0; j < n; ++j) { w.at(k, j) = -w.at(k, j); u.at(k, j) = -u.at(k, j); }
    }
  }
  SnfResult r;
  r.u = u;
  r.v = v;
  r.d.resize(n);
  for (int i = 0; i < n; ++i) r.d[i] = w.at(i, i);
  return r;
}

std::vector<Rat> mat_apply(const IMat& m, const std::vector<Rat>& v) {
  if (static_cast<int>(v.size()) != m.cols) throw ValidationError("mat_apply dim mismatch");
  std::vector<Rat> r(m.rows, Rat(0));
  for (int i = 0; i < m.rows; ++i) {
    Rat s = 0;
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) s += Rat(m.at(i, j)) * v[j];
    r[i] = s;
  }
  return r;
}

std::vector<Int> mat_apply_int(const IMat& m, const std::vector<Int>& v) {
  if (static_cast<int>(v.size()) != m.cols) throw ValidationError("mat_apply_int dim mismatch");
  std::vector<Int> r(m.rows, Int(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

}  // namespace orbidual
