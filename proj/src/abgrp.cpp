#include "orbidual/abgrp.hpp"

#include <algorithm>
#include <boost/integer/common_factor_rt.hpp>
#include <map>
#include <sstream>

namespace orbidual {

AbElement::AbElement(std::vector<Rat> v) : x(std::move(v)) {
  for (auto& c : x) c = mod1(c);
}

bool AbElement::is_zero() const {
  for (const auto& c : x)
    if (c != 0) return false;
  return true;
}

AbElement ab_add(const AbElement& a, const AbElement& b) {
  if (a.n() != b.n()) throw ValidationError("element arity mismatch");
  std::vector<Rat> r(a.x);
  for (int i = 0; i < a.n(); ++i) r[i] += b.x[i];
  return AbElement(std::move(r));
}

AbElement ab_neg(const AbElement& a) {
  std::vector<Rat> r(a.x);
  for (auto& c : r) c = -c;
  return AbElement(std::move(r));
}

AbElement ab_scale(const Int& k, const AbElement& a) {
  std::vector<Rat> r(a.x);
  for (auto& c : r) c *= Rat(k);
  return AbElement(std::move(r));
}

AbElement perm_act(const Perm& s, const AbElement& a) {
  if (s.n() != a.n()) throw ValidationError("permutation degree differs from element arity");
  return AbElement(perm_apply(s, a.x));
}

std::string to_string(const AbElement& a) {
  std::ostringstream os;
  for (int i = 0; i < a.n(); ++i) {
    if (i) os << ",";
    os << to_string(a.x[i]);
  }
  return os.str();
}

AbElement parse_ab_element(const std::string& text, int n) {
  std::vector<Rat> v;
  std::string cur;
  auto flush = [&] {
    std::string t;
    for (char c : cur)
      if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ValidationError("empty coordinate in element '" + text + "'");
    try {
      v.push_back(Rat(t));
    } catch (const std::exception&) {
      throw ValidationError("bad rational coordinate '" + t + "'");
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') flush();
    else cur += c;
  }
  flush();
  if (static_cast<int>(v.size()) != n)
    throw ValidationError("element has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(n));
  return AbElement(std::move(v));
}

IMat perm_matrix(const Perm& s) {
  IMat p(s.n(), s.n());
  for (int j = 0; j < s.n(); ++j) p.at(s(j), j) = 1;  // P e_j = e_{s(j)}
  return p;
}

FinAbGroup::FinAbGroup(IMat lattice) : lattice_(std::move(lattice)) {
  if (lattice_.rows != lattice_.cols || lattice_.rows == 0)
    throw ValidationError("group lattice must be square and nonempty");
  Int d = det(lattice_);
  if (d == 0) throw ValidationError("group lattice is singular");
  order_ = d < 0 ? Int(-d) : d;
  snf_ = snf(lattice_);
  snf_u_inv_ = inverse(snf_.u).to_imat();
  lat_inv_ = inverse(lattice_);
}

bool FinAbGroup::contains(const AbElement& a) const {
  if (a.n() != n()) return false;
  for (const Rat& c : mat_apply(lattice_, a.x))
    if (!is_integer(c)) return false;
  return true;
}

void FinAbGroup::require_member(const AbElement& a) const {
  if (!contains(a))
    throw ValidationError("element (" + orbidual::to_string(a) + ") is not in the group");
}

AbElement FinAbGroup::from_canonical_coords(const std::vector<Int>& y) const {
  if (static_cast<int>(y.size()) != n()) throw ValidationError("coordinate arity mismatch");
  std::vector<Int> u = mat_apply_int(snf_u_inv_, y);
  std::vector<Rat> a(n());
  for (int i = 0; i < n(); ++i) {
    Rat s = 0;
    for (int j = 0; j < n(); ++j)
      if (lat_inv_.num.at(i, j) != 0) s += Rat(lat_inv_.num.at(i, j) * u[j]);
    a[i] = s / Rat(lat_inv_.den);
  }
  return AbElement(std::move(a));
}

std::vector<Int> FinAbGroup::canonical_coords(const AbElement& a) const {
  require_member(a);
  std::vector<Int> u(n());
  std::vector<Rat> la = mat_apply(lattice_, a.x);
  for (int i = 0; i < n(); ++i) u[i] = rat_num(la[i]);
  std::vector<Int> y = mat_apply_int(snf_.u, u);
  for (int i = 0; i < n(); ++i) {
    y[i] %= snf_.d[i];
    if (y[i] < 0) y[i] += snf_.d[i];
  }
  return y;
}

std::vector<AbElement> FinAbGroup::elements() const {
  if (order_ > 2000000) throw CapExceeded("group too large to enumerate");
  std::vector<AbElement> out;
  out.reserve(static_cast<size_t>(order_));
  std::vector<Int> y(n(), Int(0));
  while (true) {
    out.push_back(from_canonical_coords(y));
    int i = n() - 1;
    while (i >= 0) {
      ++y[i];
      if (y[i] < snf_.d[i]) break;
      y[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AbElement> FinAbGroup::generators() const {
  std::vector<AbElement> gens;
  for (int i = 0; i < n(); ++i) {
    if (snf_.d[i] == 1) continue;
    std::vector<Int> y(n(), Int(0));
    y[i] = 1;
    gens.push_back(from_canonical_coords(y));
  }
  return gens;
}

Int FinAbGroup::element_order(const AbElement& a) const {
  std::vector<Int> y = canonical_coords(a);
  Int ord = 1;
  for (int i = 0; i < n(); ++i) {
    Int g = boost::integer::gcd(y[i], snf_.d[i]);
    ord = boost::integer::lcm(ord, snf_.d[i] / g);
  }
  return ord;
}

bool FinAbGroup::preserved_by(const Perm& s) const {
  if (s.n() != n()) return false;
  return frac_mul(frac_of(mul(lattice_, perm_matrix(s))), lat_inv_).is_integral();
}

AbSubgroup::AbSubgroup(const FinAbGroup& parent, IMat m) : parent_(parent), m_(hnf(m)) {
  // Validate Z^n >= M >= L: M integral by construction; M^-1 L integral.
  FracMat check = frac_mul(inverse(m_), frac_of(parent_.lattice()));
  if (!check.is_integral())
    throw ValidationError("subgroup basis does not contain the group lattice");
}

Int AbSubgroup::order() const {
  Int dm = det(m_);
  if (dm < 0) dm = -dm;
  return parent_.order() / dm;
}

bool AbSubgroup::contains(const AbElement& a) const {
  if (!parent_.contains(a)) return false;
  for (const Rat& c : frac_apply(frac_mul(inverse(m_), frac_of(parent_.lattice())), a.x))
    if (!is_integer(c)) return false;
  return true;
}

std::vector<AbElement> AbSubgroup::elements() const {
  IMat c = frac_mul(inverse(m_), frac_of(parent_.lattice())).to_imat();
  SnfResult s = snf(c);
  IMat uinv = inverse(s.u).to_imat();
  FracMat lm = frac_mul(inverse(parent_.lattice()), frac_of(m_));  // L^-1 M
  std::vector<AbElement> out;
  std::vector<Int> y(parent_.n(), Int(0));
  while (true) {
    std::vector<Int> w = mat_apply_int(uinv, y);
    std::vector<Rat> wr(w.size());
    for (size_t i = 0; i < w.size(); ++i) wr[i] = Rat(w[i]);
    out.push_back(AbElement(frac_apply(lm, wr)));
    int i = parent_.n() - 1;
    while (i >= 0) {
      ++y[i];
      if (y[i] < s.d[i]) break;
      y[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AbElement> AbSubgroup::generators() const {
  IMat c = frac_mul(inverse(m_), frac_of(parent_.lattice())).to_imat();
  SnfResult s = snf(c);
  IMat uinv = inverse(s.u).to_imat();
  FracMat lm = frac_mul(inverse(parent_.lattice()), frac_of(m_));
  std::vector<AbElement> gens;
  for (int i = 0; i < parent_.n(); ++i) {
    if (s.d[i] == 1) continue;
    std::vector<Int> y(parent_.n(), Int(0));
    y[i] = 1;
    std::vector<Int> w = mat_apply_int(uinv, y);
    std::vector<Rat> wr(w.size());
    for (size_t j = 0; j < w.size(); ++j) wr[j] = Rat(w[j]);
    gens.push_back(AbElement(frac_apply(lm, wr)));
  }
  return gens;
}

bool AbSubgroup::operator==(const AbSubgroup& o) const {
  return parent_.lattice() == o.parent_.lattice() && m_ == o.m_;
}

bool AbSubgroup::operator<(const AbSubgroup& o) const {
  Int a = order(), b = o.order();
  if (a != b) return a < b;
  return m_ < o.m_;
}

AbSubgroup trivial_subgroup(const FinAbGroup& g) { return AbSubgroup(g, g.lattice()); }

AbSubgroup full_subgroup(const FinAbGroup& g) { return AbSubgroup(g, IMat::identity(g.n())); }

AbSubgroup subgroup_generated(const FinAbGroup& g, const std::vector<AbElement>& gens) {
  IMat cols = g.lattice();
  for (const AbElement& a : gens) {
    g.require_member(a);
    std::vector<Rat> la = mat_apply(g.lattice(), a.x);
    IMat col(g.n(), 1);
    for (int i = 0; i < g.n(); ++i) col.at(i, 0) = rat_num(la[i]);
    cols = hconcat(cols, col);
  }
  return AbSubgroup(g, hnf(cols));
}

AbSubgroup subgroup_sum(const AbSubgroup& a, const AbSubgroup& b) {
  if (!(a.parent().lattice() == b.parent().lattice()))
    throw ValidationError("subgroup_sum: different parent groups");
  return AbSubgroup(a.parent(), hnf(hconcat(a.basis(), b.basis())));
}

namespace {

// Subgroup {a in A(L) : W_i a integral for all i} from stacked integer
// condition matrices; the rows of L are implicitly included.
AbSubgroup subgroup_from_conditions(const FinAbGroup& g, const std::vector<IMat>& conds) {
  IMat cols = transpose(g.lattice());
  for (const IMat& w : conds) cols = hconcat(cols, transpose(w));
  IMat b = hnf(cols);
  // Coordinate lattice is B^-T Z^n; quotient-side basis M = L B^-T.
  FracMat binv = inverse(b);
  FracMat m = frac_mul(frac_of(g.lattice()), FracMat{transpose(binv.num), binv.den});
  return AbSubgroup(g, hnf(m.to_imat()));
}

}  // namespace

AbSubgroup subgroup_intersection(const AbSubgroup& a, const AbSubgroup& b) {
  if (!(a.parent().lattice() == b.parent().lattice()))
    throw ValidationError("subgroup_intersection: different parent groups");
  const FinAbGroup& g = a.parent();
  IMat wa = frac_mul(inverse(a.basis()), frac_of(g.lattice())).to_imat();
  IMat wb = frac_mul(inverse(b.basis()), frac_of(g.lattice())).to_imat();
  return subgroup_from_conditions(g, {wa, wb});
}

Int intersection_order(const AbSubgroup& a, const AbSubgroup& b) {
  const FinAbGroup& g = a.parent();
  IMat wa = frac_mul(inverse(a.basis()), frac_of(g.lattice())).to_imat();
  IMat wb = frac_mul(inverse(b.basis()), frac_of(g.lattice())).to_imat();
  Int d = det(hnf(hconcat(transpose(wa), transpose(wb))));
  return d < 0 ? Int(-d) : d;
}

AbSubgroup dual_subgroup(const AbSubgroup& k) {
  const FinAbGroup& g = k.parent();
  IMat w = frac_mul(inverse(k.basis()), frac_of(g.lattice())).to_imat();  // M^-1 L
  return AbSubgroup(g.dual(), hnf(transpose(w)));
}

Rat pairing(const FinAbGroup& g, const AbElement& a, const AbElement& b) {
  g.require_member(a);
  g.dual().require_member(b);
  std::vector<Rat> la = mat_apply(g.lattice(), a.x);
  Rat s = 0;
  for (int i = 0; i < g.n(); ++i) s += la[i] * b.x[i];
  return mod1(s);
}

bool subgroup_invariant(const AbSubgroup& k, const Perm& s) {
  for (const AbElement& g : k.generators())
    if (!k.contains(perm_act(s, g))) return false;
  return true;
}

namespace {

void enumerate_rows(const FinAbGroup& g, const std::vector<Int>& divisors, int row,
                    IMat& m, std::vector<std::vector<Int>>& xrows,
                    std::vector<IMat>& out, long long max_subgroups) {
  int n = g.n();
  if (row == n) {
    out.push_back(m);
    if (static_cast<long long>(out.size()) > max_subgroups)
      throw CapExceeded("subgroup enumeration exceeds max_subgroups");
    return;
  }
  // Diagonal delta ranges over divisors of the group exponent; off-diagonal
  // entries m[row][j] over [0, delta) for j < row.  Prune with the
  // integrality of row `row` of X = M^-1 L, computed by forward
  // substitution: X_row = (L_row - sum_j m[row][j] X_j) / delta.
  std::vector<Int> base(n);
  for (int j = 0; j < n; ++j) base[j] = g.lattice().at(row, j);
  for (const Int& delta : divisors) {
    std::function<void(int, const std::vector<Int>&)> rec =
        [&](int j, const std::vector<Int>& acc) {
          if (j == row) {
            std::vector<Int> xr(n);
            for (int c = 0; c < n; ++c) {
              if (acc[c] % delta != 0) return;
              xr[c] = acc[c] / delta;
            }
            m.at(row, row) = delta;
            xrows.push_back(xr);
            enumerate_rows(g, divisors, row + 1, m, xrows, out, max_subgroups);
            xrows.pop_back();
            return;
          }
          for (Int v = 0; v < delta; ++v) {
            m.at(row, j) = v;
            std::vector<Int> next(n);
            for (int c = 0; c < n; ++c) next[c] = acc[c] - v * xrows[j][c];
            rec(j + 1, next);
          }
          m.at(row, j) = 0;
        };
    rec(0, base);
  }
}

}  // namespace

std::vector<AbSubgroup> enumerate_subgroups(const FinAbGroup& g, const std::vector<Perm>& s_action,
                                            const EnumerationCaps& caps) {
  if (g.order() > caps.max_order)
    throw CapExceeded("group order " + g.order().str() + " exceeds cap " + caps.max_order.str());
  std::vector<Int> divisors;
  for (Int d = 1; d * d <= g.exponent(); ++d) {
    if (g.exponent() % d == 0) {
      divisors.push_back(d);
      if (d * d != g.exponent()) divisors.push_back(g.exponent() / d);
    }
  }
  std::sort(divisors.begin(), divisors.end());

  IMat m(g.n(), g.n());
  std::vector<std::vector<Int>> xrows;
  std::vector<IMat> bases;
  enumerate_rows(g, divisors, 0, m, xrows, bases, caps.max_subgroups);

  std::vector<AbSubgroup> out;
  out.reserve(bases.size());
  for (const IMat& b : bases) {
    AbSubgroup k(g, b);
    bool keep = true;
    for (const Perm& s : s_action)
      if (!subgroup_invariant(k, s)) { keep = false; break; }
    if (keep) out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

AbHom::AbHom(const FinAbGroup& dom, const FinAbGroup& cod, IMat phi)
    : dom_(dom), cod_(cod), phi_(std::move(phi)) {
  if (phi_.rows != cod_.n() || phi_.cols != dom_.n())
    throw ValidationError("homomorphism matrix shape mismatch");
  FracMat t = frac_mul(frac_of(mul(cod_.lattice(), phi_)), inverse(dom_.lattice()));
  if (!t.is_integral())
    throw ValidationError("matrix does not define a homomorphism of the lattice quotients");
}

AbElement AbHom::apply(const AbElement& a) const {
  dom_.require_member(a);
  return AbElement(mat_apply(phi_, a.x));
}

AbHom a_delta(const FinAbGroup& g, const Perm& s) {
  if (!g.preserved_by(s))
    throw ValidationError("permutation does not preserve the group");
  IMat phi = IMat::identity(g.n());
  IMat p = perm_matrix(s);
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) phi.at(i, j) -= p.at(i, j);
  return AbHom(g, g, std::move(phi));
}

AbHom dual_hom(const AbHom& h) {
  IMat t = frac_mul(frac_of(mul(h.cod().lattice(), h.matrix())), inverse(h.dom().lattice())).to_imat();
  return AbHom(h.cod().dual(), h.dom().dual(), transpose(t));
}

AbSubgroup image_of(const AbHom& h, const AbSubgroup& k) {
  if (!(k.parent().lattice() == h.dom().lattice()))
    throw ValidationError("image_of: subgroup not in the domain");
  IMat t = frac_mul(frac_of(mul(h.cod().lattice(), h.matrix())), inverse(h.dom().lattice())).to_imat();
  return AbSubgroup(h.cod(), hnf(hconcat(mul(t, k.basis()), h.cod().lattice())));
}

AbSubgroup preimage_of(const AbHom& h, const AbSubgroup& k) {
  if (!(k.parent().lattice() == h.cod().lattice()))
    throw ValidationError("preimage_of: subgroup not in the codomain");
  IMat w = frac_mul(inverse(k.basis()), frac_of(mul(h.cod().lattice(), h.matrix()))).to_imat();
  return subgroup_from_conditions(h.dom(), {w});
}

AbSubgroup kernel_of(const AbHom& h) {
  return preimage_of(h, trivial_subgroup(h.cod()));
}

}  // namespace orbidual
