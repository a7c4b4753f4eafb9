#include "orbidual/poly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace orbidual {

IMat InvertiblePolynomial::exponent_matrix() const {
  IMat e(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e.at(i, j) = monomials[i].exponents[j];
  return e;
}

namespace {

struct Tokenizer {
  const std::string& s;
  size_t p = 0;

  explicit Tokenizer(const std::string& text) : s(text) {}

  void skip_ws() { while (p < s.size() && isspace(static_cast<unsigned char>(s[p]))) ++p; }
  bool eof() { skip_ws(); return p >= s.size(); }
  char peek() { skip_ws(); return p < s.size() ? s[p] : '\0'; }
  char take() { skip_ws(); return s[p++]; }

  Int take_posint() {
    skip_ws();
    size_t start = p;
    while (p < s.size() && isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == start) throw ParseError("expected a positive integer", start);
    Int v(s.substr(start, p - start));
    if (v <= 0) throw ParseError("expected a positive integer", start);
    return v;
  }
};

// factor := 'x' posint ('^' posint)?  -> (variable index 1-based, exponent)
std::pair<Int, Int> parse_factor(Tokenizer& tz) {
  size_t at = tz.p;
  char c = tz.peek();
  if (c != 'x') throw ParseError("expected a variable like x1", at);
  tz.take();
  Int var = tz.take_posint();
  Int exp = 1;
  if (tz.peek() == '^') {
    tz.take();
    exp = tz.take_posint();
  }
  return {var, exp};
}

}  // namespace

InvertiblePolynomial parse_polynomial(const std::string& text) {
  Tokenizer tz(text);
  std::vector<std::map<Int, Int>> terms;  // var (1-based) -> exponent
  if (tz.eof()) throw ParseError("empty polynomial", 0);
  while (true) {
    std::map<Int, Int> term;
    while (true) {
      auto [var, exp] = parse_factor(tz);
      term[var] += exp;
      if (tz.peek() == '*') { tz.take(); continue; }
      break;
    }
    terms.push_back(std::move(term));
    if (tz.peek() == '+') { tz.take(); continue; }
    break;
  }
  if (!tz.eof()) throw ParseError("unexpected trailing input", tz.p);

  Int maxvar = 0;
  for (const auto& t : terms)
    for (const auto& [v, e] : t) maxvar = std::max(maxvar, v);
  if (maxvar > 64) throw ParseError("too many variables (limit 64)", 0);
  int n = static_cast<int>(maxvar);

  InvertiblePolynomial f;
  f.n = n;
  for (const auto& t : terms) {
    Monomial m;
    m.exponents.assign(n, Int(0));
    for (const auto& [v, e] : t) m.exponents[static_cast<int>(v) - 1] = e;
    f.monomials.push_back(std::move(m));
  }
  validate_polynomial(f);
  return f;
}

void validate_polynomial(const InvertiblePolynomial& f) {
  int n = f.n;
  if (n <= 0) throw ValidationError("polynomial has no variables");
  if (static_cast<int>(f.monomials.size()) != n)
    throw ValidationError("number of monomials (" + std::to_string(f.monomials.size()) +
                          ") differs from number of variables (" + std::to_string(n) + ")");
  std::vector<bool> used(n, false);
  for (const auto& m : f.monomials) {
    if (static_cast<int>(m.exponents.size()) != n) throw ValidationError("monomial arity mismatch");
    for (int j = 0; j < n; ++j) {
      if (m.exponents[j] < 0) throw ValidationError("negative exponent");
      if (m.exponents[j] > 0) used[j] = true;
    }
  }
  for (int j = 0; j < n; ++j)
    if (!used[j])
      throw ValidationError("variable x" + std::to_string(j + 1) + " does not occur (gaps are rejected)");
  if (det(f.exponent_matrix()) == 0)
    throw ValidationError("exponent matrix is singular");
  classify_atoms(f);  // throws if not an atomic sum in normal form
}

std::vector<Atom> classify_atoms(const InvertiblePolynomial& f) {
  int n = f.n;
  // head[i]: the variable with exponent >= 2 in monomial i; succ[i]: the
  // variable with exponent exactly 1, or -1 for a chain end.
  std::vector<int> head(n, -1), succ(n, -1);
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<int, Int>> nz;
    for (int j = 0; j < n; ++j)
      if (f.monomials[i].exponents[j] != 0) nz.push_back({j, f.monomials[i].exponents[j]});
    if (nz.size() == 1) {
      if (nz[0].second < 2)
        throw ValidationError("monomial " + std::to_string(i + 1) + " has exponent < 2");
      head[i] = nz[0].first;
    } else if (nz.size() == 2) {
      int h = -1, s = -1;
      if (nz[0].second >= 2 && nz[1].second == 1) { h = nz[0].first; s = nz[1].first; }
      else if (nz[1].second >= 2 && nz[0].second == 1) { h = nz[1].first; s = nz[0].first; }
      else
        throw ValidationError("monomial " + std::to_string(i + 1) +
                              " is not of the shape x_i^p * x_j with p >= 2");
      head[i] = h;
      succ[i] = s;
    } else {
      throw ValidationError("monomial " + std::to_string(i + 1) + " involves more than two variables");
    }
  }
  // Heads must be a bijection monomials <-> variables.
  std::vector<int> mono_of_head(n, -1);
  for (int i = 0; i < n; ++i) {
    if (mono_of_head[head[i]] != -1)
      throw ValidationError("variable x" + std::to_string(head[i] + 1) +
                            " heads two monomials; not an atomic sum");
    mono_of_head[head[i]] = i;
  }
  // next[v]: successor variable of v in its atom; in-degree at most 1.
  std::vector<int> next(n, -1), indeg(n, 0);
  for (int v = 0; v < n; ++v) {
    int i = mono_of_head[v];
    if (succ[i] >= 0) {
      if (succ[i] == v)
        throw ValidationError("monomial " + std::to_string(i + 1) + " links a variable to itself");
      next[v] = succ[i];
      indeg[succ[i]]++;
    }
  }
  for (int v = 0; v < n; ++v)
    if (indeg[v] > 1)
      throw ValidationError("variable x" + std::to_string(v + 1) +
                            " is shared by two atoms; not an atomic sum");

  std::vector<Atom> atoms;
  std::vector<bool> visited(n, false);
  // Chains: start from variables with in-degree 0.
  for (int v = 0; v < n; ++v) {
    if (indeg[v] != 0) continue;
    Atom a;
    a.is_loop = false;
    for (int w = v; w != -1; w = next[w]) {
      if (visited[w]) throw ValidationError("malformed atom structure");
      visited[w] = true;
      a.variables.push_back(w);
      a.exponents.push_back(f.monomials[mono_of_head[w]].exponents[w]);
    }
    atoms.push_back(std::move(a));
  }
  // Remaining variables lie on cycles: loops.
  for (int v = 0; v < n; ++v) {
    if (visited[v]) continue;
    Atom a;
    a.is_loop = true;
    int w = v;
    do {
      if (w == -1) throw ValidationError("malformed atom structure");
      visited[w] = true;
      a.variables.push_back(w);
      a.exponents.push_back(f.monomials[mono_of_head[w]].exponents[w]);
      w = next[w];
    } while (w != v);
    if (a.variables.size() < 2) throw ValidationError("loop of length 1 is not allowed");
    atoms.push_back(std::move(a));
  }
  std::sort(atoms.begin(), atoms.end(), [](const Atom& x, const Atom& y) {
    return *std::min_element(x.variables.begin(), x.variables.end()) <
           *std::min_element(y.variables.begin(), y.variables.end());
  });
  return atoms;
}

InvertiblePolynomial transpose(const InvertiblePolynomial& f) {
  InvertiblePolynomial t;
  t.n = f.n;
  for (int i = 0; i < f.n; ++i) {
    Monomial m;
    m.exponents.assign(f.n, Int(0));
    for (int j = 0; j < f.n; ++j) m.exponents[j] = f.monomials[j].exponents[i];
    t.monomials.push_back(std::move(m));
  }
  validate_polynomial(t);
  return t;
}

std::vector<Rat> weights(const InvertiblePolynomial& f) {
  FracMat inv = inverse(f.exponent_matrix());
  std::vector<Rat> ones(f.n, Rat(1));
  return frac_apply(inv, ones);
}

InvertiblePolynomial build_periodic_loop(const std::vector<Int>& p, int k) {
  int l = static_cast<int>(p.size());
  if (l < 1 || k < 1) throw ValidationError("periodic loop needs l >= 1 and k >= 1");
  int n = k * l;
  if (n < 2) throw ValidationError("a loop needs at least 2 variables (k*l >= 2)");
  for (const Int& pi : p)
    if (pi < 2) throw ValidationError("loop exponents must be >= 2");
  InvertiblePolynomial f;
  f.n = n;
  for (int i = 0; i < n; ++i) {
    Monomial m;
    m.exponents.assign(n, Int(0));
    m.exponents[i] = p[i % l];
    m.exponents[(i + 1) % n] += 1;
    f.monomials.push_back(std::move(m));
  }
  validate_polynomial(f);
  return f;
}

bool check_invariance(const InvertiblePolynomial& f, const Perm& s) {
  if (s.n() != f.n) throw ValidationError("permutation degree differs from variable count");
  std::multiset<std::vector<Int>> rows, permuted;
  for (const auto& m : f.monomials) {
    rows.insert(m.exponents);
    permuted.insert(perm_apply(s, m.exponents));
  }
  return rows == permuted;
}

Perm row_permutation(const InvertiblePolynomial& f, const Perm& s) {
  if (!check_invariance(f, s)) throw ValidationError("polynomial is not invariant under the permutation");
  std::map<std::vector<Int>, int> row_index;
  for (int i = 0; i < f.n; ++i) {
    if (row_index.count(f.monomials[i].exponents))
      throw ValidationError("duplicate monomials");
    row_index[f.monomials[i].exponents] = i;
  }
  std::vector<int> img(f.n);
  for (int i = 0; i < f.n; ++i)
    img[i] = row_index.at(perm_apply(s, f.monomials[i].exponents));
  return Perm(std::move(img));
}

std::string to_string(const InvertiblePolynomial& f) {
  std::ostringstream os;
  for (int i = 0; i < f.n; ++i) {
    if (i) os << " + ";
    bool first = true;
    for (int j = 0; j < f.n; ++j) {
      const Int& e = f.monomials[i].exponents[j];
      if (e == 0) continue;
      if (!first) os << "*";
      os << "x" << (j + 1);
      if (e > 1) os << "^" << e.str();
      first = false;
    }
  }
  return os.str();
}

std::string to_string(const Atom& a) {
  std::ostringstream os;
  os << (a.is_loop ? "loop(" : "chain(");
  for (size_t i = 0; i < a.exponents.size(); ++i) {
    if (i) os << ",";
    os << a.exponents[i].str();
  }
  os << ") on (";
  for (size_t i = 0; i < a.variables.size(); ++i) {
    if (i) os << ",";
    os << "x" << (a.variables[i] + 1);
  }
  os << ")";
  return os.str();
}

}  // namespace orbidual
