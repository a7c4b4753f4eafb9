#include "orbidual/perm.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace orbidual {

bool Perm::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img[i] != i) return false;
  return true;
}

Perm compose(const Perm& s, const Perm& t) {
  if (s.n() != t.n()) throw ValidationError("permutation degree mismatch");
  std::vector<int> r(s.n());
  for (int i = 0; i < s.n(); ++i) r[i] = s(t(i));
  return Perm(std::move(r));
}

Perm inverse(const Perm& s) {
  std::vector<int> r(s.n());
  for (int i = 0; i < s.n(); ++i) r[s(i)] = i;
  return Perm(std::move(r));
}

int perm_order(const Perm& s) {
  int ord = 1;
  Perm p = s;
  while (!p.is_identity()) {
    p = compose(p, s);
    ++ord;
    if (ord > 1000000) throw ArithmeticError("permutation order runaway");
  }
  return ord;
}

int perm_sign(const Perm& s) {
  std::vector<bool> seen(s.n(), false);
  int sign = 1;
  for (int i = 0; i < s.n(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = s(j)) { seen[j] = true; ++len; }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

int orbit_count(const std::vector<Perm>& gens, int n) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
    return x;
  };
  for (const Perm& g : gens) {
    if (g.n() != n) throw ValidationError("permutation degree mismatch in orbit_count");
    for (int i = 0; i < n; ++i) {
      int a = find(i), b = find(g(i));
      if (a != b) parent[a] = b;
    }
  }
  int cnt = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++cnt;
  return cnt;
}

Perm parse_cycles(const std::string& text, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(n, false);
  size_t p = 0;
  auto skip_ws = [&] { while (p < text.size() && (text[p] == ' ' || text[p] == '\t')) ++p; };
  skip_ws();
  if (p == text.size() || text.compare(p, 1, "e") == 0) {
    if (p < text.size()) {
      ++p;
      skip_ws();
      if (p != text.size()) throw ValidationError("trailing input after identity permutation");
    }
    return Perm(std::move(img));
  }
  while (p < text.size()) {
    skip_ws();
    if (p == text.size()) break;
    if (text[p] != '(') throw ValidationError("expected '(' in cycle notation at position " + std::to_string(p));
    ++p;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (p < text.size() && text[p] == ')') { ++p; break; }
      if (p < text.size() && text[p] == ',') { ++p; continue; }
      size_t start = p;
      while (p < text.size() && isdigit(static_cast<unsigned char>(text[p]))) ++p;
      if (p == start) throw ValidationError("expected symbol in cycle at position " + std::to_string(p));
      int v = std::stoi(text.substr(start, p - start));
      if (v < 1 || v > n) throw ValidationError("cycle symbol " + std::to_string(v) + " out of range 1.." + std::to_string(n));
      if (used[v - 1]) throw ValidationError("symbol " + std::to_string(v) + " repeated in cycle notation");
      used[v - 1] = true;
      cycle.push_back(v - 1);
    }
    if (cycle.empty()) continue;  // "()" = identity factor
    for (size_t i = 0; i < cycle.size(); ++i) img[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Perm(std::move(img));
}

std::string to_cycles(const Perm& s) {
  std::vector<bool> seen(s.n(), false);
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < s.n(); ++i) {
    if (seen[i] || s(i) == i) { seen[i] = true; continue; }
    any = true;
    os << "(";
    bool first = true;
    for (int j = i; !seen[j]; j = s(j)) {
      seen[j] = true;
      if (!first) os << " ";
      os << (j + 1);
      first = false;
    }
    os << ")";
  }
  return any ? os.str() : "e";
}

}  // namespace orbidual
