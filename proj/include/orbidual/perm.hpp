#pragma once

// Permutations of {0,...,n-1}.  Text form uses 1-based cycle notation,
// e.g. "(1 2 3)(4 5)".  A permutation acts on coordinate vectors by
// (s . v)[i] = v[s^-1(i)], i.e. it moves the value at slot i to slot s(i).

#include <string>
#include <vector>

#include "orbidual/numeric.hpp"

namespace orbidual {

struct Perm {
  std::vector<int> img;  // img[i] = s(i)

  Perm() = default;
  explicit Perm(int n) : img(n) { for (int i = 0; i < n; ++i) img[i] = i; }
  explicit Perm(std::vector<int> v) : img(std::move(v)) {}

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i]; }
  bool is_identity() const;

  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }
};

Perm compose(const Perm& s, const Perm& t);  // (s*t)(i) = s(t(i))
Perm inverse(const Perm& s);
int perm_order(const Perm& s);
int perm_sign(const Perm& s);  // +1 or -1
int orbit_count(const std::vector<Perm>& gens, int n);

// Parse 1-based cycle notation; "()" or "e" denotes the identity.
Perm parse_cycles(const std::string& text, int n);
std::string to_cycles(const Perm& s);  // 1-based

// Coordinate action: result[i] = v[s^-1(i)].
template <typename T>
std::vector<T> perm_apply(const Perm& s, const std::vector<T>& v) {
  std::vector<T> r(v.size());
  for (int i = 0; i < s.n(); ++i) r[s(i)] = v[i];
  return r;
}

}  // namespace orbidual
