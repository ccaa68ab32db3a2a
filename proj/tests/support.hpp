#pragma once

#include <random>
#include <vector>

#include "cremona/lattice.hpp"
#include "cremona/weyl.hpp"

namespace testing_support {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240917);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline cremona::LatticeVector random_vector(int n, long bound) {
  std::vector<cremona::Integer> c(n + 1);
  for (auto& x : c) x = uniform(-bound, bound);
  return cremona::LatticeVector(std::move(c));
}

inline cremona::WeylWord random_word(int n, int max_len) {
  cremona::WeylWord w;
  int len = static_cast<int>(uniform(0, max_len));
  for (int i = 0; i < len; ++i) w.letters.push_back(static_cast<int>(uniform(0, n - 1)));
  return w;
}

// Incidence matrix of the T_{2,3,n-3} diagram: a chain 1 - 2 - ... - (n-1)
// with node 0 attached to node 3.
inline std::vector<std::vector<long>> t_diagram(int n) {
  std::vector<std::vector<long>> g(n, std::vector<long>(n, 0));
  for (int i = 1; i + 1 < n; ++i) g[i][i + 1] = g[i + 1][i] = 1;
  g[0][3] = g[3][0] = 1;
  return g;
}

}  // namespace testing_support

#include <map>
#include <string>

#include "cremona/poly.hpp"

namespace testing_support {

// Monomials keyed by the exponent digits of x, y, z, e.g. "021" for y^2 z.
inline cremona::Form form_of(const cremona::Field& f, const std::map<std::string, long>& terms) {
  int d = 0;
  for (char ch : terms.begin()->first) d += ch - '0';
  cremona::Form out(f, d);
  for (const auto& [key, v] : terms) out.set(key[0] - '0', key[1] - '0', key[2] - '0', f.from_int(v));
  return out;
}

inline cremona::Point3 pt(const cremona::Field& f, long x, long y, long z) {
  return {f.from_int(x), f.from_int(y), f.from_int(z)};
}

}  // namespace testing_support
