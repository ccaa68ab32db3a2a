#include "exact_linalg.hpp"

#include <map>
#include <mutex>

namespace cremona::detail {

std::vector<std::vector<mpz_class>> integer_kernel(const IntMatrix& m, std::size_t cols) {
  std::vector<std::vector<mpq_class>> a;
  for (const auto& row : m) {
    std::vector<mpq_class> r(cols);
    for (std::size_t c = 0; c < cols; ++c) r[c] = row[c];
    a.push_back(std::move(r));
  }
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    mpq_class inv = 1 / a[rank][c];
    for (auto& x : a[rank]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      mpq_class f = a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<mpz_class>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> x(cols);
    x[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = -a[r][free];
    mpz_class l = 1;
    for (const auto& q : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> v(cols);
    mpz_class g = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      mpq_class s = x[c] * l;
      v[c] = s.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[c].get_mpz_t());
    }
    if (g > 1)
      for (auto& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
    basis.push_back(std::move(v));
  }
  return basis;
}

mpz_class determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool divide_exact(const IntPoly& a_in, const IntPoly& b_in, IntPoly& quotient) {
  IntPoly a = a_in, b = b_in;
  trim(a);
  trim(b);
  if (b.empty()) return false;
  if (a.size() < b.size()) {
    quotient.clear();
    return a.empty();
  }
  quotient.assign(a.size() - b.size() + 1, 0);
  for (std::size_t i = quotient.size(); i-- > 0;) {
    const mpz_class& top = a[i + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_class q = top / b.back();
    quotient[i] = q;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q * b[j];
  }
  trim(a);
  trim(quotient);
  return a.empty();
}

IntPoly cyclotomic(unsigned k) {
  static std::mutex mu;
  static std::map<unsigned, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  IntPoly p(k + 1, 0);
  p[0] = -1;
  p[k] = 1;
  for (unsigned d = 1; d < k; ++d) {
    if (k % d) continue;
    IntPoly q;
    divide_exact(p, cyclotomic(d), q);
    p = q;
  }
  std::lock_guard lock(mu);
  cache[k] = p;
  return p;
}

}  // namespace cremona::detail
