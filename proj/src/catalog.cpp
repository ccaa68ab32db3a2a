#include "cremona/catalog.hpp"

#include <algorithm>
#include <map>

namespace cremona {

std::string to_string(ConditionKind k) {
  switch (k) {
    case ConditionKind::InfinitelyNear: return "InfinitelyNear";
    case ConditionKind::Collinear3: return "Collinear3";
    case ConditionKind::Conic6: return "Conic6";
    case ConditionKind::Cubic8Singular: return "Cubic8Singular";
    case ConditionKind::Quartic10Triple: return "Quartic10Triple";
    case ConditionKind::Other: return "Other";
  }
  return "Other";
}

ConditionKind condition_kind(const LatticeVector& r) {
  std::vector<long> m;
  for (int i = 1; i <= r.n(); ++i) {
    long mi = -r[i].get_si();
    if (mi != 0) m.push_back(mi);
  }
  std::sort(m.rbegin(), m.rend());
  auto shape = [&](std::vector<long> want) { return m == want; };
  const long d = r[0].get_si();
  if (d == 0) return ConditionKind::InfinitelyNear;
  if (d == 1 && shape({1, 1, 1})) return ConditionKind::Collinear3;
  if (d == 2 && shape(std::vector<long>(6, 1))) return ConditionKind::Conic6;
  if (d == 3) {
    std::vector<long> want(8, 1);
    want[0] = 2;
    if (shape(want)) return ConditionKind::Cubic8Singular;
  }
  if (d == 4) {
    std::vector<long> want(10, 1);
    want[0] = 3;
    if (shape(want)) return ConditionKind::Quartic10Triple;
  }
  return ConditionKind::Other;
}

std::vector<int> residue_mod2(const LatticeVector& v) {
  auto c = root_coordinates(v);
  std::vector<int> r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = mpz_odd_p(c[i].get_mpz_t()) ? 1 : 0;
  return r;
}

std::string residue_mod2_string(const LatticeVector& v) {
  std::string s;
  for (int b : residue_mod2(v)) s += static_cast<char>('0' + b);
  return s;
}

namespace {

long isqrt(long x) {
  long r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

struct MultisetSearch {
  int n;
  long sum_target, sq_target, lower;
  std::vector<long> current;
  std::vector<std::vector<long>> found;
  const CancelCheck* cancel;
  long polls = 0;

  void run(long cap, long sum, long sq) {
    if (cancel && *cancel && ++polls % kCancelPollInterval == 0 && (*cancel)()) throw Cancelled();
    const long k = n - static_cast<long>(current.size());
    const long rem_sum = sum_target - sum, rem_sq = sq_target - sq;
    if (k == 0) {
      if (rem_sum == 0 && rem_sq == 0) found.push_back(current);
      return;
    }
    if (rem_sq < 0) return;
    if (rem_sum > k * cap || rem_sum < k * lower) return;
    if (rem_sum * rem_sum > k * rem_sq) return;  // Cauchy-Schwarz
    for (long v = cap; v >= lower; --v) {
      if (v * v > rem_sq) continue;
      current.push_back(v);
      run(v, sum + v, sq + v * v);
      current.pop_back();
    }
  }
};

}  // namespace

std::vector<LatticeVector> enumerate_roots(int n, int max_degree, const CancelCheck& cancel) {
  if (n < 3) throw ArgumentError("n must be >= 3");
  if (max_degree < 0) throw ArgumentError("max_degree must be >= 0");
  std::vector<LatticeVector> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(LatticeVector::basis(n, i) - LatticeVector::basis(n, j));

  for (long d = 1; d <= max_degree; ++d) {
    const long bound = isqrt(d * d + 2);
    MultisetSearch search{n, 3 * d, d * d + 2, -bound, {}, {}, &cancel};
    search.run(bound, 0, 0);
    for (auto& ms : search.found) {
      // Multiplicities above the degree only occur in degree 0.
      if (ms.front() > d) throw std::logic_error("root with multiplicity above its degree");
      std::sort(ms.begin(), ms.end());
      do {
        std::vector<Integer> c(n + 1);
        c[0] = d;
        for (int i = 0; i < n; ++i) c[i + 1] = -ms[i];
        out.emplace_back(std::move(c));
      } while (std::next_permutation(ms.begin(), ms.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClassFamily> coble_conditions() {
  const int n = 10;
  const LatticeVector e0 = LatticeVector::basis(n, 0);
  auto e = [&](int i) { return LatticeVector::basis(n, i); };
  LatticeVector sum_all = LatticeVector::zero(n);
  for (int i = 1; i <= n; ++i) sum_all = sum_all + e(i);

  std::vector<LatticeVector> classes;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) classes.push_back(e(i) - e(j));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) classes.push_back(e0 - e(i) - e(j) - e(k));
  // Conics through six points and cubics through eight, one of them double.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != 6) continue;
    LatticeVector c = 2 * e0;
    for (int i = 1; i <= n; ++i)
      if (mask >> (i - 1) & 1) c = c - e(i);
    classes.push_back(c);
  }
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != 8) continue;
    LatticeVector base = 3 * e0;
    for (int i = 1; i <= n; ++i)
      if (mask >> (i - 1) & 1) base = base - e(i);
    for (int i = 1; i <= n; ++i)
      if (mask >> (i - 1) & 1) classes.push_back(base - e(i));
  }
  for (int i = 1; i <= n; ++i) classes.push_back(4 * e0 - sum_all - 2 * e(i));

  std::vector<ClassFamily> families;
  std::map<std::vector<int>, std::size_t> by_residue;
  for (const auto& c : classes) {
    auto res = residue_mod2(c);
    auto [it, inserted] = by_residue.try_emplace(res, families.size());
    if (inserted) {
      ClassFamily f{condition_kind(c), {}, {}, res};
      for (int i = 1; i <= n; ++i)
        if (mpz_odd_p(c[i].get_mpz_t())) f.index_set.push_back(i);
      families.push_back(std::move(f));
    }
    families[it->second].representatives.push_back(c);
  }
  return families;
}

ResidueCounts residue_counts_mod2() {
  const int n = 10;
  auto g = gram_matrix(n);
  ResidueCounts out;
  for (unsigned x = 0; x < (1u << n); ++x) {
    long q = 0;
    for (int i = 0; i < n; ++i) {
      if (!(x >> i & 1)) continue;
      q += g[i][i] / 2;
      for (int j = i + 1; j < n; ++j)
        if (x >> j & 1) q += g[i][j];
    }
    if (((q % 2) + 2) % 2 == 0)
      ++out.isotropic;
    else
      ++out.norm_one;
  }
  return out;
}

std::vector<LatticeVector> halphen_prohibited_classes(int m) {
  if (m < 1) throw ArgumentError("Halphen index must be >= 1");
  const int n = 9;
  const LatticeVector k = canonical_vector(n);
  auto e = [&](int i) { return LatticeVector::basis(n, i); };
  std::vector<LatticeVector> out;
  for (long d = 0; 2 * d <= m; ++d)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) out.push_back(-d * k + e(i) - e(j));
  for (int sign : {1, -1})
    for (long d = 0;; ++d) {
      const long t = 2 * (3 * d + sign);
      if (t > 3 * m) break;
      if (t < 0) continue;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int l = j + 1; l <= n; ++l) out.push_back(-d * k + sign * (e(0) - e(i) - e(j) - e(l)));
    }
  return out;
}

namespace {

std::string csv_row(ConditionKind label, const LatticeVector& c) {
  std::string row = to_string(label) + "," + c[0].get_str();
  for (int i = 1; i <= c.n(); ++i) row += "," + Integer(-c[i]).get_str();
  std::string res;
  if (c.n() >= 3 && inner(c, canonical_vector(c.n())) == 0) res = residue_mod2_string(c);
  return row + "," + res + "\n";
}

std::string csv_header(int n) {
  std::string h = "label,degree";
  for (int i = 1; i <= n; ++i) h += ",m" + std::to_string(i);
  return h + ",residue_mod2\n";
}

}  // namespace

std::string catalog_csv(const std::vector<LatticeVector>& classes) {
  if (classes.empty()) return "label,degree,residue_mod2\n";
  std::string out = csv_header(classes.front().n());
  for (const auto& c : classes) out += csv_row(condition_kind(c), c);
  return out;
}

std::string catalog_csv(const std::vector<ClassFamily>& families) {
  std::string out = csv_header(10);
  for (const auto& f : families)
    for (const auto& c : f.representatives) out += csv_row(f.label, c);
  return out;
}

}  // namespace cremona
