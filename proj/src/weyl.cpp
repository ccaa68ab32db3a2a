#include "cremona/weyl.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "exact_linalg.hpp"

namespace cremona {

using detail::IntPoly;

WeylWord inverse(const WeylWord& w) {
  WeylWord r{w.letters};
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

WeylWord concat(const WeylWord& a, const WeylWord& b) {
  WeylWord r{a.letters};
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

LatticeVector reflect(const LatticeVector& alpha, const LatticeVector& v) {
  if (square(alpha) != -2) throw ArgumentError("reflection vector must have square -2");
  return v + inner(v, alpha) * alpha;
}

LatticeVector apply_simple_reflection(int i, const LatticeVector& v) {
  const int n = v.n();
  if (i < 0 || i >= n) throw ArgumentError("invalid letter " + std::to_string(i) + " for n = " + std::to_string(n));
  std::vector<Integer> c(v.coords().begin(), v.coords().end());
  if (i == 0) {
    // (v.alpha_0) = v0 + v1 + v2 + v3
    Integer t = c[0] + c[1] + c[2] + c[3];
    c[0] += t;
    c[1] -= t;
    c[2] -= t;
    c[3] -= t;
  } else {
    std::swap(c[i], c[i + 1]);
  }
  return LatticeVector(std::move(c));
}

LatticeVector apply_word(const WeylWord& w, const LatticeVector& v) {
  LatticeVector x = v;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) x = apply_simple_reflection(*it, x);
  return x;
}

LatticeIsometry reflection_matrix(const LatticeVector& alpha) {
  std::vector<LatticeVector> cols;
  for (int i = 0; i <= alpha.n(); ++i) cols.push_back(reflect(alpha, LatticeVector::basis(alpha.n(), i)));
  return LatticeIsometry::from_columns(cols);
}

LatticeIsometry word_to_isometry(const WeylWord& w, int n) {
  if (n < 3) throw ArgumentError("n must be >= 3");
  for (int l : w.letters)
    if (l < 0 || l >= n) throw ArgumentError("invalid letter " + std::to_string(l) + " for n = " + std::to_string(n));
  std::vector<LatticeVector> cols;
  for (int i = 0; i <= n; ++i) cols.push_back(apply_word(w, LatticeVector::basis(n, i)));
  return LatticeIsometry::from_columns(cols);
}

WeylWord isometry_to_word(const LatticeIsometry& g, std::size_t max_length) {
  const int n = g.n();
  if (n < 3) throw ArgumentError("n must be >= 3");
  // rho . alpha_i = 1 for every simple root
  std::vector<Integer> c(n + 1);
  c[0] = 3 * 2 + 3 * n - 5;
  for (int i = 1; i <= n; ++i) c[i] = -(2 + n - i);
  const LatticeVector rho(c);
  if (!g.preserves_form() || !g.fixes(canonical_vector(n)) || g.at(0, 0) <= 0)
    throw DomainError("isometry is not in the Weyl group");
  const auto roots = simple_roots(n);
  LatticeVector v = g.apply(rho);
  WeylWord w;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < n; ++i)
      if (inner(v, roots[i]) < 0) {
        if (w.size() >= max_length) throw InconclusiveError("word length exceeds the cap");
        v = apply_simple_reflection(i, v);
        w.letters.push_back(i);
        moved = true;
        break;
      }
  }
  if (!(word_to_isometry(w, n) == g)) throw DomainError("isometry is not in the Weyl group");
  return w;
}

namespace {

void require_nine(const LatticeVector& v, const char* what) {
  if (v.n() != 9) throw ArgumentError(std::string(what) + " lives in Z^{1,9}");
}

}  // namespace

LatticeVector iota(const LatticeVector& w, const LatticeVector& v) {
  require_nine(w, "iota parameter");
  require_nine(v, "iota argument");
  const LatticeVector k = canonical_vector(9);
  if (inner(w, k) != 0) throw ArgumentError("iota parameter is not orthogonal to k_9");
  const Integer vk = inner(v, k);
  const Integer ww = square(w);  // even on E_9
  const Integer coeff = inner(w, v) + vk * ww / 2;
  return v + vk * w - coeff * k;
}

LatticeIsometry iota_isometry(const LatticeVector& w) {
  std::vector<LatticeVector> cols;
  for (int i = 0; i <= 9; ++i) cols.push_back(iota(w, LatticeVector::basis(9, i)));
  return LatticeIsometry::from_columns(cols);
}

LatticeVector e8_vector(const std::vector<long>& coefficients) {
  if (coefficients.size() != 8) throw ArgumentError("E_8 vector needs 8 coefficients");
  LatticeVector w = LatticeVector::zero(9);
  for (int i = 0; i < 8; ++i) w = w + coefficients[i] * simple_root(9, i);
  return w;
}

LatticeIsometry translation_isometry(const LatticeVector& a, long m) {
  require_nine(a, "translation vector");
  if (m <= 0) throw ArgumentError("translation index m must be positive");
  const LatticeVector k = canonical_vector(9);
  if (inner(a, k) != 0) throw ArgumentError("translation vector is not orthogonal to k_9");
  const Integer mm = m;
  const Integer a2 = square(a);
  std::vector<LatticeVector> cols;
  for (int i = 0; i <= 9; ++i) {
    const LatticeVector d = LatticeVector::basis(9, i);
    const Integer dk = inner(d, k);
    const Integer c = mm * inner(d, a) - mm * mm * dk * a2 / 2;
    cols.push_back(d - (mm * dk) * a + c * k);
  }
  return LatticeIsometry::from_columns(cols);
}

std::string to_string(IsometryKind k) {
  switch (k) {
    case IsometryKind::Elliptic: return "elliptic";
    case IsometryKind::Parabolic: return "parabolic";
    case IsometryKind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

std::vector<Integer> characteristic_polynomial(const LatticeIsometry& g) {
  // Faddeev-LeVerrier; the divisions by k are exact over Z.
  const int d = g.dim();
  std::vector<Integer> c(d + 1);
  c[d] = 1;
  std::vector<Integer> m(static_cast<std::size_t>(d * d));  // M_0 = 0
  for (int k = 1; k <= d; ++k) {
    std::vector<Integer> next(static_cast<std::size_t>(d * d));
    for (int r = 0; r < d; ++r)
      for (int j = 0; j < d; ++j) {
        const Integer& x = g.at(r, j);
        if (x == 0) continue;
        for (int col = 0; col < d; ++col) next[r * d + col] += x * m[j * d + col];
      }
    for (int r = 0; r < d; ++r) next[r * d + r] += c[d - k + 1];
    // c_{d-k} = -tr(g M_k) / k
    Integer tr = 0;
    for (int r = 0; r < d; ++r)
      for (int j = 0; j < d; ++j) tr += g.at(r, j) * next[j * d + r];
    Integer q = -tr;
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k));
    c[d - k] = q;
    m = std::move(next);
  }
  return c;
}

double spectral_radius(const LatticeIsometry& g) {
  const int d = g.dim();
  Eigen::MatrixXd a(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) a(r, c) = g.at(r, c).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
  double best = 0;
  for (int i = 0; i < d; ++i) best = std::max(best, std::abs(es.eigenvalues()[i]));
  return best;
}

namespace {

mpq_class evaluate(const IntPoly& p, const mpq_class& x) {
  mpq_class s = 0;
  for (std::size_t i = p.size(); i-- > 0;) s = s * x + p[i];
  return s;
}

// Refines an eigenvalue estimate of modulus > 1 by exact sign evaluation of
// the non-cyclotomic factor on rational brackets. Returns the estimate
// unchanged when no real root is bracketed nearby.
double refine_real_root(const IntPoly& p, double estimate) {
  for (double sign : {1.0, -1.0}) {
    const double center = sign * estimate;
    const double width = std::max(1e-6, 1e-6 * estimate);
    mpq_class lo(center - width), hi(center + width);
    mpq_class flo = evaluate(p, lo), fhi = evaluate(p, hi);
    if (sgn(flo) == 0) return std::abs(lo.get_d());
    if (sgn(fhi) == 0) return std::abs(hi.get_d());
    if (sgn(flo) == sgn(fhi)) continue;
    for (int it = 0; it < 80; ++it) {
      mpq_class mid = (lo + hi) / 2;
      mid.canonicalize();
      mpq_class fm = evaluate(p, mid);
      if (sgn(fm) == 0) return std::abs(mid.get_d());
      if (sgn(fm) == sgn(flo)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    mpq_class mid = (lo + hi) / 2;
    return std::abs(mid.get_d());
  }
  return estimate;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

unsigned euler_phi(unsigned k) {
  unsigned r = k;
  for (unsigned p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    while (k % p == 0) k /= p;
    r -= r / p;
  }
  if (k > 1) r -= r / k;
  return r;
}

LatticeVector sign_normalized(LatticeVector v) {
  v = v.primitive();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] < 0) v = -v;
    break;
  }
  return v;
}

std::optional<LatticeVector> isotropic_fixed_class(const LatticeIsometry& g) {
  const int d = g.dim();
  detail::IntMatrix m(d, std::vector<mpz_class>(d));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m[r][c] = g.at(r, c) - (r == c ? 1 : 0);
  auto fixed = detail::integer_kernel(m, d);
  if (fixed.empty()) return std::nullopt;
  std::vector<LatticeVector> basis;
  for (auto& f : fixed) basis.emplace_back(std::move(f));
  const std::size_t k = basis.size();
  detail::IntMatrix gram(k, std::vector<mpz_class>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = inner(basis[i], basis[j]);
  auto radical = detail::integer_kernel(gram, k);
  if (radical.size() != 1) return std::nullopt;
  LatticeVector h = LatticeVector::zero(g.n());
  for (std::size_t i = 0; i < k; ++i) h = h + radical[0][i] * basis[i];
  return sign_normalized(h);
}

}  // namespace

IsometryClass classify_isometry(const LatticeIsometry& g) {
  if (!g.preserves_form()) throw ArgumentError("matrix does not preserve the form diag(1,-1,...,-1)");
  IsometryClass out{};
  out.char_poly = characteristic_polynomial(g);

  IntPoly rest = out.char_poly;
  Integer period = 1;
  const unsigned deg = static_cast<unsigned>(g.dim());
  // Cyclotomic factors of degree <= dim have index k with phi(k) <= dim,
  // which forces k <= 2 dim^2.
  for (unsigned k = 1; k <= 2 * deg * deg + 2; ++k) {
    if (euler_phi(k) > deg) continue;
    IntPoly phi = detail::cyclotomic(k), q;
    bool used = false;
    while (rest.size() > 1 && detail::divide_exact(rest, phi, q)) {
      rest = q;
      used = true;
    }
    if (used) period = lcm(period, Integer(k));
  }
  detail::trim(rest);

  if (rest.size() > 1) {
    out.kind = IsometryKind::Hyperbolic;
    out.spectral_radius = refine_real_root(rest, spectral_radius(g));
    return out;
  }

  if (g.power(period).is_identity()) {
    Integer order = period;
    for (unsigned long p = 2; p <= 2 * deg * deg + 2; ++p) {
      while (mpz_divisible_ui_p(order.get_mpz_t(), p)) {
        Integer smaller = order / p;
        if (!g.power(smaller).is_identity()) break;
        order = smaller;
      }
    }
    out.kind = IsometryKind::Elliptic;
    out.order = order;
    LatticeVector sum = LatticeVector::zero(g.n());
    LatticeVector x = LatticeVector::basis(g.n(), 0);
    for (Integer t = 0; t < order; ++t) {
      sum = sum + x;
      x = g.apply(x);
    }
    if (!sum.is_zero()) out.witness = sign_normalized(sum);
    return out;
  }

  out.kind = IsometryKind::Parabolic;
  out.witness = isotropic_fixed_class(g);
  return out;
}

namespace {

void record(NoetherResult& res, int letter) {
  res.terminal = apply_simple_reflection(letter, res.terminal);
  res.word.letters.push_back(letter);
  res.steps.push_back({letter, res.terminal});
}

// Stable descending bubble sort of the multiplicities -v_1..-v_n.
void sort_multiplicities(NoetherResult& res) {
  const int n = res.terminal.n();
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int i = 1; i < n; ++i) {
      // multiplicity a_i = -v_i; swap when a_i < a_{i+1}, i.e. v_i > v_{i+1}
      if (res.terminal[i] > res.terminal[i + 1]) {
        record(res, i);
        swapped = true;
      }
    }
  }
}

void move_left(NoetherResult& res, int from, int to) {
  for (int i = from - 1; i >= to; --i) record(res, i);
}

}  // namespace

NoetherResult noether_reduce(const LatticeVector& r) {
  const int n = r.n();
  if (n < 3) throw ArgumentError("n must be >= 3");
  if (!is_root(r)) throw ArgumentError("input is not a root orthogonal to k_n");
  if (r[0] < 0) throw ArgumentError("input has negative degree");

  NoetherResult res{r, {}, {}};
  while (res.terminal[0] > 0) {
    sort_multiplicities(res);
    const auto& v = res.terminal;
    Integer top3 = -(v[1] + v[2] + v[3]);
    if (v[0] < top3)
      record(res, 0);
    else
      break;
  }

  // Degree zero: the root is e_i - e_j; permute it onto alpha_1.
  if (res.terminal[0] == 0) {
    int plus = -1, minus = -1;
    for (int i = 1; i <= n; ++i) {
      if (res.terminal[i] == 1) plus = i;
      if (res.terminal[i] == -1) minus = i;
    }
    if (plus > 0 && minus > 0) {
      move_left(res, plus, 1);
      for (int i = 1; i <= n; ++i)
        if (res.terminal[i] == -1) minus = i;
      move_left(res, minus, 2);
    }
  }

  for (int i = 0; i < n; ++i) {
    LatticeVector a = simple_root(n, i);
    if (res.terminal == a || res.terminal == -a) {
      res.terminal_is_simple_root = true;
      res.terminal_root_index = i;
      res.terminal_sign = (res.terminal == a) ? 1 : -1;
      break;
    }
  }
  return res;
}

std::vector<std::string> format_trace(const NoetherResult& r) {
  std::vector<std::string> lines;
  for (std::size_t k = 0; k < r.steps.size(); ++k)
    lines.push_back("step " + std::to_string(k + 1) + ": apply s_" + std::to_string(r.steps[k].letter) +
                    ", vector = " + r.steps[k].vector.to_string());
  return lines;
}

}  // namespace cremona
