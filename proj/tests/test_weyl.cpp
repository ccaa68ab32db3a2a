#include <cmath>

#include "doctest.h"
#include "support.hpp"

using namespace cremona;
using testing_support::random_vector;
using testing_support::random_word;
using testing_support::uniform;

namespace {

LatticeVector e(int n, int i) { return LatticeVector::basis(n, i); }

LatticeVector random_e8(long bound) {
  std::vector<long> c(8);
  for (auto& x : c) x = uniform(-bound, bound);
  return e8_vector(c);
}

// det(tI - g) at integer t by rational elimination, then Lagrange
// interpolation; independent of the library's characteristic polynomial.
std::vector<mpq_class> charpoly_by_interpolation(const LatticeIsometry& g) {
  const int d = g.dim();
  std::vector<mpq_class> xs, ys;
  for (int t = 0; t <= d; ++t) {
    std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(d));
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) a[r][c] = mpq_class((r == c ? t : 0)) - mpq_class(g.at(r, c));
    mpq_class det = 1;
    for (int k = 0; k < d; ++k) {
      int p = k;
      while (p < d && a[p][k] == 0) ++p;
      if (p == d) {
        det = 0;
        break;
      }
      if (p != k) {
        std::swap(a[p], a[k]);
        det = -det;
      }
      det *= a[k][k];
      for (int r = k + 1; r < d; ++r) {
        mpq_class f = a[r][k] / a[k][k];
        for (int c = k; c < d; ++c) a[r][c] -= f * a[k][c];
      }
    }
    xs.push_back(t);
    ys.push_back(det);
  }
  std::vector<mpq_class> coeff(d + 1, 0);
  for (int i = 0; i <= d; ++i) {
    std::vector<mpq_class> basis{1};
    mpq_class denom = 1;
    for (int j = 0; j <= d; ++j) {
      if (j == i) continue;
      std::vector<mpq_class> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = next;
      denom *= xs[i] - xs[j];
    }
    for (int k = 0; k <= d; ++k) coeff[k] += basis[k] * ys[i] / denom;
  }
  return coeff;
}

double largest_real_root(const std::vector<mpq_class>& p, double lo, double hi) {
  auto f = [&](double x) {
    double s = 0;
    for (std::size_t i = p.size(); i-- > 0;) s = s * x + p[i].get_d();
    return s;
  };
  // scan downward for the last sign change
  const int steps = 100000;
  for (int i = steps; i > 0; --i) {
    double a = lo + (hi - lo) * (i - 1) / steps, b = lo + (hi - lo) * i / steps;
    if (f(a) * f(b) <= 0) {
      for (int it = 0; it < 200; ++it) {
        double m = 0.5 * (a + b);
        if (f(a) * f(m) <= 0)
          b = m;
        else
          a = m;
      }
      return 0.5 * (a + b);
    }
  }
  return NAN;
}

}  // namespace

TEST_CASE("reflections") {
  const int n = 10;
  CHECK(reflect(simple_root(n, 1), e(n, 1)) == e(n, 2));
  CHECK(reflect(simple_root(n, 0), e(n, 0)) == LatticeVector{2, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(reflect(e(n, 0), e(n, 1)), ArgumentError);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = apply_word(random_word(n, 12), simple_root(n, 1));
    auto v = random_vector(n, 30), w = random_vector(n, 30);
    CHECK(reflect(a, reflect(a, v)) == v);
    CHECK(inner(reflect(a, v), reflect(a, w)) == inner(v, w));
  }
  for (int i = 0; i < n; ++i) {
    auto v = random_vector(n, 30);
    CHECK(apply_simple_reflection(i, v) == reflect(simple_root(n, i), v));
  }
}

TEST_CASE("words to isometries") {
  const int n = 10;
  CHECK(word_to_isometry({}, n).is_identity());
  CHECK(word_to_isometry({{1}}, n).apply(e(n, 1)) == e(n, 2));
  // alpha_0 and alpha_3 are joined in the diagram, alpha_0 and alpha_1 are not
  CHECK(word_to_isometry({{0, 3, 0}}, n) == word_to_isometry({{3, 0, 3}}, n));
  CHECK(word_to_isometry({{0, 1, 0}}, n) == word_to_isometry({{1}}, n));
  CHECK(word_to_isometry({{1, 2, 1}}, n) == word_to_isometry({{2, 1, 2}}, n));
  CHECK_THROWS_AS(word_to_isometry({{10}}, n), ArgumentError);
  for (int trial = 0; trial < 50; ++trial) {
    int m = static_cast<int>(uniform(3, 12));
    auto w = random_word(m, 30);
    auto g = word_to_isometry(w, m);
    CHECK(g.preserves_form());
    CHECK(g.fixes(canonical_vector(m)));
    auto v = random_vector(m, 10);
    CHECK(g.apply(v) == apply_word(w, v));
    CHECK(g.inverse() * g == LatticeIsometry::identity(m));
  }
}

TEST_CASE("iota embedding of E_8") {
  auto k = canonical_vector(9);
  CHECK(iota_isometry(LatticeVector::zero(9)).is_identity());
  for (int trial = 0; trial < 100; ++trial) {
    auto w = random_e8(5), w2 = random_e8(5);
    auto g = iota_isometry(w);
    CHECK(g.preserves_form());
    CHECK(g.fixes(k));
    CHECK(iota_isometry(w + w2) == g * iota_isometry(w2));
  }
  CHECK_THROWS_AS(iota(e(9, 0), e(9, 1)), ArgumentError);
}

TEST_CASE("translation isometries") {
  auto k = canonical_vector(9);
  CHECK(translation_isometry(LatticeVector::zero(9), 2).is_identity());
  // m = 1, A = alpha_1, D = e_0: e_0 + 3 alpha_1 - 3 K
  auto a1 = simple_root(9, 1);
  auto t = translation_isometry(a1, 1);
  auto img = t.apply(e(9, 0));
  CHECK(img == e(9, 0) + 3 * a1 - 3 * k);
  CHECK(square(img) == 1);
  CHECK(inner(img, k) == -3);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_e8(4);
    long m = uniform(1, 3);
    auto g = translation_isometry(a, m);
    CHECK(g.preserves_form());
    CHECK(g.fixes(k));
    for (int i = 0; i < 9; ++i) {
      auto d = simple_root(9, i);
      CHECK(g.apply(d) == d + (m * inner(d, a)) * k);
    }
    // The whole map coincides with iota of -mA.
    CHECK(g == iota_isometry(-m * a));
  }
  CHECK_THROWS_AS(translation_isometry(e(9, 1), 1), ArgumentError);
  CHECK_THROWS_AS(translation_isometry(a1, 0), ArgumentError);
}

TEST_CASE("isometry trichotomy") {
  auto s1 = classify_isometry(word_to_isometry({{1}}, 10));
  CHECK(s1.kind == IsometryKind::Elliptic);
  CHECK(*s1.order == 2);

  auto par = classify_isometry(iota_isometry(simple_root(9, 1)));
  CHECK(par.kind == IsometryKind::Parabolic);
  REQUIRE(par.witness);
  CHECK(*par.witness == -canonical_vector(9));

  WeylWord cox;
  for (int i = 0; i < 10; ++i) cox.letters.push_back(i);
  auto g = word_to_isometry(cox, 10);
  auto hyp = classify_isometry(g);
  CHECK(hyp.kind == IsometryKind::Hyperbolic);
  const double oracle = largest_real_root(charpoly_by_interpolation(g), 1.0, 2.0);
  CHECK(std::abs(oracle - 1.1762808182599176) < 1e-12);
  CHECK(std::abs(hyp.spectral_radius - oracle) < 1e-9);

  CHECK_THROWS_AS(classify_isometry(LatticeIsometry(3, std::vector<Integer>(16, Integer(1)))), ArgumentError);
}

TEST_CASE("classification is a conjugacy invariant") {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(uniform(9, 11));
    auto g = word_to_isometry(random_word(n, 10), n);
    auto h = word_to_isometry(random_word(n, 10), n);
    auto a = classify_isometry(g), b = classify_isometry(h * g * h.inverse());
    CHECK(a.kind == b.kind);
    CHECK(std::abs(a.spectral_radius - b.spectral_radius) < 1e-6);
  }
  auto par = iota_isometry(e8_vector({1, 0, 2, 0, 0, -1, 0, 3}));
  auto h = word_to_isometry({{0, 4, 5, 1, 8}}, 9);
  auto c = classify_isometry(h * par * h.inverse());
  CHECK(c.kind == IsometryKind::Parabolic);
  CHECK(*c.witness == -canonical_vector(9));
}

TEST_CASE("Noether reduction") {
  const int n = 10;
  auto r0 = noether_reduce(simple_root(n, 1));
  CHECK(r0.terminal == simple_root(n, 1));
  CHECK(r0.word.empty());

  LatticeVector conic{2, -1, -1, -1, -1, -1, -1, 0, 0, 0, 0};
  auto r = noether_reduce(conic);
  int zero_steps = 0;
  for (int l : r.word.letters) zero_steps += (l == 0);
  CHECK(zero_steps == 2);
  CHECK(r.terminal == -simple_root(n, 0));
  CHECK(apply_word(r.word, r.terminal) == conic);
  CHECK(format_trace(r).front().rfind("step 1: apply s_0, vector = [", 0) == 0);

  CHECK_THROWS_AS(noether_reduce(e(n, 1)), ArgumentError);
  CHECK_THROWS_AS(noether_reduce(-conic), ArgumentError);

  for (int trial = 0; trial < 200; ++trial) {
    auto root = apply_word(random_word(n, 40), simple_root(n, 1));
    if (root[0] < 0) root = -root;
    auto res = noether_reduce(root);
    CHECK(res.terminal_is_simple_root);
    CHECK(apply_word(res.word, res.terminal) == root);
  }
}
