#include <doctest.h>

#include "cremona/config.hpp"
#include "cremona/constructions.hpp"
#include "support.hpp"

using namespace cremona;
using testing_support::form_of;
using testing_support::pt;

namespace {

LatticeVector cls(std::vector<long> c) {
  std::vector<Integer> v(c.begin(), c.end());
  return LatticeVector(std::move(v));
}

PointConfiguration random_config(const Field& f, int n, std::mt19937_64& rng) {
  std::vector<Point3> pts;
  while (static_cast<int>(pts.size()) < n) {
    const Point3 p = normalize({f.random(rng), f.random(rng), f.one()});
    bool fresh = true;
    for (const auto& q : pts) fresh = fresh && !same_point(p, q);
    if (fresh) pts.push_back(p);
  }
  return PointConfiguration(f, pts);
}

// Points in general position: no three collinear, no six on a conic.
PointConfiguration general_config(const Field& f, int n, std::mt19937_64& rng) {
  for (;;) {
    const auto cfg = random_config(f, n, rng);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        for (int k = j + 1; k < n && ok; ++k) ok = !collinear(cfg.point(i), cfg.point(j), cfg.point(k));
    if (ok) return cfg;
  }
}

// y^2 = x^3 - x has full rational 2-torsion
CubicCurve legendre(const Field& f) { return CubicCurve(form_of(f, {{"021", 1}, {"300", -1}, {"102", 1}})); }

// Two points of c whose third collinear point differs from every listed point.
std::vector<Point3> collinear_on(const CubicCurve& c, std::vector<Point3> pts) {
  for (std::size_t i = 3; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Point3 r = c.third_point(pts[i], pts[j]);
      bool fresh = true;
      for (const auto& q : pts) fresh = fresh && !same_point(q, r);
      if (!fresh) continue;
      pts[0] = pts[i];
      pts[1] = pts[j];
      pts[2] = r;
      pts.erase(pts.begin() + j);
      pts.erase(pts.begin() + i);
      return pts;
    }
  throw std::logic_error("no collinear triple");
}

}  // namespace

TEST_CASE("configurations normalize points and reject duplicates") {
  const Field& f = Field::finite(7);
  const PointConfiguration c(f, {pt(f, 2, 4, 2), pt(f, 1, 0, 0)});
  CHECK(c.point(0) == pt(f, 1, 2, 1));
  CHECK_THROWS_AS(PointConfiguration(f, {pt(f, 1, 2, 3), pt(f, 2, 4, 6)}), ArgumentError);
  CHECK_THROWS_AS(PointConfiguration(f, {pt(f, 0, 0, 0)}), ArgumentError);
}

TEST_CASE("effectivity of small classes") {
  const Field& f = Field::finite(7);
  const PointConfiguration line(f, {pt(f, 1, 0, 1), pt(f, 2, 0, 1), pt(f, 3, 0, 1)});
  auto e = effectivity_test(line, cls({1, -1, -1, -1}));
  CHECK(e.effective);
  CHECK(e.dimension == 0);

  const PointConfiguration generic(f, {pt(f, 1, 0, 0), pt(f, 0, 1, 0), pt(f, 0, 0, 1)});
  e = effectivity_test(generic, cls({1, -1, -1, -1}));
  CHECK_FALSE(e.effective);
  CHECK(e.dimension == -1);

  e = effectivity_test(generic, cls({0, 0, 0, 0}));
  CHECK(e.effective);
  CHECK(e.dimension == 0);

  // conics through 3 points: 6 - 3 - 1
  CHECK(effectivity_test(generic, cls({2, -1, -1, -1})).dimension == 2);
  // cubics singular at a point: 10 - 3 - 1
  CHECK(effectivity_test(generic, cls({3, -2, 0, 0})).dimension == 6);
  CHECK_THROWS_AS(effectivity_test(generic, cls({1, 1, 0, 0})), ArgumentError);
  CHECK_THROWS_AS(effectivity_test(generic, cls({-1, 0, 0, 0})), ArgumentError);
}

TEST_CASE("Hasse derivatives give correct multiplicities in small characteristic") {
  // x^3 + y^3 + z^3 over F_3 is (x + y + z)^3: a triple line through its points
  const Field& f = Field::finite(3);
  const PointConfiguration cfg(f, {pt(f, 1, 2, 0), pt(f, 0, 1, 2)});
  const auto sys = linear_system(cfg, cls({3, -3, -3}));
  REQUIRE(sys.size() == 1);
  const Form l = form_of(f, {{"100", 1}, {"010", 1}, {"001", 1}});
  const Form cube = l * l * l;
  const auto& a = sys[0].coeffs();
  const auto& b = cube.coeffs();
  std::size_t piv = 0;
  while (a[piv].is_zero()) ++piv;
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] * b[piv] == b[i] * a[piv]);
}

TEST_CASE("class dimension peels negative multiplicities") {
  const Field& f = Field::finite(101);
  const PointConfiguration cfg(f, {pt(f, 1, 0, 0), pt(f, 0, 1, 0), pt(f, 0, 0, 1)});
  CHECK(class_dimension(cfg, cls({1, -1, 1, 0})).dimension == 1);
  CHECK(class_dimension(cfg, cls({-1, 0, 0, 0})).dimension == -1);
}

TEST_CASE("effectivity dimension is invariant under projective change") {
  std::mt19937_64 rng(3);
  const Field& f = Field::finite(101);
  for (int trial = 0; trial < 10; ++trial) {
    const auto cfg = random_config(f, 8, rng);
    std::array<Point3, 3> m;
    do {
      for (auto& row : m) row = {f.random(rng), f.random(rng), f.random(rng)};
    } while (determinant({{m[0][0], m[0][1], m[0][2]}, {m[1][0], m[1][1], m[1][2]}, {m[2][0], m[2][1], m[2][2]}})
                 .is_zero());
    const auto moved = cfg.transformed(m);
    for (const auto& c : {cls({3, -1, -1, -1, -1, -1, -1, -1, -1}), cls({2, -1, -1, -1, -1, -1, 0, 0, 0}),
                          cls({4, -2, -1, -1, -1, -1, -1, -1, -1})})
      CHECK(effectivity_test(cfg, c).dimension == effectivity_test(moved, c).dimension);
    const auto eq = projectively_equivalent(cfg, moved);
    CHECK(eq.equivalent);
    REQUIRE(eq.transform.has_value());
    CHECK(projectively_equivalent(cfg, cfg).equivalent);
  }
}

TEST_CASE("projective equivalence detects perturbations") {
  std::mt19937_64 rng(4);
  const Field& f = Field::finite(101);
  const auto cfg = general_config(f, 6, rng);
  auto pts = cfg.points();
  pts[5] = normalize({pts[5][0] + f.one(), pts[5][1], pts[5][2]});
  CHECK_FALSE(projectively_equivalent(cfg, PointConfiguration(f, pts)).equivalent);
  const PointConfiguration line(f, {pt(f, 1, 0, 1), pt(f, 2, 0, 1), pt(f, 3, 0, 1), pt(f, 4, 0, 1)});
  CHECK_THROWS_AS(projectively_equivalent(line, line), DomainError);
}

TEST_CASE("quadratic transformation") {
  const Field& f = Field::finite(7);
  const PointConfiguration c(f, {pt(f, 1, 0, 0), pt(f, 0, 1, 0), pt(f, 0, 0, 1), pt(f, 1, 2, 3), pt(f, 1, 1, 1)});
  const auto t = cremona_quadratic(c, 0, 1, 2);
  CHECK(same_point(t.point(3), pt(f, 6, 3, 2)));
  CHECK(same_point(t.point(4), pt(f, 1, 1, 1)));
  CHECK(projectively_equivalent(cremona_quadratic(t, 0, 1, 2), c).equivalent);

  const PointConfiguration col(f, {pt(f, 1, 0, 1), pt(f, 2, 0, 1), pt(f, 3, 0, 1), pt(f, 1, 1, 1)});
  CHECK_THROWS_AS(cremona_quadratic(col, 0, 1, 2), DomainError);
  const PointConfiguration on_line(f, {pt(f, 1, 0, 0), pt(f, 0, 1, 0), pt(f, 0, 0, 1), pt(f, 1, 1, 0)});
  CHECK_THROWS_AS(cremona_quadratic(on_line, 0, 1, 2), DomainError);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = general_config(Field::finite(101), 7, rng);
    CHECK(projectively_equivalent(cremona_quadratic(cremona_quadratic(g, 1, 3, 5), 1, 3, 5), g).equivalent);
  }
}

TEST_CASE("Cremona action by words") {
  std::mt19937_64 rng(6);
  const Field& f = Field::finite(101);
  const auto cfg = general_config(f, 7, rng);
  const auto s3 = act_by_word(cfg, WeylWord{{3}});
  CHECK(s3.point(2) == cfg.point(3));
  CHECK(s3.point(3) == cfg.point(2));
  CHECK(projectively_equivalent(act_by_word(cfg, WeylWord{{0, 0}}), cfg).equivalent);

  const PointConfiguration col(f, {pt(f, 1, 0, 1), pt(f, 2, 0, 1), pt(f, 3, 0, 1), pt(f, 1, 1, 1)});
  try {
    act_by_word(col, WeylWord{{1, 0}});
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("step 2") != std::string::npos);
  }

  // dimension of c on w.cfg equals dimension of w(c) on cfg
  const std::vector<LatticeVector> panel{
      cls({1, -1, -1, 0, 0, 0, 0, 0}),      cls({2, -1, -1, -1, -1, 0, 0, 0}), cls({3, -2, -1, -1, -1, -1, 0, 0}),
      cls({3, -1, -1, -1, -1, -1, -1, -1}), cls({1, 0, 0, 0, 0, 0, 0, 0}),     cls({4, -2, -2, -1, -1, -1, -1, 0})};
  for (int trial = 0; trial < 8; ++trial) {
    const auto w = testing_support::random_word(7, 6);
    PointConfiguration moved = cfg;
    try {
      moved = act_by_word(cfg, w);
    } catch (const DomainError&) {
      continue;
    }
    const auto g = word_to_isometry(w, 7);
    for (const auto& c : panel) CHECK(class_dimension(moved, c).dimension == class_dimension(cfg, g.apply(c)).dimension);
  }
}

TEST_CASE("isometry to word round trip") {
  for (int n : {4, 8, 9, 10}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto w = testing_support::random_word(n, 25);
      const auto g = word_to_isometry(w, n);
      CHECK(word_to_isometry(isometry_to_word(g), n) == g);
    }
  }
  CHECK(isometry_to_word(LatticeIsometry::identity(9)).empty());
  // -1 preserves the form but is not a Weyl element
  std::vector<Integer> m(100, 0);
  for (int i = 0; i < 10; ++i) m[i * 10 + i] = -1;
  CHECK_THROWS_AS(isometry_to_word(LatticeIsometry(9, m)), DomainError);
}

TEST_CASE("Halphen unnodality") {
  std::mt19937_64 rng(7);
  const Field& f = Field::finite(32003);
  const CubicCurve c = legendre(f);
  const PointConfiguration h(f, unnodal_halphen_points(c, 2, rng, 5));
  CHECK(halphen_index_check(c, h.points(), 2));
  const auto r = is_unnodal_halphen(h, 2);
  CHECK(r.unnodal);
  CHECK(is_unnodal_halphen(h.permuted({8, 7, 6, 5, 4, 3, 2, 1, 0}), 2).unnodal);
  CHECK(is_unnodal_halphen(h.permuted({1, 0, 2, 3, 4, 5, 6, 8, 7}), 2).unnodal);

  // three collinear points
  auto pts = h.points();
  pts.push_back(c.random_point(rng));
  pts.push_back(c.random_point(rng));
  pts = collinear_on(c, pts);
  REQUIRE(pts.size() == 9);
  const auto rc = is_unnodal_halphen(PointConfiguration(f, pts), 1);
  CHECK_FALSE(rc.unnodal);
  REQUIRE(rc.witness.has_value());
  CHECK(*rc.witness == cls({1, -1, -1, -1, 0, 0, 0, 0, 0, 0}));

  // six points on a conic
  std::vector<Point3> conic;
  for (long t : {1, 2, 3, 4, 5, 6}) conic.push_back(pt(f, t, t * t, 1));
  const auto extra = general_config(f, 3, rng);
  for (const auto& p : extra.points()) conic.push_back(p);
  const auto r6 = is_unnodal_halphen(PointConfiguration(f, conic), 2);
  CHECK_FALSE(r6.unnodal);
  CHECK_THROWS_AS(is_unnodal_halphen(general_config(f, 8, rng), 2), ArgumentError);
}

TEST_CASE("Coble sets") {
  std::mt19937_64 rng(8);
  const Field& f = Field::finite(32003);
  const auto cfg = coble_points(legendre(f), rng);
  const auto r = is_coble_set(cfg);
  CHECK(r.unnodal);
  CHECK(r.sextic_unique);

  auto pts = cfg.points();
  pts[2] = normalize({pts[0][0] + pts[1][0], pts[0][1] + pts[1][1], pts[0][2] + pts[1][2]});
  const auto rc = is_coble_set(PointConfiguration(f, pts));
  CHECK_FALSE(rc.unnodal);

  const auto rg = is_coble_set(general_config(f, 10, rng));
  CHECK_FALSE(rg.unnodal);
  CHECK_FALSE(rg.sextic_unique);
}

TEST_CASE("index-two translations fix a Halphen set up to projective equivalence") {
  std::mt19937_64 rng(9);
  const Field& f = Field::finite(32003);
  const PointConfiguration h(f, halphen_points(legendre(f), 2, rng));
  for (int i = 0; i < 8; ++i) {
    const auto w = isometry_to_word(iota_isometry(2 * simple_root(9, i)));
    CHECK(projectively_equivalent(act_by_word(h, w), h).equivalent);
  }
  const auto w1 = isometry_to_word(iota_isometry(simple_root(9, 1)));
  CHECK_FALSE(projectively_equivalent(act_by_word(h, w1), h).equivalent);
}
