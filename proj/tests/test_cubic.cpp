#include <doctest.h>

#include "cremona/catalog.hpp"
#include "cremona/config.hpp"
#include "cremona/constructions.hpp"
#include "cremona/cubic.hpp"
#include "support.hpp"

using namespace cremona;
using testing_support::form_of;
using testing_support::pt;

namespace {

CubicCurve cusp(const Field& f) { return CubicCurve(form_of(f, {{"021", 1}, {"300", -1}})); }
CubicCurve node(const Field& f) { return CubicCurve(form_of(f, {{"021", 1}, {"300", -1}, {"201", -1}})); }
CubicCurve smooth(const Field& f) { return CubicCurve(form_of(f, {{"021", 1}, {"300", -1}, {"102", 1}})); }

bool are_collinear(const Point3& a, const Point3& b, const Point3& c) { return dot(cross(a, b), c).is_zero(); }

std::vector<Point3> random_points(const CubicCurve& c, int n) {
  std::vector<Point3> out;
  while (static_cast<int>(out.size()) < n) {
    const Point3 p = normalize(c.random_point(testing_support::rng()));
    bool fresh = true;
    for (const auto& q : out) fresh = fresh && !same_point(p, q);
    if (fresh) out.push_back(p);
  }
  return out;
}

std::vector<Point3> cusp_points(const CubicCurve& c, const std::vector<long>& params) {
  std::vector<Point3> out;
  for (long t : params) out.push_back(c.point_at(c.field().from_int(t)));
  return out;
}

}  // namespace

TEST_CASE("cuspidal cubic: chart (t : 1 : t^3) and additive collinearity") {
  for (const Field* f : {&Field::rationals(), &Field::finite(101)}) {
    const CubicCurve c = cusp(*f);
    CHECK(c.singularity() == SingularityType::Cuspidal);
    CHECK(c.group() == GroupStructure::Additive);
    CHECK(same_point(*c.singular_point(), pt(*f, 0, 0, 1)));
    CHECK(same_point(c.origin(), pt(*f, 0, 1, 0)));
    CHECK(c.inflection_origin());
    CHECK(c.line_value().is_zero());
    for (long t = -6; t <= 6; ++t) {
      const Point3 p = pt(*f, t, 1, t * t * t);
      CHECK(c.contains(p));
      CHECK(c.parameter(p) == f->from_int(t));
      CHECK(same_point(c.point_at(f->from_int(t)), p));
    }
    for (long a = -4; a <= 4; ++a)
      for (long b = -4; b <= 4; ++b) {
        if (a == b) continue;
        for (long s = -3; s <= 3; ++s) {
          const long t3 = -a - b + s;
          if (t3 == a || t3 == b) continue;
          const bool col = are_collinear(pt(*f, a, 1, a * a * a), pt(*f, b, 1, b * b * b), pt(*f, t3, 1, t3 * t3 * t3));
          CHECK(col == (s == 0));
        }
      }
  }
}

TEST_CASE("nodal cubic: multiplicative collinearity in the chosen chart") {
  for (const Field* f : {&Field::rationals(), &Field::finite(101)}) {
    const CubicCurve c = node(*f);
    CHECK(c.singularity() == SingularityType::Nodal);
    CHECK(c.group() == GroupStructure::Multiplicative);
    CHECK(c.split());
    CHECK(c.inflection_origin());
    CHECK(c.line_value().is_one());
    CHECK(c.parameter(c.origin()).is_one());
    for (long a = 2; a <= 6; ++a)
      for (long b = a + 1; b <= 7; ++b) {
        const Point3 pa = c.point_at(f->from_int(a)), pb = c.point_at(f->from_int(b));
        const Point3 r = c.third_point(pa, pb);
        CHECK(are_collinear(pa, pb, r));
        CHECK((c.parameter(pa) * c.parameter(pb) * c.parameter(r)).is_one());
      }
  }
}

TEST_CASE("nodal cubic with conjugate tangents over a finite field") {
  const Field& f = Field::finite(7);
  // y^2 = x^3 + 3x^2: tangents y^2 = 3x^2 with 3 a non-square mod 7
  const CubicCurve c(form_of(f, {{"021", 1}, {"300", -1}, {"201", -3}}));
  CHECK(c.singularity() == SingularityType::Nodal);
  CHECK_FALSE(c.split());
  CHECK_THROWS_AS(c.point_at(c.parameter_field().one()), DomainError);
  const auto pts = c.rational_points();
  CHECK(pts.size() == 8);  // q + 1 smooth points
  for (const auto& a : pts) {
    CHECK(Integer(8) % *c.pic_order(c.pic_of_point(a)) == 0);
    for (const auto& b : pts) CHECK(c.parameter(c.add(a, b)) == c.parameter(a) * c.parameter(b));
  }
}

TEST_CASE("smooth cubic over F_7") {
  const Field& f = Field::finite(7);
  const CubicCurve c = smooth(f);
  CHECK(c.singularity() == SingularityType::Smooth);
  CHECK(c.group() == GroupStructure::Elliptic);
  CHECK_FALSE(c.singular_point().has_value());
  CHECK(c.inflection_origin());
  CHECK(c.rational_points().size() == 8);
  CHECK_THROWS_AS(c.parameter(c.origin()), DomainError);
}

TEST_CASE("classification rejects reducible and non-reduced cubics") {
  const Field& f = Field::finite(101);
  CHECK_THROWS_AS(CubicCurve(form_of(f, {{"300", 1}})), ArgumentError);             // triple line
  CHECK_THROWS_AS(CubicCurve(form_of(f, {{"111", 1}})), ArgumentError);             // triangle
  CHECK_THROWS_AS(CubicCurve(form_of(f, {{"300", 1}, {"030", 1}})), ArgumentError);  // three concurrent lines
  CHECK_THROWS_AS(CubicCurve(form_of(f, {{"102", 1}, {"120", 1}, {"300", 1}})), ArgumentError);  // line x times conic
  CHECK_THROWS_AS(CubicCurve(form_of(f, {{"021", 1}, {"102", 1}})), ArgumentError);   // x z^2 + y^2 z: z times a conic
}

TEST_CASE("group law axioms on every curve type") {
  for (const auto& c : {smooth(Field::finite(101)), node(Field::finite(101)), cusp(Field::finite(101)),
                        smooth(Field::finite(2, 4)), smooth(Field::finite(3, 3))}) {
    const auto o = c.origin();
    for (int trial = 0; trial < 100; ++trial) {
      const auto p = random_points(c, 3);
      const Point3 &a = p[0], &b = p[1], &d = p[2];
      CHECK(same_point(c.add(o, a), a));
      CHECK(same_point(c.add(a, c.negate(a)), o));
      CHECK(same_point(c.add(a, b), c.add(b, a)));
      CHECK(same_point(c.add(c.add(a, b), d), c.add(a, c.add(b, d))));
      CHECK(same_point(c.add(a, a), c.multiply(2, a)));
    }
  }
}

TEST_CASE("chord-tangent law matches parameter arithmetic") {
  const CubicCurve cu = cusp(Field::finite(101));
  const CubicCurve no = node(Field::finite(101));
  for (int trial = 0; trial < 50; ++trial) {
    auto p = random_points(cu, 2);
    CHECK(cu.parameter(cu.add(p[0], p[1])) == cu.parameter(p[0]) + cu.parameter(p[1]));
    p = random_points(no, 2);
    CHECK(no.parameter(no.add(p[0], p[1])) == no.parameter(p[0]) * no.parameter(p[1]));
  }
}

TEST_CASE("cubics in characteristic 2 and 3 keep an exact group law") {
  // y^2 z + y z^2 = x^3 over F_4 and y^2 z = x^3 - x z^2 + z^3 over F_9
  const CubicCurve a(form_of(Field::finite(2, 2), {{"021", 1}, {"012", 1}, {"300", 1}}));
  const CubicCurve b(form_of(Field::finite(3, 2), {{"021", 1}, {"300", -1}, {"102", 1}, {"003", -1}}));
  for (const auto* c : {&a, &b}) {
    CHECK(c->singularity() == SingularityType::Smooth);
    const auto pts = c->rational_points();
    const Integer n(static_cast<unsigned long>(pts.size()));
    for (const auto& p : pts) CHECK(same_point(c->multiply(n, p), c->origin()));
  }
}

TEST_CASE("element orders over a large field use the Hasse interval") {
  const Field& f = Field::finite(1000003);
  const CubicCurve c = smooth(f);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = c.pic_of_point(c.random_point(testing_support::rng()));
    const auto ord = c.pic_order(p);
    REQUIRE(ord.has_value());
    CHECK(c.pic_is_zero(c.pic_mul(*ord, p)));
    for (const auto& [q, e] : factor(*ord)) CHECK_FALSE(c.pic_is_zero(c.pic_mul(*ord / q, p)));
  }
}

TEST_CASE("factor splits products of primes") {
  auto f = factor(Integer("600851475143"));
  CHECK(f.size() == 4);
  CHECK(f.back().first == 6857);
  f = factor(Integer("1000000016000000063"));  // 1000000007 * 1000000009
  REQUIRE(f.size() == 2);
  CHECK(f[0].first == 1000000007);
}

TEST_CASE("restriction homomorphism on the cuspidal model") {
  const Field& f = Field::finite(101);
  const CubicCurve c = cusp(f);
  const std::vector<long> t{3, 5, 11, 17, 23, 29, 31, 37, 41, 43};
  const auto pts = cusp_points(c, t);
  for (int i = 1; i <= 10; ++i)
    for (int j = 1; j <= 10; ++j) {
      if (i == j) continue;
      const auto cls = LatticeVector::basis(10, i) - LatticeVector::basis(10, j);
      CHECK(*restriction_hom(c, pts, cls).value == f.from_int(t[i - 1] - t[j - 1]));
    }
  CHECK(*restriction_hom(c, pts, simple_root(10, 0)).value == f.from_int(-(3 + 5 + 11)));
  for (int trial = 0; trial < 50; ++trial) {
    auto u = testing_support::random_vector(10, 5), v = testing_support::random_vector(10, 5);
    // move into k^perp along e_1, using e_1 . k = -1
    const auto fix = [](const LatticeVector& w) { return w + inner(w, canonical_vector(10)) * LatticeVector::basis(10, 1); };
    u = fix(u);
    v = fix(v);
    REQUIRE(inner(u, canonical_vector(10)) == 0);
    CHECK(restriction_hom(c, pts, u + v) == c.pic_add(restriction_hom(c, pts, u), restriction_hom(c, pts, v)));
  }
  CHECK_THROWS_AS(restriction_hom(c, pts, LatticeVector::basis(10, 1)), ArgumentError);
  auto off = pts;
  off[0] = pt(f, 1, 2, 3);
  CHECK_THROWS_AS(restriction_hom(c, off, simple_root(10, 1)), ArgumentError);
}

TEST_CASE("Halphen index check") {
  std::mt19937_64 rng(11);
  const CubicCurve c = smooth(Field::finite(101));
  const auto pts = halphen_points(c, 2, rng);
  CHECK(halphen_index_check(c, pts, 2));
  CHECK_FALSE(halphen_index_check(c, pts, 1));
  CHECK(halphen_index_check(c, halphen_points(c, 1, rng), 1));

  // over Q the additive group is torsion-free: only index 1 occurs
  const CubicCurve q = cusp(Field::rationals());
  CHECK(halphen_index_check(q, cusp_points(q, {1, 2, 3, 4, 5, 6, 7, 8, -36}), 1));
  for (int m = 1; m <= 6; ++m) CHECK_FALSE(halphen_index_check(q, cusp_points(q, {1, 2, 3, 4, 5, 6, 7, 8, 9}), m));

  // over F_5 a nonzero parameter sum has order 5
  const CubicCurve c5 = cusp(Field::finite(5, 2));
  std::vector<Point3> p5;
  for (int i = 2; i <= 10; ++i) p5.push_back(c5.point_at(c5.field().element(i)));
  CHECK(halphen_index_check(c5, p5, 5));
  CHECK_FALSE(halphen_index_check(c5, p5, 1));
  CHECK_THROWS_AS(halphen_index_check(c, std::vector<Point3>(pts.begin(), pts.end() - 1), 2), ArgumentError);
}

TEST_CASE("torsion set check") {
  const CubicCurve c = smooth(Field::finite(101));
  const auto pts = random_points(c, 10);
  const auto r = torsion_set_check(c, pts);
  CHECK(r.is_torsion);
  for (const auto& g : r.generator_images) CHECK(c.pic_is_zero(c.pic_mul(*r.exponent, g)));

  const CubicCurve cu = cusp(Field::finite(7));
  const auto rc = torsion_set_check(cu, cusp_points(cu, {0, 1, 2, 3, 4, 5, 6}));
  CHECK(rc.is_torsion);
  CHECK(*rc.exponent == 7);

  // y^2 = x^3 - 2 over Q: (3, 5) has infinite order
  const Field& q = Field::rationals();
  const CubicCurve e(form_of(q, {{"021", 1}, {"300", -1}, {"003", 2}}));
  const Point3 p = pt(q, 3, 5, 1);
  std::vector<Point3> gen{p, e.multiply(2, p), e.multiply(3, p)};
  CHECK_FALSE(torsion_set_check(e, gen).is_torsion);
  CHECK_FALSE(e.pic_order(e.pic_of_point(p)).has_value());
}

TEST_CASE("Harbourne sets over F_{5^12}") {
  const Field& f = Field::finite(5, 12);
  const CubicCurve c = cusp(f);
  std::mt19937_64 rng(5);
  std::vector<Point3> pts;
  std::vector<FieldElement> t;
  for (int i = 0; i < 10; ++i) {
    t.push_back(f.random(rng));
    pts.push_back(c.point_at(t.back()));
  }
  const auto r = harbourne_check(c, pts);
  CHECK(r.harbourne);
  CHECK(r.kernel_is_p_perp);
  CHECK(r.rank == 10);
  CHECK(r.kernel_description == "pK_perp");
  const auto k = unnodal_by_kernel(c, pts);
  CHECK(k.verdict == KernelVerdict::Unnodal);

  // three collinear points put alpha_0 into the kernel
  auto bad = pts;
  bad[2] = c.point_at(-(t[0] + t[1]));
  const auto rb = harbourne_check(c, bad);
  CHECK_FALSE(rb.harbourne);
  REQUIRE(rb.witness.has_value());
  CHECK(c.pic_is_zero(restriction_hom(c, bad, *rb.witness)));
  CHECK_THROWS_AS(harbourne_check(smooth(Field::finite(101)), random_points(smooth(Field::finite(101)), 10)),
                  ArgumentError);
}

TEST_CASE("root search in the restriction kernel") {
  const Field& f = Field::finite(101);
  const CubicCurve c = smooth(f);
  auto pts = random_points(c, 10);
  // p_3 on the line through p_1, p_2
  pts[2] = c.third_point(pts[0], pts[1]);
  bool clash = false;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) clash = clash || same_point(pts[i], pts[j]);
  REQUIRE_FALSE(clash);
  const auto r = unnodal_by_kernel(c, pts);
  CHECK(r.verdict == KernelVerdict::Nodal);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == simple_root(10, 0));
  // the witness class carries an effective curve: the line through p_1, p_2, p_3
  const PointConfiguration cfg(f, pts);
  CHECK(effectivity_test(cfg, *r.witness).effective);

  const auto generic = random_points(c, 10);
  const auto g = unnodal_by_kernel(c, generic);
  CHECK(g.verdict == KernelVerdict::Nodal);
  REQUIRE(g.witness.has_value());
  CHECK(is_root(*g.witness));
  CHECK(c.pic_is_zero(restriction_hom(c, generic, *g.witness)));
  bool nonneg = true;
  for (int i = 1; i <= 10; ++i) nonneg = nonneg && (*g.witness)[i] <= 0;
  if (nonneg && (*g.witness)[0] >= 0) CHECK(effectivity_test(PointConfiguration(f, generic), *g.witness).effective);
}
