#include <doctest.h>

#include "cremona/poly.hpp"
#include "support.hpp"

using namespace cremona;

namespace {

FieldElement gen(const Field& f) {
  std::vector<Integer> c(f.degree(), 0);
  if (f.degree() > 1) c[1] = 1;
  else c[0] = 2;
  return f.from_coefficients(c);
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const Field& f = Field::finite(7);
  CHECK(f.from_int(3) * f.from_int(5) == f.from_int(1));
  CHECK(f.from_int(-1) == f.from_int(6));
  CHECK(f.from_int(3).inverse() == f.from_int(5));
  CHECK(f.from_rational(mpq_class(1, 2)) == f.from_int(4));
  CHECK(f.from_int(3).pow(6).is_one());
  CHECK_THROWS_AS(f.zero().inverse(), ArgumentError);
  CHECK(&Field::finite(7) == &f);
  CHECK_THROWS_AS(Field::finite(8), ArgumentError);
}

TEST_CASE("extension fields: Frobenius fixes exactly the field") {
  for (auto [p, e] : {std::pair<int, int>{2, 8}, {3, 5}, {5, 12}, {101, 2}, {7, 3}}) {
    const Field& f = Field::finite(p, e);
    const FieldElement x = gen(f);
    CHECK(x.pow(f.order()) == x);
    for (int k = 1; k < e; ++k) {
      if (e % k) continue;
      Integer pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
      CHECK_FALSE(x.pow(pk) == x);
    }
  }
}

TEST_CASE("extension field inverses and distributivity") {
  const Field& f = Field::finite(5, 12);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    CHECK(a.pow(f.order() - 1) == (a.is_zero() ? f.zero() : f.one()));
  }
}

TEST_CASE("rational field") {
  const Field& q = Field::rationals();
  const auto a = q.from_rational(mpq_class(3, 4)), b = q.from_int(-2);
  CHECK((a * b).rational() == mpq_class(-3, 2));
  CHECK((a / b).rational() == mpq_class(-3, 8));
  CHECK(a.to_string() == "3/4");
}

TEST_CASE("embedding is a ring homomorphism") {
  const Field& small = Field::finite(5, 4);
  const Field& big = Field::finite(5, 12);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const auto a = small.random(rng), b = small.random(rng);
    CHECK(small.embed(a * b, big) == small.embed(a, big) * small.embed(b, big));
    CHECK(small.embed(a + b, big) == small.embed(a, big) + small.embed(b, big));
  }
  CHECK(small.embed(small.one(), big).is_one());
  CHECK_THROWS_AS(small.embed(small.one(), Field::finite(5, 6)), ArgumentError);
}

TEST_CASE("polynomial roots") {
  SUBCASE("prime field") {
    const Field& f = Field::finite(101);
    // (t - 3)(t - 50)(t^2 + 1 has roots 10, 91 since 10^2 = -1 mod 101)
    Poly p = (Poly::x(f) - Poly::constant(f.from_int(3))) * (Poly::x(f) - Poly::constant(f.from_int(50))) *
             (Poly::x(f) * Poly::x(f) + Poly::constant(f.one()));
    auto r = p.roots();
    REQUIRE(r.size() == 4);
    CHECK(r[0] == f.from_int(3));
    CHECK(r[1] == f.from_int(10));
    CHECK(r[2] == f.from_int(50));
    CHECK(r[3] == f.from_int(91));
  }
  SUBCASE("characteristic two") {
    const Field& f = Field::finite(2, 8);
    std::mt19937_64 rng(3);
    Poly p = Poly::constant(f.one());
    std::vector<FieldElement> want;
    while (want.size() < 5) {
      auto a = f.random(rng);
      if (std::find(want.begin(), want.end(), a) != want.end()) continue;
      want.push_back(a);
      p = p * (Poly::x(f) - Poly::constant(a));
    }
    CHECK(p.roots().size() == 5);
    for (const auto& r : p.roots()) CHECK(p.eval(r).is_zero());
  }
  SUBCASE("rationals") {
    const Field& q = Field::rationals();
    Poly p = (Poly::constant(q.from_int(3)) * Poly::x(q) - Poly::constant(q.from_int(2))) *
             (Poly::x(q) + Poly::constant(q.from_int(7))) * (Poly::x(q) * Poly::x(q) - Poly::constant(q.from_int(2)));
    auto r = p.roots();
    REQUIRE(r.size() == 2);
    CHECK(r[0].rational() == -7);
    CHECK(r[1].rational() == mpq_class(2, 3));
  }
}

TEST_CASE("forms: restriction, substitution, common zeros") {
  const Field& f = Field::finite(101);
  // y^2 z - x^3 - x z^2
  Form c(f, 3);
  c.set(0, 2, 1, f.one());
  c.set(3, 0, 0, f.from_int(-1));
  c.set(1, 0, 2, f.from_int(-1));
  const Point3 p{f.zero(), f.one(), f.zero()};
  CHECK(c.eval(p).is_zero());
  const Point3 a{f.from_int(1), f.from_int(2), f.from_int(3)}, b{f.from_int(4), f.from_int(0), f.from_int(5)};
  auto r = c.restrict_to_line(a, b);
  for (long s : {0, 1, 3}) {
    for (long t : {1, 2, 9}) {
      Point3 q{a[0].scaled(s) + b[0].scaled(t), a[1].scaled(s) + b[1].scaled(t), a[2].scaled(s) + b[2].scaled(t)};
      FieldElement v = f.zero();
      for (int i = 0; i <= 3; ++i) v += r[i] * f.from_int(s).pow(3 - i) * f.from_int(t).pow(i);
      CHECK(v == c.eval(q));
    }
  }
  const std::array<Point3, 3> m{{{f.from_int(2), f.from_int(1), f.zero()},
                                 {f.zero(), f.from_int(1), f.from_int(5)},
                                 {f.from_int(7), f.zero(), f.from_int(1)}}};
  CHECK(c.substitute(m).eval(a) == c.eval(apply3(m, a)));
  CHECK(apply3(inverse3(m), apply3(m, a)) == a);

  // the conics xz - y^2 and yz - x^2 meet in (0:0:1), (1:1:1) and two
  // points defined over F_101 iff -3 is a square (101 = 2 mod 3: no)
  auto conics = [](const Field& k) {
    Form c1(k, 2), c2(k, 2);
    c1.set(1, 0, 1, k.one());
    c1.set(0, 2, 0, k.from_int(-1));
    c2.set(0, 1, 1, k.one());
    c2.set(2, 0, 0, k.from_int(-1));
    return std::pair{c1, c2};
  };
  auto [c1, c2] = conics(f);
  auto z = common_zeros(c1, c2);
  REQUIRE(z.has_value());
  CHECK(z->size() == 2);
  CHECK_FALSE(common_zeros(c1, c1 * Form::linear(f, {f.one(), f.zero(), f.zero()})).has_value());
  CHECK_FALSE(common_zeros(c1 * c2, c1 * c1).has_value());
  // over F_103 (= 1 mod 3) all four are rational
  auto [d1, d2] = conics(Field::finite(103));
  CHECK(common_zeros(d1, d2)->size() == 4);
}

TEST_CASE("linear algebra over a field") {
  const Field& f = Field::finite(7);
  FieldMatrix m{{f.from_int(1), f.from_int(2), f.from_int(3)}, {f.from_int(2), f.from_int(4), f.from_int(6)}};
  CHECK(rank(m, 3) == 1);
  auto ns = nullspace(f, m, 3);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK((m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2]).is_zero());
  CHECK(nullspace(f, {}, 2).size() == 2);
  CHECK(determinant({{f.from_int(1), f.from_int(2)}, {f.from_int(3), f.from_int(4)}}) == f.from_int(-2));
}
