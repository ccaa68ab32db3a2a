#include "cremona/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <unordered_map>

#include "cremona/catalog.hpp"

namespace cremona {

std::string to_string(SingularityType t) {
  switch (t) {
    case SingularityType::Smooth: return "smooth";
    case SingularityType::Nodal: return "nodal";
    case SingularityType::Cuspidal: return "cuspidal";
  }
  return "?";
}

std::string to_string(GroupStructure g) {
  switch (g) {
    case GroupStructure::Elliptic: return "elliptic";
    case GroupStructure::Multiplicative: return "multiplicative";
    case GroupStructure::Additive: return "additive";
  }
  return "?";
}

std::string to_string(KernelVerdict v) {
  switch (v) {
    case KernelVerdict::Unnodal: return "unnodal";
    case KernelVerdict::Nodal: return "nodal";
    case KernelVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string PicElement::to_string() const {
  if (point) return cremona::to_string(*point);
  if (value) return value->to_string();
  return "<unset>";
}

namespace {

bool point_less(const Point3& a, const Point3& b) {
  for (int i = 0; i < 3; ++i) {
    if (less(a[i], b[i])) return true;
    if (less(b[i], a[i])) return false;
  }
  return false;
}

// Projective zeros of all given forms; nullopt when every pair of them
// shares a component.
std::optional<std::vector<Point3>> common_zeros_all(const std::vector<Form>& forms) {
  std::vector<Form> nz;
  for (const auto& f : forms)
    if (!f.is_zero()) nz.push_back(f);
  for (std::size_t i = 0; i < nz.size(); ++i)
    for (std::size_t j = i + 1; j < nz.size(); ++j) {
      auto z = common_zeros(nz[i], nz[j]);
      if (!z) continue;
      std::vector<Point3> out;
      for (const auto& p : *z)
        if (std::all_of(nz.begin(), nz.end(), [&](const Form& f) { return f.eval(p).is_zero(); }))
          out.push_back(normalize(p));
      std::sort(out.begin(), out.end(), point_less);
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  return std::nullopt;
}

std::vector<Point3> singular_points(const Form& f) {
  auto z = common_zeros_all({f.partial(0), f.partial(1), f.partial(2), f});
  if (!z) throw ArgumentError("cubic is not reduced");
  return *z;
}

// Smoothness over the algebraic closure, certified by the extensions where
// conjugate singular points of a reducible cubic would live.
void check_no_hidden_singularities(const Form& f) {
  const Field& k = f.field();
  if (k.is_finite()) {
    for (int d : {2, 3}) {
      if (k.degree() * d > kMaxFieldDegree)
        throw InconclusiveError("cannot certify smoothness: extension degree too large");
      if (!singular_points(f.embed(k.extension(d))).empty())
        throw ArgumentError("cubic is reducible over an extension of " + k.describe());
    }
    return;
  }
  // Over Q: a singular point over the closure survives reduction modulo
  // every prime, so smooth reduction certifies smoothness.
  Integer den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  int tried = 0;
  for (unsigned long p = 101; tried < 25; p += 2) {
    if (!mpz_probab_prime_p(Integer(p).get_mpz_t(), 25)) continue;
    ++tried;
    const Field& fp = Field::finite(p);
    std::vector<FieldElement> c;
    for (const auto& x : f.coeffs()) c.push_back(fp.from_integer(Integer(x.rational() * den)));
    const Form g = Form::from_coeffs(fp, 3, c);
    if (g.is_zero()) continue;
    try {
      if (!singular_points(g).empty()) continue;
      check_no_hidden_singularities(g);
      return;
    } catch (const ArgumentError&) {
      continue;
    }
  }
  throw InconclusiveError("no prime of smooth reduction found; cubic may be reducible");
}

std::vector<FieldElement> binary_coeffs(const Form& g, const std::vector<std::array<int, 3>>& mons) {
  std::vector<FieldElement> out;
  for (const auto& m : mons) out.push_back(g.coefficient(m[0], m[1], m[2]));
  return out;
}

// Roots (x : y) of a binary form given by coefficients of x^(d-i) y^i.
std::vector<Point3> binary_roots(const std::vector<FieldElement>& c) {
  const Field& f = c[0].field();
  std::vector<Point3> out;
  if (c[0].is_zero()) out.push_back({f.one(), f.zero(), f.zero()});
  std::vector<FieldElement> rev(c.rbegin(), c.rend());
  Poly p(f, rev);
  if (p.degree() > 0)
    for (const auto& r : p.roots()) out.push_back({r, f.one(), f.zero()});
  return out;
}

// Linear form in x, y vanishing at the binary root (x : y).
Point3 vanishing_line(const Point3& root) {
  const Field& f = root[0].field();
  if (root[1].is_zero()) return {f.zero(), f.one(), f.zero()};
  return {root[1], -root[0], f.zero()};
}

}  // namespace

CubicCurve::CubicCurve(const Form& equation) : f_(equation), pf_(&equation.field()) {
  if (equation.degree() != 3) throw ArgumentError("a cubic must have degree 3");
  if (equation.is_zero()) throw ArgumentError("the zero form is not a curve");
  const Field& k = field();
  const auto sing = singular_points(f_);
  if (sing.size() >= 2) throw ArgumentError("cubic is reducible: " + std::to_string(sing.size()) + " singular points");
  line_const_ = k.zero();
  origin_s_ = k.zero();
  if (sing.empty()) {
    check_no_hidden_singularities(f_);
    type_ = SingularityType::Smooth;
    choose_origin();
    return;
  }
  // Over finite fields an irreducible singular cubic has its singular point
  // rational; a conjugate pair of further singular points means reducible.
  if (k.is_finite()) {
    for (int d : {2, 3})
      if (k.degree() * d <= kMaxFieldDegree && singular_points(f_.embed(k.extension(d))).size() > 1)
        throw ArgumentError("cubic is reducible over an extension of " + k.describe());
  }
  singular_ = sing.front();
  const Point3& s = *singular_;
  const Point3 e[3] = {{k.one(), k.zero(), k.zero()}, {k.zero(), k.one(), k.zero()}, {k.zero(), k.zero(), k.one()}};
  bool placed = false;
  for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
    const std::array<Point3, 3> m{{{e[a][0], e[b][0], s[0]}, {e[a][1], e[b][1], s[1]}, {e[a][2], e[b][2], s[2]}}};
    if (determinant({{m[0][0], m[0][1], m[0][2]}, {m[1][0], m[1][1], m[1][2]}, {m[2][0], m[2][1], m[2][2]}})
            .is_zero())
      continue;
    from_std_ = m;
    to_std_ = inverse3(m);
    placed = true;
    break;
  }
  if (!placed) throw std::logic_error("no adapted frame");
  const Form g = f_.substitute(from_std_);
  const auto q2 = binary_coeffs(g, {{2, 0, 1}, {1, 1, 1}, {0, 2, 1}});
  const auto c3 = binary_coeffs(g, {{3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {0, 3, 0}});
  if (std::all_of(q2.begin(), q2.end(), [](const auto& c) { return c.is_zero(); }))
    throw ArgumentError("cubic is reducible: triple point");
  if (binary_resultant(q2, c3).is_zero()) throw ArgumentError("cubic is reducible: contains a line through its singular point");
  const bool square = k.characteristic() == 2 ? q2[1].is_zero()
                                              : (q2[1] * q2[1] - k.from_int(4) * q2[0] * q2[2]).is_zero();
  Form c3form(k, 3);
  c3form.set(3, 0, 0, c3[0]);
  c3form.set(2, 1, 0, c3[1]);
  c3form.set(1, 2, 0, c3[2]);
  c3form.set(0, 3, 0, c3[3]);
  // C3 in the coordinates (X, Y) = (num, den)
  auto in_adapted = [&](const Point3& num, const Point3& den) {
    const FieldElement det = num[0] * den[1] - num[1] * den[0];
    const FieldElement inv = det.inverse();
    // (x, y) with num = 1, den = 0 and with num = 0, den = 1
    const Point3 p1{den[1] * inv, -den[0] * inv, det.field().zero()};
    const Point3 p2{-num[1] * inv, num[0] * inv, det.field().zero()};
    const Form c = &det.field() == &k ? c3form : c3form.embed(det.field());
    return c.restrict_to_line(p1, p2);
  };
  if (square) {
    type_ = SingularityType::Cuspidal;
    const auto roots = binary_roots(q2);
    if (roots.size() != 1) throw std::logic_error("cusp tangent not found");
    den_ = vanishing_line(roots[0]);
    num_ = den_[0].is_zero() ? Point3{k.one(), k.zero(), k.zero()} : Point3{k.zero(), k.one(), k.zero()};
    const auto c = in_adapted(num_, den_);
    line_const_ = -c[1] / c[0];
  } else {
    type_ = SingularityType::Nodal;
    auto roots = binary_roots(q2);
    if (roots.size() != 2) {
      if (!k.is_finite()) throw DomainError("node with tangents defined over a quadratic extension of Q");
      pf_ = &k.extension(2);
      std::vector<FieldElement> q2e;
      for (const auto& c : q2) q2e.push_back(k.embed(c, *pf_));
      roots = binary_roots(q2e);
      if (roots.size() != 2) throw std::logic_error("node tangents not found");
    }
    num_ = vanishing_line(roots[0]);
    den_ = vanishing_line(roots[1]);
    const auto c = in_adapted(num_, den_);
    line_const_ = -c[3] / c[0];
  }
  choose_origin();
}

GroupStructure CubicCurve::group() const {
  switch (type_) {
    case SingularityType::Smooth: return GroupStructure::Elliptic;
    case SingularityType::Nodal: return GroupStructure::Multiplicative;
    case SingularityType::Cuspidal: return GroupStructure::Additive;
  }
  return GroupStructure::Elliptic;
}

bool CubicCurve::contains(const Point3& p) const { return f_.eval(p).is_zero(); }

bool CubicCurve::is_smooth_point(const Point3& p) const {
  if (!contains(p)) return false;
  const Point3 g = f_.gradient(p);
  return !(g[0].is_zero() && g[1].is_zero() && g[2].is_zero());
}

namespace {

Point3 other_point_on_line(const Point3& line, const Point3& p) {
  const Field& k = line[0].field();
  const Point3 e[3] = {{k.one(), k.zero(), k.zero()}, {k.zero(), k.one(), k.zero()}, {k.zero(), k.zero(), k.one()}};
  for (const auto& v : e) {
    const Point3 t = cross(line, v);
    if (t[0].is_zero() && t[1].is_zero() && t[2].is_zero()) continue;
    if (same_point(t, p)) continue;
    return t;
  }
  throw std::logic_error("line has a single point");
}

}  // namespace

bool CubicCurve::is_flex(const Point3& p) const {
  if (!is_smooth_point(p)) return false;
  const Point3 t = other_point_on_line(f_.gradient(p), p);
  return f_.restrict_to_line(p, t)[2].is_zero();
}

Point3 CubicCurve::third_point(const Point3& a, const Point3& b) const {
  if (!is_smooth_point(a) || !is_smooth_point(b)) throw ArgumentError("point is not a smooth point of the cubic");
  if (same_point(a, b)) {
    const Point3 t = other_point_on_line(f_.gradient(a), a);
    const auto c = f_.restrict_to_line(a, t);
    if (c[2].is_zero() && c[3].is_zero()) throw std::logic_error("cubic contains a tangent line");
    return normalize({c[3] * a[0] - c[2] * t[0], c[3] * a[1] - c[2] * t[1], c[3] * a[2] - c[2] * t[2]});
  }
  const auto c = f_.restrict_to_line(a, b);
  if (c[1].is_zero() && c[2].is_zero()) throw std::logic_error("cubic contains a line");
  return normalize({c[2] * a[0] - c[1] * b[0], c[2] * a[1] - c[1] * b[1], c[2] * a[2] - c[1] * b[2]});
}

Point3 CubicCurve::add(const Point3& a, const Point3& b) const { return third_point(origin_, third_point(a, b)); }

Point3 CubicCurve::negate(const Point3& a) const { return third_point(third_point(origin_, origin_), a); }

Point3 CubicCurve::multiply(const Integer& k, const Point3& a) const {
  if (k < 0) return multiply(-k, negate(a));
  Point3 r = origin_, b = a;
  const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(k.get_mpz_t(), i)) r = add(r, b);
    if (i + 1 < bits) b = add(b, b);
  }
  return r;
}

FieldElement CubicCurve::raw_parameter(const Point3& p) const {
  if (type_ == SingularityType::Smooth) throw DomainError("smooth cubics have no rational parametrization");
  if (!is_smooth_point(p)) throw ArgumentError("point is not a smooth point of the cubic");
  Point3 q = apply3(to_std_, p);
  if (pf_ != &field())
    for (auto& c : q) c = field().embed(c, *pf_);
  return dot(num_, q) / dot(den_, q);
}

Point3 CubicCurve::point_from_raw(const FieldElement& s) const {
  if (pf_ != &field()) throw DomainError("points from parameters need tangents defined over the base field");
  const Field& k = field();
  const FieldElement det = num_[0] * den_[1] - num_[1] * den_[0];
  // num(x, y) = s, den(x, y) = 1
  const FieldElement x = (s * den_[1] - num_[1]) / det;
  const FieldElement y = (num_[0] - s * den_[0]) / det;
  const Form g = f_.substitute(from_std_);
  const FieldElement c3 = g.eval({x, y, k.zero()});
  const FieldElement q2 = g.eval({x, y, k.one()}) - c3;
  if (q2.is_zero()) throw ArgumentError("parameter does not correspond to a smooth point");
  return normalize(apply3(from_std_, {x, y, -c3 / q2}));
}

FieldElement CubicCurve::parameter(const Point3& p) const {
  const FieldElement s = raw_parameter(p);
  return type_ == SingularityType::Cuspidal ? s - origin_s_ : s / origin_s_;
}

Point3 CubicCurve::point_at(const FieldElement& t) const {
  if (type_ == SingularityType::Smooth) throw DomainError("smooth cubics have no rational parametrization");
  if (type_ == SingularityType::Nodal && t.is_zero()) throw ArgumentError("multiplicative parameter must be nonzero");
  return point_from_raw(type_ == SingularityType::Cuspidal ? t + origin_s_ : t * origin_s_);
}

FieldElement CubicCurve::line_value() const {
  if (type_ == SingularityType::Cuspidal) return line_const_ - origin_s_.scaled(3);
  if (type_ == SingularityType::Nodal) return line_const_ / origin_s_.pow(3);
  throw DomainError("smooth cubics have no parameter");
}

void CubicCurve::choose_origin() {
  const Field& k = field();
  const Point3 top{k.zero(), k.one(), k.zero()};
  auto finish = [&](const Point3& o, bool flex) {
    origin_ = normalize(o);
    inflection_ = flex;
    if (type_ != SingularityType::Smooth) origin_s_ = raw_parameter(origin_);
  };
  if (is_flex(top)) return finish(top, true);
  const Form h = f_.hessian();
  if (!h.is_zero()) {
    if (auto z = common_zeros(f_, h)) {
      std::vector<Point3> flexes;
      for (const auto& p : *z)
        if (is_flex(normalize(p))) flexes.push_back(normalize(p));
      std::sort(flexes.begin(), flexes.end(), point_less);
      if (!flexes.empty()) return finish(flexes.front(), true);
    }
  }
  if (type_ == SingularityType::Cuspidal && k.characteristic() != 3 && pf_ == &k) {
    const Point3 p = point_from_raw(line_const_ / k.from_int(3));
    if (is_flex(p)) return finish(p, true);
  }
  if (type_ == SingularityType::Nodal && pf_ == &k) {
    Poly t3(k, {-line_const_, k.zero(), k.zero(), k.one()});
    for (const auto& r : t3.roots()) {
      const Point3 p = point_from_raw(r);
      if (is_flex(p)) return finish(p, true);
    }
  }
  // any smooth rational point
  if (k.is_finite()) {
    const Integer q = k.order();
    for (Integer i = 0; i < q && i < 100000; ++i) {
      const FieldElement x = k.element(i);
      Poly p(k, f_.restrict_to_line({x, k.zero(), k.one()}, {k.zero(), k.one(), k.zero()}));
      if (p.is_zero() || p.degree() < 1) continue;
      for (const auto& y : p.roots()) {
        const Point3 pt{x, y, k.one()};
        if (is_smooth_point(pt)) return finish(pt, is_flex(pt));
      }
    }
  } else {
    for (long den = 1; den <= 12; ++den)
      for (long num = -60; num <= 60; ++num) {
        const FieldElement x = k.from_rational(mpq_class(num, den));
        const auto r = f_.restrict_to_line({x, k.zero(), k.one()}, {k.zero(), k.one(), k.zero()});
        Poly p(k, r);
        if (p.is_zero() || p.degree() < 1) continue;
        for (const auto& y : p.roots()) {
          const Point3 pt{x, y, k.one()};
          if (is_smooth_point(pt)) return finish(pt, is_flex(pt));
        }
      }
  }
  throw DomainError("no rational smooth point found for the origin");
}

PicElement CubicCurve::pic_zero() const {
  if (type_ == SingularityType::Smooth) return {origin_, std::nullopt};
  if (type_ == SingularityType::Cuspidal) return {std::nullopt, pf_->zero()};
  return {std::nullopt, pf_->one()};
}

PicElement CubicCurve::pic_of_point(const Point3& p) const {
  if (!is_smooth_point(p)) throw ArgumentError("point " + to_string(p) + " is not a smooth point of the cubic");
  if (type_ == SingularityType::Smooth) return {normalize(p), std::nullopt};
  return {std::nullopt, parameter(p)};
}

PicElement CubicCurve::pic_line() const {
  if (type_ == SingularityType::Smooth) return {third_point(origin_, origin_), std::nullopt};
  return {std::nullopt, line_value()};
}

PicElement CubicCurve::pic_add(const PicElement& a, const PicElement& b) const {
  if (type_ == SingularityType::Smooth) return {add(*a.point, *b.point), std::nullopt};
  if (type_ == SingularityType::Cuspidal) return {std::nullopt, *a.value + *b.value};
  return {std::nullopt, *a.value * *b.value};
}

PicElement CubicCurve::pic_neg(const PicElement& a) const {
  if (type_ == SingularityType::Smooth) return {negate(*a.point), std::nullopt};
  if (type_ == SingularityType::Cuspidal) return {std::nullopt, -*a.value};
  return {std::nullopt, a.value->inverse()};
}

PicElement CubicCurve::pic_mul(const Integer& k, const PicElement& a) const {
  if (type_ == SingularityType::Smooth) return {multiply(k, *a.point), std::nullopt};
  if (type_ == SingularityType::Cuspidal) return {std::nullopt, *a.value * pf_->from_integer(k)};
  return {std::nullopt, a.value->pow(k)};
}

std::string CubicCurve::pic_key(const PicElement& a) const { return a.to_string(); }

std::vector<std::pair<Integer, int>> factor(const Integer& n_in) {
  if (n_in < 1) throw ArgumentError("factor needs a positive integer");
  std::map<Integer, int> out;
  Integer n = n_in;
  for (unsigned long d = 2; d < 10000 && Integer(d) * d <= n; ++d)
    while (n % d == 0) {
      out[Integer(d)]++;
      n /= d;
    }
  std::function<void(const Integer&)> split = [&](const Integer& m) {
    if (m == 1) return;
    if (mpz_probab_prime_p(m.get_mpz_t(), 30)) {
      out[m]++;
      return;
    }
    for (unsigned long c = 1;; ++c) {
      Integer x = 2, y = 2, d = 1;
      auto f = [&](const Integer& v) {
        Integer r = v * v + c;
        return Integer(r % m);
      };
      while (d == 1) {
        x = f(x);
        y = f(f(y));
        Integer diff = x - y;
        if (diff < 0) diff = -diff;
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
      }
      if (d != m) {
        split(d);
        split(m / d);
        return;
      }
    }
  };
  split(n);
  return {out.begin(), out.end()};
}

namespace {

Integer isqrt_floor(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

std::vector<Point3> CubicCurve::rational_points(long max_order) const {
  const Field& k = field();
  if (!k.is_finite() || k.order() > max_order) throw ArgumentError("point enumeration needs a small finite field");
  std::vector<Point3> out;
  const Point3 x_axis{k.one(), k.zero(), k.zero()};
  if (is_smooth_point(x_axis)) out.push_back(x_axis);
  {
    const auto r = f_.restrict_to_line({k.zero(), k.one(), k.zero()}, x_axis);  // (t : 1 : 0)
    Poly p(k, r);
    if (!p.is_zero() && p.degree() > 0)
      for (const auto& t : p.roots())
        if (is_smooth_point({t, k.one(), k.zero()})) out.push_back(normalize({t, k.one(), k.zero()}));
  }
  const long q = k.order().get_si();
  for (long i = 0; i < q; ++i) {
    const FieldElement x = k.element(i);
    const auto r = f_.restrict_to_line({x, k.zero(), k.one()}, {k.zero(), k.one(), k.zero()});
    Poly p(k, r);
    if (p.is_zero()) throw std::logic_error("cubic contains a vertical line");
    if (p.degree() < 1) continue;
    for (const auto& y : p.roots())
      if (is_smooth_point({x, y, k.one()})) out.push_back({x, y, k.one()});
  }
  std::sort(out.begin(), out.end(), point_less);
  return out;
}

Point3 CubicCurve::random_point(std::mt19937_64& rng) const {
  const Field& k = field();
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const FieldElement x = k.random(rng);
    const auto r = f_.restrict_to_line({x, k.zero(), k.one()}, {k.zero(), k.one(), k.zero()});
    Poly p(k, r);
    if (p.is_zero() || p.degree() < 1) continue;
    const auto roots = p.roots();
    if (roots.empty()) continue;
    const Point3 pt{x, roots[std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng)], k.one()};
    if (is_smooth_point(pt)) return pt;
  }
  throw DomainError("no random rational point found");
}

std::optional<Integer> CubicCurve::pic_order(const PicElement& a) const {
  if (pic_is_zero(a)) return Integer(1);
  const Field& k = field();
  if (k.is_rational()) {
    if (type_ == SingularityType::Cuspidal) return std::nullopt;
    if (type_ == SingularityType::Nodal) {
      if (*a.value == k.from_int(-1)) return Integer(2);
      return std::nullopt;
    }
    // rational torsion on an elliptic curve has order at most 12
    PicElement x = a;
    for (int n = 2; n <= 12; ++n) {
      x = pic_add(x, a);
      if (pic_is_zero(x)) return Integer(n);
    }
    return std::nullopt;
  }
  if (type_ == SingularityType::Cuspidal) return Integer(static_cast<unsigned long>(k.characteristic()));
  Integer multiple;
  if (type_ == SingularityType::Nodal) {
    multiple = split() ? Integer(k.order() - 1) : Integer(k.order() + 1);
  } else if (k.order() <= 20000) {
    auto* self = const_cast<CubicCurve*>(this);
    if (!group_order_cache_) self->group_order_cache_ = Integer(static_cast<unsigned long>(rational_points().size()));
    multiple = *group_order_cache_;
  } else {
    // baby-step giant-step over the Hasse interval
    const Integer q = k.order();
    const Integer r = isqrt_floor(4 * q) + 1;
    const Integer lo = q + 1 - r;
    const Integer width = 2 * r + 1;
    const Integer m = isqrt_floor(width) + 1;
    if (m > 5000000) throw InconclusiveError("field too large for the order computation");
    std::unordered_map<std::string, long> baby;
    PicElement x = pic_zero();
    for (long j = 0; j < m; ++j) {
      baby.emplace(pic_key(x), j);
      x = pic_add(x, a);
    }
    const PicElement giant = pic_neg(pic_mul(m, a));
    PicElement cur = pic_neg(pic_mul(lo, a));
    bool found = false;
    for (Integer i = 0; i <= m && !found; ++i) {
      auto it = baby.find(pic_key(cur));
      if (it != baby.end()) {
        multiple = lo + i * m + it->second;
        if (multiple > 0) found = true;
      }
      cur = pic_add(cur, giant);
    }
    if (!found) throw InconclusiveError("no multiple of the point order found in the Hasse interval");
  }
  Integer ord = multiple;
  for (const auto& [p, e] : factor(multiple)) {
    for (int i = 0; i < e; ++i) {
      if (ord % p != 0) break;
      if (!pic_is_zero(pic_mul(ord / p, a))) break;
      ord /= p;
    }
  }
  if (!pic_is_zero(pic_mul(ord, a))) throw std::logic_error("order computation failed");
  return ord;
}

std::string CubicCurve::describe() const {
  std::string s = to_string(type_) + " cubic over " + field().describe() + ", group " + to_string(group()) +
                  ", origin " + to_string(origin_) + (inflection_ ? " (flex)" : " (not a flex)");
  if (singular_) s += ", singular point " + to_string(*singular_);
  return s;
}

namespace {

void check_points(const CubicCurve& c, const std::vector<Point3>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!c.is_smooth_point(pts[i]))
      throw ArgumentError("point " + std::to_string(i + 1) + " is not a smooth point of the cubic");
}

}  // namespace

PicElement restriction_hom(const CubicCurve& c, const std::vector<Point3>& pts, const LatticeVector& cls) {
  const int n = static_cast<int>(pts.size());
  if (cls.n() != n) throw ArgumentError("class rank does not match the number of points");
  if (inner(cls, canonical_vector(n)) != 0) throw ArgumentError("class is not orthogonal to the canonical vector");
  check_points(c, pts);
  PicElement r = c.pic_mul(cls[0], c.pic_line());
  for (int i = 0; i < n; ++i)
    if (cls[i + 1] != 0) r = c.pic_add(r, c.pic_mul(cls[i + 1], c.pic_of_point(pts[i])));
  return r;
}

bool halphen_index_check(const CubicCurve& c, const std::vector<Point3>& pts, int m) {
  if (pts.size() != 9) throw ArgumentError("a Halphen set has 9 points");
  if (m < 1) throw ArgumentError("Halphen index must be >= 1");
  const auto ord = c.pic_order(restriction_hom(c, pts, -canonical_vector(9)));
  return ord && *ord == m;
}

TorsionReport torsion_set_check(const CubicCurve& c, const std::vector<Point3>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) throw ArgumentError("need at least three points");
  check_points(c, pts);
  TorsionReport out;
  Integer exp = 1;
  out.is_torsion = true;
  for (int i = 0; i < n; ++i) {
    out.generator_images.push_back(restriction_hom(c, pts, simple_root(n, i)));
    const auto o = c.pic_order(out.generator_images.back());
    if (!o) {
      out.is_torsion = false;
      continue;
    }
    mpz_lcm(exp.get_mpz_t(), exp.get_mpz_t(), o->get_mpz_t());
  }
  if (out.is_torsion) out.exponent = exp;
  return out;
}

namespace {

// Coordinates over F_p of an element of F_{p^e}.
std::vector<FieldElement> prime_coords(const FieldElement& x, const Field& fp) {
  std::vector<FieldElement> v;
  for (int i = 0; i < x.field().degree(); ++i) v.push_back(fp.from_int(static_cast<long>(x.coefficient(i))));
  return v;
}

std::optional<LatticeVector> catalog_root_in_kernel(const CubicCurve& c, const std::vector<Point3>& pts,
                                                    int max_degree) {
  for (const auto& r : enumerate_roots(static_cast<int>(pts.size()), max_degree))
    if (c.pic_is_zero(restriction_hom(c, pts, r))) return r;
  return std::nullopt;
}

// The kernel of Z^n -> Pic^0, alpha_i -> g_i, reduced mod the exponent m;
// nullopt when the image is too large to enumerate.
std::optional<ResidueSubmodule> kernel_mod(const CubicCurve& c, const std::vector<PicElement>& g,
                                           const ResidueModule& module, std::size_t max_group) {
  const int n = static_cast<int>(g.size());
  const std::int64_t m = module.modulus();
  if (c.group() == GroupStructure::Additive) {
    // m = p: an F_p-linear map to F_{p^e}
    const Field& fp = Field::finite(c.field().characteristic());
    const int e = c.field().degree();
    FieldMatrix mat(e, std::vector<FieldElement>(n, fp.zero()));
    for (int i = 0; i < n; ++i) {
      const auto v = prime_coords(*g[i].value, fp);
      for (int r = 0; r < e; ++r) mat[r][i] = v[r];
    }
    std::vector<Residue> gens;
    for (const auto& v : nullspace(fp, mat, n)) {
      Residue r(n);
      for (int i = 0; i < n; ++i) r[i] = static_cast<std::int64_t>(v[i].coefficient(0));
      gens.push_back(r);
    }
    if (gens.empty()) gens.push_back(module.zero());
    return ResidueSubmodule(module, gens);
  }
  std::unordered_map<std::string, std::size_t> index;
  std::vector<PicElement> elems{c.pic_zero()};
  std::vector<Residue> coeffs{module.zero()};
  index.emplace(c.pic_key(elems[0]), 0);
  std::vector<Residue> basis{module.zero()}, batch;
  auto compress = [&] {
    batch.insert(batch.end(), basis.begin(), basis.end());
    ResidueSubmodule s(module, batch);
    basis.clear();
    for (std::size_t t = 0; t < s.divisors().size(); ++t)
      if (s.divisors()[t] != m) basis.push_back(module.scale(s.divisors()[t], s.adapted_basis()[t]));
    if (basis.empty()) basis.push_back(module.zero());
    batch.clear();
  };
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      const PicElement y = c.pic_add(elems[head], g[i]);
      Residue cy = coeffs[head];
      cy[i] = mod_reduce(cy[i] + 1, m);
      auto [it, inserted] = index.emplace(c.pic_key(y), elems.size());
      if (inserted) {
        if (elems.size() >= max_group) return std::nullopt;
        elems.push_back(y);
        coeffs.push_back(cy);
      } else {
        const Residue rel = module.sub(cy, coeffs[it->second]);
        if (std::any_of(rel.begin(), rel.end(), [](auto v) { return v != 0; })) batch.push_back(rel);
        if (batch.size() >= 2000) compress();
      }
    }
  }
  compress();
  return ResidueSubmodule(module, basis);
}

}  // namespace

HarbourneReport harbourne_check(const CubicCurve& c, const std::vector<Point3>& pts) {
  if (c.singularity() != SingularityType::Cuspidal) throw ArgumentError("Harbourne sets live on cuspidal cubics");
  if (!c.field().is_finite()) throw ArgumentError("Harbourne sets need positive characteristic");
  const int n = static_cast<int>(pts.size());
  if (n < 9) throw ArgumentError("need at least nine points");
  check_points(c, pts);
  const Field& fp = Field::finite(c.field().characteristic());
  const int e = c.field().degree();
  FieldMatrix mat(n, std::vector<FieldElement>(e, fp.zero()));
  for (int i = 0; i < n; ++i) mat[i] = prime_coords(*restriction_hom(c, pts, simple_root(n, i)).value, fp);
  HarbourneReport out;
  out.rank = rank(mat, e);
  out.kernel_is_p_perp = out.rank == n;
  const std::string p = std::to_string(c.field().characteristic());
  if (out.kernel_is_p_perp) {
    out.harbourne = true;
    out.kernel_description = "pK_perp";
    return out;
  }
  out.kernel_description = "rank " + std::to_string(out.rank) + " < " + std::to_string(n) + ": kernel strictly contains " +
                           p + "K_perp";
  out.witness = catalog_root_in_kernel(c, pts, 3);
  return out;
}

KernelReport unnodal_by_kernel(const CubicCurve& c, const std::vector<Point3>& pts, const KernelSearchOptions& o) {
  const int n = static_cast<int>(pts.size());
  const auto torsion = torsion_set_check(c, pts);
  if (!torsion.is_torsion) throw ArgumentError("restriction image is not torsion");
  const Integer m = *torsion.exponent;
  KernelReport out;
  std::optional<ResidueSubmodule> v;
  if (m == 1) {
    out.verdict = KernelVerdict::Nodal;
    out.witness = simple_root(n, 1);
    out.reason = "restriction is trivial";
    return out;
  }
  if (m.fits_slong_p() && m.get_si() < (1L << 31)) {
    const ResidueModule module(m.get_si(), n);
    v = kernel_mod(c, torsion.generator_images, module, o.max_group);
    if (v && std::all_of(v->divisors().begin(), v->divisors().end(), [&](auto d) { return d == m.get_si(); })) {
      out.verdict = KernelVerdict::Unnodal;
      out.reason = "kernel equals " + m.get_str() + "E_" + std::to_string(n) +
                   ", which contains no vector of square -2";
      return out;
    }
  }
  if (auto r = catalog_root_in_kernel(c, pts, o.max_degree)) {
    out.verdict = KernelVerdict::Nodal;
    out.witness = r;
    out.reason = "catalog root in the kernel";
    return out;
  }
  if (n == 10 && v && v->free_rank() >= 8 && m <= 84) {
    try {
      auto cert = find_root_in_submodule(*v, RootSearchMethod::OrbitBFS, o.root_search);
      if (!c.pic_is_zero(restriction_hom(c, pts, cert.root))) throw std::logic_error("orbit root not in the kernel");
      out.verdict = KernelVerdict::Nodal;
      out.witness = cert.root;
      out.certificate = cert;
      out.reason = "orbit search root in the kernel";
      return out;
    } catch (const InconclusiveError& e) {
      out.reason = e.what();
    }
  }
  out.verdict = KernelVerdict::Inconclusive;
  if (out.reason.empty()) out.reason = "no root found in the bounded search";
  return out;
}

}  // namespace cremona
