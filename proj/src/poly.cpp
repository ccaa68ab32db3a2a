#include "cremona/poly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>

namespace cremona {

namespace {

void check_field(const Field& a, const Field& b) {
  if (&a != &b) throw ArgumentError("polynomials over different fields");
}

}  // namespace

Poly::Poly(const Field& f, std::vector<FieldElement> coeffs) : f_(&f), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (&c.field() != f_) throw ArgumentError("coefficient from a different field");
  trim();
}

Poly Poly::x(const Field& f) { return Poly(f, {f.zero(), f.one()}); }

Poly Poly::constant(const FieldElement& c) { return Poly(c.field(), {c}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement Poly::coefficient(int i) const {
  if (i < 0 || i > degree()) return f_->zero();
  return c_[i];
}

Poly Poly::operator-() const {
  Poly r(*f_);
  for (const auto& c : c_) r.c_.push_back(-c);
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  check_field(*a.f_, *b.f_);
  Poly r(*a.f_);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), a.f_->zero());
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (i < a.c_.size()) r.c_[i] += a.c_[i];
    if (i < b.c_.size()) r.c_[i] += b.c_[i];
  }
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  check_field(*a.f_, *b.f_);
  Poly r(*a.f_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, a.f_->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

Poly operator*(const FieldElement& c, const Poly& a) { return Poly::constant(c) * a; }

bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  check_field(*a.f_, *b.f_);
  if (b.is_zero()) throw ArgumentError("polynomial division by zero");
  q = Poly(*a.f_);
  r = a;
  if (r.degree() < b.degree()) return;
  q.c_.assign(r.degree() - b.degree() + 1, a.f_->zero());
  const FieldElement li = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    const FieldElement t = r.leading() * li;
    q.c_[shift] = t;
    for (int j = 0; j <= b.degree(); ++j) r.c_[shift + j] -= t * b.c_[j];
    r.c_.pop_back();
    r.trim();
  }
  q.trim();
}

Poly operator/(const Poly& a, const Poly& b) {
  Poly q(a.field()), r(a.field());
  Poly::divmod(a, b, q, r);
  return q;
}

Poly operator%(const Poly& a, const Poly& b) {
  Poly q(a.field()), r(a.field());
  Poly::divmod(a, b, q, r);
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * *this;
}

Poly Poly::derivative() const {
  Poly r(*f_);
  for (int i = 1; i <= degree(); ++i) r.c_.push_back(c_[i].scaled(i));
  r.trim();
  return r;
}

FieldElement Poly::eval(const FieldElement& t) const {
  FieldElement r = f_->zero();
  for (int i = degree(); i >= 0; --i) r = r * t + c_[i];
  return r;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly Poly::powmod(Poly base, Integer e, const Poly& m) {
  Poly r = constant(m.field().one()) % m;
  base = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * base) % m;
    if (i + 1 < bits) base = (base * base) % m;
  }
  return r;
}

namespace {

// Splits a monic product of distinct linear factors over F_q.
void split_linear(const Poly& g, std::mt19937_64& rng, std::vector<FieldElement>& out) {
  const Field& f = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coefficient(0) / g.coefficient(1));
    return;
  }
  const Integer& q = f.order();
  for (;;) {
    std::vector<FieldElement> c;
    for (int i = 0; i < g.degree(); ++i) c.push_back(f.random(rng));
    Poly a(f, c);
    if (a.degree() < 1) continue;
    Poly h(f);
    if (f.characteristic() == 2) {
      Poly t = a, acc = a;
      for (int i = 1; i < f.degree(); ++i) {
        t = (t * t) % g;
        acc = acc + t;
      }
      h = gcd(g, acc);
    } else {
      h = gcd(g, Poly::powmod(a, (q - 1) / 2, g) - Poly::constant(f.one()));
    }
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_linear(h, rng, out);
      split_linear(g / h, rng, out);
      return;
    }
  }
}

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Integer, int>> fac;
  Integer d = 2;
  while (d * d <= n) {
    if (d > 1000000) {
      if (n > Integer("1000000000000")) throw InconclusiveError("leading coefficient too large to factor");
    }
    if (n % d == 0) {
      int k = 0;
      while (n % d == 0) {
        n /= d;
        ++k;
      }
      fac.emplace_back(d, k);
    }
    d += 1;
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<Integer> out{1};
  for (const auto& [pr, k] : fac) {
    const std::size_t base = out.size();
    Integer pw = 1;
    for (int i = 1; i <= k; ++i) {
      pw *= pr;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pw);
    }
  }
  return out;
}

std::vector<FieldElement> rational_roots(const Poly& p) {
  const Field& f = p.field();
  std::vector<FieldElement> out;
  Poly g = p;
  if (g.coefficient(0).is_zero()) {
    out.push_back(f.zero());
    int s = 0;
    while (g.coefficient(s).is_zero()) ++s;
    std::vector<FieldElement> c(g.coeffs().begin() + s, g.coeffs().end());
    g = Poly(f, c);
  }
  Poly d = g.derivative();
  if (!d.is_zero()) g = g / gcd(g, d);
  g = g.monic();
  if (g.degree() < 1) return out;
  // integer coefficients
  Integer den = 1;
  for (const auto& c : g.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<Integer> ic;
  for (const auto& c : g.coeffs()) ic.push_back(Integer(c.rational() * den));
  const int n = g.degree();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -g.coefficient(i).rational().get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  std::vector<Integer> dens = divisors(ic.back());
  for (int i = 0; i < n; ++i) {
    const auto ev = es.eigenvalues()[i];
    const double x = ev.real();
    if (std::abs(ev.imag()) > 1e-4 * (1 + std::abs(x))) continue;
    for (const auto& v : dens) {
      const double scaled = std::round(x * v.get_d());
      for (int delta = -1; delta <= 1; ++delta) {
        mpq_class cand(Integer(scaled) + delta, v);
        cand.canonicalize();
        FieldElement t = f.from_rational(cand);
        if (g.eval(t).is_zero()) out.push_back(t);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<FieldElement> Poly::roots() const {
  if (is_zero()) throw ArgumentError("roots of the zero polynomial");
  std::vector<FieldElement> out;
  if (degree() == 0) return out;
  if (f_->is_rational()) {
    out = rational_roots(*this);
  } else {
    Poly m = monic();
    Poly g = gcd(m, powmod(x(*f_), f_->order(), m) - x(*f_));
    std::mt19937_64 rng(0x5eed);
    split_linear(g, rng, out);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[i].to_string() + ")";
    if (i > 0) s += "*t^" + std::to_string(i);
  }
  return s;
}

Point3 normalize(const Point3& p) {
  for (int i = 2; i >= 0; --i) {
    if (!p[i].is_zero()) {
      const FieldElement s = p[i].inverse();
      return {p[0] * s, p[1] * s, p[2] * s};
    }
  }
  throw ArgumentError("the zero vector is not a projective point");
}

bool same_point(const Point3& a, const Point3& b) {
  const Point3 c = cross(a, b);
  return c[0].is_zero() && c[1].is_zero() && c[2].is_zero();
}

Point3 cross(const Point3& a, const Point3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

FieldElement dot(const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

std::string to_string(const Point3& p) {
  return "(" + p[0].to_string() + " : " + p[1].to_string() + " : " + p[2].to_string() + ")";
}

Form::Form(const Field& f, int degree) : f_(&f), d_(degree) {
  if (degree < 0) throw ArgumentError("form degree must be nonnegative");
  c_.assign(static_cast<std::size_t>((degree + 1) * (degree + 2) / 2), f.zero());
}

std::vector<std::array<int, 3>> Form::monomials(int degree) {
  std::vector<std::array<int, 3>> out;
  for (int i = degree; i >= 0; --i)
    for (int j = degree - i; j >= 0; --j) out.push_back({i, j, degree - i - j});
  return out;
}

std::size_t Form::index(int i, int j) const {
  const int a = d_ - i;
  return static_cast<std::size_t>(a * (a + 1) / 2 + (a - j));
}

Form Form::linear(const Field& f, const Point3& c) {
  Form r(f, 1);
  r.set(1, 0, 0, c[0]);
  r.set(0, 1, 0, c[1]);
  r.set(0, 0, 1, c[2]);
  return r;
}

Form Form::from_coeffs(const Field& f, int degree, std::vector<FieldElement> c) {
  Form r(f, degree);
  if (c.size() != r.c_.size()) throw ArgumentError("wrong number of form coefficients");
  r.c_ = std::move(c);
  return r;
}

FieldElement Form::coefficient(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i + j + k != d_) throw ArgumentError("monomial does not match the form degree");
  return c_[index(i, j)];
}

void Form::set(int i, int j, int k, const FieldElement& c) {
  if (i < 0 || j < 0 || k < 0 || i + j + k != d_) throw ArgumentError("monomial does not match the form degree");
  if (&c.field() != f_) throw ArgumentError("coefficient from a different field");
  c_[index(i, j)] = c;
}

bool Form::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const auto& c) { return c.is_zero(); });
}

Form operator+(const Form& a, const Form& b) {
  check_field(*a.f_, *b.f_);
  if (a.d_ != b.d_) throw ArgumentError("adding forms of different degrees");
  Form r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

Form operator-(const Form& a, const Form& b) { return a + (a.f_->from_int(-1) * b); }

Form operator*(const FieldElement& c, const Form& a) {
  Form r = a;
  for (auto& x : r.c_) x *= c;
  return r;
}

Form operator*(const Form& a, const Form& b) {
  check_field(*a.f_, *b.f_);
  Form r(*a.f_, a.d_ + b.d_);
  const auto ma = Form::monomials(a.d_), mb = Form::monomials(b.d_);
  for (std::size_t s = 0; s < ma.size(); ++s) {
    if (a.c_[s].is_zero()) continue;
    for (std::size_t t = 0; t < mb.size(); ++t) {
      if (b.c_[t].is_zero()) continue;
      r.c_[r.index(ma[s][0] + mb[t][0], ma[s][1] + mb[t][1])] += a.c_[s] * b.c_[t];
    }
  }
  return r;
}

bool operator==(const Form& a, const Form& b) { return a.f_ == b.f_ && a.d_ == b.d_ && a.c_ == b.c_; }

FieldElement Form::eval(const Point3& p) const {
  std::vector<FieldElement> px{f_->one()}, py{f_->one()}, pz{f_->one()};
  for (int i = 1; i <= d_; ++i) {
    px.push_back(px.back() * p[0]);
    py.push_back(py.back() * p[1]);
    pz.push_back(pz.back() * p[2]);
  }
  FieldElement r = f_->zero();
  const auto mons = monomials(d_);
  for (std::size_t s = 0; s < mons.size(); ++s)
    if (!c_[s].is_zero()) r += c_[s] * px[mons[s][0]] * py[mons[s][1]] * pz[mons[s][2]];
  return r;
}

Form Form::partial(int var) const {
  if (var < 0 || var > 2) throw ArgumentError("variable index must be 0, 1 or 2");
  Form r(*f_, std::max(d_ - 1, 0));
  if (d_ == 0) return r;
  const auto mons = monomials(d_);
  for (std::size_t s = 0; s < mons.size(); ++s) {
    auto m = mons[s];
    if (m[var] == 0 || c_[s].is_zero()) continue;
    const int e = m[var];
    m[var] -= 1;
    r.c_[r.index(m[0], m[1])] += c_[s].scaled(e);
  }
  return r;
}

Point3 Form::gradient(const Point3& p) const { return {partial(0).eval(p), partial(1).eval(p), partial(2).eval(p)}; }

Form Form::hessian() const {
  if (d_ < 2) throw ArgumentError("Hessian needs degree at least 2");
  std::array<std::array<Form, 3>, 3> h{
      {{partial(0).partial(0), partial(0).partial(1), partial(0).partial(2)},
       {partial(1).partial(0), partial(1).partial(1), partial(1).partial(2)},
       {partial(2).partial(0), partial(2).partial(1), partial(2).partial(2)}}};
  return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
         h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

Form Form::substitute(const std::array<Point3, 3>& rows) const {
  std::array<std::vector<Form>, 3> pw;
  for (int v = 0; v < 3; ++v) {
    pw[v].push_back(Form::from_coeffs(*f_, 0, {f_->one()}));
    const Form l = linear(*f_, rows[v]);
    for (int e = 1; e <= d_; ++e) pw[v].push_back(pw[v].back() * l);
  }
  Form r(*f_, d_);
  const auto mons = monomials(d_);
  for (std::size_t s = 0; s < mons.size(); ++s)
    if (!c_[s].is_zero()) r = r + c_[s] * (pw[0][mons[s][0]] * pw[1][mons[s][1]] * pw[2][mons[s][2]]);
  return r;
}

namespace {

using Binary = std::vector<FieldElement>;  // coefficient of s^(d-i) t^i at i

Binary binary_mul(const Binary& a, const Binary& b) {
  Binary r(a.size() + b.size() - 1, a[0].field().zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

std::vector<FieldElement> Form::restrict_to_line(const Point3& a, const Point3& b) const {
  std::array<std::vector<Binary>, 3> pw;
  for (int v = 0; v < 3; ++v) {
    pw[v].push_back({f_->one()});
    for (int e = 1; e <= d_; ++e) pw[v].push_back(binary_mul(pw[v].back(), {a[v], b[v]}));
  }
  Binary r(d_ + 1, f_->zero());
  const auto mons = monomials(d_);
  for (std::size_t s = 0; s < mons.size(); ++s) {
    if (c_[s].is_zero()) continue;
    Binary t = binary_mul(binary_mul(pw[0][mons[s][0]], pw[1][mons[s][1]]), pw[2][mons[s][2]]);
    for (int i = 0; i <= d_; ++i) r[i] += c_[s] * t[i];
  }
  return r;
}

Form Form::embed(const Field& ext) const {
  Form r(ext, d_);
  for (std::size_t s = 0; s < c_.size(); ++s) r.c_[s] = f_->embed(c_[s], ext);
  return r;
}

std::string Form::to_string() const {
  std::string s;
  const auto mons = monomials(d_);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[i].to_string() + ")";
    const char* names = "xyz";
    for (int v = 0; v < 3; ++v) {
      if (mons[i][v] == 0) continue;
      s += std::string("*") + names[v];
      if (mons[i][v] > 1) s += "^" + std::to_string(mons[i][v]);
    }
  }
  return s.empty() ? "0" : s;
}

namespace {

// Determinant of a matrix over F[x] by fraction-free elimination.
Poly poly_determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  const Field& f = m[0][0].field();
  if (n == 0) return Poly::constant(f.one());
  Poly prev = Poly::constant(f.one());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Poly(f);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = Poly(f);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// A(x, y, 1) as polynomials in x indexed by the power of y.
std::vector<Poly> affine_in_y(const Form& a) {
  const Field& f = a.field();
  std::vector<std::vector<FieldElement>> c(a.degree() + 1, std::vector<FieldElement>(a.degree() + 1, f.zero()));
  for (const auto& m : Form::monomials(a.degree())) c[m[1]][m[0]] = a.coefficient(m[0], m[1], m[2]);
  std::vector<Poly> out;
  for (auto& row : c) out.emplace_back(f, row);
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

Poly eval_in_x(const std::vector<Poly>& a, const FieldElement& x0) {
  std::vector<FieldElement> c;
  for (const auto& p : a) c.push_back(p.eval(x0));
  return Poly(x0.field(), c);
}

}  // namespace

std::optional<std::vector<Point3>> common_zeros(const Form& a, const Form& b) {
  check_field(a.field(), b.field());
  const Field& f = a.field();
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  std::vector<Point3> out;
  // the line z = 0
  {
    const Point3 e0{f.one(), f.zero(), f.zero()}, e1{f.zero(), f.one(), f.zero()};
    if (a.eval(e0).is_zero() && b.eval(e0).is_zero()) out.push_back(e0);
    auto ra = a.restrict_to_line(e0, e1), rb = b.restrict_to_line(e0, e1);
    std::reverse(ra.begin(), ra.end());
    std::reverse(rb.begin(), rb.end());
    Poly pa(f, ra), pb(f, rb);
    if (pa.is_zero() && pb.is_zero()) return std::nullopt;
    Poly g = gcd(pa, pb);
    if (g.degree() > 0)
      for (const auto& s : g.roots()) out.push_back({s, f.one(), f.zero()});
  }
  // the chart z = 1
  const auto ya = affine_in_y(a), yb = affine_in_y(b);
  if (ya.empty() && yb.empty()) return out;
  if (ya.empty() || yb.empty()) {
    // one form is divisible by z: only zeros on z = 0 remain
    return out;
  }
  const int da = static_cast<int>(ya.size()) - 1, db = static_cast<int>(yb.size()) - 1;
  Poly res(f);
  if (da == 0) {
    res = ya[0];
  } else if (db == 0) {
    res = yb[0];
  } else {
    const int n = da + db;
    std::vector<std::vector<Poly>> syl(n, std::vector<Poly>(n, Poly(f)));
    for (int i = 0; i < db; ++i)
      for (int j = 0; j <= da; ++j) syl[i][i + j] = ya[da - j];
    for (int i = 0; i < da; ++i)
      for (int j = 0; j <= db; ++j) syl[db + i][i + j] = yb[db - j];
    res = poly_determinant(std::move(syl));
  }
  if (res.is_zero()) return std::nullopt;
  if (res.degree() > 0) {
    for (const auto& x0 : res.roots()) {
      Poly pa = eval_in_x(ya, x0), pb = eval_in_x(yb, x0);
      if (pa.is_zero() && pb.is_zero()) return std::nullopt;
      Poly g = gcd(pa, pb);
      if (g.degree() <= 0) continue;
      for (const auto& y0 : g.roots()) out.push_back({x0, y0, f.one()});
    }
  }
  return out;
}

FieldElement binary_resultant(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
  if (a.empty() || b.empty()) throw ArgumentError("empty binary form");
  const Field& f = a[0].field();
  const int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  const int n = da + db;
  if (n == 0) return f.one();
  FieldMatrix m(n, std::vector<FieldElement>(n, f.zero()));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) m[i][i + j] = a[j];
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) m[db + i][i + j] = b[j];
  return determinant(std::move(m));
}

std::vector<int> row_reduce(FieldMatrix& m, int cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < m.size(); ++c) {
    std::size_t r = row;
    while (r < m.size() && m[r][c].is_zero()) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[row]);
    const FieldElement inv = m[row][c].inverse();
    for (int j = c; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c].is_zero()) continue;
      const FieldElement t = m[i][c];
      for (int j = c; j < cols; ++j)
        if (!m[row][j].is_zero()) m[i][j] -= t * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

int rank(FieldMatrix m, int cols) { return static_cast<int>(row_reduce(m, cols).size()); }

std::vector<std::vector<FieldElement>> nullspace(const Field& f, FieldMatrix m, int cols) {
  const auto pivots = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<FieldElement>> out;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(cols, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

FieldElement determinant(FieldMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) throw ArgumentError("determinant of an empty matrix");
  const Field& f = m[0][0].field();
  FieldElement det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m[r][c].is_zero()) ++r;
    if (r == n) return f.zero();
    if (r != c) {
      std::swap(m[r], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const FieldElement inv = m[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      const FieldElement t = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= t * m[c][j];
    }
  }
  return det;
}

std::array<Point3, 3> inverse3(const std::array<Point3, 3>& m) {
  // columns of the adjugate are cross products of rows
  const Point3 c0 = cross(m[1], m[2]), c1 = cross(m[2], m[0]), c2 = cross(m[0], m[1]);
  const FieldElement det = dot(m[0], c0);
  if (det.is_zero()) throw ArgumentError("singular 3x3 matrix");
  const FieldElement inv = det.inverse();
  std::array<Point3, 3> r;
  for (int i = 0; i < 3; ++i) r[i] = {c0[i] * inv, c1[i] * inv, c2[i] * inv};
  return r;
}

Point3 apply3(const std::array<Point3, 3>& m, const Point3& v) { return {dot(m[0], v), dot(m[1], v), dot(m[2], v)}; }

}  // namespace cremona
