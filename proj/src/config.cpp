#include "cremona/config.hpp"

#include <algorithm>

namespace cremona {

PointConfiguration::PointConfiguration(const Field& f, std::vector<Point3> points) : f_(&f) {
  for (auto& p : points) {
    for (const auto& c : p)
      if (!c.valid() || &c.field() != f_) throw ArgumentError("point coordinates from a different field");
    p = normalize(p);
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (points[i] == points[j])
        throw ArgumentError("points " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide");
  points_ = std::move(points);
}

PointConfiguration PointConfiguration::with_point(int i, const Point3& p) const {
  auto pts = points_;
  pts.at(i) = p;
  return PointConfiguration(*f_, std::move(pts));
}

PointConfiguration PointConfiguration::permuted(const std::vector<int>& order) const {
  std::vector<Point3> pts;
  for (int i : order) pts.push_back(points_.at(i));
  return PointConfiguration(*f_, std::move(pts));
}

PointConfiguration PointConfiguration::transformed(const std::array<Point3, 3>& m) const {
  std::vector<Point3> pts;
  for (const auto& p : points_) pts.push_back(apply3(m, p));
  return PointConfiguration(*f_, std::move(pts));
}

bool collinear(const Point3& a, const Point3& b, const Point3& c) { return dot(cross(a, b), c).is_zero(); }

namespace {

void check_class(const PointConfiguration& cfg, const LatticeVector& cls) {
  if (cls.n() != cfg.n())
    throw ArgumentError("class has " + std::to_string(cls.n()) + " multiplicities for " + std::to_string(cfg.n()) +
                        " points");
}

FieldMatrix interpolation_matrix(const PointConfiguration& cfg, int d, const std::vector<long>& mult) {
  const Field& f = cfg.field();
  const auto mons = Form::monomials(d);
  FieldMatrix rows;
  std::vector<std::vector<FieldElement>> binom(d + 1);
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= a; ++b) {
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), a, b);
      binom[a].push_back(f.from_integer(c));
    }
  for (int i = 0; i < cfg.n(); ++i) {
    const long m = mult[i];
    if (m <= 0) continue;
    const Point3& p = cfg.point(i);
    const int chart = !p[2].is_zero() ? 2 : (!p[1].is_zero() ? 1 : 0);
    const int u = chart == 0 ? 1 : 0, v = chart == 2 ? 1 : 2;
    std::array<std::vector<FieldElement>, 3> pw;
    for (int c = 0; c < 3; ++c) {
      pw[c].push_back(f.one());
      for (int e = 1; e <= d; ++e) pw[c].push_back(pw[c].back() * p[c]);
    }
    // Hasse derivative conditions: coefficient of u^s v^t at p, s + t < m
    for (long s = 0; s < m && s <= d; ++s)
      for (long t = 0; s + t < m && s + t <= d; ++t) {
        std::vector<FieldElement> row(mons.size(), f.zero());
        for (std::size_t k = 0; k < mons.size(); ++k) {
          const int eu = mons[k][u], ev = mons[k][v];
          if (eu < s || ev < t) continue;
          row[k] = binom[eu][s] * pw[u][eu - s] * binom[ev][t] * pw[v][ev - t] * pw[chart][mons[k][chart]];
        }
        rows.push_back(std::move(row));
      }
  }
  return rows;
}

std::vector<long> multiplicities(const LatticeVector& cls) {
  std::vector<long> m;
  for (int i = 1; i <= cls.n(); ++i) m.push_back(-cls[i].get_si());
  return m;
}

}  // namespace

Effectivity effectivity_test(const PointConfiguration& cfg, const LatticeVector& cls) {
  check_class(cfg, cls);
  if (cls[0] < 0) throw ArgumentError("degree must be nonnegative");
  const auto mult = multiplicities(cls);
  for (long m : mult)
    if (m < 0) throw ArgumentError("multiplicities must be nonnegative");
  const int d = static_cast<int>(cls[0].get_si());
  const int cols = (d + 1) * (d + 2) / 2;
  const int r = rank(interpolation_matrix(cfg, d, mult), cols);
  Effectivity out;
  out.effective = r < cols;
  out.dimension = cols - r - 1;
  return out;
}

namespace {

LatticeVector peeled(const LatticeVector& cls) {
  std::vector<Integer> c(cls.coords().begin(), cls.coords().end());
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] > 0) c[i] = 0;
  return LatticeVector(std::move(c));
}

}  // namespace

Effectivity class_dimension(const PointConfiguration& cfg, const LatticeVector& cls) {
  check_class(cfg, cls);
  if (cls[0] < 0) return {};
  return effectivity_test(cfg, peeled(cls));
}

std::vector<Form> linear_system(const PointConfiguration& cfg, const LatticeVector& cls) {
  check_class(cfg, cls);
  if (cls[0] < 0) return {};
  const LatticeVector c = peeled(cls);
  const int d = static_cast<int>(c[0].get_si());
  const int cols = (d + 1) * (d + 2) / 2;
  std::vector<Form> out;
  for (auto& v : nullspace(cfg.field(), interpolation_matrix(cfg, d, multiplicities(c)), cols))
    out.push_back(Form::from_coeffs(cfg.field(), d, std::move(v)));
  return out;
}

UnnodalReport is_unnodal_halphen(const PointConfiguration& cfg, int m) {
  if (cfg.n() != 9) throw ArgumentError("a Halphen set has 9 points, got " + std::to_string(cfg.n()));
  if (m < 1) throw ArgumentError("Halphen index must be >= 1");
  UnnodalReport out;
  for (const auto& c : halphen_prohibited_classes(m)) {
    if (class_dimension(cfg, c).effective) {
      out.witness = c;
      out.witness_kind = condition_kind(c);
      out.reason = "effective class " + c.to_string();
      return out;
    }
  }
  out.unnodal = true;
  return out;
}

UnnodalReport is_coble_set(const PointConfiguration& cfg) {
  if (cfg.n() != 10) throw ArgumentError("a Coble set has 10 points, got " + std::to_string(cfg.n()));
  UnnodalReport out;
  std::vector<Integer> sextic(11, -2);
  sextic[0] = 6;
  const auto s = class_dimension(cfg, LatticeVector(sextic));
  out.sextic_unique = s.effective && s.dimension == 0;
  if (!out.sextic_unique) {
    out.reason = s.effective ? "sextic system has dimension " + std::to_string(s.dimension)
                             : "no sextic is singular at all ten points";
    return out;
  }
  for (const auto& fam : coble_conditions()) {
    for (const auto& c : fam.representatives) {
      if (class_dimension(cfg, c).effective) {
        out.witness = c;
        out.witness_kind = fam.label;
        out.reason = "effective class " + c.to_string();
        return out;
      }
    }
  }
  out.unnodal = true;
  return out;
}

PointConfiguration cremona_quadratic(const PointConfiguration& cfg, int i, int j, int k) {
  const int n = cfg.n();
  if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n || i == j || j == k || i == k)
    throw ArgumentError("base indices must be three distinct point indices");
  const Field& f = cfg.field();
  const Point3 &a = cfg.point(i), &b = cfg.point(j), &c = cfg.point(k);
  if (collinear(a, b, c)) throw DomainError("base points are collinear");
  const std::array<Point3, 3> cols{{{a[0], b[0], c[0]}, {a[1], b[1], c[1]}, {a[2], b[2], c[2]}}};
  const auto to_frame = inverse3(cols);
  std::vector<Point3> pts(n);
  for (int t = 0; t < n; ++t) {
    if (t == i) {
      pts[t] = {f.one(), f.zero(), f.zero()};
    } else if (t == j) {
      pts[t] = {f.zero(), f.one(), f.zero()};
    } else if (t == k) {
      pts[t] = {f.zero(), f.zero(), f.one()};
    } else {
      const Point3 r = apply3(to_frame, cfg.point(t));
      if (r[0].is_zero() || r[1].is_zero() || r[2].is_zero())
        throw DomainError("point " + std::to_string(t + 1) + " lies on a line through two base points");
      pts[t] = {r[1] * r[2], r[0] * r[2], r[0] * r[1]};
    }
  }
  return PointConfiguration(f, std::move(pts));
}

PointConfiguration act_by_word(const PointConfiguration& cfg, const WeylWord& w) {
  PointConfiguration cur = cfg;
  for (std::size_t s = 0; s < w.letters.size(); ++s) {
    const int l = w.letters[s];
    if (l < 0 || l >= cfg.n()) throw ArgumentError("letter " + std::to_string(l) + " out of range");
    if (l == 0) {
      if (cfg.n() < 3) throw ArgumentError("s_0 needs at least three points");
      try {
        cur = cremona_quadratic(cur, 0, 1, 2);
      } catch (const DomainError& e) {
        throw DomainError("step " + std::to_string(s + 1) + ": " + e.what());
      }
    } else {
      std::vector<int> order(cfg.n());
      for (int t = 0; t < cfg.n(); ++t) order[t] = t;
      std::swap(order[l - 1], order[l]);
      cur = cur.permuted(order);
    }
  }
  return cur;
}

namespace {

// Matrix sending e1, e2, e3, e1+e2+e3 to the given points, if they are in
// general position.
std::optional<std::array<Point3, 3>> frame(const Point3& p1, const Point3& p2, const Point3& p3, const Point3& p4) {
  const std::array<Point3, 3> cols{{{p1[0], p2[0], p3[0]}, {p1[1], p2[1], p3[1]}, {p1[2], p2[2], p3[2]}}};
  if (collinear(p1, p2, p3)) return std::nullopt;
  const Point3 l = apply3(inverse3(cols), p4);
  if (l[0].is_zero() || l[1].is_zero() || l[2].is_zero()) return std::nullopt;
  std::array<Point3, 3> m;
  for (int r = 0; r < 3; ++r) m[r] = {cols[r][0] * l[0], cols[r][1] * l[1], cols[r][2] * l[2]};
  return m;
}

std::array<Point3, 3> multiply(const std::array<Point3, 3>& a, const std::array<Point3, 3>& b) {
  std::array<Point3, 3> r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  }
  return r;
}

}  // namespace

Equivalence projectively_equivalent(const PointConfiguration& a, const PointConfiguration& b) {
  if (&a.field() != &b.field()) throw ArgumentError("configurations over different fields");
  if (a.n() != b.n()) return {};
  const int n = a.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const auto fa = frame(a.point(i), a.point(j), a.point(k), a.point(l));
          if (!fa) continue;
          const auto fb = frame(b.point(i), b.point(j), b.point(k), b.point(l));
          if (!fb) return {};
          const auto t = multiply(*fb, inverse3(*fa));
          for (int s = 0; s < n; ++s)
            if (!same_point(apply3(t, a.point(s)), b.point(s))) return {};
          return {true, t};
        }
  throw DomainError("no four points in general position");
}

}  // namespace cremona
