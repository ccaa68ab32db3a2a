#include "cremona/constructions.hpp"

#include <algorithm>

namespace cremona {

Point3 point_of_class(const CubicCurve& c, const PicElement& x) {
  if (c.singularity() == SingularityType::Smooth) return normalize(*x.point);
  return c.point_at(*x.value);
}

namespace {

std::optional<PicElement> element_of_order(const CubicCurve& c, int m, std::mt19937_64& rng) {
  if (m == 1) return c.pic_zero();
  for (int attempt = 0; attempt < 200; ++attempt) {
    const PicElement x = c.pic_of_point(c.random_point(rng));
    const auto ord = c.pic_order(x);
    if (!ord || *ord % m != 0) continue;
    const PicElement e = c.pic_mul(*ord / m, x);
    if (c.pic_order(e) == Integer(m)) return e;
  }
  return std::nullopt;
}

bool contains_point(const std::vector<Point3>& pts, const Point3& p) {
  return std::any_of(pts.begin(), pts.end(), [&](const Point3& q) { return same_point(p, q); });
}

}  // namespace

std::vector<Point3> halphen_points(const CubicCurve& c, int m, std::mt19937_64& rng) {
  if (m < 1) throw ArgumentError("Halphen index must be >= 1");
  const auto eps = element_of_order(c, m, rng);
  if (!eps) throw DomainError("no element of order " + std::to_string(m) + " found on the cubic");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point3> pts;
    PicElement sum = c.pic_zero();
    while (pts.size() < 8) {
      const Point3 p = normalize(c.random_point(rng));
      if (contains_point(pts, p)) continue;
      pts.push_back(p);
      sum = c.pic_add(sum, c.pic_of_point(p));
    }
    // sum over all nine points equals 3h - eps
    const PicElement last = c.pic_add(c.pic_mul(3, c.pic_line()), c.pic_neg(c.pic_add(*eps, sum)));
    Point3 p9;
    try {
      p9 = point_of_class(c, last);
    } catch (const ArgumentError&) {
      continue;
    } catch (const DomainError&) {
      continue;
    }
    if (contains_point(pts, p9) || !c.is_smooth_point(p9)) continue;
    pts.push_back(p9);
    if (!halphen_index_check(c, pts, m)) throw std::logic_error("Halphen construction failed");
    return pts;
  }
  throw DomainError("could not build a Halphen set");
}

std::vector<Point3> unnodal_halphen_points(const CubicCurve& c, int m, std::mt19937_64& rng, int attempts) {
  for (int attempt = 0; attempt < attempts; ++attempt) {
    auto pts = halphen_points(c, m, rng);
    if (is_unnodal_halphen(PointConfiguration(c.field(), pts), m).unnodal) return pts;
  }
  throw DomainError("no unnodal Halphen set found in " + std::to_string(attempts) + " attempts");
}

PointConfiguration coble_points(const CubicCurve& c, std::mt19937_64& rng, int attempts) {
  const Field& k = c.field();
  if (!k.is_finite()) throw ArgumentError("Coble construction needs a finite field");
  const LatticeVector cubic_class = -canonical_vector(9);
  const LatticeVector sextic_class = 2 * cubic_class;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const PointConfiguration base(k, halphen_points(c, 2, rng));
    const auto cubics = linear_system(base, cubic_class);
    const auto sextics = linear_system(base, sextic_class);
    if (cubics.size() != 1 || sextics.size() != 2) continue;
    const Form& f = cubics[0];
    const Form f2 = f * f;
    // a pencil member independent of f^2
    std::optional<Form> g;
    for (const auto& s : sextics) {
      const auto& a = f2.coeffs();
      const auto& b = s.coeffs();
      bool proportional = true;
      std::size_t piv = 0;
      while (piv < a.size() && a[piv].is_zero()) ++piv;
      const FieldElement r = b[piv] / a[piv];
      for (std::size_t t = 0; t < a.size() && proportional; ++t) proportional = b[t] == r * a[t];
      if (!proportional) {
        g = s;
        break;
      }
    }
    if (!g) continue;
    // P off f is singular on the pencil member through it iff 2 g grad f = f grad g
    std::vector<Form> eqs;
    for (int t = 0; t < 3; ++t) eqs.push_back(f * g->partial(t) - k.from_int(2) * (*g * f.partial(t)));
    std::optional<std::vector<Point3>> zs;
    for (int i = 0; i < 3 && !zs; ++i)
      for (int j = i + 1; j < 3 && !zs; ++j) zs = common_zeros(eqs[i], eqs[j]);
    if (!zs) continue;
    std::vector<Point3> candidates;
    for (const auto& z : *zs) {
      const Point3 p = normalize(z);
      if (f.eval(p).is_zero()) continue;
      if (std::all_of(eqs.begin(), eqs.end(), [&](const Form& e) { return e.eval(p).is_zero(); }))
        candidates.push_back(p);
    }
    for (const auto& p : candidates) {
      std::vector<Point3> pts = base.points();
      if (contains_point(pts, p)) continue;
      pts.push_back(p);
      const PointConfiguration cfg(k, pts);
      if (is_coble_set(cfg).unnodal) return cfg;
    }
  }
  throw DomainError("could not build a Coble set");
}

}  // namespace cremona
