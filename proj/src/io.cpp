#include "cremona/io.hpp"

namespace cremona {

namespace {

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw ArgumentError("not an integer: " + j.dump());
    return v;
  }
  throw ArgumentError("expected an integer, got " + j.dump());
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ArgumentError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

void require_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ArgumentError(std::string(what) + " must be a JSON array");
}

}  // namespace

Json to_json(const LatticeVector& v) {
  Json out = Json::array();
  for (int i = 0; i <= v.n(); ++i) out.push_back(v[i].get_str());
  return out;
}

LatticeVector vector_from_json(const Json& j) {
  require_array(j, "vector");
  if (j.size() < 2) throw ArgumentError("vector needs at least two coordinates");
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return LatticeVector(std::move(c));
}

Json to_json(const WeylWord& w) { return Json(w.letters); }

WeylWord word_from_json(const Json& j) {
  require_array(j, "word");
  WeylWord w;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0) throw ArgumentError("letters are nonnegative integers");
    w.letters.push_back(x.get<int>());
  }
  return w;
}

Json to_json(const LatticeIsometry& g) {
  Json out = Json::array();
  for (int r = 0; r < g.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < g.dim(); ++c) row.push_back(g.at(r, c).get_str());
    out.push_back(row);
  }
  return out;
}

LatticeIsometry isometry_from_json(const Json& j) {
  require_array(j, "matrix");
  const std::size_t d = j.size();
  if (d < 2) throw ArgumentError("matrix too small");
  std::vector<Integer> e;
  for (const auto& row : j) {
    require_array(row, "matrix row");
    if (row.size() != d) throw ArgumentError("matrix must be square");
    for (const auto& x : row) e.push_back(integer_from_json(x));
  }
  return LatticeIsometry(static_cast<int>(d) - 1, std::move(e));
}

Json to_json(const Field& f) { return Json{{"p", f.characteristic()}, {"e", f.degree()}}; }

const Field& field_from_json(const Json& j) {
  const Json& p = member(j, "p");
  const int e = j.contains("e") ? j.at("e").get<int>() : 1;
  if (!p.is_number_integer()) throw ArgumentError("field p must be an integer");
  if (p.get<long long>() == 0) {
    if (e != 1) throw ArgumentError("the rationals have e = 1");
    return Field::rationals();
  }
  if (p.get<long long>() < 0) throw ArgumentError("field p must be positive");
  return Field::finite(p.get<std::uint64_t>(), e);
}

Json to_json(const FieldElement& x) {
  const Field& f = x.field();
  if (f.is_finite() && f.degree() > 1) {
    Json out = Json::array();
    for (int i = 0; i < f.degree(); ++i) out.push_back(std::to_string(x.coefficient(i)));
    return out;
  }
  return x.to_string();
}

FieldElement element_from_json(const Field& f, const Json& j) {
  if (j.is_array()) {
    std::vector<Integer> c;
    for (const auto& x : j) c.push_back(integer_from_json(x));
    return f.from_coefficients(c);
  }
  if (j.is_number_integer()) return f.from_integer(integer_from_json(j));
  if (j.is_string()) {
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0) throw ArgumentError("not a number: " + j.dump());
    q.canonicalize();
    return f.from_rational(q);
  }
  throw ArgumentError("expected a field element, got " + j.dump());
}

Json to_json(const Point3& p) { return Json{to_json(p[0]), to_json(p[1]), to_json(p[2])}; }

Point3 point_from_json(const Field& f, const Json& j) {
  require_array(j, "point");
  if (j.size() != 3) throw ArgumentError("a point has three coordinates");
  return {element_from_json(f, j[0]), element_from_json(f, j[1]), element_from_json(f, j[2])};
}

Json to_json(const PointConfiguration& cfg) {
  Json pts = Json::array();
  for (const auto& p : cfg.points()) pts.push_back(to_json(p));
  return Json{{"field", to_json(cfg.field())}, {"points", pts}};
}

PointConfiguration config_from_json(const Json& j) {
  const Field& f = field_from_json(member(j, "field"));
  const Json& pts = member(j, "points");
  require_array(pts, "points");
  std::vector<Point3> out;
  for (const auto& p : pts) out.push_back(point_from_json(f, p));
  return PointConfiguration(f, std::move(out));
}

Json to_json(const Form& f) {
  Json c = Json::object();
  const auto mons = Form::monomials(f.degree());
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (f.coeffs()[i].is_zero()) continue;
    const auto& m = mons[i];
    c[std::to_string(m[0]) + std::to_string(m[1]) + std::to_string(m[2])] = to_json(f.coeffs()[i]);
  }
  return Json{{"field", to_json(f.field())}, {"coefficients", c}};
}

Form form_from_json(const Json& j, const Field* f) {
  const Json* coeffs = &j;
  if (j.is_object() && j.contains("coefficients")) {
    f = &field_from_json(member(j, "field"));
    coeffs = &j.at("coefficients");
  }
  if (!f) throw ArgumentError("curve needs a field");
  if (!coeffs->is_object() || coeffs->empty()) throw ArgumentError("coefficients must be a nonempty object");
  int degree = -1;
  std::vector<std::pair<std::array<int, 3>, FieldElement>> terms;
  for (const auto& [key, value] : coeffs->items()) {
    if (key.size() != 3 || key.find_first_not_of("0123456789") != std::string::npos)
      throw ArgumentError("monomial keys are three exponent digits, got \"" + key + "\"");
    const std::array<int, 3> e{key[0] - '0', key[1] - '0', key[2] - '0'};
    const int d = e[0] + e[1] + e[2];
    if (degree >= 0 && d != degree) throw ArgumentError("monomials of different degrees");
    degree = d;
    terms.emplace_back(e, element_from_json(*f, value));
  }
  Form out(*f, degree);
  for (const auto& [e, c] : terms) out.set(e[0], e[1], e[2], c);
  return out;
}

Json to_json(const Residue& r) { return Json(r); }

Residue residue_from_json(const Json& j) {
  require_array(j, "residue");
  Residue r;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ArgumentError("residue entries are integers");
    r.push_back(x.get<std::int64_t>());
  }
  return r;
}

Json to_json(const RootCertificate& c) {
  return Json{{"method", to_string(c.method)}, {"word", to_json(c.word)}, {"root", to_json(c.root)},
              {"residue", to_json(c.residue)}, {"modulus", c.modulus},   {"depth", c.depth},
              {"start", c.start}};
}

RootCertificate certificate_from_json(const Json& j) {
  RootCertificate c;
  const std::string m = member(j, "method").get<std::string>();
  if (m == "theory") c.method = RootSearchMethod::Theory;
  else if (m == "bfs") c.method = RootSearchMethod::OrbitBFS;
  else throw ArgumentError("unknown method " + m);
  c.word = word_from_json(member(j, "word"));
  c.root = vector_from_json(member(j, "root"));
  c.residue = residue_from_json(member(j, "residue"));
  c.modulus = member(j, "modulus").get<std::int64_t>();
  c.depth = j.value("depth", 0);
  c.start = j.value("start", 1);
  return c;
}

Json to_json(const PicElement& x) {
  if (x.point) return Json{{"point", to_json(*x.point)}};
  if (x.value) return Json{{"value", to_json(*x.value)}};
  return Json();
}

}  // namespace cremona
