#include "cremona/cremona_c.h"

#include <cstring>
#include <string>

#include "cremona/catalog.hpp"
#include "cremona/constructions.hpp"
#include "cremona/io.hpp"

using namespace cremona;

struct cremona_vector {
  LatticeVector v;
};
struct cremona_isometry {
  LatticeIsometry g;
};
struct cremona_config {
  PointConfiguration c;
};
struct cremona_curve {
  CubicCurve c;
};

namespace {

thread_local std::string last_error;

template <class F>
cremona_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return CREMONA_OK;
  } catch (const ArgumentError& e) {
    last_error = e.what();
    return CREMONA_E_ARGUMENT;
  } catch (const DomainError& e) {
    last_error = e.what();
    return CREMONA_E_DOMAIN;
  } catch (const InconclusiveError& e) {
    last_error = e.what();
    return CREMONA_E_INCONCLUSIVE;
  } catch (const Cancelled& e) {
    last_error = e.what();
    return CREMONA_E_CANCELLED;
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return CREMONA_E_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return CREMONA_E_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class T>
void need(const T* p, const char* what) {
  if (!p) throw ArgumentError(std::string(what) + " is null");
}

Json parse(const char* s, const char* what) {
  need(s, what);
  return Json::parse(s);
}

WeylWord word_of(const int* letters, size_t length) {
  if (length > 0) need(letters, "letters");
  return WeylWord{std::vector<int>(letters, letters + length)};
}

std::vector<Point3> points_of(const CubicCurve& c, const char* points_json) {
  const Json j = parse(points_json, "points");
  if (!j.is_array()) throw ArgumentError("points must be a JSON array");
  std::vector<Point3> pts;
  for (const auto& p : j) pts.push_back(point_from_json(c.field(), p));
  return pts;
}

Json report_json(const UnnodalReport& r) {
  return Json{{"unnodal", r.unnodal},
              {"witness", r.witness ? to_json(*r.witness) : Json()},
              {"witness_kind", r.witness ? to_string(r.witness_kind) : ""},
              {"sextic_unique", r.sextic_unique},
              {"reason", r.reason}};
}

RootSearchMethod method_of(const char* m) {
  need(m, "method");
  const std::string s(m);
  if (s == "theory") return RootSearchMethod::Theory;
  if (s == "bfs") return RootSearchMethod::OrbitBFS;
  throw ArgumentError("method must be theory or bfs");
}

ResidueSubmodule submodule_of(const ResidueModule& module, const char* generators_json) {
  const Json j = parse(generators_json, "generators");
  if (!j.is_array()) throw ArgumentError("generators must be a JSON array");
  std::vector<Residue> gens;
  for (const auto& g : j) {
    Residue r = residue_from_json(g);
    if (static_cast<int>(r.size()) != module.rank()) throw ArgumentError("generator has the wrong length");
    gens.push_back(module.reduce(r));
  }
  return ResidueSubmodule(module, gens);
}

}  // namespace

extern "C" {

const char* cremona_version(void) { return CREMONA_VERSION; }
const char* cremona_last_error(void) { return last_error.c_str(); }
void cremona_string_free(char* s) { std::free(s); }

cremona_status cremona_vector_from_json(const char* json, cremona_vector** out) {
  return guarded([&] {
    need(out, "out");
    *out = new cremona_vector{vector_from_json(parse(json, "json"))};
  });
}

cremona_status cremona_vector_to_json(const cremona_vector* v, char** out) {
  return guarded([&] {
    need(v, "vector");
    need(out, "out");
    *out = dup(to_json(v->v).dump());
  });
}

cremona_status cremona_simple_root(int n, int i, cremona_vector** out) {
  return guarded([&] {
    need(out, "out");
    *out = new cremona_vector{simple_root(n, i)};
  });
}

cremona_status cremona_canonical_vector(int n, cremona_vector** out) {
  return guarded([&] {
    need(out, "out");
    *out = new cremona_vector{canonical_vector(n)};
  });
}

cremona_status cremona_vector_inner(const cremona_vector* u, const cremona_vector* v, char** out) {
  return guarded([&] {
    need(u, "u");
    need(v, "v");
    need(out, "out");
    *out = dup(inner(u->v, v->v).get_str());
  });
}

cremona_status cremona_vector_scale(const cremona_vector* v, long k, cremona_vector** out) {
  return guarded([&] {
    need(v, "vector");
    need(out, "out");
    *out = new cremona_vector{k * v->v};
  });
}

void cremona_vector_free(cremona_vector* v) { delete v; }

cremona_status cremona_gram_matrix(int n, char** json) {
  return guarded([&] {
    need(json, "out");
    *json = dup(Json(gram_matrix(n)).dump());
  });
}

cremona_status cremona_enumerate_roots(int n, int max_degree, int csv, char** out) {
  return guarded([&] {
    need(out, "out");
    const auto roots = enumerate_roots(n, max_degree);
    if (csv) {
      *out = dup(catalog_csv(roots));
      return;
    }
    Json j = Json::array();
    for (const auto& r : roots)
      j.push_back(Json{{"label", to_string(condition_kind(r))}, {"class", to_json(r)}, {"residue_mod2", residue_mod2(r)}});
    *out = dup(j.dump());
  });
}

cremona_status cremona_coble_conditions(int csv, char** out) {
  return guarded([&] {
    need(out, "out");
    const auto families = coble_conditions();
    if (csv) {
      *out = dup(catalog_csv(families));
      return;
    }
    Json j = Json::array();
    for (const auto& f : families) {
      Json reps = Json::array();
      for (const auto& r : f.representatives) reps.push_back(to_json(r));
      j.push_back(Json{{"label", to_string(f.label)}, {"index_set", f.index_set}, {"residue", f.residue},
                       {"representatives", reps}});
    }
    *out = dup(j.dump());
  });
}

cremona_status cremona_residue_counts(long* isotropic, long* norm_one) {
  return guarded([&] {
    need(isotropic, "isotropic");
    need(norm_one, "norm_one");
    const auto c = residue_counts_mod2();
    *isotropic = c.isotropic;
    *norm_one = c.norm_one;
  });
}

cremona_status cremona_noether_reduce(const cremona_vector* root, char** json) {
  return guarded([&] {
    need(root, "root");
    need(json, "out");
    const auto r = noether_reduce(root->v);
    Json j{{"terminal", to_json(r.terminal)},
           {"word", to_json(r.word)},
           {"simple_root", r.terminal_is_simple_root ? Json(r.terminal_root_index) : Json()},
           {"sign", r.terminal_sign},
           {"trace", format_trace(r)}};
    *json = dup(j.dump());
  });
}

cremona_status cremona_isometry_from_word(int n, const int* letters, size_t length, cremona_isometry** out) {
  return guarded([&] {
    need(out, "out");
    *out = new cremona_isometry{word_to_isometry(word_of(letters, length), n)};
  });
}

cremona_status cremona_isometry_from_json(const char* json, cremona_isometry** out) {
  return guarded([&] {
    need(out, "out");
    const Json j = parse(json, "json");
    LatticeIsometry g = j.is_object() ? word_to_isometry(word_from_json(j.at("word")), j.at("n").get<int>())
                                      : isometry_from_json(j);
    if (!g.preserves_form()) throw ArgumentError("matrix does not preserve the intersection form");
    *out = new cremona_isometry{std::move(g)};
  });
}

cremona_status cremona_isometry_iota(const cremona_vector* w, cremona_isometry** out) {
  return guarded([&] {
    need(w, "w");
    need(out, "out");
    *out = new cremona_isometry{iota_isometry(w->v)};
  });
}

cremona_status cremona_isometry_translation(const cremona_vector* a, long m, cremona_isometry** out) {
  return guarded([&] {
    need(a, "a");
    need(out, "out");
    *out = new cremona_isometry{translation_isometry(a->v, m)};
  });
}

cremona_status cremona_isometry_to_json(const cremona_isometry* g, char** out) {
  return guarded([&] {
    need(g, "isometry");
    need(out, "out");
    *out = dup(to_json(g->g).dump());
  });
}

cremona_status cremona_isometry_apply(const cremona_isometry* g, const cremona_vector* v, cremona_vector** out) {
  return guarded([&] {
    need(g, "isometry");
    need(v, "vector");
    need(out, "out");
    if (v->v.n() != g->g.n()) throw ArgumentError("dimension mismatch");
    *out = new cremona_vector{g->g.apply(v->v)};
  });
}

cremona_status cremona_isometry_classify(const cremona_isometry* g, char** json) {
  return guarded([&] {
    need(g, "isometry");
    need(json, "out");
    const auto c = classify_isometry(g->g);
    Json poly = Json::array();
    for (const auto& x : c.char_poly) poly.push_back(x.get_str());
    Json j{{"kind", to_string(c.kind)},
           {"witness", c.witness ? to_json(*c.witness) : Json()},
           {"order", c.order ? Json(c.order->get_str()) : Json()},
           {"spectral_radius", c.spectral_radius},
           {"char_poly", poly}};
    *json = dup(j.dump());
  });
}

cremona_status cremona_isometry_to_word(const cremona_isometry* g, char** json) {
  return guarded([&] {
    need(g, "isometry");
    need(json, "out");
    *json = dup(to_json(isometry_to_word(g->g)).dump());
  });
}

void cremona_isometry_free(cremona_isometry* g) { delete g; }

cremona_status cremona_config_from_json(const char* json, cremona_config** out) {
  return guarded([&] {
    need(out, "out");
    *out = new cremona_config{config_from_json(parse(json, "json"))};
  });
}

cremona_status cremona_config_to_json(const cremona_config* c, char** out) {
  return guarded([&] {
    need(c, "config");
    need(out, "out");
    *out = dup(to_json(c->c).dump());
  });
}

cremona_status cremona_config_size(const cremona_config* c, int* n) {
  return guarded([&] {
    need(c, "config");
    need(n, "out");
    *n = c->c.n();
  });
}

cremona_status cremona_config_effectivity(const cremona_config* c, const cremona_vector* cls, int* effective,
                                          int* dimension) {
  return guarded([&] {
    need(c, "config");
    need(cls, "class");
    const auto e = class_dimension(c->c, cls->v);
    if (effective) *effective = e.effective;
    if (dimension) *dimension = e.dimension;
  });
}

cremona_status cremona_config_quadratic(const cremona_config* c, int i, int j, int k, cremona_config** out) {
  return guarded([&] {
    need(c, "config");
    need(out, "out");
    *out = new cremona_config{cremona_quadratic(c->c, i, j, k)};
  });
}

cremona_status cremona_config_act(const cremona_config* c, const int* letters, size_t length, cremona_config** out) {
  return guarded([&] {
    need(c, "config");
    need(out, "out");
    *out = new cremona_config{act_by_word(c->c, word_of(letters, length))};
  });
}

cremona_status cremona_config_equivalent(const cremona_config* a, const cremona_config* b, int* equivalent) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    need(equivalent, "out");
    *equivalent = projectively_equivalent(a->c, b->c).equivalent;
  });
}

cremona_status cremona_config_halphen_check(const cremona_config* c, int m, char** json) {
  return guarded([&] {
    need(c, "config");
    need(json, "out");
    *json = dup(report_json(is_unnodal_halphen(c->c, m)).dump());
  });
}

cremona_status cremona_config_coble_check(const cremona_config* c, char** json) {
  return guarded([&] {
    need(c, "config");
    need(json, "out");
    *json = dup(report_json(is_coble_set(c->c)).dump());
  });
}

void cremona_config_free(cremona_config* c) { delete c; }

cremona_status cremona_curve_from_json(const char* json, const char* field_json, cremona_curve** out) {
  return guarded([&] {
    need(out, "out");
    const Field* f = field_json ? &field_from_json(parse(field_json, "field")) : nullptr;
    const Form form = form_from_json(parse(json, "json"), f);
    if (form.degree() != 3) throw ArgumentError("curve must be a cubic");
    *out = new cremona_curve{CubicCurve(form)};
  });
}

cremona_status cremona_curve_describe(const cremona_curve* c, char** json) {
  return guarded([&] {
    need(c, "curve");
    need(json, "out");
    const CubicCurve& k = c->c;
    Json j{{"equation", to_json(k.equation())},
           {"singularity", to_string(k.singularity())},
           {"group", to_string(k.group())},
           {"origin", to_json(k.origin())},
           {"inflection_origin", k.inflection_origin()},
           {"singular_point", k.singular_point() ? to_json(*k.singular_point()) : Json()},
           {"split", k.singularity() == SingularityType::Nodal ? Json(k.split()) : Json()}};
    *json = dup(j.dump());
  });
}

cremona_status cremona_curve_points_from_params(const cremona_curve* c, const char* params_json, char** out) {
  return guarded([&] {
    need(c, "curve");
    need(out, "out");
    const Json j = parse(params_json, "params");
    if (!j.is_array()) throw ArgumentError("params must be a JSON array");
    Json pts = Json::array();
    for (const auto& t : j) pts.push_back(to_json(c->c.point_at(element_from_json(c->c.parameter_field(), t))));
    *out = dup(pts.dump());
  });
}

cremona_status cremona_curve_halphen_points(const cremona_curve* c, int m, uint64_t seed, int require_unnodal,
                                            cremona_config** out) {
  return guarded([&] {
    need(c, "curve");
    need(out, "out");
    std::mt19937_64 rng(seed);
    auto pts = require_unnodal ? unnodal_halphen_points(c->c, m, rng) : halphen_points(c->c, m, rng);
    *out = new cremona_config{PointConfiguration(c->c.field(), std::move(pts))};
  });
}

cremona_status cremona_curve_coble_points(const cremona_curve* c, uint64_t seed, cremona_config** out) {
  return guarded([&] {
    need(c, "curve");
    need(out, "out");
    std::mt19937_64 rng(seed);
    *out = new cremona_config{coble_points(c->c, rng)};
  });
}

cremona_status cremona_curve_halphen_index(const cremona_curve* c, const char* points_json, int m, int* ok) {
  return guarded([&] {
    need(c, "curve");
    need(ok, "out");
    *ok = halphen_index_check(c->c, points_of(c->c, points_json), m);
  });
}

cremona_status cremona_curve_harbourne_check(const cremona_curve* c, const char* points_json, char** json) {
  return guarded([&] {
    need(c, "curve");
    need(json, "out");
    const auto r = harbourne_check(c->c, points_of(c->c, points_json));
    Json j{{"harbourne", r.harbourne},
           {"kernel", r.kernel_description},
           {"rank", r.rank},
           {"witness", r.witness ? to_json(*r.witness) : Json()}};
    *json = dup(j.dump());
  });
}

cremona_status cremona_curve_kernel_check(const cremona_curve* c, const char* points_json, int max_degree,
                                          uint64_t budget, uint64_t seed, char** json) {
  return guarded([&] {
    need(c, "curve");
    need(json, "out");
    KernelSearchOptions o;
    o.max_degree = max_degree;
    if (budget) o.root_search.max_visited = budget;
    o.root_search.seed = seed;
    const auto r = unnodal_by_kernel(c->c, points_of(c->c, points_json), o);
    Json j{{"verdict", to_string(r.verdict)},
           {"witness", r.witness ? to_json(*r.witness) : Json()},
           {"certificate", r.certificate ? to_json(*r.certificate) : Json()},
           {"reason", r.reason}};
    *json = dup(j.dump());
  });
}

void cremona_curve_free(cremona_curve* c) { delete c; }

cremona_status cremona_random_submodule(int64_t m, int rank, uint64_t seed, char** json) {
  return guarded([&] {
    need(json, "out");
    const ResidueModule module(m);
    std::mt19937_64 rng(seed);
    *json = dup(Json(random_submodule(module, rank, rng).generators()).dump());
  });
}

cremona_status cremona_find_root(int64_t m, const char* generators_json, const char* method, uint64_t budget,
                                 uint64_t seed, char** certificate_json) {
  return guarded([&] {
    need(certificate_json, "out");
    const ResidueModule module(m);
    const auto v = submodule_of(module, generators_json);
    RootSearchOptions o;
    if (budget) o.max_visited = budget;
    o.seed = seed;
    *certificate_json = dup(to_json(find_root_in_submodule(v, method_of(method), o)).dump());
  });
}

cremona_status cremona_check_certificate(const char* generators_json, const char* certificate_json, int* valid) {
  return guarded([&] {
    need(valid, "out");
    const RootCertificate c = certificate_from_json(parse(certificate_json, "certificate"));
    const ResidueModule module(c.modulus);
    const auto v = submodule_of(module, generators_json);
    const bool word_ok = c.start >= 0 && c.start < 10 && apply_word(c.word, simple_root(10, c.start)) == c.root;
    *valid = word_ok && is_root(c.root) && module.of_root(c.root) == module.reduce(c.residue) && v.contains(c.residue);
  });
}

}  // extern "C"
