#pragma once

// JSON and CSV forms of the library's values.
//   vector:      ["3", "-1", ...]                      (e_0 coefficient first)
//   word:        [0, 3, 1]
//   field:       {"p": 101, "e": 1}; the rationals are {"p": 0, "e": 1}
//   element:     "17", "-2/3", or ["c0", "c1", ...] for e > 1
//   config:      {"field": {...}, "points": [[x, y, z], ...]}
//   curve:       {"field": {...}, "coefficients": {"300": a, "021": b, ...}}
//   certificate: {"method": ..., "word": [...], "root": [...], "residue": [...], "modulus": m, ...}

#include <json.hpp>

#include "cremona/config.hpp"
#include "cremona/cubic.hpp"
#include "cremona/quadres.hpp"

namespace cremona {

using Json = nlohmann::ordered_json;

Json to_json(const LatticeVector& v);
LatticeVector vector_from_json(const Json& j);

Json to_json(const WeylWord& w);
WeylWord word_from_json(const Json& j);

// Rows of the matrix, each row a vector.
Json to_json(const LatticeIsometry& g);
LatticeIsometry isometry_from_json(const Json& j);

Json to_json(const Field& f);
const Field& field_from_json(const Json& j);

Json to_json(const FieldElement& x);
// Accepts integers, decimal or fraction strings, and coefficient arrays.
FieldElement element_from_json(const Field& f, const Json& j);

Json to_json(const Point3& p);
Point3 point_from_json(const Field& f, const Json& j);

Json to_json(const PointConfiguration& cfg);
PointConfiguration config_from_json(const Json& j);

Json to_json(const Form& f);
// A curve document, or a bare coefficient map read over f.
Form form_from_json(const Json& j, const Field* f = nullptr);

Json to_json(const RootCertificate& c);
RootCertificate certificate_from_json(const Json& j);

Json to_json(const Residue& r);
Residue residue_from_json(const Json& j);

Json to_json(const PicElement& x);

}  // namespace cremona
