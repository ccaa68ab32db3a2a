#pragma once

// Random special point sets: Halphen sets of a prescribed index on a cubic
// and Coble sets obtained from nodes of a Halphen sextic pencil.

#include <random>
#include <vector>

#include "cremona/config.hpp"
#include "cremona/cubic.hpp"

namespace cremona {

// The smooth point p with [p] equal to x in Pic^0.
Point3 point_of_class(const CubicCurve& c, const PicElement& x);

// Nine distinct smooth points of c with 3h - sum p_i of exact order m.
std::vector<Point3> halphen_points(const CubicCurve& c, int m, std::mt19937_64& rng);

// Retries halphen_points until is_unnodal_halphen accepts. Small fields
// rarely admit unnodal sets: chance incidences are frequent there.
std::vector<Point3> unnodal_halphen_points(const CubicCurve& c, int m, std::mt19937_64& rng, int attempts = 50);

// Ten points: an index-2 Halphen set on c plus a node of a sextic of its
// pencil, retried until is_coble_set accepts. c needs rational 2-torsion.
PointConfiguration coble_points(const CubicCurve& c, std::mt19937_64& rng, int attempts = 20);

}  // namespace cremona
