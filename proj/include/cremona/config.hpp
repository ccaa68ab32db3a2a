#pragma once

// Ordered point sets in the projective plane over an exact field: linear
// systems with assigned multiplicities, the Cremona action of W_n and the
// Halphen and Coble unnodality checks.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cremona/catalog.hpp"
#include "cremona/poly.hpp"
#include "cremona/weyl.hpp"

namespace cremona {

class PointConfiguration {
 public:
  // Normalizes every point; throws if two points coincide.
  PointConfiguration(const Field& f, std::vector<Point3> points);

  const Field& field() const { return *f_; }
  int n() const { return static_cast<int>(points_.size()); }
  const Point3& point(int i) const { return points_[i]; }
  const std::vector<Point3>& points() const { return points_; }

  PointConfiguration with_point(int i, const Point3& p) const;
  PointConfiguration permuted(const std::vector<int>& order) const;
  PointConfiguration transformed(const std::array<Point3, 3>& m) const;

 private:
  const Field* f_;
  std::vector<Point3> points_;
};

struct Effectivity {
  bool effective = false;
  // Projective dimension of the linear system, -1 when empty.
  int dimension = -1;
};

// Curves of degree d with multiplicity >= m_i at point i for the class
// d e0 - sum m_i e_i. Requires d >= 0 and every m_i >= 0.
Effectivity effectivity_test(const PointConfiguration& cfg, const LatticeVector& cls);

// Same after removing fixed exceptional components: a negative m_i is
// replaced by 0. Negative degree gives an empty system.
Effectivity class_dimension(const PointConfiguration& cfg, const LatticeVector& cls);

// A basis of the curves in the linear system, as forms.
std::vector<Form> linear_system(const PointConfiguration& cfg, const LatticeVector& cls);

struct UnnodalReport {
  bool unnodal = false;
  std::optional<LatticeVector> witness;
  ConditionKind witness_kind = ConditionKind::Other;
  // Coble sets: the sextic class is effective with a unique member.
  bool sextic_unique = false;
  std::string reason;
};

UnnodalReport is_unnodal_halphen(const PointConfiguration& cfg, int m);
UnnodalReport is_coble_set(const PointConfiguration& cfg);

// Indices are 0-based. Points i, j, k become the coordinate points and the
// others are mapped by (x:y:z) -> (yz:xz:xy) in the adapted coordinates.
PointConfiguration cremona_quadratic(const PointConfiguration& cfg, int i, int j, int k);

// Letters act left to right: s_i (i >= 1) swaps points i and i+1 (1-based),
// s_0 is the quadratic move on points 1, 2, 3. The dimension of a class c on
// the result equals the dimension of word_to_isometry(w) c on the input.
PointConfiguration act_by_word(const PointConfiguration& cfg, const WeylWord& w);

struct Equivalence {
  bool equivalent = false;
  // Rows of a matrix sending a_i to b_i when equivalent.
  std::optional<std::array<Point3, 3>> transform;
};

// Ordered equivalence; throws DomainError if a has no four points in
// general position.
Equivalence projectively_equivalent(const PointConfiguration& a, const PointConfiguration& b);

bool collinear(const Point3& a, const Point3& b, const Point3& c);

}  // namespace cremona
