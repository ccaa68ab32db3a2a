#pragma once

// Irreducible plane cubics: singularity analysis, the chord-tangent group
// law on the smooth locus, Pic^0 of the smooth locus and the restriction of
// classes orthogonal to the canonical vector to it.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cremona/poly.hpp"
#include "cremona/quadres.hpp"

namespace cremona {

enum class SingularityType { Smooth, Nodal, Cuspidal };
enum class GroupStructure { Elliptic, Multiplicative, Additive };
std::string to_string(SingularityType t);
std::string to_string(GroupStructure g);

// Pic^0 of the smooth locus: a point P standing for [P - o] (elliptic) or
// a parameter value (additive: t, multiplicative: a unit).
struct PicElement {
  std::optional<Point3> point;
  std::optional<FieldElement> value;

  friend bool operator==(const PicElement&, const PicElement&) = default;
  std::string to_string() const;
};

class CubicCurve {
 public:
  // Throws ArgumentError for a reducible or non-reduced cubic.
  explicit CubicCurve(const Form& equation);

  const Form& equation() const { return f_; }
  const Field& field() const { return f_.field(); }
  SingularityType singularity() const { return type_; }
  GroupStructure group() const;
  const std::optional<Point3>& singular_point() const { return singular_; }
  const Point3& origin() const { return origin_; }
  bool inflection_origin() const { return inflection_; }
  // Field of the parameters of a nodal cubic: the quadratic extension when
  // the tangents at the node are conjugate.
  const Field& parameter_field() const { return *pf_; }
  bool split() const { return pf_ == &f_.field(); }

  bool contains(const Point3& p) const;
  bool is_smooth_point(const Point3& p) const;
  bool is_flex(const Point3& p) const;

  // Third intersection of the line through a and b (tangent when equal).
  Point3 third_point(const Point3& a, const Point3& b) const;
  Point3 add(const Point3& a, const Point3& b) const;
  Point3 negate(const Point3& a) const;
  Point3 multiply(const Integer& k, const Point3& a) const;

  // Singular cubics: t(P) with t(o) = 0, additive or multiplicative.
  FieldElement parameter(const Point3& p) const;
  Point3 point_at(const FieldElement& t) const;
  // Additive: collinear iff the parameters sum to line_sum(); similarly a
  // product for the multiplicative case. Zero / one for an inflection origin.
  FieldElement line_value() const;

  PicElement pic_zero() const;
  PicElement pic_of_point(const Point3& p) const;
  // Class of a line section minus 3o.
  PicElement pic_line() const;
  PicElement pic_add(const PicElement& a, const PicElement& b) const;
  PicElement pic_neg(const PicElement& a) const;
  PicElement pic_mul(const Integer& k, const PicElement& a) const;
  bool pic_is_zero(const PicElement& a) const { return a == pic_zero(); }
  // nullopt for elements of infinite order (over Q). Throws
  // InconclusiveError when the order cannot be bounded.
  std::optional<Integer> pic_order(const PicElement& a) const;
  // Key identifying an element, for hashing.
  std::string pic_key(const PicElement& a) const;

  // Smooth rational points; finite fields of order at most max_order.
  std::vector<Point3> rational_points(long max_order = 20000) const;
  Point3 random_point(std::mt19937_64& rng) const;

  std::string describe() const;

 private:
  Form f_;
  SingularityType type_ = SingularityType::Smooth;
  std::optional<Point3> singular_;
  Point3 origin_;
  bool inflection_ = true;
  const Field* pf_;
  // adapted coordinates: the singular point is (0:0:1)
  std::array<Point3, 3> to_std_{}, from_std_{};
  // parameter s = num(x, y) / den(x, y) in adapted coordinates
  Point3 num_{}, den_{};
  FieldElement line_const_;  // kappa or lambda
  FieldElement origin_s_;
  std::optional<Integer> group_order_cache_;

  FieldElement raw_parameter(const Point3& p) const;
  Point3 point_from_raw(const FieldElement& s) const;
  void choose_origin();
};

// Image of d e0 - sum m_i e_i under restriction to Pic^0.
PicElement restriction_hom(const CubicCurve& c, const std::vector<Point3>& points, const LatticeVector& cls);

// 3h - sum p_i has exact order m.
bool halphen_index_check(const CubicCurve& c, const std::vector<Point3>& points, int m);

struct TorsionReport {
  bool is_torsion = false;
  // Least m killing every generator image.
  std::optional<Integer> exponent;
  std::vector<PicElement> generator_images;
};
TorsionReport torsion_set_check(const CubicCurve& c, const std::vector<Point3>& points);

struct HarbourneReport {
  bool harbourne = false;
  bool kernel_is_p_perp = false;
  int rank = 0;  // F_p-rank of the generator images
  std::optional<LatticeVector> witness;
  std::string kernel_description;
};
HarbourneReport harbourne_check(const CubicCurve& c, const std::vector<Point3>& points);

enum class KernelVerdict { Unnodal, Nodal, Inconclusive };
std::string to_string(KernelVerdict v);

struct KernelReport {
  KernelVerdict verdict = KernelVerdict::Inconclusive;
  std::optional<LatticeVector> witness;
  std::optional<RootCertificate> certificate;
  std::string reason;
};

struct KernelSearchOptions {
  int max_degree = 4;
  std::size_t max_group = std::size_t{1} << 18;
  RootSearchOptions root_search;
};
KernelReport unnodal_by_kernel(const CubicCurve& c, const std::vector<Point3>& points,
                               const KernelSearchOptions& options = {});

// Prime factorization by trial division and Pollard rho.
std::vector<std::pair<Integer, int>> factor(const Integer& n);

}  // namespace cremona
