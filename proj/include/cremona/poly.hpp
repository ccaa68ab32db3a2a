#pragma once

// Univariate polynomials, ternary forms and dense linear algebra over an
// exact field.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cremona/field.hpp"

namespace cremona {

class Poly {
 public:
  explicit Poly(const Field& f) : f_(&f) {}
  // Coefficients, constant term first.
  Poly(const Field& f, std::vector<FieldElement> coeffs);
  static Poly x(const Field& f);
  static Poly constant(const FieldElement& c);

  const Field& field() const { return *f_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FieldElement coefficient(int i) const;
  FieldElement leading() const { return coefficient(degree()); }
  const std::vector<FieldElement>& coeffs() const { return c_; }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const FieldElement& c, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b);
  // Euclidean division; throws on a zero divisor.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  friend Poly operator/(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);

  Poly monic() const;
  Poly derivative() const;
  FieldElement eval(const FieldElement& t) const;
  friend Poly gcd(Poly a, Poly b);
  // base^e mod m
  static Poly powmod(Poly base, Integer e, const Poly& m);

  // Distinct roots in the coefficient field, sorted by less().
  std::vector<FieldElement> roots() const;

  std::string to_string() const;

 private:
  void trim();
  const Field* f_;
  std::vector<FieldElement> c_;
};

using Point3 = std::array<FieldElement, 3>;

// Scale so that the last nonzero coordinate is 1; throws on the zero vector.
Point3 normalize(const Point3& p);
bool same_point(const Point3& a, const Point3& b);
Point3 cross(const Point3& a, const Point3& b);
FieldElement dot(const Point3& a, const Point3& b);
std::string to_string(const Point3& p);

// Homogeneous polynomial in x, y, z.
class Form {
 public:
  Form(const Field& f, int degree);
  // Dehomogenized monomials x^i y^j z^(d-i-j) ordered by descending i then j.
  static std::vector<std::array<int, 3>> monomials(int degree);
  static Form linear(const Field& f, const Point3& coeffs);

  const Field& field() const { return *f_; }
  int degree() const { return d_; }
  FieldElement coefficient(int i, int j, int k) const;
  void set(int i, int j, int k, const FieldElement& c);
  bool is_zero() const;
  // Coefficients in monomials(degree) order.
  const std::vector<FieldElement>& coeffs() const { return c_; }
  static Form from_coeffs(const Field& f, int degree, std::vector<FieldElement> c);

  friend Form operator+(const Form& a, const Form& b);
  friend Form operator-(const Form& a, const Form& b);
  friend Form operator*(const Form& a, const Form& b);
  friend Form operator*(const FieldElement& c, const Form& a);
  friend bool operator==(const Form& a, const Form& b);

  FieldElement eval(const Point3& p) const;
  Form partial(int var) const;
  Point3 gradient(const Point3& p) const;
  Form hessian() const;
  // F(M v) where M is given by rows.
  Form substitute(const std::array<Point3, 3>& rows) const;
  // Coefficients c_i of s^(d-i) t^i in F(s a + t b).
  std::vector<FieldElement> restrict_to_line(const Point3& a, const Point3& b) const;
  Form embed(const Field& ext) const;

  std::string to_string() const;

 private:
  std::size_t index(int i, int j) const;
  const Field* f_;
  int d_;
  std::vector<FieldElement> c_;
};

// Common projective zeros of two forms over their field; nullopt when the
// forms share a component.
std::optional<std::vector<Point3>> common_zeros(const Form& a, const Form& b);

// Resultant of two binary forms given by coefficients of s^(d-i) t^i with
// formal degrees taken from the vector sizes.
FieldElement binary_resultant(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b);

using FieldMatrix = std::vector<std::vector<FieldElement>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(FieldMatrix& m, int cols);
int rank(FieldMatrix m, int cols);
std::vector<std::vector<FieldElement>> nullspace(const Field& f, FieldMatrix m, int cols);
FieldElement determinant(FieldMatrix m);
// Rows of the inverse of a 3x3 matrix given by rows; throws if singular.
std::array<Point3, 3> inverse3(const std::array<Point3, 3>& m);
Point3 apply3(const std::array<Point3, 3>& m, const Point3& v);

}  // namespace cremona
