#pragma once

// Exact fields: the rationals and finite fields F_{p^e} realized as
// F_p[x]/(f) for a deterministic irreducible f (the lexicographically first
// monic irreducible of degree e).

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/lattice.hpp"

namespace cremona {

inline constexpr int kMaxFieldDegree = 36;

class FieldElement;

class Field {
 public:
  static const Field& rationals();
  // p prime below 2^31, 1 <= e <= kMaxFieldDegree.
  static const Field& finite(std::uint64_t p, int e = 1);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  bool is_rational() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  std::uint64_t characteristic() const { return p_; }
  int degree() const { return e_; }
  // q = p^e; 0 for Q.
  const Integer& order() const { return q_; }
  // Monic defining polynomial, constant term first (size e + 1).
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  std::string describe() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long v) const;
  FieldElement from_integer(const Integer& v) const;
  FieldElement from_rational(const mpq_class& v) const;
  // Coefficients of the generator powers 1, x, ..., x^{e-1}.
  FieldElement from_coefficients(const std::vector<Integer>& c) const;
  // Finite fields: the element with base-p digits of index as coefficients.
  FieldElement element(const Integer& index) const;
  FieldElement random(std::mt19937_64& rng) const;

  // F_{p^{e k}} containing this field.
  const Field& extension(int k) const;
  // Image of x under the fixed embedding of this field into ext.
  FieldElement embed(const FieldElement& x, const Field& ext) const;
  bool embeds_into(const Field& ext) const;

 private:
  Field(std::uint64_t p, int e);
  std::uint64_t p_;
  int e_;
  Integer q_;
  std::vector<std::uint64_t> modulus_;
};

class FieldElement {
 public:
  FieldElement() = default;

  const Field& field() const { return *f_; }
  bool valid() const { return f_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  FieldElement inverse() const;
  FieldElement pow(const Integer& e) const;
  FieldElement scaled(long k) const;

  // Finite fields: coefficient i of the polynomial representative.
  std::uint64_t coefficient(int i) const { return c_[i]; }
  // Finite fields: sum c_i p^i, a total order used for canonical choices.
  Integer index() const;
  const mpq_class& rational() const { return q_; }
  // Total order: by index for finite fields, by value for Q.
  friend bool less(const FieldElement& a, const FieldElement& b);

  // "17" for prime fields, "[c0, c1, ...]" for extensions, "a/b" for Q.
  std::string to_string() const;

 private:
  friend class Field;
  explicit FieldElement(const Field* f) : f_(f) {}
  const Field* f_ = nullptr;
  std::array<std::uint32_t, kMaxFieldDegree> c_{};
  mpq_class q_;
};

}  // namespace cremona
