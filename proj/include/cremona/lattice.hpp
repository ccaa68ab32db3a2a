#pragma once

// Exact arithmetic in the odd unimodular lattice Z^{1,n} with form
// diag(1,-1,...,-1), its canonical vector and the root sublattice E_n.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cremona/errors.hpp"

namespace cremona {

using Integer = mpz_class;

class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Integer> coords);
  LatticeVector(std::initializer_list<long> coords);

  static LatticeVector zero(int n);
  // e_i for 0 <= i <= n.
  static LatticeVector basis(int n, int i);

  // Number of blown-up points; the vector has n + 1 coordinates.
  int n() const { return static_cast<int>(coords_.size()) - 1; }
  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Integer> coords() const { return coords_; }

  bool is_zero() const;
  // gcd of the coordinates (0 for the zero vector).
  Integer content() const;
  LatticeVector primitive() const;

  LatticeVector operator-() const;
  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator*(const Integer& s, const LatticeVector& v);
  friend LatticeVector operator*(long s, const LatticeVector& v);
  friend bool operator==(const LatticeVector& a, const LatticeVector& b);
  // Lexicographic on coordinates; shorter vectors first.
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b);

  // "[c0, c1, ...]" with decimal integers.
  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

// u.v = u0 v0 - sum ui vi.
Integer inner(const LatticeVector& u, const LatticeVector& v);
Integer square(const LatticeVector& v);

// k_n = (-3, 1, ..., 1).
LatticeVector canonical_vector(int n);

// [alpha_0, ..., alpha_{n-1}] with alpha_0 = e0 - e1 - e2 - e3 and
// alpha_i = e_i - e_{i+1}.
std::vector<LatticeVector> simple_roots(int n);
LatticeVector simple_root(int n, int i);

// Pairings alpha_i . alpha_j.
std::vector<std::vector<long>> gram_matrix(int n);

// Coordinates of v in the basis alpha_0..alpha_{n-1}. Throws ArgumentError
// when v is not orthogonal to k_n.
std::vector<Integer> root_coordinates(const LatticeVector& v);
LatticeVector from_root_coordinates(int n, std::span<const Integer> c);

// True when v.v = -2 and v.k_n = 0.
bool is_root(const LatticeVector& v);

class LatticeIsometry {
 public:
  LatticeIsometry() = default;
  // Row-major (n+1)x(n+1) entries.
  LatticeIsometry(int n, std::vector<Integer> entries);

  static LatticeIsometry identity(int n);
  // Columns are the images of e_0..e_n.
  static LatticeIsometry from_columns(const std::vector<LatticeVector>& columns);

  int n() const { return n_; }
  int dim() const { return n_ + 1; }
  const Integer& at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * dim() + c]; }

  LatticeVector apply(const LatticeVector& v) const;
  LatticeVector column(int c) const;

  // G^T J G == J.
  bool preserves_form() const;
  bool fixes(const LatticeVector& v) const;
  // J G^T J; only meaningful for isometries.
  LatticeIsometry inverse() const;
  LatticeIsometry power(const Integer& e) const;
  bool is_identity() const;

  friend LatticeIsometry operator*(const LatticeIsometry& a, const LatticeIsometry& b);
  friend bool operator==(const LatticeIsometry& a, const LatticeIsometry& b) = default;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<Integer> entries_;
};

}  // namespace cremona
