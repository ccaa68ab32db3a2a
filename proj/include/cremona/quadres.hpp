#pragma once

// The root lattice E_n reduced mod m: quadratic values, reflections,
// constructive Witt extension, spinor norms and the search for roots whose
// residue lies in a given submodule.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/lattice.hpp"
#include "cremona/weyl.hpp"

namespace cremona {

// Coordinates in the simple-root basis, reduced to [0, m).
using Residue = std::vector<std::int64_t>;

std::int64_t mod_reduce(std::int64_t a, std::int64_t m);
std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m);
// Throws ArgumentError if a is not invertible mod m.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);
// Prime powers p^k exactly dividing m, ascending in p.
std::vector<std::pair<std::int64_t, int>> prime_power_factors(std::int64_t m);

class ResidueModule {
 public:
  explicit ResidueModule(std::int64_t modulus, int rank = 10);

  std::int64_t modulus() const { return m_; }
  int rank() const { return n_; }
  const std::vector<std::vector<long>>& gram() const { return gram_; }

  Residue zero() const { return Residue(n_, 0); }
  Residue reduce(const std::vector<std::int64_t>& v) const;
  Residue of_root(const LatticeVector& v) const;
  Residue simple_root(int i) const;
  Residue add(const Residue& a, const Residue& b) const;
  Residue sub(const Residue& a, const Residue& b) const;
  Residue scale(std::int64_t c, const Residue& a) const;

  std::int64_t b(const Residue& x, const Residue& y) const;
  // Half of b(x, x), taken over Z before reduction.
  std::int64_t q(const Residue& x) const;
  bool is_unit(std::int64_t a) const;

  // x - (b(x, h) / q(h)) h; throws if q(h) is not a unit.
  Residue reflect(const Residue& h, const Residue& x) const;
  // s_i on residues.
  Residue simple_reflect(int i, const Residue& x) const;

 private:
  std::int64_t m_;
  int n_;
  std::vector<std::vector<long>> gram_;
};

class ResidueSubmodule {
 public:
  ResidueSubmodule(const ResidueModule& parent, std::vector<Residue> generators);

  const ResidueModule& parent() const { return *parent_; }
  const std::vector<Residue>& generators() const { return gens_; }

  // Largest r with a free Z/m submodule of rank r inside.
  int free_rank() const;
  bool contains(const Residue& x) const;
  // Basis of a free Z/p^k submodule of maximal rank in the image mod p^k.
  std::vector<Residue> free_basis(std::int64_t prime, int exponent) const;
  // Basis vectors u_i and divisors d_i with the submodule = span{d_i u_i}.
  const std::vector<Residue>& adapted_basis() const { return basis_; }
  const std::vector<std::int64_t>& divisors() const { return div_; }

 private:
  const ResidueModule* parent_;
  std::vector<Residue> gens_;
  std::vector<Residue> basis_;  // rows of V^{-1}
  std::vector<Residue> dual_;   // columns of V
  std::vector<std::int64_t> div_;
};

// Sample a submodule spanned by `rank` random vectors (free of that rank
// whenever the rank check passes; callers verify).
ResidueSubmodule random_submodule(const ResidueModule& module, int rank, std::mt19937_64& rng);

// v in the span of `basis` (or the full module when empty) with q(v) = a
// mod p^k.
Residue represent_unit(const ResidueModule& module, const std::vector<Residue>& basis, std::int64_t a);

struct ReflectionProduct {
  // h_1 acts first.
  std::vector<Residue> vectors;

  std::size_t size() const { return vectors.size(); }
};

Residue apply(const ResidueModule& module, const ReflectionProduct& p, const Residue& x);
ReflectionProduct concat(const ReflectionProduct& a, const ReflectionProduct& b);

ReflectionProduct witt_extend(const ResidueModule& module, const std::vector<Residue>& from,
                              const std::vector<Residue>& to, std::uint64_t seed = 1);

// Unit modulo squares for Z/p^k: 1 or the least non-residue for odd p;
// the residue mod 8 (k >= 3), mod 4 (k = 2) or 1 (k = 1) for p = 2.
struct SquareClass {
  std::int64_t representative = 1;
  friend bool operator==(const SquareClass&, const SquareClass&) = default;
};
SquareClass square_class(std::int64_t unit, std::int64_t modulus);
SquareClass spinor_norm(const ResidueModule& module, const ReflectionProduct& p);

// Even length and trivial spinor norm after appending reflections in
// vectors of span(basis).
ReflectionProduct adjust_to_spin(const ResidueModule& module, const ReflectionProduct& p,
                                 const std::vector<Residue>& basis);

enum class RootSearchMethod { Theory, OrbitBFS };
std::string to_string(RootSearchMethod m);

struct RootCertificate {
  RootSearchMethod method;
  WeylWord word;  // root = word applied to alpha_start
  LatticeVector root;
  Residue residue;
  std::int64_t modulus;
  int depth = 0;
  int start = 1;
};

struct RootSearchOptions {
  std::size_t max_visited = std::size_t{1} << 24;
  std::uint64_t seed = 1;
  CancelCheck cancel;
};

// A root of E_10 reducing into v. Throws ArgumentError if v has free rank
// below 8 and InconclusiveError when the search budget is exhausted.
RootCertificate find_root_in_submodule(const ResidueSubmodule& v, RootSearchMethod method,
                                       const RootSearchOptions& options = {});

// Residues of the W-orbit of alpha_1 mod m (the real-root residues).
std::size_t count_root_residues(std::int64_t m, int rank = 10, std::size_t max_visited = std::size_t{1} << 24);

}  // namespace cremona
