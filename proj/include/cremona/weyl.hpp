#pragma once

// Weyl group elements as integer matrices, the E_8 -> W_9 embedding, the
// translation isometries of a Halphen surface, the elliptic / parabolic /
// hyperbolic trichotomy and Noether reduction of roots.

#include <optional>
#include <string>
#include <vector>

#include "cremona/lattice.hpp"

namespace cremona {

// Letters are simple-root indices. The word [l1, ..., lk] denotes the
// product s_{l1} s_{l2} ... s_{lk}, so s_{lk} acts first.
struct WeylWord {
  std::vector<int> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

WeylWord inverse(const WeylWord& w);
WeylWord concat(const WeylWord& a, const WeylWord& b);

// v + (v.alpha) alpha. alpha must have square -2.
LatticeVector reflect(const LatticeVector& alpha, const LatticeVector& v);
// s_i applied to v, without building the root.
LatticeVector apply_simple_reflection(int i, const LatticeVector& v);
LatticeVector apply_word(const WeylWord& w, const LatticeVector& v);

LatticeIsometry reflection_matrix(const LatticeVector& alpha);
LatticeIsometry word_to_isometry(const WeylWord& w, int n);
// A word for g by chamber descent of g(rho), rho dual to the simple roots;
// DomainError when g is not in W_n.
WeylWord isometry_to_word(const LatticeIsometry& g, std::size_t max_length = 100000);

// The map v -> v + (v.k)w - ((w.v) + (v.k)(w.w)/2) k on Z^{1,9}, k = k_9.
LatticeVector iota(const LatticeVector& w, const LatticeVector& v);
LatticeIsometry iota_isometry(const LatticeVector& w);
// w = sum c_i alpha_i over the alpha_0..alpha_7 span.
LatticeVector e8_vector(const std::vector<long>& coefficients);

// D -> D - m(D.K)A + [m(D.A) - (m^2/2)(D.K)A^2] K on Z^{1,9}.
LatticeIsometry translation_isometry(const LatticeVector& a, long m);

enum class IsometryKind { Elliptic, Parabolic, Hyperbolic };
std::string to_string(IsometryKind k);

struct IsometryClass {
  IsometryKind kind;
  // Elliptic: an invariant class of positive square. Parabolic: the
  // primitive isotropic fixed class, positive e_0 coefficient.
  std::optional<LatticeVector> witness;
  // Largest eigenvalue modulus (1 for elliptic and parabolic).
  double spectral_radius = 1.0;
  // Elliptic only: the order of g.
  std::optional<Integer> order;
  // Characteristic polynomial, constant term first.
  std::vector<Integer> char_poly;
};

IsometryClass classify_isometry(const LatticeIsometry& g);

// Characteristic polynomial det(t I - g), constant term first.
std::vector<Integer> characteristic_polynomial(const LatticeIsometry& g);
// Largest modulus of an eigenvalue (floating point).
double spectral_radius(const LatticeIsometry& g);

struct NoetherStep {
  int letter;
  LatticeVector vector;  // after applying the letter
};

struct NoetherResult {
  LatticeVector terminal;
  WeylWord word;  // word applied to terminal gives the input
  std::vector<NoetherStep> steps;
  bool terminal_is_simple_root = false;
  int terminal_root_index = -1;
  int terminal_sign = 0;
};

NoetherResult noether_reduce(const LatticeVector& r);
// "step <k>: apply s_<i>, vector = [...]" per step.
std::vector<std::string> format_trace(const NoetherResult& r);

}  // namespace cremona
