#pragma once

// Small exact linear-algebra kernels over Z and Q shared by the lattice
// modules. Internal header.

#include <gmpxx.h>

#include <vector>

namespace cremona::detail {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Basis of the rational kernel {x : M x = 0}, each vector scaled to a
// primitive integer vector.
std::vector<std::vector<mpz_class>> integer_kernel(const IntMatrix& m, std::size_t cols);

// Determinant by fraction-free elimination.
mpz_class determinant(IntMatrix m);

// Polynomials over Z as coefficient vectors, constant term first.
using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p);
// Exact division; returns false when b does not divide a over Z.
bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly& quotient);
IntPoly cyclotomic(unsigned k);

}  // namespace cremona::detail
