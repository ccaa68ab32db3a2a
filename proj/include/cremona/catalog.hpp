#pragma once

// Root classes by Diophantine search, the effectivity conditions for Coble
// and Halphen point sets, and residue counts of the mod-2 quadratic form.

#include <string>
#include <vector>

#include "cremona/lattice.hpp"

namespace cremona {

enum class ConditionKind { InfinitelyNear, Collinear3, Conic6, Cubic8Singular, Quartic10Triple, Other };
std::string to_string(ConditionKind k);

// Shape of a root d e0 - sum m_i e_i read off its degree and multiplicities.
ConditionKind condition_kind(const LatticeVector& r);

// Root coordinates reduced mod 2 (alpha basis).
std::vector<int> residue_mod2(const LatticeVector& v);
std::string residue_mod2_string(const LatticeVector& v);

struct ClassFamily {
  ConditionKind label;
  // All integral classes sharing one residue mod 2 E_10.
  std::vector<LatticeVector> representatives;
  // Points (1-based) whose exceptional class appears in the residue.
  std::vector<int> index_set;
  std::vector<int> residue;

  const LatticeVector& representative() const { return representatives.front(); }
};

// Roots m0 e0 - sum m_i e_i with 0 <= m0 <= max_degree, sign normalized
// (e0 coefficient >= 0, first nonzero coordinate positive), sorted.
std::vector<LatticeVector> enumerate_roots(int n, int max_degree, const CancelCheck& cancel = {});

// The 496 residue families for ten points.
std::vector<ClassFamily> coble_conditions();

struct ResidueCounts {
  long isotropic = 0;
  long norm_one = 0;
};
ResidueCounts residue_counts_mod2();

// Classes whose effectivity makes a Halphen surface of index m nodal.
std::vector<LatticeVector> halphen_prohibited_classes(int m);

// CSV rows "label,degree,m1,...,mn,residue_mod2".
std::string catalog_csv(const std::vector<LatticeVector>& classes);
std::string catalog_csv(const std::vector<ClassFamily>& families);

}  // namespace cremona
