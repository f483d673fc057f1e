#pragma once

#include <string>
#include <vector>

#include "orbipencil/presentation.hpp"
#include "orbipencil/snf.hpp"

namespace orbipencil {

// Canonical form F_r * Z_{m_1} * ... * Z_{m_s}. Within this class the
// isomorphism type is exactly (r, multiset of m_i): the groups are Hopfian,
// so comparing normal forms is a legitimate equality test.
struct CyclicFreeProduct {
  long free_rank = 0;
  std::vector<long> torsion;  // sorted, every entry >= 2

  CyclicFreeProduct() = default;
  CyclicFreeProduct(long r, std::vector<long> m);

  friend bool operator==(const CyclicFreeProduct&, const CyclicFreeProduct&) = default;

  Presentation presentation() const;
  AbelianInvariants abelianization() const;
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

  std::string str() const;
  static CyclicFreeProduct parse(const std::string& text);
};

// free product with one more Z factor
CyclicFreeProduct with_free_factor(CyclicFreeProduct g);

// Deleting a fiber of multiplicity m from the carried set: one free factor is
// consumed and an orbifold point of order m appears when m > 1.
CyclicFreeProduct with_fiber_deleted(CyclicFreeProduct g, long multiplicity);

// Reduction of the two-generator presentation
//   < g1, g2 | {g1^{p k_j} g2^{q l_j}}_j, [g1, g2^q], [g2, g1^p] >
// to its (a, b) normal form: g1^p and g2^q are central, so the relators form
// a lattice in their exponents; integer row reduction brings it to
// {g1^{p k} g2^{q a}, g2^{q b}}. The verdict is_pq asks whether the
// abelianization is Z_{pq}, which happens exactly when k = b = 1, and then
// the group is Z_p * Z_q.
struct Presn0Result {
  bool is_pq = false;
  CyclicFreeProduct group;    // meaningful only when is_pq
  Presentation reduced;       // the (a, b) normal form presentation
  long lattice_rank = 0;
  long k = 0, a = 0, b = 0;   // normal form data (k = gcd of k_j)
};
Presn0Result reduce_presn0(long p, long q,
                           const std::vector<std::pair<long, long>>& exponent_pairs);

}  // namespace orbipencil
