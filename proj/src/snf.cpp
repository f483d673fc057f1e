#include "orbipencil/snf.hpp"

#include <algorithm>

namespace orbipencil {

SnfResult snf(IntMat m) {
  SnfResult out;
  if (m.empty() || m[0].empty()) return out;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pick the nonzero entry of least absolute value as pivot
    std::size_t pi = t, pj = t;
    mpz_class best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        mpz_class a = abs(m[i][j]);
        if (best == 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    std::swap(m[t], m[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        mpz_class q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {  // remainder survives: swap and keep reducing
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        mpz_class q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
      if (clean) {
        // enforce divisibility of the remaining block by the pivot
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols && clean; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
              clean = false;
            }
      }
    }
    ++t;
  }
  for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(abs(m[i][i]));
  out.rank = static_cast<long>(t);
  return out;
}

std::string AbelianInvariants::str() const {
  std::string s;
  if (free_rank > 0) s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (auto& d : torsion) {
    if (!s.empty()) s += " x ";
    s += "Z_" + d.get_str();
  }
  return s.empty() ? "0" : s;
}

AbelianInvariants cokernel(const IntMat& m, long cols) {
  AbelianInvariants inv;
  SnfResult r = snf(m);
  inv.free_rank = cols - r.rank;
  for (auto& d : r.invariant_factors)
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

AbelianInvariants abelianize(const Presentation& p) {
  IntMat m;
  for (auto& rel : p.relators) {
    std::vector<mpz_class> row(p.generator_count);
    for (int g = 0; g < p.generator_count; ++g) row[g] = rel.exponent_sum(g);
    m.push_back(std::move(row));
  }
  if (m.empty()) {
    AbelianInvariants inv;
    inv.free_rank = p.generator_count;
    return inv;
  }
  return cokernel(m, p.generator_count);
}

}  // namespace orbipencil
