#include "orbipencil/modp.hpp"

#include "orbipencil/field.hpp"

namespace orbipencil::modp {

void normalize(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  normalize(r);
  return r;
}

Poly rem(Poly a, const Poly& b, std::uint64_t p) {
  normalize(a);
  int db = degree(b);
  std::uint64_t inv = mod_pow(b.back(), p - 2, p);
  while (degree(a) >= db) {
    std::uint64_t c = a.back() * inv % p;
    int shift = degree(a) - db;
    for (int i = 0; i <= db; ++i) {
      a[i + shift] = (a[i + shift] + p - c * b[i] % p) % p;
    }
    normalize(a);
  }
  return a;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t inv = mod_pow(a.back(), p - 2, p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

Poly derivative(const Poly& f, std::uint64_t p) {
  Poly r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * (i % p) % p);
  normalize(r);
  return r;
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& mod, std::uint64_t p) {
  Poly r{1};
  base = rem(std::move(base), mod, p);
  while (e) {
    if (e & 1) r = rem(mul(r, base, p), mod, p);
    base = rem(mul(base, base, p), mod, p);
    e >>= 1;
  }
  return r;
}

bool is_squarefree(const Poly& f, std::uint64_t p) {
  Poly d = derivative(f, p);
  if (d.empty()) return false;  // p divides every exponent
  return degree(gcd(f, d, p)) == 0;
}

int berlekamp_factor_count(const Poly& f, std::uint64_t p) {
  int n = degree(f);
  if (n <= 0) return 0;
  // rows of Q - I, row i = x^{ip} mod f minus e_i
  Poly xp = pow_mod(Poly{0, 1}, p, f, p);
  std::vector<Poly> rows(n);
  Poly cur{1};
  for (int i = 0; i < n; ++i) {
    rows[i] = cur;
    rows[i].resize(n, 0);
    rows[i][i] = (rows[i][i] + p - 1) % p;
    cur = rem(mul(cur, xp, p), f, p);
  }
  // rank over F_p
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    std::uint64_t inv = mod_pow(rows[rank][col], p - 2, p);
    for (int j = col; j < n; ++j) rows[rank][j] = rows[rank][j] * inv % p;
    for (int r = 0; r < n; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      std::uint64_t c = rows[r][col];
      for (int j = col; j < n; ++j)
        rows[r][j] = (rows[r][j] + p - c * rows[rank][j] % p) % p;
    }
    ++rank;
  }
  return n - rank;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  if (!is_squarefree(f, p)) return false;
  return berlekamp_factor_count(f, p) == 1;
}

}  // namespace orbipencil::modp
