#include "orbipencil/cfp.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "orbipencil/errors.hpp"

namespace orbipencil {

CyclicFreeProduct::CyclicFreeProduct(long r, std::vector<long> m)
    : free_rank(r), torsion(std::move(m)) {
  if (free_rank < 0) throw BadInput("negative free rank");
  std::erase(torsion, 1);
  for (long t : torsion)
    if (t < 2) throw BadMultiplicity("torsion orders must be >= 2");
  std::sort(torsion.begin(), torsion.end());
}

Presentation CyclicFreeProduct::presentation() const {
  std::vector<std::string> names;
  for (long i = 1; i <= free_rank; ++i) names.push_back("t" + std::to_string(i));
  for (std::size_t i = 1; i <= torsion.size(); ++i)
    names.push_back("c" + std::to_string(i));
  Presentation p = Presentation::on_generators(std::move(names));
  for (std::size_t i = 0; i < torsion.size(); ++i)
    p.add_relator(Word::generator(static_cast<int>(free_rank + i), torsion[i]));
  return p;
}

AbelianInvariants CyclicFreeProduct::abelianization() const {
  return abelianize(presentation());
}

std::string CyclicFreeProduct::str() const {
  std::string s;
  if (free_rank > 0) s = "F" + std::to_string(free_rank);
  for (long t : torsion) {
    if (!s.empty()) s += "*";
    s += "Z" + std::to_string(t);
  }
  return s.empty() ? "1" : s;
}

CyclicFreeProduct CyclicFreeProduct::parse(const std::string& text) {
  CyclicFreeProduct g;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find('*', pos);
    std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (tok == "1" || tok.empty()) {
      // trivial factor
    } else if (tok[0] == 'F') {
      g.free_rank += std::stol(tok.substr(1));
    } else if (tok[0] == 'Z' && tok.size() == 1) {
      g.free_rank += 1;
    } else if (tok[0] == 'Z') {
      std::string n = tok.substr(1);
      if (!n.empty() && n[0] == '_') n = n.substr(1);
      long m = std::stol(n);
      if (m == 1) {
        // Z1 is trivial
      } else if (m < 1) {
        throw BadInput("bad torsion order in group text: " + tok);
      } else {
        g.torsion.push_back(m);
      }
    } else {
      throw BadInput("cannot parse group factor: " + tok);
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  std::sort(g.torsion.begin(), g.torsion.end());
  return g;
}

CyclicFreeProduct with_free_factor(CyclicFreeProduct g) {
  g.free_rank += 1;
  return g;
}

CyclicFreeProduct with_fiber_deleted(CyclicFreeProduct g, long multiplicity) {
  if (g.free_rank < 1) throw BadInput("deletion needs a free factor to consume");
  if (multiplicity < 1) throw BadMultiplicity("fiber multiplicity must be >= 1");
  g.free_rank -= 1;
  if (multiplicity > 1) {
    g.torsion.push_back(multiplicity);
    std::sort(g.torsion.begin(), g.torsion.end());
  }
  return g;
}

Presn0Result reduce_presn0(long p, long q,
                           const std::vector<std::pair<long, long>>& exponent_pairs) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1)
    throw BadInput("reduce_presn0 needs coprime p, q >= 1");

  // integer row reduction of the pair lattice to [[k, a], [0, b]]
  long k = 0, a = 0, b = 0;
  for (auto [x, y] : exponent_pairs) {
    while (x != 0) {
      if (k == 0) {
        k = x;
        a = y;
        x = 0;
        y = 0;
        break;
      }
      long t = x / k;
      x -= t * k;
      y -= t * a;
      if (x != 0) {
        std::swap(x, k);
        std::swap(y, a);
      }
    }
    b = std::gcd(b, std::labs(y));
  }
  if (k < 0) {
    k = -k;
    a = -a;
  }
  if (b != 0) a = ((a % b) + b) % b;

  Presn0Result out;
  out.k = k;
  out.a = a;
  out.b = b;
  out.lattice_rank = (k != 0) + (b != 0);
  out.is_pq = (k == 1 && b == 1);

  Presentation red = Presentation::on_generators({"g1", "g2"});
  if (k != 0) {
    Word w = Word::generator(0, p * k);
    w.append(Word::generator(1, q * a));
    red.add_relator(w);
  }
  if (b != 0) red.add_relator(Word::generator(1, q * b));
  red.add_relator(Word::commutator(Word::generator(0), Word::generator(1, q)));
  red.add_relator(Word::commutator(Word::generator(1), Word::generator(0, p)));
  out.reduced = red;

  if (out.is_pq) out.group = CyclicFreeProduct(0, {p, q});
  return out;
}

}  // namespace orbipencil
