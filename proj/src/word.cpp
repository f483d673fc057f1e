#include "orbipencil/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace orbipencil {

void Word::append(int gen, long exp) {
  if (exp == 0) return;
  if (!syl_.empty() && syl_.back().gen == gen) {
    syl_.back().exp += exp;
    if (syl_.back().exp == 0) syl_.pop_back();
    return;
  }
  syl_.push_back({gen, exp});
}

void Word::append(const Word& w) {
  for (auto& s : w.syl_) append(s.gen, s.exp);
}

Word Word::inverse() const {
  Word r;
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.append(it->gen, -it->exp);
  return r;
}

Word Word::pow(long k) const {
  Word r;
  Word base = k < 0 ? inverse() : *this;
  for (long i = 0; i < std::labs(k); ++i) r.append(base);
  return r;
}

Word Word::commutator(const Word& a, const Word& b) {
  Word r = a.inverse();
  r.append(b.inverse());
  r.append(a);
  r.append(b);
  return r;
}

long Word::length() const {
  long n = 0;
  for (auto& s : syl_) n += std::labs(s.exp);
  return n;
}

Word Word::cyclically_reduced() const {
  Word w = *this;
  while (w.syl_.size() > 1 && w.syl_.front().gen == w.syl_.back().gen) {
    auto first = w.syl_.front(), last = w.syl_.back();
    w.syl_.erase(w.syl_.begin());
    w.syl_.pop_back();
    Word rest = w;
    w = Word::generator(first.gen, first.exp + last.exp);
    w.append(rest);
  }
  return w;
}

long Word::exponent_sum(int gen) const {
  long n = 0;
  for (auto& s : syl_)
    if (s.gen == gen) n += s.exp;
  return n;
}

int Word::max_generator() const {
  int m = -1;
  for (auto& s : syl_) m = std::max(m, s.gen);
  return m;
}

bool Word::uses_generator(int gen) const {
  for (auto& s : syl_)
    if (s.gen == gen) return true;
  return false;
}

std::vector<Word::Syllable> Word::letters() const {
  std::vector<Syllable> out;
  for (auto& s : syl_) {
    long step = s.exp > 0 ? 1 : -1;
    for (long i = 0; i != s.exp; i += step) out.push_back({s.gen, step});
  }
  return out;
}

Word Word::substituted(int gen, const Word& rep) const {
  Word r;
  for (auto& s : syl_) {
    if (s.gen != gen) {
      r.append(s.gen, s.exp);
      continue;
    }
    r.append(rep.pow(s.exp));
  }
  return r;
}

Word Word::relabeled(const std::vector<int>& map) const {
  Word r;
  for (auto& s : syl_) r.append(map[s.gen], s.exp);
  return r;
}

std::vector<std::pair<int, long>> Word::syl_key() const {
  std::vector<std::pair<int, long>> k;
  k.reserve(syl_.size());
  for (auto& s : syl_) k.emplace_back(s.gen, s.exp);
  return k;
}

std::string Word::str(const std::vector<std::string>& names) const {
  if (syl_.empty()) return "1";
  std::string out;
  bool first = true;
  for (auto& s : syl_) {
    if (!first) out += "*";
    out += names[s.gen];
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
    first = false;
  }
  return out;
}

}  // namespace orbipencil
