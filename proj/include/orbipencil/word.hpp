#pragma once

#include <string>
#include <vector>

namespace orbipencil {

// Freely reduced word in abstract generators: syllables (generator, exponent)
// with nonzero exponents and no two adjacent syllables on the same generator.
class Word {
 public:
  struct Syllable {
    int gen;
    long exp;
    friend bool operator==(const Syllable&, const Syllable&) = default;
  };

  Word() = default;
  Word(std::initializer_list<Syllable> syls) {
    for (auto& s : syls) append(s.gen, s.exp);
  }

  static Word generator(int g, long e = 1) {
    Word w;
    w.append(g, e);
    return w;
  }
  static Word commutator(const Word& a, const Word& b);

  void append(int gen, long exp);
  void append(const Word& w);
  Word inverse() const;
  Word operator*(const Word& w) const {
    Word r = *this;
    r.append(w);
    return r;
  }
  Word pow(long k) const;

  bool empty() const { return syl_.empty(); }
  std::size_t syllable_count() const { return syl_.size(); }
  long length() const;  // sum of |exponents|
  const std::vector<Syllable>& syllables() const { return syl_; }

  Word cyclically_reduced() const;
  long exponent_sum(int gen) const;
  int max_generator() const;
  bool uses_generator(int gen) const;

  // single letters, exponents expanded to +-1 steps
  std::vector<Syllable> letters() const;

  // replace generator `gen` by `rep` everywhere (rep may be empty)
  Word substituted(int gen, const Word& rep) const;
  // apply an index translation; entries < 0 are forbidden by the caller
  Word relabeled(const std::vector<int>& map) const;

  friend bool operator==(const Word& a, const Word& b) { return a.syl_ == b.syl_; }
  friend bool operator<(const Word& a, const Word& b) { return a.syl_key() < b.syl_key(); }

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::vector<std::pair<int, long>> syl_key() const;
  std::vector<Syllable> syl_;
};

}  // namespace orbipencil
