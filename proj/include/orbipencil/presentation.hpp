#pragma once

#include <string>
#include <vector>

#include "orbipencil/word.hpp"

namespace orbipencil {

struct Presentation {
  int generator_count = 0;
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  static Presentation on_generators(std::vector<std::string> names) {
    Presentation p;
    p.generator_count = static_cast<int>(names.size());
    p.generator_names = std::move(names);
    return p;
  }

  void add_relator(Word w);
  void validate() const;
  std::string str() const;
};

// Text format:
//   gens: a b c
//   a^2
//   [a,b]
//   (a*b)^3
// one relator per line, '#' starts a comment.
Presentation parse_presentation(const std::string& text);
Word parse_word(const std::string& text, const std::vector<std::string>& names);

// genus-g surface group with s boundary meridians:
// <a_1..a_g, b_1..b_g, x_0..x_{s-1} | prod [a_i,b_i] = prod x_j>
Presentation omega_presentation(int g, int s);

// Semidirect-product presentation for a fibered surface piece: base loops
// gamma_k act on fiber generators through the given monodromy words (all
// written in the fiber generators a_i, b_i, x_j, indexed 0..2g+s-1).
struct MonodromyTable {
  // alpha[i][k], beta[i][k] for fiber handles, delta[j][k] for fiber punctures
  std::vector<std::vector<Word>> alpha, beta, delta;
};
Presentation fibration_presentation(int fiber_genus, int fiber_punctures, int base_rank,
                                    const MonodromyTable& monodromy);

}  // namespace orbipencil
