#include "orbipencil/presentation.hpp"

#include <cctype>
#include <sstream>

#include "orbipencil/errors.hpp"

namespace orbipencil {

void Presentation::add_relator(Word w) {
  if (w.max_generator() >= generator_count)
    throw BadInput("relator uses an undeclared generator");
  if (!w.empty()) relators.push_back(std::move(w));
}

void Presentation::validate() const {
  for (auto& r : relators)
    if (r.max_generator() >= generator_count)
      throw BadInput("relator uses an undeclared generator");
}

std::string Presentation::str() const {
  std::string out = "<";
  for (int i = 0; i < generator_count; ++i) {
    if (i) out += ", ";
    out += generator_names[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (i) out += ", ";
    out += relators[i].str(generator_names);
  }
  out += ">";
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(const std::string& s, const std::vector<std::string>& names)
      : s_(s), names_(names) {}

  Word parse() {
    Word w = parse_seq();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError("unexpected trailing input in word", pos_);
    return w;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Word parse_seq(char stop = '\0') {
    Word w;
    while (true) {
      char c = peek();
      if (c == '\0' || c == stop || c == ',') break;
      if (c == '*') {
        ++pos_;
        continue;
      }
      w.append(parse_atom());
    }
    return w;
  }

  Word parse_atom() {
    char c = peek();
    Word base;
    if (c == '(') {
      ++pos_;
      base = parse_seq(')');
      if (peek() != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
    } else if (c == '[') {
      ++pos_;
      Word a = parse_seq(']');
      if (peek() != ',') throw SyntaxError("expected ',' in commutator", pos_);
      ++pos_;
      Word b = parse_seq(']');
      if (peek() != ']') throw SyntaxError("expected ']'", pos_);
      ++pos_;
      base = Word::commutator(a, b);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      base = Word::generator(parse_name());
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "' in word", pos_);
    }
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
        neg = s_[pos_] == '-';
        ++pos_;
      }
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == start) throw SyntaxError("expected integer exponent", pos_);
      long e = std::stol(s_.substr(start, pos_ - start));
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  int parse_name() {
    // longest declared name wins, so multi-letter generators work
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const std::string& n = names_[i];
      if (n.size() > best_len && s_.compare(pos_, n.size(), n) == 0) {
        best = static_cast<int>(i);
        best_len = n.size();
      }
    }
    if (best < 0) throw SyntaxError("unknown generator name", pos_);
    pos_ += best_len;
    return best;
  }

  const std::string& s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  return WordParser(text, names).parse();
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Presentation p;
  bool have_gens = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    if (!have_gens) {
      if (line.rfind("gens:", 0) != 0)
        throw BadInput("presentation must start with a 'gens:' line");
      std::istringstream gs(line.substr(5));
      std::string name;
      while (gs >> name) p.generator_names.push_back(name);
      p.generator_count = static_cast<int>(p.generator_names.size());
      if (p.generator_count == 0) throw BadInput("no generators declared");
      have_gens = true;
      continue;
    }
    p.add_relator(parse_word(line, p.generator_names));
  }
  if (!have_gens) throw BadInput("empty presentation text");
  return p;
}

Presentation omega_presentation(int g, int s) {
  if (g < 0 || s < 0) throw BadInput("omega_presentation needs g, s >= 0");
  std::vector<std::string> names;
  for (int i = 1; i <= g; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= g; ++i) names.push_back("b" + std::to_string(i));
  for (int j = 0; j < s; ++j) names.push_back("x" + std::to_string(j));
  Presentation p = Presentation::on_generators(std::move(names));
  // relator: (prod_i [a_i,b_i]) * (prod_j x_j)^{-1}
  Word r;
  for (int i = 0; i < g; ++i)
    r.append(Word::commutator(Word::generator(i), Word::generator(g + i)));
  for (int j = s - 1; j >= 0; --j) r.append(Word::generator(2 * g + j, -1));
  p.add_relator(r);
  return p;
}

Presentation fibration_presentation(int fiber_genus, int fiber_punctures, int base_rank,
                                    const MonodromyTable& monodromy) {
  int g = fiber_genus, s = fiber_punctures, r = base_rank;
  if (g < 0 || s < 0 || r < 0) throw BadInput("negative dimensions");
  auto dims_ok = [&](const std::vector<std::vector<Word>>& t, int rows) {
    if (static_cast<int>(t.size()) != rows) return false;
    for (auto& row : t)
      if (static_cast<int>(row.size()) != r) return false;
    return true;
  };
  if (!dims_ok(monodromy.alpha, g) || !dims_ok(monodromy.beta, g) ||
      !dims_ok(monodromy.delta, s))
    throw DimensionMismatch("monodromy table does not match (g, s, r)");

  int fiber_gens = 2 * g + s;
  for (auto* table : {&monodromy.alpha, &monodromy.beta, &monodromy.delta})
    for (auto& row : *table)
      for (auto& w : row)
        if (w.max_generator() >= fiber_gens)
          throw MonodromyUsesBaseGenerators("monodromy words must use fiber generators only");

  std::vector<std::string> names;
  for (int i = 1; i <= g; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= g; ++i) names.push_back("b" + std::to_string(i));
  for (int j = 0; j < s; ++j) names.push_back("x" + std::to_string(j));
  for (int k = 1; k <= r; ++k) names.push_back("g" + std::to_string(k));
  Presentation p = Presentation::on_generators(std::move(names));

  auto gamma = [&](int k) { return Word::generator(fiber_gens + k); };
  for (int k = 0; k < r; ++k) {
    for (int i = 0; i < g; ++i) {
      Word w = Word::commutator(gamma(k), Word::generator(i));
      w.append(monodromy.alpha[i][k].inverse());
      p.add_relator(w);
      Word wb = Word::commutator(gamma(k), Word::generator(g + i));
      wb.append(monodromy.beta[i][k].inverse());
      p.add_relator(wb);
    }
    for (int j = 0; j < s; ++j) {
      Word gd = gamma(k);
      gd.append(monodromy.delta[j][k]);
      p.add_relator(Word::commutator(gd, Word::generator(2 * g + j)));
    }
  }
  Word surface;
  for (int j = 0; j < s; ++j) surface.append(Word::generator(2 * g + j));
  for (int i = g - 1; i >= 0; --i)
    surface.append(Word::commutator(Word::generator(i), Word::generator(g + i)).inverse());
  p.add_relator(surface);
  return p;
}

}  // namespace orbipencil
