#include "symu/presentation.hpp"

#include <cctype>
#include <stdexcept>

#include "symu/errors.hpp"

namespace symu {

void Word::append(int gen, int exp) {
  if (exp == 0) return;
  if (!factors.empty() && factors.back().gen == gen) {
    factors.back().exp += exp;
    if (factors.back().exp == 0) factors.pop_back();
    return;
  }
  factors.push_back({gen, exp});
}

void Word::append(const Word& w) {
  for (const Factor& f : w.factors) append(f.gen, f.exp);
}

Word Word::inverse() const {
  Word r;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) r.append(it->gen, -it->exp);
  return r;
}

Word Word::power(int e) const {
  Word r;
  const Word& base = e >= 0 ? *this : inverse();
  int k = e >= 0 ? e : -e;
  for (int i = 0; i < k; ++i) r.append(base);
  return r;
}

int Presentation::gen_index(const std::string& name) const {
  for (size_t i = 0; i < generator_names.size(); ++i)
    if (generator_names[i] == name) return static_cast<int>(i);
  return -1;
}

// ---- parser -----------------------------------------------------------------

namespace {

struct Lexer {
  const std::string& text;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  explicit Lexer(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  char advance() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  // skips spaces/tabs and comments but not newlines
  void skip_blanks() {
    while (pos < text.size()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (pos < text.size() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  bool at_line_end() {
    skip_blanks();
    return pos >= text.size() || peek() == '\n';
  }

  std::string identifier() {
    skip_blanks();
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
      fail("expected identifier");
    std::string s;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
           peek() == '\'')
      s += advance();
    return s;
  }

  int integer() {
    skip_blanks();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (advance() - '0');
      if (v > 1000000) fail("exponent too large");
    }
    return static_cast<int>(neg ? -v : v);
  }
};

struct WordParser {
  Lexer& lx;
  const Presentation& pres;

  // word := factor { ['*'] factor }
  Word word() {
    Word w;
    w.append(factor());
    while (true) {
      lx.skip_blanks();
      char c = lx.peek();
      if (c == '*') {
        lx.advance();
        w.append(factor());
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(' ||
                 c == '[' || c == '1') {
        w.append(factor());
      } else {
        break;
      }
    }
    return w;
  }

  // factor := atom [ '^' integer ]
  Word factor() {
    Word a = atom();
    lx.skip_blanks();
    if (lx.peek() == '^') {
      lx.advance();
      int e = lx.integer();
      if (e == 0) lx.fail("zero exponent");
      return a.power(e);
    }
    return a;
  }

  // atom := generator | '1' | '(' word ')' | '[' word ',' word ']'
  Word atom() {
    lx.skip_blanks();
    char c = lx.peek();
    if (c == '1') {
      lx.advance();
      return Word{};
    }
    if (c == '(') {
      lx.advance();
      Word w = word();
      lx.skip_blanks();
      if (lx.peek() != ')') lx.fail("expected ')'");
      lx.advance();
      return w;
    }
    if (c == '[') {
      lx.advance();
      Word a = word();
      lx.skip_blanks();
      if (lx.peek() != ',') lx.fail("expected ',' in commutator");
      lx.advance();
      Word b = word();
      lx.skip_blanks();
      if (lx.peek() != ']') lx.fail("expected ']'");
      lx.advance();
      // [a,b] = a^-1 b^-1 a b
      Word w = a.inverse();
      w.append(b.inverse());
      w.append(a);
      w.append(b);
      return w;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      int l = lx.line, cl = lx.col;
      std::string name = lx.identifier();
      int idx = pres.gen_index(name);
      if (idx < 0) throw ParseError("unknown generator '" + name + "'", l, cl);
      Word w;
      w.append(idx, 1);
      return w;
    }
    lx.fail("expected word");
  }
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Lexer lx(text);
  Presentation p;

  // header: "gens:" name...
  while (lx.at_line_end() && lx.pos < lx.text.size()) lx.advance();
  std::string kw = lx.identifier();
  if (kw != "gens") lx.fail("presentation must start with 'gens:'");
  lx.skip_blanks();
  if (lx.peek() != ':') lx.fail("expected ':' after 'gens'");
  lx.advance();
  while (!lx.at_line_end()) {
    std::string name = lx.identifier();
    if (p.gen_index(name) >= 0) lx.fail("duplicate generator '" + name + "'");
    p.generator_names.push_back(name);
  }
  if (p.generator_names.empty()) lx.fail("no generators declared");

  // relator lines: "w" or "w1 = w2 = ... = wk"
  WordParser wp{lx, p};
  while (lx.pos < lx.text.size()) {
    if (lx.at_line_end()) {
      if (lx.pos < lx.text.size()) lx.advance();  // consume newline
      continue;
    }
    std::vector<Word> sides;
    sides.push_back(wp.word());
    while (true) {
      lx.skip_blanks();
      if (lx.peek() == '=') {
        lx.advance();
        sides.push_back(wp.word());
      } else {
        break;
      }
    }
    if (!lx.at_line_end()) lx.fail("unexpected trailing input");
    if (sides.size() == 1) {
      p.relators.push_back(std::move(sides[0]));
    } else {
      for (size_t i = 0; i + 1 < sides.size(); ++i) {
        Word r = sides[i];
        r.append(sides[i + 1].inverse());
        p.relators.push_back(std::move(r));
      }
    }
  }
  return p;
}

std::string print_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (const Word::Factor& f : w.factors) {
    if (!s.empty()) s += "*";
    s += names[f.gen];
    if (f.exp != 1) s += "^" + std::to_string(f.exp);
  }
  return s;
}

std::string print_presentation(const Presentation& p) {
  std::string s = "gens:";
  for (const auto& n : p.generator_names) s += " " + n;
  s += "\n";
  for (const Word& r : p.relators) s += print_word(r, p.generator_names) + "\n";
  return s;
}

int word_evaluate(const Group& g, const std::vector<int>& assignment, const Word& w) {
  int acc = Group::identity;
  for (const Word::Factor& f : w.factors) {
    if (f.gen < 0 || f.gen >= static_cast<int>(assignment.size()))
      throw std::invalid_argument("word_evaluate: unassigned generator");
    int img = assignment[f.gen];
    if (!g.valid_index(img)) throw std::invalid_argument("word_evaluate: image out of range");
    acc = g.mul(acc, g.pow(img, f.exp));
  }
  return acc;
}

}  // namespace symu
