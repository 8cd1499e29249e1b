#pragma once

#include <string>
#include <vector>

#include "symu/group.hpp"

namespace symu {

/// Word in the free group on a presentation's generators, kept normalized:
/// exponents nonzero, adjacent factors on distinct generators.
struct Word {
  struct Factor {
    int gen;
    int exp;
    bool operator==(const Factor&) const = default;
  };
  std::vector<Factor> factors;

  bool empty() const { return factors.empty(); }
  /// Appends gen^exp, merging with the last factor when possible.
  void append(int gen, int exp);
  void append(const Word& w);
  Word inverse() const;
  /// w^e (e may be negative or zero).
  Word power(int e) const;
  bool operator==(const Word&) const = default;
};

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  int gen_index(const std::string& name) const;  // -1 when absent
};

/// Parses the small presentation grammar:
///
///   gens: x y u
///   x^4 = y^4 = 1        # chained equations give pairwise relators
///   x^2 = [y,x]          # [a,b] = a^-1 b^-1 a b
///   (x*y)^2
///
/// Juxtaposition or '*' multiplies, '^' takes an integer exponent (negative
/// allowed, zero rejected), '1' is the empty word, '#' starts a comment.
/// Throws ParseError with line/column on bad input.
Presentation parse_presentation(const std::string& text);

std::string print_word(const Word& w, const std::vector<std::string>& names);
/// Renders a presentation in the grammar accepted by parse_presentation.
std::string print_presentation(const Presentation& p);

/// Product of the assigned images along the word. `assignment[i]` is the
/// element of `g` standing for generator i; every generator occurring in
/// `w` must be assigned (index valid in `g`).
int word_evaluate(const Group& g, const std::vector<int>& assignment, const Word& w);

}  // namespace symu
