#include <doctest.h>

#include "symu/corpus.hpp"
#include "symu/errors.hpp"
#include "symu/presentation.hpp"

using namespace symu;

namespace {

Word make_word(std::initializer_list<Word::Factor> fs) {
  Word w;
  for (const auto& f : fs) w.append(f.gen, f.exp);
  return w;
}

}  // namespace

TEST_CASE("single generator, single relator") {
  Presentation p = parse_presentation("gens: x\nx^4\n");
  REQUIRE(p.generator_names == std::vector<std::string>{"x"});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == make_word({{0, 4}}));
}

TEST_CASE("chained equations split into pairwise relators") {
  Presentation p = parse_presentation("gens: x y\nx^4 = y^4 = 1\nx^2 = [y,x]\n");
  REQUIRE(p.relators.size() == 3);
  // x^4 * y^-4
  CHECK(p.relators[0] == make_word({{0, 4}, {1, -4}}));
  // y^4
  CHECK(p.relators[1] == make_word({{1, 4}}));
  // x^2 * [y,x]^-1 = x^2 * x^-1 y^-1 x y  (inverse of y^-1 x^-1 y x)
  CHECK(p.relators[2] == make_word({{0, 2}, {0, -1}, {1, -1}, {0, 1}, {1, 1}}));
}

TEST_CASE("commutator expands as a^-1 b^-1 a b") {
  Presentation p = parse_presentation("gens: a b\n[a,b]\n");
  CHECK(p.relators[0] == make_word({{0, -1}, {1, -1}, {0, 1}, {1, 1}}));
}

TEST_CASE("grammar: parentheses, star, juxtaposition, negative exponents") {
  Presentation p = parse_presentation("gens: x y\n(x*y)^2\nx y^-3 x\nx^-2\n");
  CHECK(p.relators[0] == make_word({{0, 1}, {1, 1}, {0, 1}, {1, 1}}));
  CHECK(p.relators[1] == make_word({{0, 1}, {1, -3}, {0, 1}}));
  CHECK(p.relators[2] == make_word({{0, -2}}));
}

TEST_CASE("'1' is the empty word") {
  Presentation p = parse_presentation("gens: x\nx^2 = 1\n");
  CHECK(p.relators[0] == make_word({{0, 2}}));
}

TEST_CASE("comments and blank lines are ignored") {
  Presentation p = parse_presentation(
      "# leading comment\n\ngens: x y   # inline\n\n# relator next\nx^2  # done\n");
  CHECK(p.generator_names.size() == 2);
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == make_word({{0, 2}}));
}

TEST_CASE("parse errors carry line and column") {
  CHECK_THROWS_AS(parse_presentation("gens: x\nx^0\n"), ParseError);
  try {
    parse_presentation("gens: x\nx^0\n");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_presentation("gens: x\ny^2\n"), ParseError);   // unknown generator
  CHECK_THROWS_AS(parse_presentation("gens: x x\n"), ParseError);      // duplicate
  CHECK_THROWS_AS(parse_presentation("x^2\n"), ParseError);            // missing header
  CHECK_THROWS_AS(parse_presentation("gens: x\n(x^2\n"), ParseError);  // unbalanced
  CHECK_THROWS_AS(parse_presentation("gens: x\n[x x]\n"), ParseError); // missing comma
  CHECK_THROWS_AS(parse_presentation("gens: x\nx^2 y\n"), ParseError); // trailing garbage
  CHECK_THROWS_AS(parse_presentation("gens:\n"), ParseError);          // no generators
}

TEST_CASE("word normalization merges adjacent factors and drops zeros") {
  Word w;
  w.append(0, 2);
  w.append(0, 3);
  CHECK(w.factors.size() == 1);
  CHECK(w.factors[0].exp == 5);
  w.append(0, -5);
  CHECK(w.empty());

  Word v;
  v.append(0, 1);
  v.append(1, 2);
  Word vi = v.inverse();
  CHECK(vi == make_word({{1, -2}, {0, -1}}));
  Word sq = v.power(2);
  CHECK(sq == make_word({{0, 1}, {1, 2}, {0, 1}, {1, 2}}));
  CHECK(v.power(0).empty());
  CHECK(v.power(-1) == vi);
}

TEST_CASE("print/parse round-trip is a fixed point on normalized presentations") {
  for (const char* text : {"gens: x\nx^4\n", h32_presentation_text(), h245_presentation_text(),
                           iii_factor_presentation_text()}) {
    Presentation p1 = parse_presentation(text);
    std::string printed = print_presentation(p1);
    Presentation p2 = parse_presentation(printed);
    CHECK(p1.generator_names == p2.generator_names);
    CHECK(p1.relators == p2.relators);
    CHECK(print_presentation(p2) == printed);
  }
}

TEST_CASE("word evaluation") {
  Group q8 = generalized_quaternion_group(8);
  std::vector<int> assign{q8.generators[0].second, q8.generators[1].second};

  CHECK(word_evaluate(q8, assign, Word{}) == Group::identity);

  // [y,x] under a commuting assignment is the identity
  Group c4xc4 = direct_product(cyclic_group(4), cyclic_group(4));
  Word comm = make_word({{1, -1}, {0, -1}, {1, 1}, {0, 1}});
  std::vector<int> ab{c4xc4.generators[0].second, c4xc4.generators[1].second};
  CHECK(word_evaluate(c4xc4, ab, comm) == Group::identity);

  // every defining relator closes in the presented group
  Presentation f = parse_presentation(iii_factor_presentation_text());
  Group fg = iii_factor_group();
  std::vector<int> fa{fg.generators[0].second, fg.generators[1].second};
  for (const Word& r : f.relators) CHECK(word_evaluate(fg, fa, r) == Group::identity);

  // unassigned generator
  Word needs_y = make_word({{1, 1}});
  CHECK_THROWS_AS(word_evaluate(q8, {q8.generators[0].second}, needs_y),
                  std::invalid_argument);
}
