#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "relogic/automata.hpp"

using namespace relogic;

TEST_CASE("regex parsing follows the grammar") {
  Alphabet ab("ab");

  RegexPtr r = parse_regex("(ab)*", ab);
  REQUIRE(r->kind == RegexKind::Star);
  REQUIRE(r->children[0]->kind == RegexKind::Concat);
  CHECK(r->children[0]->children[0]->letter == 'a');
  CHECK(r->children[0]->children[1]->letter == 'b');

  CHECK(parse_regex("1", ab)->kind == RegexKind::Epsilon);
  CHECK(parse_regex("0", ab)->kind == RegexKind::EmptySet);

  // intersection of a concatenation with a complemented concatenation
  Alphabet ac("ac");
  RegexPtr s = parse_regex("a0c* & !(0c aa 0c)", ac);
  REQUIRE(s->kind == RegexKind::Intersect);
  CHECK(s->children[0]->kind == RegexKind::Concat);
  CHECK(s->children[1]->kind == RegexKind::Complement);
  CHECK(s->children[1]->children[0]->kind == RegexKind::Concat);

  // precedence: postfix on a complemented atom, then concat, then & then |
  RegexPtr p = parse_regex("a|ba&!a*", ab);
  REQUIRE(p->kind == RegexKind::Union);
  REQUIRE(p->children[1]->kind == RegexKind::Intersect);
  CHECK(p->children[1]->children[0]->kind == RegexKind::Concat);
  CHECK(p->children[1]->children[1]->kind == RegexKind::Star);
  CHECK(p->children[1]->children[1]->children[0]->kind == RegexKind::Complement);

  CHECK_THROWS_AS(parse_regex("(a", ab), ParseError);
  CHECK_THROWS_AS(parse_regex("a|", ab), ParseError);
  CHECK_THROWS_AS(parse_regex("x", ab), ParseError);  // undeclared letter
  try {
    parse_regex("ab)", ab);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("compile produces the denoted language") {
  Alphabet ab("ab");
  Dfa d = compile("(ab)*", ab);
  CHECK(d.accepts(""));
  CHECK(d.accepts("ab"));
  CHECK(d.accepts("abab"));
  CHECK(!d.accepts("a"));
  CHECK(!d.accepts("ba"));
  CHECK(!d.accepts("abb"));

  Alphabet a("a");
  Dfa universal = compile("!0", a);
  CHECK(universal.accepts(""));
  CHECK(universal.accepts("aaaa"));

  Alphabet abc("abc");
  Dfa window = compile(fixtures::kInfixACsA.regex, abc);
  CHECK(window.accepts("aa"));
  CHECK(window.accepts("aca"));
  CHECK(window.accepts("bacca"));
  CHECK(!window.accepts("a"));
  CHECK(!window.accepts("abca"));
}

TEST_CASE("star-free expression built from complements matches (ab)*") {
  Alphabet ab("ab");
  Dfa starfree = compile("a!0 & !0b & !(!0aa!0) & !(!0bb!0)", ab);
  // the star-free form misses only the empty word
  Dfa loops = compile("(ab)+", ab);
  CHECK(minimize(starfree) == minimize(loops));
  Dfa with_eps = compile("1 | (a!0 & !0b & !(!0aa!0) & !(!0bb!0))", ab);
  CHECK(minimize(with_eps) == minimize(compile("(ab)*", ab)));
}

TEST_CASE("minimize reaches the bounded Myhill-Nerode class count") {
  Alphabet ab("ab");
  RegexPtr r = parse_regex("(ab)*", ab);
  Dfa m = minimize(compile(r, ab));
  CHECK(m.num_states == 3);
  CHECK(m.num_states == oracles::nerode_class_count(r, ab, 6, 6));

  // idempotence and canonical-form equality
  CHECK(minimize(m) == m);
  CHECK(minimize(compile("a|a", ab)) == minimize(compile("a", ab)));
}

TEST_CASE("completeness: delta is total on every state") {
  Alphabet abc("abc");
  for (const auto& fixture : fixtures::kLanguages) {
    Alphabet alphabet(fixture.alphabet);
    Dfa d = minimize(compile(fixture.regex, alphabet));
    REQUIRE(d.delta.size() == d.num_states);
    for (const auto& row : d.delta) {
      REQUIRE(row.size() == alphabet.size());
      for (State t : row) CHECK(t < d.num_states);
    }
  }
}

TEST_CASE("accepts rejects undeclared letters") {
  Alphabet ab("ab");
  Dfa d = compile("(ab)*", ab);
  CHECK_THROWS_AS(d.accepts("abc"), ValueError);
}

TEST_CASE("enumerate_words is length-lexicographic") {
  Alphabet ab("ab");
  CHECK(enumerate_words(compile("(ab)*", ab), 4) ==
        std::vector<std::string>{"", "ab", "abab"});
  CHECK(enumerate_words(compile("0", ab), 10).empty());

  Alphabet a("a");
  CHECK(enumerate_words(compile("(aa)*", a), 5) ==
        std::vector<std::string>{"", "aa", "aaaa"});

  auto words = enumerate_words(compile("(a|b)*", ab), 2);
  CHECK(words == std::vector<std::string>{"", "a", "b", "aa", "ab", "ba", "bb"});
}

TEST_CASE("compiled automata agree with the denotational evaluator to length 10") {
  for (const auto& fixture : fixtures::kLanguages) {
    Alphabet alphabet(fixture.alphabet);
    RegexPtr r = parse_regex(fixture.regex, alphabet);
    Dfa d = compile(r, alphabet);
    oracles::DenotationalMatcher oracle(r);
    std::size_t checked = 0;
    for (const auto& w : all_words(alphabet, 10)) {
      if (oracle.matches(w) != d.accepts(w)) {
        CAPTURE(fixture.name);
        CAPTURE(w);
        REQUIRE(false);
      }
      ++checked;
    }
    CHECK(checked == count_words(alphabet.size(), 10));
  }
}

TEST_CASE("minimize preserves the language and complement is an involution") {
  for (const auto& fixture : fixtures::kLanguages) {
    Alphabet alphabet(fixture.alphabet);
    Dfa d = compile(fixture.regex, alphabet);
    CHECK(enumerate_words(d, 10) == enumerate_words(minimize(d), 10));

    std::string doubled = "!!(" + std::string(fixture.regex) + ")";
    CHECK(enumerate_words(compile(doubled, alphabet), 10) == enumerate_words(d, 10));
  }
}

TEST_CASE("minimization fuzz against Moore refinement") {
  gen::Rng rng(13371337);
  Alphabet ab("ab");
  for (int i = 0; i < 200; ++i) {
    RegexPtr r = gen::random_regex(rng, ab, 3);
    Dfa d = compile(r, ab);
    Dfa m = minimize(d);
    CHECK(m.num_states == oracles::moore_minimal_states(d));
    CHECK(enumerate_words(d, 7) == enumerate_words(m, 7));
    CHECK(minimize(m) == m);

    // canonical form: any other automaton for the same language minimizes to
    // the identical Dfa
    Dfa via_union = minimize(compile(re::alt({r, r}), ab));
    Dfa via_double_complement = minimize(compile(re::complement(re::complement(r)), ab));
    CHECK(via_union == m);
    CHECK(via_double_complement == m);
  }
}

TEST_CASE("subset construction respects the state budget") {
  Alphabet ab("ab");
  CompileLimits limits;
  limits.max_states = 2;
  CHECK_THROWS_AS(compile(parse_regex("(a|b)*a(a|b)(a|b)(a|b)", ab), ab, limits), BudgetError);
}
