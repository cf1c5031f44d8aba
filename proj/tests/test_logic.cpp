#include <doctest.h>

#include <functional>

#include "fixtures.hpp"
#include "generators.hpp"
#include "relogic/logic.hpp"

using namespace relogic;

namespace {

const char* kWindowSentence =
    "E x. E y. A z. ((x < y) & Qa x & Qa y & ((x < z & z < y) -> Qc z))";

}  // namespace

TEST_CASE("first-order parsing") {
  Alphabet abc("abc");
  Formula f = parse_fo(kWindowSentence, abc);
  REQUIRE(f->kind == FoKind::Exists);
  REQUIRE(f->lhs->kind == FoKind::Exists);
  REQUIRE(f->lhs->lhs->kind == FoKind::Forall);
  CHECK(free_variables(f).empty());

  CHECK(parse_fo("true", abc)->kind == FoKind::True);

  Formula mod = parse_fo("E[0 mod 2] x. Qa x", abc);
  REQUIRE(mod->kind == FoKind::ModExists);
  CHECK(mod->mod_i == 0);
  CHECK(mod->mod_m == 2);
  CHECK(mod->lhs->kind == FoKind::Label);

  CHECK_THROWS_AS(parse_fo("E x. Qq x", abc), ParseError);   // undeclared letter
  CHECK_THROWS_AS(parse_fo("E x. (Qa x", abc), ParseError);  // unbalanced
  CHECK_THROWS_AS(parse_fo("E[2 mod 2] x. true", abc), ValueError);
  CHECK_THROWS_AS(parse_fo_sentence("Qa x", abc), ParseError);  // free variable
  CHECK_NOTHROW(parse_fo_sentence("E x. Qa x & Qb x", abc));
}

TEST_CASE("first-order evaluation") {
  Alphabet abc("abc");
  Formula f = parse_fo(kWindowSentence, abc);
  CHECK(eval_fo(f, "bacab"));
  CHECK(!eval_fo(f, "abca"));
  CHECK(eval_fo(f, "aa"));

  CHECK(!eval_fo(parse_fo("E x. true", abc), ""));
  CHECK(eval_fo(parse_fo("A x. false", abc), ""));

  // rebinding: the inner quantifier shadows the outer variable
  Formula shadow = parse_fo("E x. (Qa x & E x. Qb x)", Alphabet("ab"));
  CHECK(eval_fo(shadow, "ab"));
  CHECK(!eval_fo(shadow, "aa"));

  CHECK_THROWS_AS(eval_fo(parse_fo("Qa x", abc), "abc"), ValueError);  // unassigned
  CHECK(eval_fo(parse_fo("Qa x", abc), "abc", {{"x", 1}}));
  CHECK_THROWS_AS(eval_fo(parse_fo("Qa x", abc), "abc", {{"x", 9}}), ValueError);
}

TEST_CASE("successor desugars to an order formula") {
  Alphabet ab("ab");
  Formula f = parse_fo("E x. E y. (S(x,y) & Qa x & Qb y)", ab);
  CHECK(eval_fo(f, "ab"));
  CHECK(eval_fo(f, "bab"));
  CHECK(eval_fo(f, "aab"));
  CHECK(!eval_fo(f, "ba"));
  CHECK(!eval_fo(f, "a"));
}

TEST_CASE("pointed sets") {
  Alphabet abc("abc");
  CHECK(pointed_set(parse_fo("Qa x", abc), "aba") == std::vector<int>{1, 3});
  CHECK(pointed_set(parse_fo("E y. (y < x)", abc), "abc") == std::vector<int>{2, 3});
  CHECK_THROWS_AS(pointed_set(parse_fo("x < y", abc), "abc"), ValueError);
  CHECK_THROWS_AS(pointed_set(parse_fo("true", abc), "abc"), ValueError);
}

TEST_CASE("the two-variable suffix subformula reads as stated") {
  // psi(y): every position x before y that does not hold c has an a at or
  // after x.
  Alphabet abcd("abcd");
  Formula psi = parse_fo(
      "A x. (((x < y) & ~Qc x) -> E y. ((x < y | x = y) & Qa y))", abcd);
  for (const auto& w : all_words(abcd, 5)) {
    auto positions = pointed_set(psi, w);
    std::vector<int> expected;
    for (int y = 1; y <= static_cast<int>(w.size()); ++y) {
      bool good = true;
      for (int x = 1; x < y && good; ++x) {
        if (w[x - 1] == 'c') continue;
        bool has_a = false;
        for (int k = x; k <= static_cast<int>(w.size()) && !has_a; ++k)
          has_a = w[k - 1] == 'a';
        good = has_a;
      }
      if (good) expected.push_back(y);
    }
    CHECK(positions == expected);
  }
}

TEST_CASE("substitution expansion") {
  Alphabet ab("ab");
  Substitution sub;
  sub.source = ab;
  sub.formulas = {parse_fo("Qa x", ab)};
  Alphabet power = sub.power_alphabet();
  REQUIRE(power.size() == 2);  // 'A' = {} and 'B' = {phi1}

  // E y. Q_{} y  ->  E y. ~Qa y
  Formula psi_empty = fo::exists("y", fo::label(subset_char(0), "y"));
  Formula expanded = substitute(psi_empty, sub);
  Formula direct = parse_fo("E y. ~Qa y", ab);
  for (const auto& w : all_words(ab, 5)) CHECK(eval_fo(expanded, w) == eval_fo(direct, w));

  // E y. Q_{phi} y with phi = E x'. (x' < x & Qa x')
  Substitution sub2;
  sub2.source = ab;
  sub2.formulas = {parse_fo("E x'. (x' < x & Qa x')", ab)};
  Formula psi_sel = fo::exists("y", fo::label(subset_char(1), "y"));
  Formula expanded2 = substitute(psi_sel, sub2);
  Formula direct2 = parse_fo("E y. E x'. (x' < y & Qa x')", ab);
  for (const auto& w : all_words(ab, 5)) CHECK(eval_fo(expanded2, w) == eval_fo(direct2, w));

  // a label naming a subset outside the power alphabet is rejected
  Formula psi_bad = fo::exists("y", fo::label(subset_char(3), "y"));
  CHECK_THROWS_AS(substitute(psi_bad, sub), ValueError);
}

TEST_CASE("sigma inverse") {
  Alphabet ab("ab");
  Substitution sub;
  sub.source = ab;
  sub.formulas = {parse_fo("Qa x", ab)};
  CHECK(sigma_inverse(sub, "aba") == std::string{subset_char(1), subset_char(0), subset_char(1)});

  Substitution empty;
  empty.source = ab;
  CHECK(sigma_inverse(empty, "abab") ==
        std::string(4, subset_char(0)));

  Substitution sub2;
  sub2.source = ab;
  sub2.formulas = {parse_fo("Qa x", ab), parse_fo("E y. (y < x)", ab)};
  std::string img = sigma_inverse(sub2, "ab");
  CHECK(img == std::string{subset_char(1), subset_char(2)});
}

TEST_CASE("substitution lemma on random instances") {
  gen::Rng rng(20240517);
  Alphabet ab("ab");
  int done = 0;
  while (done < 50) {
    std::size_t k = gen::pick(rng, 3);  // 0..2 formulas
    Substitution sub;
    sub.source = ab;
    for (std::size_t i = 0; i < k; ++i)
      sub.formulas.push_back(gen::random_fo_pointed(rng, ab, 2, "x"));
    Alphabet power = sub.power_alphabet();
    Formula psi = gen::random_fo_sentence(rng, power, 2);
    Formula sigma_psi = substitute(psi, sub);
    std::string w = gen::random_word(rng, ab, 7);
    CHECK(eval_fo(sigma_psi, w) == eval_fo(psi, sigma_inverse(sub, w)));
    ++done;
  }
}

TEST_CASE("relativization restricts quantifier ranges") {
  Alphabet ab("ab");
  Formula somewhere_a = parse_fo("E y. Qa y", ab);
  Formula before = relativize(somewhere_a, "x", Direction::Before);
  for (const auto& w : all_words(ab, 6)) {
    for (int p = 1; p <= static_cast<int>(w.size()); ++p) {
      bool prefix_has_a = w.find('a') != std::string::npos &&
                          w.substr(0, p - 1).find('a') != std::string::npos;
      CHECK(eval_fo(before, w, {{"x", p}}) == prefix_has_a);
    }
  }
  CHECK_THROWS_AS(relativize(parse_fo("E x. Qa x", ab), "x", Direction::Before), ValueError);
}

TEST_CASE("relativization prefix and suffix laws on two sentences") {
  Alphabet ab("ab");
  for (const char* text : fixtures::group_for("ab_star").sentences) {
    Formula sentence = parse_fo_sentence(text, ab);
    Formula before = relativize(sentence, "p0", Direction::Before);
    Formula after = relativize(sentence, "p0", Direction::After);
    for (const auto& w : all_words(ab, 6)) {
      for (int p = 1; p <= static_cast<int>(w.size()); ++p) {
        std::string prefix = w.substr(0, p - 1);
        std::string suffix = w.substr(p);
        CHECK(eval_fo(before, w, {{"p0", p}}) == eval_fo(sentence, prefix));
        CHECK(eval_fo(after, w, {{"p0", p}}) == eval_fo(sentence, suffix));
      }
    }
  }
}

TEST_CASE("quantifier duality preserves evaluation") {
  gen::Rng rng(77);
  Alphabet ab("ab");
  for (int i = 0; i < 30; ++i) {
    Formula body = gen::random_fo_pointed(rng, ab, 2, "x");
    Formula not_exists = fo::negate(fo::exists("x", body));
    Formula forall_not = fo::forall("x", fo::negate(body));
    for (const auto& w : all_words(ab, 6))
      CHECK(eval_fo(not_exists, w) == eval_fo(forall_not, w));
  }
}

TEST_CASE("modular counting of all positions is length parity") {
  Alphabet ab("ab");
  Formula even_len = parse_fo("E[0 mod 2] x. true", ab);
  for (const auto& w : all_words(ab, 10))
    CHECK(eval_fo(even_len, w) == (w.size() % 2 == 0));
}

TEST_CASE("LTL parsing and evaluation") {
  Alphabet abcd("abcd");
  LtlFormula f = parse_ltl("F+ (a & ~F+ a & F+ (d & ~F- ((b | d) & ~F+ a)))", abcd);
  CHECK(ltl_accepts(f, "acd"));
  CHECK(ltl_accepts(f, "bacccd"));
  CHECK(!ltl_accepts(f, "acda"));  // another a after the d
  CHECK(!ltl_accepts(f, "abd"));   // a b between the last a and the d

  CHECK_THROWS_AS(parse_ltl("a &", abcd), ParseError);
  CHECK_THROWS_AS(parse_ltl("e", abcd), ParseError);

  // semantics bullets
  Alphabet ab("ab");
  LtlFormula until_ab = parse_ltl("a U b", ab);
  CHECK(eval_ltl(until_ab, "aab", 0));
  CHECK(eval_ltl(until_ab, "b", 0));        // nothing strictly between
  CHECK(!eval_ltl(until_ab, "aa", 0));
  CHECK(eval_ltl(until_ab, "abb", 1));
  CHECK(eval_ltl(parse_ltl("true", ab), "", 0));

  LtlFormula since_ab = parse_ltl("a S b", ab);
  CHECK(eval_ltl(since_ab, "baa", 3));
  CHECK(!eval_ltl(since_ab, "aba", 1));

  CHECK_THROWS_AS(eval_ltl(until_ab, "ab", 5), ValueError);

  // atoms are false at the virtual initial position
  CHECK(!eval_ltl(parse_ltl("a", ab), "ab", 0));
  CHECK(eval_ltl(parse_ltl("a", ab), "ab", 1));
}

TEST_CASE("eventually-future is until with a true guard") {
  gen::Rng rng(4242);
  Alphabet ab("ab");
  for (int i = 0; i < 20; ++i) {
    LtlFormula phi = gen::random_ltl(rng, ab, 2);
    LtlFormula ev = ltl::ev_future(phi);
    LtlFormula guarded = ltl::until(ltl::truth(true), phi);
    for (const auto& w : all_words(ab, 6))
      for (int p = 0; p <= static_cast<int>(w.size()); ++p)
        CHECK(eval_ltl(ev, w, p) == eval_ltl(guarded, w, p));
  }
}

TEST_CASE("LTL to FO translation") {
  Alphabet ab("ab");
  Formula atom = ltl_to_fo(ltl::atom('a'));
  REQUIRE(atom->kind == FoKind::Label);
  CHECK(atom->letter == 'a');
  CHECK(atom->var == "x");

  Formula ev = ltl_to_fo(ltl::ev_future(ltl::atom('a')));
  REQUIRE(ev->kind == FoKind::Exists);
  CHECK(ev->var == "y");
  REQUIRE(ev->lhs->kind == FoKind::And);
  CHECK(ev->lhs->lhs->kind == FoKind::Less);
  CHECK(ev->lhs->rhs->kind == FoKind::Label);

  // only three variables ever appear
  LtlFormula deep = parse_ltl("(a U (b U a)) S F+ (a & F- b)", ab);
  Formula translated = ltl_to_fo(deep);
  std::set<std::string> vars;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (!f) return;
    if (!f->var.empty()) vars.insert(f->var);
    if (!f->var2.empty()) vars.insert(f->var2);
    walk(f->lhs);
    walk(f->rhs);
  };
  walk(translated);
  CHECK(vars == std::set<std::string>{"x", "y", "z"});
}

TEST_CASE("LTL and translated FO agree on pointed words") {
  gen::Rng rng(90125);
  Alphabet ab("ab");
  for (int i = 0; i < 50; ++i) {
    LtlFormula f = gen::random_ltl(rng, ab, 3);
    Formula translated = ltl_to_fo(f);
    for (const auto& w : all_words(ab, 5))
      for (int p = 1; p <= static_cast<int>(w.size()); ++p)
        CHECK(eval_ltl(f, w, p) == eval_fo(translated, w, {{"x", p}}));
  }
}

TEST_CASE("agreement between sentences and automata") {
  Alphabet ab("ab");
  Formula sentence = parse_fo_sentence(fixtures::group_for("ab_star").sentences[0], ab);
  Dfa dfa = compile("(ab)*", ab);
  CHECK(!agreement(sentence, dfa, 8).has_value());

  Formula some_a = parse_fo_sentence("E x. Qa x", ab);
  auto cex = agreement(some_a, compile("b*", ab), 4);
  REQUIRE(cex.has_value());
  CHECK(*cex == "");  // the empty word already disagrees
  auto cex2 = agreement(some_a, compile("b+", ab), 4);
  REQUIRE(cex2.has_value());
  CHECK(*cex2 == "a");

  CHECK_THROWS_AS(agreement(parse_fo("Qa x", ab), dfa, 4), ValueError);
  AgreementLimits tiny;
  tiny.max_words = 10;
  CHECK_THROWS_AS(agreement(some_a, dfa, 12, tiny), BudgetError);
}
