#pragma once

// Shared language and sentence fixtures. Each sentence group lists formulas
// that define the same language as the regex; the LTL entry, when present,
// defines it too.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fixtures {

struct Language {
  const char* name;
  const char* alphabet;
  const char* regex;
};

// The eight core languages.
inline constexpr Language kAbStar = {"ab_star", "ab", "(ab)*"};
inline constexpr Language kInfixACsA = {"infix_a_cs_a", "abc", "(a|b|c)* a c* a (a|b|c)*"};
inline constexpr Language kMarkedBEvenA = {"marked_b_even_a", "ab", "(b* a b* a)* b (a|b)*"};
inline constexpr Language kLastACsD = {"last_a_cs_d", "abcd", "(a|b|c|d)* a c* d (b|c|d)*"};
// an even number of c's strictly after the first a
inline constexpr Language kFirstAEvenC = {"first_a_even_c", "abc",
                                          "(b|c)* a ((a|b)* c (a|b)* c)* (a|b)*"};
// an even number of a's whose backward scan over c's hits a b; the gaps are
// exactly the words with no b-c*-a factor
inline constexpr Language kEvenMarkedA = {
    "even_marked_a", "abcd",
    "(!((a|b|c|d)* b c* a (a|b|c|d)*) b c* a !((a|b|c|d)* b c* a (a|b|c|d)*) b c* a)* "
    "!((a|b|c|d)* b c* a (a|b|c|d)*)"};
inline constexpr Language kContainsA = {"contains_a", "ab", "(a|b)* a (a|b)*"};
inline constexpr Language kEvenA = {"even_a", "ab", "(b* a b* a)* b*"};

inline constexpr Language kLanguages[] = {
    kAbStar, kInfixACsA, kMarkedBEvenA, kLastACsD,
    kFirstAEvenC, kEvenMarkedA, kContainsA, kEvenA,
};

struct SentenceGroup {
  Language language;
  std::vector<const char*> sentences;  // FO+MOD, all defining language.regex
  const char* ltl;                     // optional LTL form, or nullptr
};

inline const std::vector<SentenceGroup>& sentence_groups() {
  static const std::vector<SentenceGroup> groups = {
      // one window of two a's separated by c's
      {kInfixACsA,
       {"E x. E y. A z. ((x < y) & Qa x & Qa y & ((x < z & z < y) -> Qc z))"},
       nullptr},

      // even number of a's whose prefix ends with b c^k
      {kEvenMarkedA,
       {"E[0 mod 2] x. E y. (Qa x & (y < x) & Qb y & (A z. ((y < z & z < x) -> Qc z)))"},
       nullptr},

      // some b preceded by an even number of a's
      {kMarkedBEvenA,
       {"E x. (Qb x & E[0 mod 2] y. ((y < x) & Qa y))"},
       nullptr},

      // the first a is followed by an even number of c's:
      // three-variable form, two-variable form, and the form with the modular
      // quantifier pulled to the front
      {kFirstAEvenC,
       {"E x. A y. (Qa x & ((y < x) -> ~Qa y) & E[0 mod 2] z. ((x < z) & Qc z))",
        "E x. A y. (Qa x & ((y < x) -> ~Qa y) & E[0 mod 2] y. ((x < y) & Qc y))",
        "(E y. Qa y) & E[0 mod 2] x. (Qc x & E y. ((y < x) & Qa y & A x. ((x < y) -> ~Qa x)))"},
       nullptr},

      // the last a is followed by c's and then a d: three-variable form,
      // two-variable form, purely-existential-prefix form, and
      // purely-universal-prefix form
      {kLastACsD,
       {"E x. A y. E z. (Qa x & ((x < y) -> ~Qa y) & Qd z & (x < z) & ((x < y & y < z) -> Qc y))",
        "E x. (Qa x & (A y. ((x < y) -> ~Qa y)) & E y. ((x < y) & Qd y & A x. (((x < y) & ~Qc x) "
        "-> E y. ((x < y | x = y) & Qa y))))",
        "E x. E y. A z. ((x < y) & Qa x & Qd y & ((x < z & z < y) -> Qc z) & ((y < z) -> (Qb z | "
        "Qc z | Qd z)))",
        "(E s. Qa s) & (A x. (Qa x -> E z. (x < z & ~Qc z))) & (A x. A y. ((Qa x & (x < y) & Qb "
        "y & (A z. ((x < z & z < y) -> Qc z))) -> E w. ((y < w) & Qa w)))"},
       "F+ (a & ~F+ a & F+ (d & ~F- ((b | d) & ~F+ a)))"},

      // alternating ab-blocks: the order-based sentence and the
      // modular-counting sentence
      {kAbStar,
       {"A x. A y. ((Qb x -> E z. (z < x)) & (Qa x -> E z. (x < z)) & (((~(x = y) & Qa x & Qa y) "
        "| (~(x = y) & Qb x & Qb y)) -> E z. ((x < z & z < y) | (y < z & z < x))))",
        "(E[0 mod 2] x. true) & (A x. ((Qa x -> E[0 mod 2] y. (y < x)) & (Qb x -> E[1 mod 2] y. "
        "(y < x))))"},
       nullptr},
  };
  return groups;
}

inline const SentenceGroup& group_for(const char* language_name) {
  for (const auto& g : sentence_groups())
    if (std::string_view(g.language.name) == language_name) return g;
  throw std::out_of_range(std::string("no sentence group named ") + language_name);
}

}  // namespace fixtures
