#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "relogic/alphabet.hpp"
#include "relogic/regex.hpp"

namespace relogic {

using State = std::uint32_t;

struct CompileLimits {
  std::size_t max_states = 1'000'000;  // subset-construction / product state cap
};

/// Nondeterministic automaton with epsilon moves (Thompson intermediate, also
/// the output type of transduction preimages).
struct Nfa {
  Alphabet alphabet;
  std::size_t num_states = 0;
  std::vector<std::vector<std::vector<State>>> moves;  // [state][letter] -> targets
  std::vector<std::vector<State>> eps;                 // [state] -> targets
  std::vector<State> initial;
  std::vector<State> accepting;

  State add_state();
  void add_move(State from, std::size_t letter_index, State to);
  void add_eps(State from, State to);
};

/// Complete deterministic automaton: delta is total. `minimize` produces the
/// canonical form (BFS state numbering, letters in alphabet order), so two
/// minimized DFAs accept the same language iff they compare equal.
struct Dfa {
  Alphabet alphabet;
  std::size_t num_states = 0;
  State initial = 0;
  std::vector<std::vector<State>> delta;  // [state][letter]
  std::vector<bool> accepting;

  State step(State q, char c) const { return delta[q][alphabet.index(c)]; }
  State run(std::string_view w) const;
  bool accepts(std::string_view w) const { return accepting[run(w)]; }

  bool operator==(const Dfa&) const = default;
};

Dfa nfa_to_dfa(const Nfa& nfa, const CompileLimits& limits = {});
Dfa minimize(const Dfa& dfa);
Dfa complement_dfa(Dfa dfa);
Dfa intersect_dfa(const Dfa& a, const Dfa& b, const CompileLimits& limits = {});

/// Compile a regex AST to a complete DFA for exactly the denoted language.
Dfa compile(const RegexPtr& ast, const Alphabet& alphabet, const CompileLimits& limits = {});
Dfa compile(std::string_view regex_text, const Alphabet& alphabet, const CompileLimits& limits = {});

/// Accepted words of length <= max_len, in length-then-lexicographic order
/// (letters in alphabet order).
std::vector<std::string> enumerate_words(const Dfa& dfa, std::size_t max_len);

/// All words of length <= max_len over the alphabet, length-lex order.
std::vector<std::string> all_words(const Alphabet& alphabet, std::size_t max_len);

/// Number of words of length <= max_len over an alphabet of size k.
std::size_t count_words(std::size_t k, std::size_t max_len);

}  // namespace relogic
