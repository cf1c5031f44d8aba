#pragma once

#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

#include "relogic/monoid.hpp"

namespace relogic {

struct ConstructionLimits {
  std::size_t product_cap = 10'000;      // elements of a constructed product
  std::size_t divides_work_cap = 5'000'000;
};

/// Componentwise product. Generators are kept (and reps recomputed for the
/// generated part) when both factors have the same generator letters.
Monoid direct_product(const Monoid& m, const Monoid& n,
                      const ConstructionLimits& limits = {});

/// Compatible left/right actions of N on M, as explicit tables. M is the
/// "additive" factor: its identity plays the role of 0.
struct ActionPair {
  std::vector<std::vector<Element>> left;   // left[n][m]  = n * m
  std::vector<std::vector<Element>> right;  // right[m][n] = m * n
};

ActionPair trivial_actions(const Monoid& m, const Monoid& n);

/// Throws ValueError naming the violated axiom and a witness if the actions
/// are not a compatible pair for M, N.
void validate_actions(const Monoid& m, const Monoid& n, const ActionPair& actions);

/// Bilateral semidirect product on M x N:
///   (m1, n1)(m2, n2) = (m1*n2 + n1*m2, n1 n2),  identity (0, 1).
/// Element (m, n) has index m * |N| + n. The table is re-validated.
Monoid bilateral_product(const Monoid& m, const Monoid& n, const ActionPair& actions,
                         const ConstructionLimits& limits = {});

enum class Ternary { False, True, Unknown };

/// Does M divide N (M a homomorphic image of a submonoid of N)? Exhaustive
/// search over generated submonoids of N and generator-image assignments;
/// Unknown when the work budget runs out before the search completes.
Ternary divides(const Monoid& m, const Monoid& n, const ConstructionLimits& limits = {});

// ---------------------------------------------------------------------------
// N-transductions.

/// Position-wise map w_i -> (h_l(w_1..w_{i-1}), w_i, h_r(w_{i+1}..w_n)).
struct Transduction {
  Monoid target;                     // N
  Alphabet sigma;                    // source alphabet
  std::map<char, Element> left;      // h_l on letters
  std::map<char, Element> right;     // h_r on letters

  Element fold_left(std::string_view w) const;
  Element fold_right(std::string_view w) const;
};

using Triple = std::tuple<Element, char, Element>;

std::vector<Triple> transduce(const Transduction& t, std::string_view w);

/// Bijection between triples (n, a, n') and single characters, so languages
/// over N x Sigma x N fit the Dfa machinery. Triple (n, a, n') has index
/// (n * |Sigma| + a_index) * |N| + n'.
struct TripleAlphabet {
  std::size_t monoid_size = 0;
  Alphabet sigma;

  TripleAlphabet() = default;
  TripleAlphabet(std::size_t monoid_size, Alphabet sigma);

  Alphabet alphabet() const;
  char encode(Element n, char a, Element n2) const;
  Triple decode(char c) const;
};

/// Word over the triple alphabet for tau(w).
std::string transduce_encoded(const Transduction& t, const TripleAlphabet& enc,
                              std::string_view w);

/// Automaton for { w : tau(w) in K }. States are (prefix value, K state,
/// claimed suffix value); the suffix value is guessed nondeterministically at
/// the start and checked letter by letter.
Nfa transduction_preimage(const Transduction& t, const TripleAlphabet& enc, const Dfa& k,
                          const CompileLimits& limits = {});

// ---------------------------------------------------------------------------
// Action-table text format, appended to the two monoid blocks by the CLI:
//   lact n m = m'
//   ract m n = m'
ActionPair parse_actions(std::istream& in, const Monoid& m, const Monoid& n);
ActionPair parse_actions_text(std::string_view text, const Monoid& m, const Monoid& n);

}  // namespace relogic
