#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "relogic/automata.hpp"

namespace relogic {

// ---------------------------------------------------------------------------
// First-order logic with modular quantifiers over finite words, order and
// equality. Positions are 1-based; quantifiers range over 1..|w|.

enum class FoKind {
  True, False,
  Label,      // Qa x
  Less,       // x < y
  Equal,      // x = y
  Not, And, Or, Implies,
  Exists, Forall,
  ModExists,  // E[i mod m] x. body
};

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  FoKind kind = FoKind::True;
  char letter = '\0';          // Label
  std::string var;             // Label/Less/Equal: first variable; quantifiers: bound variable
  std::string var2;            // Less/Equal: second variable
  int mod_i = 0, mod_m = 0;    // ModExists
  Formula lhs, rhs;            // binary connectives; unary/quantifier body in lhs
};

namespace fo {
Formula truth(bool value);
Formula label(char letter, std::string var);
Formula less(std::string a, std::string b);
Formula equal(std::string a, std::string b);
Formula negate(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula exists(std::string var, Formula body);
Formula forall(std::string var, Formula body);
Formula modexists(int i, int m, std::string var, Formula body);
}  // namespace fo

// Concrete syntax:
//   E x. f | A x. f | E[i mod m] x. f   (body extends to the end / closing paren)
//   connectives  ~  &  |  ->   (tightest to loosest; -> right-associative)
//   atoms  Qa x | x < y | x = y | S(x,y) | true | false
// Variables rebind by the nearest enclosing quantifier. S(x,y) is desugared
// to x<y & ~E z.(x<z & z<y) with a fresh z at parse time.
Formula parse_fo(std::string_view text, const Alphabet& alphabet);
/// As parse_fo but rejects formulas with free variables.
Formula parse_fo_sentence(std::string_view text, const Alphabet& alphabet);

std::string to_string(const Formula& f);
std::set<std::string> free_variables(const Formula& f);

/// Word with pointers mapping variables to 1-based positions.
struct WordStructure {
  std::string word;
  std::map<std::string, int> pointers;
};

bool eval_fo(const Formula& f, std::string_view word,
             const std::map<std::string, int>& pointers = {});
bool eval_fo(const Formula& f, const WordStructure& s);

/// Positions p (1-based) where (word, p) satisfies the one-free-variable
/// formula f.
std::vector<int> pointed_set(const Formula& f, std::string_view word);

// ---------------------------------------------------------------------------
// Substitutions over the power-set alphabet.

/// Canonical single-character encoding of a subset bitmask (bit j = j-th
/// formula of the list). Supports up to 5 formulas (32 letters).
char subset_char(unsigned mask);
unsigned subset_mask(char c);

struct Substitution {
  std::vector<Formula> formulas;  // each with at most one free variable
  Alphabet source;                // the alphabet the formulas speak about

  Alphabet power_alphabet() const;
};

/// sigma(psi): replace each label Q_S y of psi (over the power-set alphabet)
/// by the conjunction of the selected formulas at y and the negations of the
/// rest. Bound variables of the substituted formulas are renamed fresh.
Formula substitute(const Formula& psi, const Substitution& sub);

/// sigma^{-1}(w): the word over the power-set alphabet whose i-th letter is
/// the set of formulas true at position i of w.
std::string sigma_inverse(const Substitution& sub, std::string_view w);

// ---------------------------------------------------------------------------
// Relativization.

enum class Direction { Before, After };

/// Restrict every quantifier of f to positions strictly before (after) the
/// pivot variable, which must not occur bound in f.
Formula relativize(const Formula& f, const std::string& pivot, Direction direction);

// ---------------------------------------------------------------------------
// Linear temporal logic on finite words.

enum class LtlKind {
  True, False,
  Atom,           // a single letter
  Not, And, Or, Implies,
  EvFuture,       // F+ f : somewhere strictly in the future
  EvPast,         // F- f : somewhere strictly in the past
  Until,          // f U g
  Since,          // f S g
};

struct LtlNode;
using LtlFormula = std::shared_ptr<const LtlNode>;

struct LtlNode {
  LtlKind kind = LtlKind::True;
  char letter = '\0';
  LtlFormula lhs, rhs;
};

namespace ltl {
LtlFormula truth(bool value);
LtlFormula atom(char letter);
LtlFormula negate(LtlFormula f);
LtlFormula conj(LtlFormula a, LtlFormula b);
LtlFormula disj(LtlFormula a, LtlFormula b);
LtlFormula implies(LtlFormula a, LtlFormula b);
LtlFormula ev_future(LtlFormula f);
LtlFormula ev_past(LtlFormula f);
LtlFormula until(LtlFormula a, LtlFormula b);
LtlFormula since(LtlFormula a, LtlFormula b);
}  // namespace ltl

// Concrete syntax: atoms are bare letters; `F+ f`, `F- f`, `f U g`, `f S g`;
// connectives ~ & | -> as in FO. U/S bind tighter than & and associate right.
LtlFormula parse_ltl(std::string_view text, const Alphabet& alphabet);
std::string to_string(const LtlFormula& f);

/// Truth at position p, 1 <= p <= |w|; p = 0 is the virtual initial position
/// where atoms are false and temporal operators use their usual ranges.
bool eval_ltl(const LtlFormula& f, std::string_view word, int position);

/// Membership of w in L_f = { w : (w, 0) |= f }.
bool ltl_accepts(const LtlFormula& f, std::string_view word);

/// Kamp-style translation to a first-order formula with one free variable
/// ("x"), using only three variables by reuse.
Formula ltl_to_fo(const LtlFormula& f);

// ---------------------------------------------------------------------------
// Bounded-length agreement between a sentence and an automaton.

struct AgreementLimits {
  std::size_t max_words = 1'000'000;
};

/// OK (nullopt) iff formula truth equals DFA acceptance on every word of
/// length <= max_len; otherwise the shortest (then lexicographically least)
/// disagreeing word.
std::optional<std::string> agreement(const Formula& sentence, const Dfa& dfa,
                                     std::size_t max_len, const AgreementLimits& limits = {});
std::optional<std::string> agreement(const LtlFormula& sentence, const Dfa& dfa,
                                     std::size_t max_len, const AgreementLimits& limits = {});

}  // namespace relogic
