#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relogic/automata.hpp"

namespace relogic {

using Element = std::uint32_t;

struct MonoidLimits {
  std::size_t element_cap = 100'000;          // closure size during transition-monoid BFS
  std::size_t identity_eval_cap = 10'000'000; // assignments enumerated by check_identity
  std::size_t congruence_word_cap = 1'000'000;
};

/// Finite monoid as an explicit multiplication table. Optionally carries a
/// generator map (letter -> element) and shortest representative words; both
/// are present whenever the monoid was computed from an automaton.
struct Monoid {
  std::size_t size = 0;
  std::vector<std::vector<Element>> table;  // table[i][j] = i * j
  Element identity = 0;
  std::map<char, Element> generators;
  std::vector<std::string> reps;  // may be empty when unknown

  Element mul(Element a, Element b) const { return table[a][b]; }

  bool is_idempotent(Element e) const { return mul(e, e) == e; }

  /// Image of a word under the generator map (requires generators).
  Element eval_word(std::string_view w) const;

  /// Printable name of an element: its representative word, "1" for the
  /// identity when its rep is empty, or "#i" when reps are unknown.
  std::string element_name(Element e) const;

  std::vector<Element> idempotents() const;

  /// Throws ValueError on a malformed table. Associativity is checked
  /// exhaustively for size <= 200 (and always for identity laws, generator
  /// ranges and representative round-trips).
  void validate() const;
};

/// Monoid of state transformations of a complete DFA, generated by the letter
/// actions. Closure by BFS in length-then-lex order, so representative words
/// are shortest with lexicographic ties broken by alphabet order.
Monoid transition_monoid(const Dfa& dfa, const MonoidLimits& limits = {});

/// transition_monoid of the minimized automaton: the syntactic monoid.
Monoid syntactic_monoid(const Dfa& dfa, const MonoidLimits& limits = {});
Monoid syntactic_monoid(std::string_view regex_text, const Alphabet& alphabet,
                        const MonoidLimits& limits = {});

/// Partition of all words of length <= word_len where x ~ y iff
/// uxv in L <=> uyv in L for every context with |u|,|v| <= ctx_len.
/// Uses only the DFA's transition/acceptance structure, never the monoid.
struct CongruenceClasses {
  std::vector<std::string> words;      // length-lex order
  std::vector<std::uint32_t> class_of; // parallel to words
  std::size_t num_classes = 0;
};
CongruenceClasses brute_force_congruence(const Dfa& dfa, std::size_t word_len,
                                         std::size_t ctx_len, const MonoidLimits& limits = {});

/// The unique idempotent among the powers m, m^2, m^3, ...
Element idempotent_power(Element m, const Monoid& monoid);

// ---------------------------------------------------------------------------
// Omega terms and identities.

struct OmegaTerm {
  enum class Kind { Variable, Concat, Omega };
  Kind kind = Kind::Concat;
  std::string var;                  // Variable
  std::vector<OmegaTerm> children;  // Concat: n-ary (empty = 1); Omega: 1

  static OmegaTerm variable(std::string name);
  static OmegaTerm concat(std::vector<OmegaTerm> parts);
  static OmegaTerm omega(OmegaTerm t);

  void collect_variables(std::vector<std::string>& out) const;
};

struct MonoidIdentity {
  OmegaTerm lhs, rhs;
  std::vector<std::string> variables() const;  // sorted, unique, both sides
};

std::string to_string(const OmegaTerm& t);
std::string to_string(const MonoidIdentity& id);

using Assignment = std::map<std::string, Element>;

Element eval_omega_term(const OmegaTerm& t, const Assignment& assignment, const Monoid& monoid);

/// OK (no counterexample) or the lexicographically first failing assignment
/// by element-index tuple in variable-name order.
struct IdentityCheck {
  bool holds = true;
  Assignment counterexample;  // populated iff !holds
};
IdentityCheck check_identity(const MonoidIdentity& id, const Monoid& monoid,
                             const MonoidLimits& limits = {});

// ---------------------------------------------------------------------------
// Green's relations and subgroups.

struct GreenData {
  // class index per element, for each relation
  std::vector<std::uint32_t> r_class, l_class, j_class, h_class;
  std::size_t num_r = 0, num_l = 0, num_j = 0, num_h = 0;

  bool j_trivial(std::size_t monoid_size) const { return num_j == monoid_size; }
};
GreenData green_relations(const Monoid& monoid);

/// A subsemigroup that is a group; `unit` is its idempotent identity, which
/// need not be the identity of the ambient monoid.
struct Subgroup {
  std::vector<Element> carrier;  // sorted
  Element unit = 0;
  std::map<Element, Element> inverse;

  bool trivial() const { return carrier.size() == 1; }
};

/// One subgroup per idempotent e: the group of units of eMe. Every subgroup
/// of the monoid embeds in one of these.
std::vector<Subgroup> maximal_subgroups(const Monoid& monoid);

bool is_abelian(const Subgroup& g, const Monoid& monoid);
/// Derived series: repeatedly replace G by its commutator subgroup until
/// stable; solvable iff the series reaches {unit}.
bool is_solvable(const Subgroup& g, const Monoid& monoid);

/// Letters whose generator image is the identity element. Inserting or
/// deleting such a letter never changes membership.
std::vector<char> neutral_letters(const Monoid& monoid);

// ---------------------------------------------------------------------------
// Explicit text format:
//   size n
//   n rows of n element indices (row i lists i*0 .. i*(n-1))
//   identity k
//   gen a=i     (optional, repeated)
//   rep i=word  (optional, repeated; empty word allowed)
Monoid parse_monoid(std::istream& in);
Monoid parse_monoid_text(std::string_view text);
std::string monoid_to_text(const Monoid& monoid);

}  // namespace relogic
