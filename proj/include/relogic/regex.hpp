#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "relogic/alphabet.hpp"

namespace relogic {

enum class RegexKind {
  EmptySet,    // 0
  Epsilon,     // 1
  Letter,      // a
  Concat,      // rs
  Union,       // r|s
  Intersect,   // r&s
  Complement,  // !r
  Star,        // r*
  Plus,        // r+
  Optional     // r?
};

struct RegexNode;
using RegexPtr = std::shared_ptr<const RegexNode>;

struct RegexNode {
  RegexKind kind;
  char letter = '\0';             // Letter only
  std::vector<RegexPtr> children; // Concat/Union/Intersect: n-ary; Complement/Star/Plus/Optional: 1
};

namespace re {
RegexPtr empty_set();
RegexPtr epsilon();
RegexPtr letter(char c);
RegexPtr concat(std::vector<RegexPtr> parts);
RegexPtr alt(std::vector<RegexPtr> parts);
RegexPtr intersect(std::vector<RegexPtr> parts);
RegexPtr complement(RegexPtr r);
RegexPtr star(RegexPtr r);
RegexPtr plus(RegexPtr r);
RegexPtr optional(RegexPtr r);
}  // namespace re

// Grammar (whitespace ignored):
//   union := inter ('|' inter)*
//   inter := cat ('&' cat)*
//   cat   := post+
//   post  := atom ('*'|'+'|'?')*
//   atom  := letter | '0' | '1' | '!' atom | '(' union ')'
// '0' is the empty set, '1' the empty word. Letters are single non-reserved
// characters and must belong to `alphabet`.
RegexPtr parse_regex(std::string_view text, const Alphabet& alphabet);

std::string to_string(const RegexPtr& r);

}  // namespace relogic
