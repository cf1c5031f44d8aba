#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "relogic/errors.hpp"

namespace relogic {

/// Ordered set of distinct single-character letters. The declaration order is
/// fixed at construction and used for every lexicographic tie-break in the
/// library (word enumeration, canonical state numbering, representatives).
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::string_view letters) : letters_(letters) {
    if (letters_.empty()) throw ValueError("alphabet must be nonempty");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(letters_[i]);
      if (c <= ' ' || c >= 127)
        throw ValueError("alphabet letters must be printable non-space characters");
      for (std::size_t j = i + 1; j < letters_.size(); ++j)
        if (letters_[i] == letters_[j])
          throw ValueError(std::string("duplicate alphabet letter '") + letters_[i] + "'");
    }
  }

  std::size_t size() const { return letters_.size(); }
  char letter(std::size_t i) const { return letters_[i]; }
  const std::string& letters() const { return letters_; }

  bool contains(char c) const { return letters_.find(c) != std::string::npos; }

  std::size_t index(char c) const {
    auto pos = letters_.find(c);
    if (pos == std::string::npos)
      throw ValueError(std::string("letter '") + c + "' is not in the declared alphabet");
    return pos;
  }

  void require_word(std::string_view w) const {
    for (char c : w) (void)index(c);
  }

  bool operator==(const Alphabet&) const = default;

 private:
  std::string letters_;
};

}  // namespace relogic
