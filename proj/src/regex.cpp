#include "relogic/regex.hpp"

#include <cctype>

namespace relogic {

namespace re {

static RegexPtr make(RegexKind kind, char letter, std::vector<RegexPtr> children) {
  auto n = std::make_shared<RegexNode>();
  n->kind = kind;
  n->letter = letter;
  n->children = std::move(children);
  return n;
}

RegexPtr empty_set() { return make(RegexKind::EmptySet, '\0', {}); }
RegexPtr epsilon() { return make(RegexKind::Epsilon, '\0', {}); }
RegexPtr letter(char c) { return make(RegexKind::Letter, c, {}); }

RegexPtr concat(std::vector<RegexPtr> parts) {
  if (parts.empty()) return epsilon();
  if (parts.size() == 1) return parts[0];
  return make(RegexKind::Concat, '\0', std::move(parts));
}

RegexPtr alt(std::vector<RegexPtr> parts) {
  if (parts.empty()) return empty_set();
  if (parts.size() == 1) return parts[0];
  return make(RegexKind::Union, '\0', std::move(parts));
}

RegexPtr intersect(std::vector<RegexPtr> parts) {
  if (parts.size() == 1) return parts[0];
  return make(RegexKind::Intersect, '\0', std::move(parts));
}

RegexPtr complement(RegexPtr r) { return make(RegexKind::Complement, '\0', {std::move(r)}); }
RegexPtr star(RegexPtr r) { return make(RegexKind::Star, '\0', {std::move(r)}); }
RegexPtr plus(RegexPtr r) { return make(RegexKind::Plus, '\0', {std::move(r)}); }
RegexPtr optional(RegexPtr r) { return make(RegexKind::Optional, '\0', {std::move(r)}); }

}  // namespace re

namespace {

constexpr std::string_view kReserved = "|&!*+?()01";

class RegexParser {
 public:
  RegexParser(std::string_view text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  RegexPtr parse() {
    RegexPtr r = parse_union();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input in regex", pos_);
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool eat(char c) {
    if (peek_is(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_atom_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    if (c == '(' || c == '!' || c == '0' || c == '1') return true;
    return kReserved.find(c) == std::string_view::npos;
  }

  RegexPtr parse_union() {
    std::vector<RegexPtr> parts{parse_inter()};
    while (eat('|')) parts.push_back(parse_inter());
    return re::alt(std::move(parts));
  }

  RegexPtr parse_inter() {
    std::vector<RegexPtr> parts{parse_cat()};
    while (eat('&')) parts.push_back(parse_cat());
    return re::intersect(std::move(parts));
  }

  RegexPtr parse_cat() {
    std::vector<RegexPtr> parts;
    if (!at_atom_start())
      throw ParseError("expected a regex atom", pos_);
    while (at_atom_start()) parts.push_back(parse_post());
    return re::concat(std::move(parts));
  }

  RegexPtr parse_post() {
    RegexPtr r = parse_atom();
    for (;;) {
      if (eat('*'))
        r = re::star(std::move(r));
      else if (eat('+'))
        r = re::plus(std::move(r));
      else if (eat('?'))
        r = re::optional(std::move(r));
      else
        break;
    }
    return r;
  }

  RegexPtr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of regex", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RegexPtr r = parse_union();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (c == '!') {
      ++pos_;
      return re::complement(parse_atom());
    }
    if (c == '0') {
      ++pos_;
      return re::empty_set();
    }
    if (c == '1') {
      ++pos_;
      return re::epsilon();
    }
    if (kReserved.find(c) != std::string_view::npos)
      throw ParseError(std::string("unexpected '") + c + "'", pos_);
    if (!alphabet_.contains(c))
      throw ParseError(std::string("letter '") + c + "' is not in the declared alphabet", pos_);
    ++pos_;
    return re::letter(c);
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

void print(const RegexPtr& r, std::string& out) {
  auto group = [&](const RegexPtr& child, bool needs_parens) {
    if (needs_parens) out += '(';
    print(child, out);
    if (needs_parens) out += ')';
  };
  switch (r->kind) {
    case RegexKind::EmptySet: out += '0'; break;
    case RegexKind::Epsilon: out += '1'; break;
    case RegexKind::Letter: out += r->letter; break;
    case RegexKind::Concat:
      for (const auto& c : r->children)
        group(c, c->kind == RegexKind::Union || c->kind == RegexKind::Intersect);
      break;
    case RegexKind::Union:
      for (std::size_t i = 0; i < r->children.size(); ++i) {
        if (i) out += '|';
        print(r->children[i], out);
      }
      break;
    case RegexKind::Intersect:
      for (std::size_t i = 0; i < r->children.size(); ++i) {
        if (i) out += '&';
        group(r->children[i], r->children[i]->kind == RegexKind::Union);
      }
      break;
    case RegexKind::Complement:
      out += '!';
      group(r->children[0], r->children[0]->children.size() > 1 ||
                                r->children[0]->kind == RegexKind::Concat);
      break;
    case RegexKind::Star:
    case RegexKind::Plus:
    case RegexKind::Optional: {
      const RegexPtr& c = r->children[0];
      bool parens = !(c->kind == RegexKind::Letter || c->kind == RegexKind::EmptySet ||
                      c->kind == RegexKind::Epsilon);
      group(c, parens);
      out += r->kind == RegexKind::Star ? '*' : r->kind == RegexKind::Plus ? '+' : '?';
      break;
    }
  }
}

}  // namespace

RegexPtr parse_regex(std::string_view text, const Alphabet& alphabet) {
  return RegexParser(text, alphabet).parse();
}

std::string to_string(const RegexPtr& r) {
  std::string out;
  print(r, out);
  return out;
}

}  // namespace relogic
