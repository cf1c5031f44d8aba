#include "relogic/logic.hpp"

#include <algorithm>
#include <cctype>

namespace relogic {

namespace fo {

namespace {
std::shared_ptr<FormulaNode> make(FoKind kind) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = kind;
  return n;
}
}  // namespace

Formula truth(bool value) { return make(value ? FoKind::True : FoKind::False); }

Formula label(char letter, std::string var) {
  auto n = make(FoKind::Label);
  n->letter = letter;
  n->var = std::move(var);
  return n;
}

Formula less(std::string a, std::string b) {
  auto n = make(FoKind::Less);
  n->var = std::move(a);
  n->var2 = std::move(b);
  return n;
}

Formula equal(std::string a, std::string b) {
  auto n = make(FoKind::Equal);
  n->var = std::move(a);
  n->var2 = std::move(b);
  return n;
}

Formula negate(Formula f) {
  auto n = make(FoKind::Not);
  n->lhs = std::move(f);
  return n;
}

namespace {
Formula binary(FoKind kind, Formula a, Formula b) {
  auto n = make(kind);
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}
}  // namespace

Formula conj(Formula a, Formula b) { return binary(FoKind::And, std::move(a), std::move(b)); }
Formula disj(Formula a, Formula b) { return binary(FoKind::Or, std::move(a), std::move(b)); }
Formula implies(Formula a, Formula b) {
  return binary(FoKind::Implies, std::move(a), std::move(b));
}

Formula exists(std::string var, Formula body) {
  auto n = make(FoKind::Exists);
  n->var = std::move(var);
  n->lhs = std::move(body);
  return n;
}

Formula forall(std::string var, Formula body) {
  auto n = make(FoKind::Forall);
  n->var = std::move(var);
  n->lhs = std::move(body);
  return n;
}

Formula modexists(int i, int m, std::string var, Formula body) {
  if (m < 2 || i < 0 || i >= m) throw ValueError("modular quantifier requires 0 <= i < m, m >= 2");
  auto n = make(FoKind::ModExists);
  n->mod_i = i;
  n->mod_m = m;
  n->var = std::move(var);
  n->lhs = std::move(body);
  return n;
}

}  // namespace fo

// ---------------------------------------------------------------------------
// Shared lexer for the FO syntax.

namespace {

enum class Tok {
  Ident, Number, Label, LParen, RParen, LBrack, RBrack, Dot, Comma,
  Less, Equal, Arrow, Tilde, Amp, Pipe,
  KwE, KwA, KwS, KwTrue, KwFalse, KwMod, End,
};

struct Token {
  Tok kind;
  std::string text;
  int number = 0;
  char letter = '\0';
  std::size_t pos = 0;
};

std::vector<Token> lex_fo(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t pos) { out.push_back({k, "", 0, '\0', pos}); };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t pos = i;
    if (c == 'Q') {
      if (i + 1 >= text.size() || std::isspace(static_cast<unsigned char>(text[i + 1])))
        throw ParseError("label predicate 'Q' must be followed by a letter", pos);
      out.push_back({Tok::Label, "", 0, text[i + 1], pos});
      i += 2;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' ||
              text[j] == '\''))
        ++j;
      std::string word(text.substr(i, j - i));
      i = j;
      if (word == "E") push(Tok::KwE, pos);
      else if (word == "A") push(Tok::KwA, pos);
      else if (word == "S") push(Tok::KwS, pos);
      else if (word == "true") push(Tok::KwTrue, pos);
      else if (word == "false") push(Tok::KwFalse, pos);
      else if (word == "mod") push(Tok::KwMod, pos);
      else out.push_back({Tok::Ident, std::move(word), 0, '\0', pos});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      int value = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        value = value * 10 + (text[j] - '0');
        ++j;
      }
      out.push_back({Tok::Number, "", value, '\0', pos});
      i = j;
      continue;
    }
    switch (c) {
      case '(': push(Tok::LParen, pos); ++i; break;
      case ')': push(Tok::RParen, pos); ++i; break;
      case '[': push(Tok::LBrack, pos); ++i; break;
      case ']': push(Tok::RBrack, pos); ++i; break;
      case '.': push(Tok::Dot, pos); ++i; break;
      case ',': push(Tok::Comma, pos); ++i; break;
      case '<': push(Tok::Less, pos); ++i; break;
      case '=': push(Tok::Equal, pos); ++i; break;
      case '~': push(Tok::Tilde, pos); ++i; break;
      case '&': push(Tok::Amp, pos); ++i; break;
      case '|': push(Tok::Pipe, pos); ++i; break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          push(Tok::Arrow, pos);
          i += 2;
          break;
        }
        [[fallthrough]];
      default:
        throw ParseError(std::string("unexpected character '") + c + "' in formula", pos);
    }
  }
  out.push_back({Tok::End, "", 0, '\0', text.size()});
  return out;
}

class FoParser {
 public:
  FoParser(std::string_view text, const Alphabet& alphabet)
      : tokens_(lex_fo(text)), alphabet_(alphabet) {}

  Formula parse() {
    Formula f = parse_implies();
    expect(Tok::End, "trailing input after formula");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }

  bool eat(Tok k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(Tok k, const char* msg) {
    if (!eat(k)) throw ParseError(msg, peek().pos);
  }

  std::string expect_ident() {
    if (peek().kind != Tok::Ident) throw ParseError("expected a variable name", peek().pos);
    return next().text;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (eat(Tok::Arrow)) return fo::implies(std::move(lhs), parse_implies());
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (eat(Tok::Pipe)) f = fo::disj(std::move(f), parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (eat(Tok::Amp)) f = fo::conj(std::move(f), parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (eat(Tok::Tilde)) return fo::negate(parse_unary());
    if (peek().kind == Tok::KwE || peek().kind == Tok::KwA) return parse_quantifier();
    return parse_primary();
  }

  Formula parse_quantifier() {
    Token q = next();
    if (q.kind == Tok::KwE && eat(Tok::LBrack)) {
      if (peek().kind != Tok::Number) throw ParseError("expected residue number", peek().pos);
      int i = next().number;
      expect(Tok::KwMod, "expected 'mod'");
      if (peek().kind != Tok::Number) throw ParseError("expected modulus", peek().pos);
      int m = next().number;
      expect(Tok::RBrack, "expected ']'");
      std::string var = expect_ident();
      expect(Tok::Dot, "expected '.' after quantified variable");
      return fo::modexists(i, m, std::move(var), parse_implies());
    }
    std::string var = expect_ident();
    expect(Tok::Dot, "expected '.' after quantified variable");
    Formula body = parse_implies();
    return q.kind == Tok::KwE ? fo::exists(std::move(var), std::move(body))
                              : fo::forall(std::move(var), std::move(body));
  }

  Formula parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::KwTrue: next(); return fo::truth(true);
      case Tok::KwFalse: next(); return fo::truth(false);
      case Tok::LParen: {
        next();
        Formula f = parse_implies();
        expect(Tok::RParen, "expected ')'");
        return f;
      }
      case Tok::Label: {
        Token lab = next();
        if (!alphabet_.contains(lab.letter))
          throw ParseError(std::string("letter '") + lab.letter + "' is not in the alphabet",
                           lab.pos);
        return fo::label(lab.letter, expect_ident());
      }
      case Tok::KwS: {
        next();
        expect(Tok::LParen, "expected '(' after S");
        std::string a = expect_ident();
        expect(Tok::Comma, "expected ','");
        std::string b = expect_ident();
        expect(Tok::RParen, "expected ')'");
        // successor: a < b with nothing strictly in between
        std::string z = "@s" + std::to_string(fresh_++);
        return fo::conj(fo::less(a, b),
                        fo::negate(fo::exists(z, fo::conj(fo::less(a, z), fo::less(z, b)))));
      }
      case Tok::Ident: {
        std::string a = next().text;
        if (eat(Tok::Less)) return fo::less(std::move(a), expect_ident());
        if (eat(Tok::Equal)) return fo::equal(std::move(a), expect_ident());
        throw ParseError("expected '<' or '=' after variable", peek().pos);
      }
      default:
        throw ParseError("expected a formula", t.pos);
    }
  }

  std::vector<Token> tokens_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
  int fresh_ = 0;
};

}  // namespace

Formula parse_fo(std::string_view text, const Alphabet& alphabet) {
  return FoParser(text, alphabet).parse();
}

Formula parse_fo_sentence(std::string_view text, const Alphabet& alphabet) {
  Formula f = parse_fo(text, alphabet);
  auto free = free_variables(f);
  if (!free.empty()) {
    std::string names;
    for (const auto& v : free) names += (names.empty() ? "" : ", ") + v;
    throw ParseError("formula is not a sentence; unbound variables: " + names);
  }
  return f;
}

// ---------------------------------------------------------------------------

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f->kind) {
    case FoKind::True:
    case FoKind::False:
      return;
    case FoKind::Label:
      if (!bound.count(f->var)) out.insert(f->var);
      return;
    case FoKind::Less:
    case FoKind::Equal:
      if (!bound.count(f->var)) out.insert(f->var);
      if (!bound.count(f->var2)) out.insert(f->var2);
      return;
    case FoKind::Not:
      collect_free(f->lhs, bound, out);
      return;
    case FoKind::And:
    case FoKind::Or:
    case FoKind::Implies:
      collect_free(f->lhs, bound, out);
      collect_free(f->rhs, bound, out);
      return;
    case FoKind::Exists:
    case FoKind::Forall:
    case FoKind::ModExists: {
      bool was_bound = bound.count(f->var) > 0;
      bound.insert(f->var);
      collect_free(f->lhs, bound, out);
      if (!was_bound) bound.erase(f->var);
      return;
    }
  }
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

namespace {

struct FoEval {
  std::string_view word;
  std::vector<std::pair<std::string_view, int>> env;  // nearest binder = last entry

  int lookup(const std::string& var) const {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == var) return it->second;
    throw ValueError("unassigned free variable '" + var + "'");
  }

  bool eval(const FormulaNode* f) {
    switch (f->kind) {
      case FoKind::True: return true;
      case FoKind::False: return false;
      case FoKind::Label: return word[lookup(f->var) - 1] == f->letter;
      case FoKind::Less: return lookup(f->var) < lookup(f->var2);
      case FoKind::Equal: return lookup(f->var) == lookup(f->var2);
      case FoKind::Not: return !eval(f->lhs.get());
      case FoKind::And: return eval(f->lhs.get()) && eval(f->rhs.get());
      case FoKind::Or: return eval(f->lhs.get()) || eval(f->rhs.get());
      case FoKind::Implies: return !eval(f->lhs.get()) || eval(f->rhs.get());
      case FoKind::Exists: {
        env.emplace_back(f->var, 0);
        bool found = false;
        for (int p = 1; p <= static_cast<int>(word.size()) && !found; ++p) {
          env.back().second = p;
          found = eval(f->lhs.get());
        }
        env.pop_back();
        return found;
      }
      case FoKind::Forall: {
        env.emplace_back(f->var, 0);
        bool all = true;
        for (int p = 1; p <= static_cast<int>(word.size()) && all; ++p) {
          env.back().second = p;
          all = eval(f->lhs.get());
        }
        env.pop_back();
        return all;
      }
      case FoKind::ModExists: {
        env.emplace_back(f->var, 0);
        int count = 0;
        for (int p = 1; p <= static_cast<int>(word.size()); ++p) {
          env.back().second = p;
          if (eval(f->lhs.get())) ++count;
        }
        env.pop_back();
        return count % f->mod_m == f->mod_i;
      }
    }
    throw Error("unreachable formula kind");
  }
};

}  // namespace

bool eval_fo(const Formula& f, std::string_view word,
             const std::map<std::string, int>& pointers) {
  FoEval ev{word, {}};
  for (const auto& [var, p] : pointers) {
    if (p < 1 || p > static_cast<int>(word.size()))
      throw ValueError("pointer for '" + var + "' out of range");
    ev.env.emplace_back(var, p);
  }
  return ev.eval(f.get());
}

bool eval_fo(const Formula& f, const WordStructure& s) {
  return eval_fo(f, s.word, s.pointers);
}

std::vector<int> pointed_set(const Formula& f, std::string_view word) {
  auto free = free_variables(f);
  if (free.size() != 1)
    throw ValueError("pointed evaluation requires exactly one free variable");
  const std::string var = *free.begin();
  std::vector<int> out;
  for (int p = 1; p <= static_cast<int>(word.size()); ++p)
    if (eval_fo(f, word, {{var, p}})) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------------------
// Substitutions.

namespace {
constexpr std::string_view kSubsetChars =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
}

char subset_char(unsigned mask) {
  if (mask >= kSubsetChars.size()) throw ValueError("subset alphabet too large");
  return kSubsetChars[mask];
}

unsigned subset_mask(char c) {
  auto pos = kSubsetChars.find(c);
  if (pos == std::string_view::npos) throw ValueError("not a subset letter");
  return static_cast<unsigned>(pos);
}

Alphabet Substitution::power_alphabet() const {
  if (formulas.size() > 5) throw ValueError("at most 5 substitution formulas supported");
  std::string letters;
  for (unsigned mask = 0; mask < (1u << formulas.size()); ++mask)
    letters += subset_char(mask);
  return Alphabet(letters);
}

namespace {

// Rename every bound variable to a fresh name and the (single) free variable
// to `target`.
Formula rename_for_substitution(const Formula& f, const std::string& target,
                                std::map<std::string, std::string>& bound_renames,
                                int& fresh) {
  auto renamed = [&](const std::string& v) -> std::string {
    auto it = bound_renames.find(v);
    if (it != bound_renames.end()) return it->second;
    return target;  // free occurrence
  };
  switch (f->kind) {
    case FoKind::True:
    case FoKind::False:
      return f;
    case FoKind::Label:
      return fo::label(f->letter, renamed(f->var));
    case FoKind::Less:
      return fo::less(renamed(f->var), renamed(f->var2));
    case FoKind::Equal:
      return fo::equal(renamed(f->var), renamed(f->var2));
    case FoKind::Not:
      return fo::negate(rename_for_substitution(f->lhs, target, bound_renames, fresh));
    case FoKind::And:
      return fo::conj(rename_for_substitution(f->lhs, target, bound_renames, fresh),
                      rename_for_substitution(f->rhs, target, bound_renames, fresh));
    case FoKind::Or:
      return fo::disj(rename_for_substitution(f->lhs, target, bound_renames, fresh),
                      rename_for_substitution(f->rhs, target, bound_renames, fresh));
    case FoKind::Implies:
      return fo::implies(rename_for_substitution(f->lhs, target, bound_renames, fresh),
                         rename_for_substitution(f->rhs, target, bound_renames, fresh));
    case FoKind::Exists:
    case FoKind::Forall:
    case FoKind::ModExists: {
      std::string fresh_name = "@r" + std::to_string(fresh++);
      auto previous = bound_renames.find(f->var);
      std::optional<std::string> saved;
      if (previous != bound_renames.end()) saved = previous->second;
      bound_renames[f->var] = fresh_name;
      Formula body = rename_for_substitution(f->lhs, target, bound_renames, fresh);
      if (saved) bound_renames[f->var] = *saved;
      else bound_renames.erase(f->var);
      if (f->kind == FoKind::Exists) return fo::exists(fresh_name, std::move(body));
      if (f->kind == FoKind::Forall) return fo::forall(fresh_name, std::move(body));
      return fo::modexists(f->mod_i, f->mod_m, fresh_name, std::move(body));
    }
  }
  throw Error("unreachable formula kind");
}

Formula substitute_walk(const Formula& psi, const Substitution& sub, int& fresh) {
  switch (psi->kind) {
    case FoKind::True:
    case FoKind::False:
    case FoKind::Less:
    case FoKind::Equal:
      return psi;
    case FoKind::Label: {
      unsigned mask = subset_mask(psi->letter);
      if (mask >= (1u << sub.formulas.size()))
        throw ValueError("label letter is not a subset of the substitution formulas");
      // Conjunction of phi_j(y) for j in the subset and ~phi_j(y) otherwise.
      Formula out = fo::truth(true);
      bool first = true;
      for (std::size_t j = 0; j < sub.formulas.size(); ++j) {
        std::map<std::string, std::string> renames;
        Formula phi = rename_for_substitution(sub.formulas[j], psi->var, renames, fresh);
        if (!(mask & (1u << j))) phi = fo::negate(std::move(phi));
        out = first ? phi : fo::conj(std::move(out), std::move(phi));
        first = false;
      }
      return out;
    }
    case FoKind::Not:
      return fo::negate(substitute_walk(psi->lhs, sub, fresh));
    case FoKind::And:
      return fo::conj(substitute_walk(psi->lhs, sub, fresh),
                      substitute_walk(psi->rhs, sub, fresh));
    case FoKind::Or:
      return fo::disj(substitute_walk(psi->lhs, sub, fresh),
                      substitute_walk(psi->rhs, sub, fresh));
    case FoKind::Implies:
      return fo::implies(substitute_walk(psi->lhs, sub, fresh),
                         substitute_walk(psi->rhs, sub, fresh));
    case FoKind::Exists:
      return fo::exists(psi->var, substitute_walk(psi->lhs, sub, fresh));
    case FoKind::Forall:
      return fo::forall(psi->var, substitute_walk(psi->lhs, sub, fresh));
    case FoKind::ModExists:
      return fo::modexists(psi->mod_i, psi->mod_m, psi->var,
                           substitute_walk(psi->lhs, sub, fresh));
  }
  throw Error("unreachable formula kind");
}

}  // namespace

Formula substitute(const Formula& psi, const Substitution& sub) {
  for (const auto& phi : sub.formulas)
    if (free_variables(phi).size() > 1)
      throw ValueError("substitution formulas must have at most one free variable");
  int fresh = 0;
  return substitute_walk(psi, sub, fresh);
}

std::string sigma_inverse(const Substitution& sub, std::string_view w) {
  // Free variable name per formula (if any).
  std::vector<std::optional<std::string>> free_var;
  for (const auto& phi : sub.formulas) {
    auto free = free_variables(phi);
    if (free.size() > 1)
      throw ValueError("substitution formulas must have at most one free variable");
    free_var.push_back(free.empty() ? std::nullopt
                                    : std::optional<std::string>(*free.begin()));
  }
  std::string out;
  for (int p = 1; p <= static_cast<int>(w.size()); ++p) {
    unsigned mask = 0;
    for (std::size_t j = 0; j < sub.formulas.size(); ++j) {
      bool holds = free_var[j] ? eval_fo(sub.formulas[j], w, {{*free_var[j], p}})
                               : eval_fo(sub.formulas[j], w);
      if (holds) mask |= 1u << j;
    }
    out += subset_char(mask);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Relativization.

namespace {

void check_not_bound(const Formula& f, const std::string& pivot) {
  switch (f->kind) {
    case FoKind::Exists:
    case FoKind::Forall:
    case FoKind::ModExists:
      if (f->var == pivot)
        throw ValueError("pivot variable '" + pivot + "' occurs bound");
      check_not_bound(f->lhs, pivot);
      return;
    case FoKind::Not:
      check_not_bound(f->lhs, pivot);
      return;
    case FoKind::And:
    case FoKind::Or:
    case FoKind::Implies:
      check_not_bound(f->lhs, pivot);
      check_not_bound(f->rhs, pivot);
      return;
    default:
      return;
  }
}

Formula relativize_walk(const Formula& f, const std::string& pivot, Direction dir) {
  auto guard = [&](const std::string& var) {
    return dir == Direction::Before ? fo::less(var, pivot) : fo::less(pivot, var);
  };
  switch (f->kind) {
    case FoKind::True:
    case FoKind::False:
    case FoKind::Label:
    case FoKind::Less:
    case FoKind::Equal:
      return f;
    case FoKind::Not:
      return fo::negate(relativize_walk(f->lhs, pivot, dir));
    case FoKind::And:
      return fo::conj(relativize_walk(f->lhs, pivot, dir),
                      relativize_walk(f->rhs, pivot, dir));
    case FoKind::Or:
      return fo::disj(relativize_walk(f->lhs, pivot, dir),
                      relativize_walk(f->rhs, pivot, dir));
    case FoKind::Implies:
      return fo::implies(relativize_walk(f->lhs, pivot, dir),
                         relativize_walk(f->rhs, pivot, dir));
    case FoKind::Exists:
      return fo::exists(f->var,
                        fo::conj(guard(f->var), relativize_walk(f->lhs, pivot, dir)));
    case FoKind::Forall:
      return fo::forall(f->var,
                        fo::implies(guard(f->var), relativize_walk(f->lhs, pivot, dir)));
    case FoKind::ModExists:
      return fo::modexists(f->mod_i, f->mod_m, f->var,
                           fo::conj(guard(f->var), relativize_walk(f->lhs, pivot, dir)));
  }
  throw Error("unreachable formula kind");
}

}  // namespace

Formula relativize(const Formula& f, const std::string& pivot, Direction direction) {
  check_not_bound(f, pivot);
  return relativize_walk(f, pivot, direction);
}

// ---------------------------------------------------------------------------
// Formula printing.

namespace {

void print_fo(const Formula& f, std::string& out) {
  switch (f->kind) {
    case FoKind::True: out += "true"; return;
    case FoKind::False: out += "false"; return;
    case FoKind::Label: out += "Q"; out += f->letter; out += ' '; out += f->var; return;
    case FoKind::Less: out += f->var + " < " + f->var2; return;
    case FoKind::Equal: out += f->var + " = " + f->var2; return;
    case FoKind::Not:
      out += "~(";
      print_fo(f->lhs, out);
      out += ')';
      return;
    case FoKind::And:
    case FoKind::Or:
    case FoKind::Implies: {
      out += '(';
      print_fo(f->lhs, out);
      out += f->kind == FoKind::And ? " & " : f->kind == FoKind::Or ? " | " : " -> ";
      print_fo(f->rhs, out);
      out += ')';
      return;
    }
    case FoKind::Exists:
      out += "E " + f->var + ". (";
      print_fo(f->lhs, out);
      out += ')';
      return;
    case FoKind::Forall:
      out += "A " + f->var + ". (";
      print_fo(f->lhs, out);
      out += ')';
      return;
    case FoKind::ModExists:
      out += "E[" + std::to_string(f->mod_i) + " mod " + std::to_string(f->mod_m) + "] " +
             f->var + ". (";
      print_fo(f->lhs, out);
      out += ')';
      return;
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print_fo(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// LTL.

namespace ltl {

namespace {
LtlFormula make(LtlKind kind, char letter, LtlFormula lhs, LtlFormula rhs) {
  auto n = std::make_shared<LtlNode>();
  n->kind = kind;
  n->letter = letter;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}
}  // namespace

LtlFormula truth(bool v) { return make(v ? LtlKind::True : LtlKind::False, '\0', {}, {}); }
LtlFormula atom(char letter) { return make(LtlKind::Atom, letter, {}, {}); }
LtlFormula negate(LtlFormula f) { return make(LtlKind::Not, '\0', std::move(f), {}); }
LtlFormula conj(LtlFormula a, LtlFormula b) {
  return make(LtlKind::And, '\0', std::move(a), std::move(b));
}
LtlFormula disj(LtlFormula a, LtlFormula b) {
  return make(LtlKind::Or, '\0', std::move(a), std::move(b));
}
LtlFormula implies(LtlFormula a, LtlFormula b) {
  return make(LtlKind::Implies, '\0', std::move(a), std::move(b));
}
LtlFormula ev_future(LtlFormula f) { return make(LtlKind::EvFuture, '\0', std::move(f), {}); }
LtlFormula ev_past(LtlFormula f) { return make(LtlKind::EvPast, '\0', std::move(f), {}); }
LtlFormula until(LtlFormula a, LtlFormula b) {
  return make(LtlKind::Until, '\0', std::move(a), std::move(b));
}
LtlFormula since(LtlFormula a, LtlFormula b) {
  return make(LtlKind::Since, '\0', std::move(a), std::move(b));
}

}  // namespace ltl

namespace {

class LtlParser {
 public:
  LtlParser(std::string_view text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {
    for (char c : std::string_view("USF"))
      if (alphabet.contains(c))
        throw ValueError(std::string("alphabet letter '") + c + "' collides with LTL syntax");
  }

  LtlFormula parse() {
    LtlFormula f = parse_implies();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input after formula", pos_);
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) == w) {
      // must not continue as an identifier
      std::size_t end = pos_ + w.size();
      if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
      pos_ = end;
      return true;
    }
    return false;
  }

  LtlFormula parse_implies() {
    LtlFormula lhs = parse_or();
    skip_ws();
    if (pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '>') {
      pos_ += 2;
      return ltl::implies(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  LtlFormula parse_or() {
    LtlFormula f = parse_and();
    while (eat('|')) f = ltl::disj(std::move(f), parse_and());
    return f;
  }

  LtlFormula parse_and() {
    LtlFormula f = parse_temporal();
    while (eat('&')) f = ltl::conj(std::move(f), parse_temporal());
    return f;
  }

  LtlFormula parse_temporal() {
    LtlFormula lhs = parse_unary();
    skip_ws();
    if (eat_word("U")) return ltl::until(std::move(lhs), parse_temporal());
    if (eat_word("S")) return ltl::since(std::move(lhs), parse_temporal());
    return lhs;
  }

  LtlFormula parse_unary() {
    if (eat('~')) return ltl::negate(parse_unary());
    skip_ws();
    if (text_.substr(pos_, 2) == "F+") {
      pos_ += 2;
      return ltl::ev_future(parse_unary());
    }
    if (text_.substr(pos_, 2) == "F-") {
      pos_ += 2;
      return ltl::ev_past(parse_unary());
    }
    return parse_primary();
  }

  LtlFormula parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of formula", pos_);
    if (eat('(')) {
      LtlFormula f = parse_implies();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return f;
    }
    if (eat_word("true")) return ltl::truth(true);
    if (eat_word("false")) return ltl::truth(false);
    char c = text_[pos_];
    if (!alphabet_.contains(c))
      throw ParseError(std::string("letter '") + c + "' is not in the alphabet", pos_);
    ++pos_;
    return ltl::atom(c);
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

LtlFormula parse_ltl(std::string_view text, const Alphabet& alphabet) {
  return LtlParser(text, alphabet).parse();
}

std::string to_string(const LtlFormula& f) {
  switch (f->kind) {
    case LtlKind::True: return "true";
    case LtlKind::False: return "false";
    case LtlKind::Atom: return std::string(1, f->letter);
    case LtlKind::Not: return "~(" + to_string(f->lhs) + ")";
    case LtlKind::And: return "(" + to_string(f->lhs) + " & " + to_string(f->rhs) + ")";
    case LtlKind::Or: return "(" + to_string(f->lhs) + " | " + to_string(f->rhs) + ")";
    case LtlKind::Implies: return "(" + to_string(f->lhs) + " -> " + to_string(f->rhs) + ")";
    case LtlKind::EvFuture: return "F+ (" + to_string(f->lhs) + ")";
    case LtlKind::EvPast: return "F- (" + to_string(f->lhs) + ")";
    case LtlKind::Until: return "(" + to_string(f->lhs) + " U " + to_string(f->rhs) + ")";
    case LtlKind::Since: return "(" + to_string(f->lhs) + " S " + to_string(f->rhs) + ")";
  }
  return {};
}

bool eval_ltl(const LtlFormula& f, std::string_view word, int position) {
  const int n = static_cast<int>(word.size());
  if (position < 0 || position > n) throw ValueError("position out of range");
  switch (f->kind) {
    case LtlKind::True: return true;
    case LtlKind::False: return false;
    case LtlKind::Atom: return position >= 1 && word[position - 1] == f->letter;
    case LtlKind::Not: return !eval_ltl(f->lhs, word, position);
    case LtlKind::And: return eval_ltl(f->lhs, word, position) && eval_ltl(f->rhs, word, position);
    case LtlKind::Or: return eval_ltl(f->lhs, word, position) || eval_ltl(f->rhs, word, position);
    case LtlKind::Implies:
      return !eval_ltl(f->lhs, word, position) || eval_ltl(f->rhs, word, position);
    case LtlKind::EvFuture:
      for (int j = position + 1; j <= n; ++j)
        if (eval_ltl(f->lhs, word, j)) return true;
      return false;
    case LtlKind::EvPast:
      for (int j = 1; j < position; ++j)
        if (eval_ltl(f->lhs, word, j)) return true;
      return false;
    case LtlKind::Until:
      for (int j = position + 1; j <= n; ++j) {
        if (eval_ltl(f->rhs, word, j)) {
          bool ok = true;
          for (int i = position + 1; i < j && ok; ++i) ok = eval_ltl(f->lhs, word, i);
          if (ok) return true;
        }
      }
      return false;
    case LtlKind::Since:
      for (int j = position - 1; j >= 1; --j) {
        if (eval_ltl(f->rhs, word, j)) {
          bool ok = true;
          for (int i = j + 1; i < position && ok; ++i) ok = eval_ltl(f->lhs, word, i);
          if (ok) return true;
        }
      }
      return false;
  }
  throw Error("unreachable LTL kind");
}

bool ltl_accepts(const LtlFormula& f, std::string_view word) { return eval_ltl(f, word, 0); }

namespace {

const char* kLtlVars[3] = {"x", "y", "z"};

Formula ltl_to_fo_at(const LtlFormula& f, int v) {
  const std::string cur = kLtlVars[v];
  const std::string nxt = kLtlVars[(v + 1) % 3];
  const std::string aux = kLtlVars[(v + 2) % 3];
  switch (f->kind) {
    case LtlKind::True: return fo::truth(true);
    case LtlKind::False: return fo::truth(false);
    case LtlKind::Atom: return fo::label(f->letter, cur);
    case LtlKind::Not: return fo::negate(ltl_to_fo_at(f->lhs, v));
    case LtlKind::And:
      return fo::conj(ltl_to_fo_at(f->lhs, v), ltl_to_fo_at(f->rhs, v));
    case LtlKind::Or:
      return fo::disj(ltl_to_fo_at(f->lhs, v), ltl_to_fo_at(f->rhs, v));
    case LtlKind::Implies:
      return fo::implies(ltl_to_fo_at(f->lhs, v), ltl_to_fo_at(f->rhs, v));
    case LtlKind::EvFuture:
      return fo::exists(nxt, fo::conj(fo::less(cur, nxt), ltl_to_fo_at(f->lhs, (v + 1) % 3)));
    case LtlKind::EvPast:
      return fo::exists(nxt, fo::conj(fo::less(nxt, cur), ltl_to_fo_at(f->lhs, (v + 1) % 3)));
    case LtlKind::Until: {
      // E y. (x<y & rhs(y) & A z. ((x<z & z<y) -> lhs(z)))
      Formula window = fo::implies(fo::conj(fo::less(cur, aux), fo::less(aux, nxt)),
                                   ltl_to_fo_at(f->lhs, (v + 2) % 3));
      return fo::exists(nxt, fo::conj(fo::less(cur, nxt),
                                      fo::conj(ltl_to_fo_at(f->rhs, (v + 1) % 3),
                                               fo::forall(aux, std::move(window)))));
    }
    case LtlKind::Since: {
      Formula window = fo::implies(fo::conj(fo::less(nxt, aux), fo::less(aux, cur)),
                                   ltl_to_fo_at(f->lhs, (v + 2) % 3));
      return fo::exists(nxt, fo::conj(fo::less(nxt, cur),
                                      fo::conj(ltl_to_fo_at(f->rhs, (v + 1) % 3),
                                               fo::forall(aux, std::move(window)))));
    }
  }
  throw Error("unreachable LTL kind");
}

}  // namespace

Formula ltl_to_fo(const LtlFormula& f) { return ltl_to_fo_at(f, 0); }

// ---------------------------------------------------------------------------
// Agreement.

namespace {

template <typename Holds>
std::optional<std::string> agreement_impl(const Dfa& dfa, std::size_t max_len,
                                          const AgreementLimits& limits, Holds holds) {
  if (count_words(dfa.alphabet.size(), max_len) > limits.max_words)
    throw BudgetError("agreement enumeration exceeded the word budget");
  std::string word;
  // length-lex order via odometer over letter indices
  std::vector<std::size_t> idx;
  for (std::size_t len = 0; len <= max_len; ++len) {
    idx.assign(len, 0);
    for (;;) {
      word.clear();
      for (std::size_t i : idx) word += dfa.alphabet.letter(i);
      if (holds(word) != dfa.accepts(word)) return word;
      std::size_t i = len;
      while (i > 0) {
        --i;
        if (++idx[i] < dfa.alphabet.size()) break;
        idx[i] = 0;
        if (i == 0) goto next_length;
      }
      if (len == 0) break;
    }
  next_length:;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> agreement(const Formula& sentence, const Dfa& dfa,
                                     std::size_t max_len, const AgreementLimits& limits) {
  if (!free_variables(sentence).empty())
    throw ValueError("agreement requires a sentence (no free variables)");
  return agreement_impl(dfa, max_len, limits,
                        [&](const std::string& w) { return eval_fo(sentence, w); });
}

std::optional<std::string> agreement(const LtlFormula& sentence, const Dfa& dfa,
                                     std::size_t max_len, const AgreementLimits& limits) {
  return agreement_impl(dfa, max_len, limits,
                        [&](const std::string& w) { return ltl_accepts(sentence, w); });
}

}  // namespace relogic
