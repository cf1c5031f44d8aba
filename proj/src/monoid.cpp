#include "relogic/monoid.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace relogic {

Element Monoid::eval_word(std::string_view w) const {
  if (generators.empty() && !w.empty())
    throw ValueError("monoid has no generator map");
  Element m = identity;
  for (char c : w) {
    auto it = generators.find(c);
    if (it == generators.end())
      throw ValueError(std::string("no generator for letter '") + c + "'");
    m = mul(m, it->second);
  }
  return m;
}

std::string Monoid::element_name(Element e) const {
  if (e < reps.size()) {
    if (reps[e].empty() && e == identity) return "1";
    if (!reps[e].empty() || e == identity) return reps[e];
  }
  return "#" + std::to_string(e);
}

std::vector<Element> Monoid::idempotents() const {
  std::vector<Element> out;
  for (Element e = 0; e < size; ++e)
    if (is_idempotent(e)) out.push_back(e);
  return out;
}

void Monoid::validate() const {
  if (size == 0) throw ValueError("monoid must be nonempty");
  if (table.size() != size) throw ValueError("table row count mismatch");
  for (const auto& row : table) {
    if (row.size() != size) throw ValueError("table column count mismatch");
    for (Element e : row)
      if (e >= size) throw ValueError("table entry out of range");
  }
  if (identity >= size) throw ValueError("identity out of range");
  for (Element m = 0; m < size; ++m)
    if (mul(identity, m) != m || mul(m, identity) != m)
      throw ValueError("identity law violated at element " + std::to_string(m));
  if (size <= 200) {
    for (Element a = 0; a < size; ++a)
      for (Element b = 0; b < size; ++b)
        for (Element c = 0; c < size; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw ValueError("multiplication table is not associative");
  }
  for (const auto& [letter, e] : generators)
    if (e >= size) throw ValueError(std::string("generator image for '") + letter + "' out of range");
  if (!reps.empty()) {
    if (reps.size() != size) throw ValueError("rep count mismatch");
    // An empty rep on a non-identity element means "no representative known"
    // (possible for product monoids whose factors are not jointly generated).
    if (!generators.empty())
      for (Element m = 0; m < size; ++m)
        if ((m == identity || !reps[m].empty()) && eval_word(reps[m]) != m)
          throw ValueError("representative word does not evaluate to its element");
  }
}

namespace {

using Transform = std::vector<State>;  // state -> state

Transform compose(const Transform& first, const Transform& then) {
  Transform out(first.size());
  for (std::size_t q = 0; q < first.size(); ++q) out[q] = then[first[q]];
  return out;
}

}  // namespace

Monoid transition_monoid(const Dfa& dfa, const MonoidLimits& limits) {
  const std::size_t k = dfa.alphabet.size();
  const std::size_t n = dfa.num_states;

  std::vector<Transform> letter_action(k, Transform(n));
  for (std::size_t a = 0; a < k; ++a)
    for (State q = 0; q < n; ++q) letter_action[a][q] = dfa.delta[q][a];

  Transform id(n);
  for (State q = 0; q < n; ++q) id[q] = q;

  std::map<Transform, Element> index_of;
  std::vector<Transform> elements;
  std::vector<std::string> reps;

  auto intern = [&](Transform t, const std::string& rep) -> std::pair<Element, bool> {
    auto it = index_of.find(t);
    if (it != index_of.end()) return {it->second, false};
    if (elements.size() >= limits.element_cap)
      throw BudgetError("transition monoid exceeded the element budget");
    Element e = static_cast<Element>(elements.size());
    index_of.emplace(t, e);
    elements.push_back(std::move(t));
    reps.push_back(rep);
    return {e, true};
  };

  intern(id, "");
  // BFS in length-then-lex order: shortest reps, ties broken by alphabet order.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      Transform t = compose(elements[i], letter_action[a]);
      intern(std::move(t), reps[i] + dfa.alphabet.letter(a));
    }
  }

  Monoid m;
  m.size = elements.size();
  if (m.size > 5'000)
    throw BudgetError("multiplication table too large to materialize");
  m.identity = 0;
  m.reps = reps;
  for (std::size_t a = 0; a < k; ++a)
    m.generators[dfa.alphabet.letter(a)] = index_of.at(letter_action[a]);
  m.table.assign(m.size, std::vector<Element>(m.size));
  for (Element i = 0; i < m.size; ++i)
    for (Element j = 0; j < m.size; ++j)
      m.table[i][j] = index_of.at(compose(elements[i], elements[j]));
  return m;
}

Monoid syntactic_monoid(const Dfa& dfa, const MonoidLimits& limits) {
  return transition_monoid(minimize(dfa), limits);
}

Monoid syntactic_monoid(std::string_view regex_text, const Alphabet& alphabet,
                        const MonoidLimits& limits) {
  return syntactic_monoid(compile(regex_text, alphabet), limits);
}

CongruenceClasses brute_force_congruence(const Dfa& dfa, std::size_t word_len,
                                         std::size_t ctx_len, const MonoidLimits& limits) {
  const std::size_t k = dfa.alphabet.size();
  if (count_words(k, word_len) > limits.congruence_word_cap ||
      count_words(k, ctx_len) > limits.congruence_word_cap)
    throw BudgetError("congruence enumeration exceeded the word budget");

  // States reachable by a left context u with |u| <= ctx_len.
  std::vector<State> left;
  {
    std::vector<bool> seen(dfa.num_states, false);
    std::vector<State> frontier{dfa.initial};
    seen[dfa.initial] = true;
    left.push_back(dfa.initial);
    for (std::size_t len = 1; len <= ctx_len && !frontier.empty(); ++len) {
      std::vector<State> next;
      for (State q : frontier)
        for (std::size_t a = 0; a < k; ++a) {
          State t = dfa.delta[q][a];
          if (!seen[t]) {
            seen[t] = true;
            next.push_back(t);
            left.push_back(t);
          }
        }
      frontier = std::move(next);
    }
  }

  // Right profile of a state: acceptance over every context v, |v| <= ctx_len.
  // Two states get the same profile id iff they accept the same bounded
  // suffix set; uxv membership then only depends on (state after ux, profile).
  std::vector<std::uint32_t> right_profile(dfa.num_states);
  {
    // profile = sequence of reached-state acceptance along the v enumeration;
    // computed by iterated refinement over one-letter extensions, which yields
    // exactly "same acceptance for all v with |v| <= ctx_len".
    std::vector<std::uint32_t> cls(dfa.num_states);
    for (State q = 0; q < dfa.num_states; ++q) cls[q] = dfa.accepting[q] ? 1 : 0;
    for (std::size_t round = 0; round < ctx_len; ++round) {
      std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
      std::vector<std::uint32_t> next(dfa.num_states);
      for (State q = 0; q < dfa.num_states; ++q) {
        std::vector<std::uint32_t> key{cls[q]};
        for (std::size_t a = 0; a < k; ++a) key.push_back(cls[dfa.delta[q][a]]);
        auto [it, _] = ids.emplace(std::move(key), static_cast<std::uint32_t>(ids.size()));
        next[q] = it->second;
      }
      if (ids.size() == *std::max_element(cls.begin(), cls.end()) + 1u &&
          next == cls)
        break;
      cls = std::move(next);
    }
    right_profile = cls;
  }

  CongruenceClasses out;
  out.words = all_words(dfa.alphabet, word_len);
  out.class_of.resize(out.words.size());
  std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
  for (std::size_t i = 0; i < out.words.size(); ++i) {
    std::vector<std::uint32_t> sig;
    sig.reserve(left.size());
    for (State q : left) {
      State t = q;
      for (char c : out.words[i]) t = dfa.delta[t][dfa.alphabet.index(c)];
      sig.push_back(right_profile[t]);
    }
    auto [it, _] = ids.emplace(std::move(sig), static_cast<std::uint32_t>(ids.size()));
    out.class_of[i] = it->second;
  }
  out.num_classes = ids.size();
  return out;
}

Element idempotent_power(Element m, const Monoid& monoid) {
  Element p = m;
  for (std::size_t i = 0; i <= monoid.size; ++i) {
    if (monoid.is_idempotent(p)) return p;
    p = monoid.mul(p, m);
  }
  throw Error("no idempotent power found; table is not a finite monoid");
}

// ---------------------------------------------------------------------------

OmegaTerm OmegaTerm::variable(std::string name) {
  OmegaTerm t;
  t.kind = Kind::Variable;
  t.var = std::move(name);
  return t;
}

OmegaTerm OmegaTerm::concat(std::vector<OmegaTerm> parts) {
  OmegaTerm t;
  t.kind = Kind::Concat;
  t.children = std::move(parts);
  return t;
}

OmegaTerm OmegaTerm::omega(OmegaTerm inner) {
  OmegaTerm t;
  t.kind = Kind::Omega;
  t.children.push_back(std::move(inner));
  return t;
}

void OmegaTerm::collect_variables(std::vector<std::string>& out) const {
  if (kind == Kind::Variable) {
    out.push_back(var);
    return;
  }
  for (const auto& c : children) c.collect_variables(out);
}

std::vector<std::string> MonoidIdentity::variables() const {
  std::vector<std::string> vars;
  lhs.collect_variables(vars);
  rhs.collect_variables(vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::string to_string(const OmegaTerm& t) {
  switch (t.kind) {
    case OmegaTerm::Kind::Variable:
      return t.var;
    case OmegaTerm::Kind::Concat: {
      if (t.children.empty()) return "1";
      std::string out;
      for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) out += ' ';
        const auto& c = t.children[i];
        if (c.kind == OmegaTerm::Kind::Concat && c.children.size() > 1)
          out += "(" + to_string(c) + ")";
        else
          out += to_string(c);
      }
      return out;
    }
    case OmegaTerm::Kind::Omega: {
      const auto& c = t.children[0];
      if (c.kind == OmegaTerm::Kind::Variable) return to_string(c) + "^w";
      return "(" + to_string(c) + ")^w";
    }
  }
  return {};
}

std::string to_string(const MonoidIdentity& id) {
  return to_string(id.lhs) + " = " + to_string(id.rhs);
}

Element eval_omega_term(const OmegaTerm& t, const Assignment& assignment, const Monoid& monoid) {
  switch (t.kind) {
    case OmegaTerm::Kind::Variable: {
      auto it = assignment.find(t.var);
      if (it == assignment.end())
        throw ValueError("unassigned term variable '" + t.var + "'");
      if (it->second >= monoid.size) throw ValueError("assignment element out of range");
      return it->second;
    }
    case OmegaTerm::Kind::Concat: {
      Element m = monoid.identity;
      for (const auto& c : t.children) m = monoid.mul(m, eval_omega_term(c, assignment, monoid));
      return m;
    }
    case OmegaTerm::Kind::Omega:
      return idempotent_power(eval_omega_term(t.children[0], assignment, monoid), monoid);
  }
  throw Error("unreachable term kind");
}

IdentityCheck check_identity(const MonoidIdentity& id, const Monoid& monoid,
                             const MonoidLimits& limits) {
  const std::vector<std::string> vars = id.variables();
  double total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) total *= static_cast<double>(monoid.size);
  if (total > static_cast<double>(limits.identity_eval_cap))
    throw BudgetError("identity check exceeded the evaluation budget");

  std::vector<Element> tuple(vars.size(), 0);
  Assignment assignment;
  for (;;) {
    for (std::size_t i = 0; i < vars.size(); ++i) assignment[vars[i]] = tuple[i];
    if (eval_omega_term(id.lhs, assignment, monoid) !=
        eval_omega_term(id.rhs, assignment, monoid))
      return {false, assignment};
    // next tuple, lexicographic by element index
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++tuple[i] < monoid.size) break;
      tuple[i] = 0;
      if (i == 0) return {true, {}};
    }
    if (vars.empty()) return {true, {}};
  }
}

// ---------------------------------------------------------------------------

GreenData green_relations(const Monoid& monoid) {
  const std::size_t n = monoid.size;
  // Principal ideals as bitsets.
  std::vector<std::vector<bool>> rset(n, std::vector<bool>(n, false));  // aM
  std::vector<std::vector<bool>> lset(n, std::vector<bool>(n, false));  // Ma
  std::vector<std::vector<bool>> jset(n, std::vector<bool>(n, false));  // MaM
  for (Element a = 0; a < n; ++a) {
    for (Element x = 0; x < n; ++x) {
      rset[a][monoid.mul(a, x)] = true;
      lset[a][monoid.mul(x, a)] = true;
      Element xa = monoid.mul(x, a);
      for (Element y = 0; y < n; ++y) jset[a][monoid.mul(xa, y)] = true;
    }
  }

  auto classify = [n](const std::vector<std::vector<bool>>& sets,
                      std::vector<std::uint32_t>& cls) -> std::size_t {
    std::map<std::vector<bool>, std::uint32_t> ids;
    cls.resize(n);
    for (Element a = 0; a < n; ++a) {
      auto [it, _] = ids.emplace(sets[a], static_cast<std::uint32_t>(ids.size()));
      cls[a] = it->second;
    }
    return ids.size();
  };

  GreenData g;
  g.num_r = classify(rset, g.r_class);
  g.num_l = classify(lset, g.l_class);
  g.num_j = classify(jset, g.j_class);
  // H = R meet L
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> hids;
  g.h_class.resize(n);
  for (Element a = 0; a < n; ++a) {
    auto [it, _] = hids.emplace(std::make_pair(g.r_class[a], g.l_class[a]),
                                static_cast<std::uint32_t>(hids.size()));
    g.h_class[a] = it->second;
  }
  g.num_h = hids.size();
  return g;
}

std::vector<Subgroup> maximal_subgroups(const Monoid& monoid) {
  std::vector<Subgroup> out;
  for (Element e : monoid.idempotents()) {
    // eMe, the local monoid at e.
    std::set<Element> local;
    for (Element m = 0; m < monoid.size; ++m)
      local.insert(monoid.mul(e, monoid.mul(m, e)));
    // Units of eMe with respect to e.
    Subgroup g;
    g.unit = e;
    for (Element x : local) {
      for (Element y : local) {
        if (monoid.mul(x, y) == e && monoid.mul(y, x) == e) {
          g.carrier.push_back(x);
          g.inverse[x] = y;
          break;
        }
      }
    }
    std::sort(g.carrier.begin(), g.carrier.end());
    out.push_back(std::move(g));
  }
  return out;
}

bool is_abelian(const Subgroup& g, const Monoid& monoid) {
  for (Element a : g.carrier)
    for (Element b : g.carrier)
      if (monoid.mul(a, b) != monoid.mul(b, a)) return false;
  return true;
}

namespace {

// Subgroup of `g` generated by `gens`, by closure under multiplication.
std::vector<Element> generated_subgroup(const std::vector<Element>& gens, Element unit,
                                        const Monoid& monoid) {
  std::set<Element> members{unit};
  std::deque<Element> work(gens.begin(), gens.end());
  for (Element m : gens) members.insert(m);
  while (!work.empty()) {
    Element a = work.front();
    work.pop_front();
    for (Element b : std::vector<Element>(members.begin(), members.end())) {
      for (Element p : {monoid.mul(a, b), monoid.mul(b, a)}) {
        if (members.insert(p).second) work.push_back(p);
      }
    }
  }
  return {members.begin(), members.end()};
}

}  // namespace

bool is_solvable(const Subgroup& g, const Monoid& monoid) {
  std::vector<Element> current = g.carrier;
  std::map<Element, Element> inv = g.inverse;
  for (;;) {
    if (current.size() == 1) return true;
    // Commutators a^-1 b^-1 a b of the current subgroup.
    std::set<Element> comms;
    for (Element a : current)
      for (Element b : current) {
        Element c = monoid.mul(monoid.mul(inv.at(a), inv.at(b)), monoid.mul(a, b));
        comms.insert(c);
      }
    std::vector<Element> derived =
        generated_subgroup({comms.begin(), comms.end()}, g.unit, monoid);
    if (derived.size() == current.size()) return false;  // stabilized above trivial
    // Rebuild inverses within the derived subgroup.
    std::map<Element, Element> dinv;
    for (Element a : derived)
      for (Element b : derived)
        if (monoid.mul(a, b) == g.unit && monoid.mul(b, a) == g.unit) {
          dinv[a] = b;
          break;
        }
    current = std::move(derived);
    inv = std::move(dinv);
  }
}

std::vector<char> neutral_letters(const Monoid& monoid) {
  std::vector<char> out;
  for (const auto& [letter, image] : monoid.generators)
    if (image == monoid.identity) out.push_back(letter);
  return out;
}

// ---------------------------------------------------------------------------

Monoid parse_monoid(std::istream& in) {
  Monoid m;
  std::string line;
  std::size_t row = 0;
  bool have_size = false, have_identity = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
      trimmed.pop_back();
    std::size_t start = 0;
    while (start < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[start])))
      ++start;
    trimmed = trimmed.substr(start);
    if (trimmed.empty() || trimmed[0] == '#') continue;

    std::istringstream ss(trimmed);
    std::string word;
    ss >> word;
    if (word == "size") {
      if (!(ss >> m.size) || m.size == 0)
        throw ParseError("invalid size line in monoid file");
      m.table.assign(m.size, std::vector<Element>(m.size));
      have_size = true;
    } else if (word == "identity") {
      if (!(ss >> m.identity)) throw ParseError("invalid identity line in monoid file");
      have_identity = true;
    } else if (word == "gen") {
      std::string rest;
      std::getline(ss, rest);
      auto eq = rest.find('=');
      std::size_t p = rest.find_first_not_of(' ');
      if (eq == std::string::npos || p == std::string::npos || eq <= p)
        throw ParseError("invalid gen line in monoid file");
      if (eq - p != 1) throw ParseError("gen letter must be a single character");
      m.generators[rest[p]] = static_cast<Element>(std::stoul(rest.substr(eq + 1)));
    } else if (word == "rep") {
      std::string rest;
      std::getline(ss, rest);
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw ParseError("invalid rep line in monoid file");
      std::size_t idx = std::stoul(rest.substr(0, eq));
      if (m.reps.size() < m.size) m.reps.assign(m.size, "");
      if (idx >= m.size) throw ParseError("rep index out of range");
      m.reps[idx] = rest.substr(eq + 1);
    } else {
      if (!have_size) throw ParseError("table row before size line");
      if (row >= m.size) throw ParseError("too many table rows");
      std::istringstream rs(trimmed);
      for (std::size_t j = 0; j < m.size; ++j) {
        long v;
        if (!(rs >> v) || v < 0 || static_cast<std::size_t>(v) >= m.size)
          throw ParseError("bad table entry in row " + std::to_string(row));
        m.table[row][j] = static_cast<Element>(v);
      }
      ++row;
    }
  }
  if (!have_size) throw ParseError("monoid file missing size line");
  if (row != m.size) throw ParseError("monoid file has an incomplete table");
  if (!have_identity) throw ParseError("monoid file missing identity line");
  m.validate();
  return m;
}

Monoid parse_monoid_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_monoid(in);
}

std::string monoid_to_text(const Monoid& monoid) {
  std::ostringstream out;
  out << "size " << monoid.size << "\n";
  for (Element i = 0; i < monoid.size; ++i) {
    for (Element j = 0; j < monoid.size; ++j) {
      if (j) out << ' ';
      out << monoid.table[i][j];
    }
    out << "\n";
  }
  out << "identity " << monoid.identity << "\n";
  for (const auto& [letter, e] : monoid.generators) out << "gen " << letter << "=" << e << "\n";
  for (std::size_t i = 0; i < monoid.reps.size(); ++i)
    out << "rep " << i << "=" << monoid.reps[i] << "\n";
  return out.str();
}

}  // namespace relogic
