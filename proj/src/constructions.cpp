#include "relogic/constructions.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace relogic {

Monoid direct_product(const Monoid& m, const Monoid& n, const ConstructionLimits& limits) {
  if (m.size * n.size > limits.product_cap)
    throw BudgetError("direct product exceeds the element budget");
  Monoid p;
  p.size = m.size * n.size;
  auto id = [&](Element a, Element b) { return static_cast<Element>(a * n.size + b); };
  p.identity = id(m.identity, n.identity);
  p.table.assign(p.size, std::vector<Element>(p.size));
  for (Element a = 0; a < m.size; ++a)
    for (Element b = 0; b < n.size; ++b)
      for (Element c = 0; c < m.size; ++c)
        for (Element d = 0; d < n.size; ++d)
          p.table[id(a, b)][id(c, d)] = id(m.mul(a, c), n.mul(b, d));

  // Keep generators when the factors agree on letters; recompute reps for the
  // generated part by BFS.
  if (!m.generators.empty() && !n.generators.empty()) {
    bool same_letters =
        m.generators.size() == n.generators.size() &&
        std::equal(m.generators.begin(), m.generators.end(), n.generators.begin(),
                   [](const auto& x, const auto& y) { return x.first == y.first; });
    if (same_letters) {
      for (const auto& [letter, e] : m.generators)
        p.generators[letter] = id(e, n.generators.at(letter));
      p.reps.assign(p.size, "");
      std::vector<bool> seen(p.size, false);
      std::vector<Element> queue{p.identity};
      seen[p.identity] = true;
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (const auto& [letter, g] : p.generators) {
          Element t = p.mul(queue[i], g);
          if (!seen[t]) {
            seen[t] = true;
            p.reps[t] = p.reps[queue[i]] + letter;
            queue.push_back(t);
          }
        }
      for (Element e = 0; e < p.size; ++e)
        if (!seen[e] && e != p.identity) p.reps[e] = "";  // unreachable: no representative
    }
  }
  p.validate();
  return p;
}

ActionPair trivial_actions(const Monoid& m, const Monoid& n) {
  ActionPair a;
  a.left.assign(n.size, std::vector<Element>(m.size));
  a.right.assign(m.size, std::vector<Element>(n.size));
  for (Element x = 0; x < n.size; ++x)
    for (Element y = 0; y < m.size; ++y) a.left[x][y] = y;
  for (Element y = 0; y < m.size; ++y)
    for (Element x = 0; x < n.size; ++x) a.right[y][x] = y;
  return a;
}

namespace {

std::string pair_str(const char* a, Element x, const char* b, Element y) {
  return std::string(a) + "=" + std::to_string(x) + ", " + b + "=" + std::to_string(y);
}

}  // namespace

void validate_actions(const Monoid& m, const Monoid& n, const ActionPair& act) {
  if (act.left.size() != n.size || act.right.size() != m.size)
    throw ValueError("action table dimensions do not match the monoids");
  for (const auto& row : act.left)
    if (row.size() != m.size) throw ValueError("left action row size mismatch");
  for (const auto& row : act.right)
    if (row.size() != n.size) throw ValueError("right action row size mismatch");

  auto L = [&](Element x, Element y) { return act.left[x][y]; };
  auto R = [&](Element y, Element x) { return act.right[y][x]; };

  for (Element x = 0; x < n.size; ++x) {
    if (L(x, m.identity) != m.identity)
      throw ValueError("left action axiom n*0 = 0 fails at n=" + std::to_string(x));
    for (Element y1 = 0; y1 < m.size; ++y1)
      for (Element y2 = 0; y2 < m.size; ++y2)
        if (L(x, m.mul(y1, y2)) != m.mul(L(x, y1), L(x, y2)))
          throw ValueError("left action axiom n(m1+m2) = nm1+nm2 fails at n=" +
                           std::to_string(x) + ", " + pair_str("m1", y1, "m2", y2));
  }
  for (Element y = 0; y < m.size; ++y)
    if (L(n.identity, y) != y)
      throw ValueError("left action axiom 1m = m fails at m=" + std::to_string(y));
  for (Element x1 = 0; x1 < n.size; ++x1)
    for (Element x2 = 0; x2 < n.size; ++x2)
      for (Element y = 0; y < m.size; ++y)
        if (L(x1, L(x2, y)) != L(n.mul(x1, x2), y))
          throw ValueError("left action axiom n1(n2 m) = (n1n2)m fails at " +
                           pair_str("n1", x1, "n2", x2) + ", m=" + std::to_string(y));

  for (Element x = 0; x < n.size; ++x) {
    if (R(m.identity, x) != m.identity)
      throw ValueError("right action axiom 0*n = 0 fails at n=" + std::to_string(x));
    for (Element y1 = 0; y1 < m.size; ++y1)
      for (Element y2 = 0; y2 < m.size; ++y2)
        if (R(m.mul(y1, y2), x) != m.mul(R(y1, x), R(y2, x)))
          throw ValueError("right action axiom (m1+m2)n = m1n+m2n fails at n=" +
                           std::to_string(x) + ", " + pair_str("m1", y1, "m2", y2));
  }
  for (Element y = 0; y < m.size; ++y)
    if (R(y, n.identity) != y)
      throw ValueError("right action axiom m*1 = m fails at m=" + std::to_string(y));
  for (Element y = 0; y < m.size; ++y)
    for (Element x1 = 0; x1 < n.size; ++x1)
      for (Element x2 = 0; x2 < n.size; ++x2)
        if (R(R(y, x1), x2) != R(y, n.mul(x1, x2)))
          throw ValueError("right action axiom (m n1)n2 = m(n1n2) fails at " +
                           pair_str("n1", x1, "n2", x2) + ", m=" + std::to_string(y));

  // Compatibility n1(m n2) = (n1 m)n2.
  for (Element x1 = 0; x1 < n.size; ++x1)
    for (Element y = 0; y < m.size; ++y)
      for (Element x2 = 0; x2 < n.size; ++x2)
        if (L(x1, R(y, x2)) != R(L(x1, y), x2))
          throw ValueError("action compatibility n1(m n2) = (n1 m)n2 fails at " +
                           pair_str("n1", x1, "n2", x2) + ", m=" + std::to_string(y));
}

Monoid bilateral_product(const Monoid& m, const Monoid& n, const ActionPair& act,
                         const ConstructionLimits& limits) {
  validate_actions(m, n, act);
  if (m.size * n.size > limits.product_cap)
    throw BudgetError("bilateral product exceeds the element budget");
  Monoid p;
  p.size = m.size * n.size;
  auto id = [&](Element a, Element b) { return static_cast<Element>(a * n.size + b); };
  p.identity = id(m.identity, n.identity);
  p.table.assign(p.size, std::vector<Element>(p.size));
  for (Element m1 = 0; m1 < m.size; ++m1)
    for (Element n1 = 0; n1 < n.size; ++n1)
      for (Element m2 = 0; m2 < m.size; ++m2)
        for (Element n2 = 0; n2 < n.size; ++n2) {
          Element first = m.mul(act.right[m1][n2], act.left[n1][m2]);
          p.table[id(m1, n1)][id(m2, n2)] = id(first, n.mul(n1, n2));
        }
  p.validate();  // exhaustive associativity re-check for small sizes
  return p;
}

// ---------------------------------------------------------------------------

namespace {

// Closure of {identity} u gens under multiplication.
std::vector<Element> generated_submonoid(const Monoid& n, const std::vector<Element>& gens) {
  std::set<Element> members{n.identity};
  std::vector<Element> queue{n.identity};
  for (Element g : gens)
    if (members.insert(g).second) queue.push_back(g);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t j = 0; j < queue.size(); ++j) {
      for (Element p : {n.mul(queue[i], queue[j]), n.mul(queue[j], queue[i])})
        if (members.insert(p).second) queue.push_back(p);
    }
  return {members.begin(), members.end()};
}

// Try to extend generator images to a surjective homomorphism sub -> M.
// Images of products are forced; inconsistencies abort.
bool hom_exists(const Monoid& n, const Monoid& m, const std::vector<Element>& gens,
                const std::vector<Element>& images, std::size_t& work,
                std::size_t work_cap) {
  std::map<Element, Element> h;
  h[n.identity] = m.identity;
  std::vector<Element> queue{n.identity};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto [it, inserted] = h.emplace(gens[i], images[i]);
    if (!inserted && it->second != images[i]) return false;
    if (inserted) queue.push_back(gens[i]);
  }
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t j = 0; j < queue.size(); ++j) {
      if (++work > work_cap) throw BudgetError("division search budget exhausted");
      for (auto [a, b] : {std::pair{queue[i], queue[j]}, std::pair{queue[j], queue[i]}}) {
        Element prod = n.mul(a, b);
        Element img = m.mul(h.at(a), h.at(b));
        auto [it, inserted] = h.emplace(prod, img);
        if (!inserted && it->second != img) return false;
        if (inserted) queue.push_back(prod);
      }
    }
  // Homomorphism property on the full closure.
  for (const auto& [a, ha] : h)
    for (const auto& [b, hb] : h) {
      if (++work > work_cap) throw BudgetError("division search budget exhausted");
      if (h.at(n.mul(a, b)) != m.mul(ha, hb)) return false;
    }
  // Surjectivity.
  std::set<Element> image;
  for (const auto& [a, ha] : h) image.insert(ha);
  return image.size() == m.size;
}

}  // namespace

Ternary divides(const Monoid& m, const Monoid& n, const ConstructionLimits& limits) {
  if (m.size == 1) return Ternary::True;  // trivial monoid divides everything
  std::size_t work = 0;
  try {
    // Generator subsets of N in increasing size; the generated submonoid and
    // the images of the generators determine the candidate homomorphism.
    std::vector<Element> others;
    for (Element e = 0; e < n.size; ++e) others.push_back(e);

    for (std::size_t size = 1; size <= n.size; ++size) {
      // enumerate subsets of {0..n-1} of the given size
      std::vector<std::size_t> comb(size);
      for (std::size_t i = 0; i < size; ++i) comb[i] = i;
      for (;;) {
        std::vector<Element> gens;
        for (std::size_t i : comb) gens.push_back(others[i]);
        std::vector<Element> sub = generated_submonoid(n, gens);
        if (sub.size() >= m.size) {
          // enumerate generator image tuples
          std::vector<Element> images(size, 0);
          for (;;) {
            if (++work > limits.divides_work_cap)
              throw BudgetError("division search budget exhausted");
            if (hom_exists(n, m, gens, images, work, limits.divides_work_cap))
              return Ternary::True;
            std::size_t i = size;
            bool done = false;
            while (i > 0) {
              --i;
              if (++images[i] < m.size) break;
              images[i] = 0;
              if (i == 0) done = true;
            }
            if (done) break;
          }
        }
        // next combination
        std::size_t i = size;
        bool done = true;
        while (i > 0) {
          --i;
          if (comb[i] + (size - i) < n.size) {
            ++comb[i];
            for (std::size_t j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
            done = false;
            break;
          }
        }
        if (done) break;
      }
    }
  } catch (const BudgetError&) {
    return Ternary::Unknown;
  }
  return Ternary::False;
}

// ---------------------------------------------------------------------------

Element Transduction::fold_left(std::string_view w) const {
  Element e = target.identity;
  for (char c : w) {
    auto it = left.find(c);
    if (it == left.end()) throw ValueError(std::string("letter '") + c + "' has no h_l image");
    e = target.mul(e, it->second);
  }
  return e;
}

Element Transduction::fold_right(std::string_view w) const {
  Element e = target.identity;
  for (char c : w) {
    auto it = right.find(c);
    if (it == right.end()) throw ValueError(std::string("letter '") + c + "' has no h_r image");
    e = target.mul(e, it->second);
  }
  return e;
}

std::vector<Triple> transduce(const Transduction& t, std::string_view w) {
  const std::size_t n = w.size();
  std::vector<Triple> out;
  out.reserve(n);
  // prefix values h_l(w_1..w_{i-1}) and suffix values h_r(w_{i+1}..w_n)
  std::vector<Element> suffix(n + 1);
  suffix[n] = t.target.identity;
  for (std::size_t i = n; i > 0; --i)
    suffix[i - 1] = t.target.mul(t.right.at(w[i - 1]), suffix[i]);
  Element prefix = t.target.identity;
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(prefix, w[i], suffix[i + 1]);
    prefix = t.target.mul(prefix, t.left.at(w[i]));
  }
  return out;
}

TripleAlphabet::TripleAlphabet(std::size_t monoid_size, Alphabet sigma_)
    : monoid_size(monoid_size), sigma(std::move(sigma_)) {
  (void)alphabet();  // validates the size bound
}

namespace {
constexpr std::string_view kTripleChars =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789@#";
}

Alphabet TripleAlphabet::alphabet() const {
  std::size_t total = monoid_size * sigma.size() * monoid_size;
  if (total > kTripleChars.size())
    throw ValueError("triple alphabet too large to encode as characters");
  return Alphabet(std::string(kTripleChars.substr(0, total)));
}

char TripleAlphabet::encode(Element n, char a, Element n2) const {
  std::size_t i = (n * sigma.size() + sigma.index(a)) * monoid_size + n2;
  return kTripleChars[i];
}

Triple TripleAlphabet::decode(char c) const {
  auto pos = kTripleChars.find(c);
  if (pos == std::string_view::npos ||
      pos >= monoid_size * sigma.size() * monoid_size)
    throw ValueError("not a triple letter");
  Element n2 = static_cast<Element>(pos % monoid_size);
  pos /= monoid_size;
  char a = sigma.letter(pos % sigma.size());
  Element n = static_cast<Element>(pos / sigma.size());
  return {n, a, n2};
}

std::string transduce_encoded(const Transduction& t, const TripleAlphabet& enc,
                              std::string_view w) {
  std::string out;
  for (const auto& [n, a, n2] : transduce(t, w)) out += enc.encode(n, a, n2);
  return out;
}

Nfa transduction_preimage(const Transduction& t, const TripleAlphabet& enc, const Dfa& k,
                          const CompileLimits& limits) {
  const std::size_t nn = t.target.size;
  const Alphabet triples = enc.alphabet();
  if (!(k.alphabet == triples))
    throw ValueError("K must be an automaton over the full triple alphabet");

  Nfa out;
  out.alphabet = t.sigma;
  const std::size_t total = nn * k.num_states * nn;
  if (total > limits.max_states)
    throw BudgetError("transduction preimage exceeded the state budget");
  auto id = [&](Element pre, State q, Element suf) {
    return static_cast<State>((pre * k.num_states + q) * nn + suf);
  };
  for (std::size_t i = 0; i < total; ++i) out.add_state();

  // Initial: prefix value 1, K initial, any guessed suffix value.
  for (Element suf = 0; suf < nn; ++suf) out.initial.push_back(id(t.target.identity, k.initial, suf));
  // Accepting: K accepting with fully consumed suffix claim.
  for (State q = 0; q < k.num_states; ++q)
    if (k.accepting[q])
      for (Element pre = 0; pre < nn; ++pre)
        out.accepting.push_back(id(pre, q, t.target.identity));

  for (Element pre = 0; pre < nn; ++pre)
    for (State q = 0; q < k.num_states; ++q)
      for (Element suf = 0; suf < nn; ++suf)
        for (std::size_t a = 0; a < t.sigma.size(); ++a) {
          char letter = t.sigma.letter(a);
          Element la = t.left.at(letter);
          Element ra = t.right.at(letter);
          for (Element next_suf = 0; next_suf < nn; ++next_suf) {
            if (t.target.mul(ra, next_suf) != suf) continue;
            char triple = enc.encode(pre, letter, next_suf);
            State kq = k.delta[q][k.alphabet.index(triple)];
            out.add_move(id(pre, q, suf), a, id(t.target.mul(pre, la), kq, next_suf));
          }
        }
  return out;
}

// ---------------------------------------------------------------------------

ActionPair parse_actions(std::istream& in, const Monoid& m, const Monoid& n) {
  ActionPair act;
  constexpr Element kUnset = static_cast<Element>(-1);
  act.left.assign(n.size, std::vector<Element>(m.size, kUnset));
  act.right.assign(m.size, std::vector<Element>(n.size, kUnset));
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string kind;
    if (!(ss >> kind)) continue;
    if (kind.empty() || kind[0] == '#') continue;
    if (kind != "lact" && kind != "ract")
      throw ParseError("expected 'lact' or 'ract' line, got '" + kind + "'");
    std::size_t a, b, value;
    std::string eq;
    if (!(ss >> a >> b >> eq >> value) || eq != "=")
      throw ParseError("malformed action line: " + line);
    if (kind == "lact") {
      if (a >= n.size || b >= m.size || value >= m.size)
        throw ParseError("lact indices out of range: " + line);
      act.left[a][b] = static_cast<Element>(value);
    } else {
      if (a >= m.size || b >= n.size || value >= m.size)
        throw ParseError("ract indices out of range: " + line);
      act.right[a][b] = static_cast<Element>(value);
    }
  }
  for (const auto& row : act.left)
    for (Element e : row)
      if (e == kUnset) throw ParseError("left action table incomplete");
  for (const auto& row : act.right)
    for (Element e : row)
      if (e == kUnset) throw ParseError("right action table incomplete");
  validate_actions(m, n, act);
  return act;
}

ActionPair parse_actions_text(std::string_view text, const Monoid& m, const Monoid& n) {
  std::istringstream in{std::string(text)};
  return parse_actions(in, m, n);
}

}  // namespace relogic
