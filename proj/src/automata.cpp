#include "relogic/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace relogic {

State Nfa::add_state() {
  moves.emplace_back(alphabet.size());
  eps.emplace_back();
  return static_cast<State>(num_states++);
}

void Nfa::add_move(State from, std::size_t letter_index, State to) {
  moves[from][letter_index].push_back(to);
}

void Nfa::add_eps(State from, State to) { eps[from].push_back(to); }

State Dfa::run(std::string_view w) const {
  State q = initial;
  for (char c : w) q = delta[q][alphabet.index(c)];
  return q;
}

namespace {

using StateSet = std::vector<State>;  // sorted, unique

StateSet eps_closure(const Nfa& nfa, StateSet set) {
  std::vector<bool> in(nfa.num_states, false);
  std::deque<State> work(set.begin(), set.end());
  for (State q : set) in[q] = true;
  while (!work.empty()) {
    State q = work.front();
    work.pop_front();
    for (State t : nfa.eps[q])
      if (!in[t]) {
        in[t] = true;
        work.push_back(t);
      }
  }
  StateSet out;
  for (State q = 0; q < nfa.num_states; ++q)
    if (in[q]) out.push_back(q);
  return out;
}

}  // namespace

Dfa nfa_to_dfa(const Nfa& nfa, const CompileLimits& limits) {
  const std::size_t k = nfa.alphabet.size();
  Dfa dfa;
  dfa.alphabet = nfa.alphabet;

  std::map<StateSet, State> ids;
  std::vector<StateSet> sets;
  std::vector<bool> nfa_accepting(nfa.num_states, false);
  for (State q : nfa.accepting) nfa_accepting[q] = true;

  auto intern = [&](StateSet s) -> State {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    if (sets.size() >= limits.max_states)
      throw BudgetError("subset construction exceeded the state budget");
    State id = static_cast<State>(sets.size());
    ids.emplace(s, id);
    sets.push_back(std::move(s));
    dfa.delta.emplace_back(k);
    bool acc = false;
    for (State q : sets.back()) acc = acc || nfa_accepting[q];
    dfa.accepting.push_back(acc);
    return id;
  };

  dfa.initial = intern(eps_closure(nfa, nfa.initial));
  for (State id = 0; id < sets.size(); ++id) {
    for (std::size_t a = 0; a < k; ++a) {
      std::set<State> next;
      for (State q : sets[id])
        for (State t : nfa.moves[q][a]) next.insert(t);
      StateSet closed = eps_closure(nfa, StateSet(next.begin(), next.end()));
      dfa.delta[id][a] = intern(std::move(closed));
    }
  }
  dfa.num_states = sets.size();
  return dfa;
}

namespace {

// Hopcroft partition refinement over the reachable part, then canonical BFS
// renumbering with letters in alphabet order.
Dfa minimize_impl(const Dfa& dfa) {
  const std::size_t k = dfa.alphabet.size();

  // Reachable restriction.
  std::vector<State> order;
  std::vector<State> remap(dfa.num_states, UINT32_MAX);
  order.push_back(dfa.initial);
  remap[dfa.initial] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t a = 0; a < k; ++a) {
      State t = dfa.delta[order[i]][a];
      if (remap[t] == UINT32_MAX) {
        remap[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  const std::size_t n = order.size();
  std::vector<std::vector<State>> delta(n, std::vector<State>(k));
  std::vector<bool> accepting(n);
  for (std::size_t i = 0; i < n; ++i) {
    accepting[i] = dfa.accepting[order[i]];
    for (std::size_t a = 0; a < k; ++a) delta[i][a] = remap[dfa.delta[order[i]][a]];
  }

  // Inverse transitions.
  std::vector<std::vector<std::vector<State>>> inv(n, std::vector<std::vector<State>>(k));
  for (State q = 0; q < n; ++q)
    for (std::size_t a = 0; a < k; ++a) inv[delta[q][a]][a].push_back(q);

  std::vector<int> block_of(n, 0);
  std::vector<std::vector<State>> blocks;
  {
    std::vector<State> acc, rej;
    for (State q = 0; q < n; ++q) (accepting[q] ? acc : rej).push_back(q);
    if (!acc.empty()) blocks.push_back(acc);
    if (!rej.empty()) blocks.push_back(rej);
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (State q : blocks[b]) block_of[q] = static_cast<int>(b);
  }

  std::set<std::pair<int, std::size_t>> work;  // (block, letter)
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t a = 0; a < k; ++a) work.insert({static_cast<int>(b), a});

  std::vector<char> in_pre(n, 0);
  while (!work.empty()) {
    auto [splitter, a] = *work.begin();
    work.erase(work.begin());

    std::vector<State> pre;
    for (State q : blocks[splitter])
      for (State p : inv[q][a])
        if (!in_pre[p]) {
          in_pre[p] = 1;
          pre.push_back(p);
        }
    if (pre.empty()) continue;

    std::map<int, std::vector<State>> touched;
    for (State p : pre) touched[block_of[p]].push_back(p);

    for (auto& [b, inside] : touched) {
      if (inside.size() == blocks[b].size()) continue;
      // Split block b into `inside` and the rest.
      std::vector<State> rest;
      std::vector<char> is_inside(n, 0);
      for (State p : inside) is_inside[p] = 1;
      for (State q : blocks[b])
        if (!is_inside[q]) rest.push_back(q);

      int nb = static_cast<int>(blocks.size());
      blocks[b] = inside;
      blocks.push_back(rest);
      for (State q : rest) block_of[q] = nb;

      for (std::size_t c = 0; c < k; ++c) {
        if (work.count({b, c})) {
          work.insert({nb, c});
        } else {
          // Enqueue the smaller half.
          work.insert(blocks[b].size() <= blocks[nb].size() ? std::make_pair(b, c)
                                                            : std::make_pair(nb, c));
        }
      }
    }
    for (State p : pre) in_pre[p] = 0;
  }

  // Canonical numbering: BFS from the initial block, letters in alphabet order.
  const std::size_t m = blocks.size();
  std::vector<State> canon(m, UINT32_MAX);
  std::vector<int> bfs;
  bfs.push_back(block_of[0]);
  canon[block_of[0]] = 0;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    State rep = blocks[bfs[i]][0];
    for (std::size_t a = 0; a < k; ++a) {
      int tb = block_of[delta[rep][a]];
      if (canon[tb] == UINT32_MAX) {
        canon[tb] = static_cast<State>(bfs.size());
        bfs.push_back(tb);
      }
    }
  }

  Dfa out;
  out.alphabet = dfa.alphabet;
  out.num_states = m;
  out.initial = 0;
  out.delta.assign(m, std::vector<State>(k));
  out.accepting.assign(m, false);
  for (std::size_t b = 0; b < m; ++b) {
    State rep = blocks[b][0];
    State id = canon[b];
    out.accepting[id] = accepting[rep];
    for (std::size_t a = 0; a < k; ++a) out.delta[id][a] = canon[block_of[delta[rep][a]]];
  }
  return out;
}

Nfa dfa_as_nfa(const Dfa& dfa) {
  Nfa nfa;
  nfa.alphabet = dfa.alphabet;
  for (std::size_t q = 0; q < dfa.num_states; ++q) nfa.add_state();
  for (State q = 0; q < dfa.num_states; ++q)
    for (std::size_t a = 0; a < dfa.alphabet.size(); ++a) nfa.add_move(q, a, dfa.delta[q][a]);
  nfa.initial.push_back(dfa.initial);
  for (State q = 0; q < dfa.num_states; ++q)
    if (dfa.accepting[q]) nfa.accepting.push_back(q);
  return nfa;
}

// Embed `part` into `nfa`, returning the state offset.
State embed(Nfa& nfa, const Nfa& part) {
  State base = static_cast<State>(nfa.num_states);
  for (std::size_t q = 0; q < part.num_states; ++q) nfa.add_state();
  for (State q = 0; q < part.num_states; ++q) {
    for (std::size_t a = 0; a < part.alphabet.size(); ++a)
      for (State t : part.moves[q][a]) nfa.add_move(base + q, a, base + t);
    for (State t : part.eps[q]) nfa.add_eps(base + q, base + t);
  }
  return base;
}

}  // namespace

Dfa minimize(const Dfa& dfa) { return minimize_impl(dfa); }

Dfa complement_dfa(Dfa dfa) {
  for (std::size_t q = 0; q < dfa.num_states; ++q) dfa.accepting[q] = !dfa.accepting[q];
  return dfa;
}

Dfa intersect_dfa(const Dfa& a, const Dfa& b, const CompileLimits& limits) {
  if (!(a.alphabet == b.alphabet)) throw ValueError("alphabet mismatch in intersection");
  const std::size_t k = a.alphabet.size();
  if (a.num_states * b.num_states > limits.max_states)
    throw BudgetError("product construction exceeded the state budget");
  Dfa out;
  out.alphabet = a.alphabet;
  out.num_states = a.num_states * b.num_states;
  auto id = [&](State p, State q) { return static_cast<State>(p * b.num_states + q); };
  out.initial = id(a.initial, b.initial);
  out.delta.assign(out.num_states, std::vector<State>(k));
  out.accepting.assign(out.num_states, false);
  for (State p = 0; p < a.num_states; ++p)
    for (State q = 0; q < b.num_states; ++q) {
      out.accepting[id(p, q)] = a.accepting[p] && b.accepting[q];
      for (std::size_t c = 0; c < k; ++c)
        out.delta[id(p, q)][c] = id(a.delta[p][c], b.delta[q][c]);
    }
  return out;
}

namespace {

Dfa compile_node(const RegexPtr& ast, const Alphabet& alphabet, const CompileLimits& limits) {
  const std::size_t k = alphabet.size();
  switch (ast->kind) {
    case RegexKind::EmptySet: {
      Dfa d;
      d.alphabet = alphabet;
      d.num_states = 1;
      d.delta.assign(1, std::vector<State>(k, 0));
      d.accepting.assign(1, false);
      return d;
    }
    case RegexKind::Epsilon: {
      Dfa d;
      d.alphabet = alphabet;
      d.num_states = 2;
      d.delta.assign(2, std::vector<State>(k, 1));
      d.accepting = {true, false};
      return d;
    }
    case RegexKind::Letter: {
      Dfa d;
      d.alphabet = alphabet;
      d.num_states = 3;  // start, accept, sink
      d.delta.assign(3, std::vector<State>(k, 2));
      d.delta[0][alphabet.index(ast->letter)] = 1;
      d.accepting = {false, true, false};
      return d;
    }
    case RegexKind::Intersect: {
      Dfa acc = compile_node(ast->children[0], alphabet, limits);
      for (std::size_t i = 1; i < ast->children.size(); ++i)
        acc = minimize(intersect_dfa(acc, compile_node(ast->children[i], alphabet, limits), limits));
      return minimize(acc);
    }
    case RegexKind::Complement:
      return minimize(complement_dfa(compile_node(ast->children[0], alphabet, limits)));
    case RegexKind::Concat: {
      Nfa nfa;
      nfa.alphabet = alphabet;
      State prev_base = 0;
      std::vector<State> prev_accepting;
      for (std::size_t i = 0; i < ast->children.size(); ++i) {
        Nfa part = dfa_as_nfa(compile_node(ast->children[i], alphabet, limits));
        State base = embed(nfa, part);
        if (i == 0) {
          for (State s : part.initial) nfa.initial.push_back(base + s);
        } else {
          for (State acc : prev_accepting)
            for (State s : part.initial) nfa.add_eps(acc, base + s);
        }
        prev_accepting.clear();
        for (State s : part.accepting) prev_accepting.push_back(base + s);
        prev_base = base;
      }
      (void)prev_base;
      nfa.accepting = prev_accepting;
      return minimize(nfa_to_dfa(nfa, limits));
    }
    case RegexKind::Union: {
      Nfa nfa;
      nfa.alphabet = alphabet;
      State start = nfa.add_state();
      nfa.initial.push_back(start);
      for (const auto& child : ast->children) {
        Nfa part = dfa_as_nfa(compile_node(child, alphabet, limits));
        State base = embed(nfa, part);
        for (State s : part.initial) nfa.add_eps(start, base + s);
        for (State s : part.accepting) nfa.accepting.push_back(base + s);
      }
      return minimize(nfa_to_dfa(nfa, limits));
    }
    case RegexKind::Star:
    case RegexKind::Plus:
    case RegexKind::Optional: {
      Nfa part = dfa_as_nfa(compile_node(ast->children[0], alphabet, limits));
      Nfa nfa;
      nfa.alphabet = alphabet;
      State start = nfa.add_state();
      State stop = nfa.add_state();
      State base = embed(nfa, part);
      nfa.initial.push_back(start);
      nfa.accepting.push_back(stop);
      for (State s : part.initial) nfa.add_eps(start, base + s);
      for (State s : part.accepting) {
        nfa.add_eps(base + s, stop);
        if (ast->kind != RegexKind::Optional)  // loop back
          for (State t : part.initial) nfa.add_eps(base + s, base + t);
      }
      if (ast->kind != RegexKind::Plus) nfa.add_eps(start, stop);
      return minimize(nfa_to_dfa(nfa, limits));
    }
  }
  throw Error("unreachable regex kind");
}

}  // namespace

Dfa compile(const RegexPtr& ast, const Alphabet& alphabet, const CompileLimits& limits) {
  return compile_node(ast, alphabet, limits);
}

Dfa compile(std::string_view regex_text, const Alphabet& alphabet, const CompileLimits& limits) {
  return compile(parse_regex(regex_text, alphabet), alphabet, limits);
}

std::vector<std::string> enumerate_words(const Dfa& dfa, std::size_t max_len) {
  std::vector<std::string> out;
  std::vector<std::pair<std::string, State>> level{{std::string(), dfa.initial}};
  if (dfa.accepting[dfa.initial]) out.emplace_back();
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::pair<std::string, State>> next;
    next.reserve(level.size() * dfa.alphabet.size());
    for (const auto& [w, q] : level)
      for (std::size_t a = 0; a < dfa.alphabet.size(); ++a) {
        State t = dfa.delta[q][a];
        std::string w2 = w + dfa.alphabet.letter(a);
        if (dfa.accepting[t]) out.push_back(w2);
        next.emplace_back(std::move(w2), t);
      }
    level = std::move(next);
  }
  return out;
}

std::vector<std::string> all_words(const Alphabet& alphabet, std::size_t max_len) {
  std::vector<std::string> out{std::string()};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t a = 0; a < alphabet.size(); ++a) out.push_back(out[i] + alphabet.letter(a));
    begin = end;
  }
  return out;
}

std::size_t count_words(std::size_t k, std::size_t max_len) {
  std::size_t total = 0, pow = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    total += pow;
    if (pow > (static_cast<std::size_t>(1) << 62) / std::max<std::size_t>(k, 1)) return SIZE_MAX;
    pow *= k;
  }
  return total;
}

}  // namespace relogic
