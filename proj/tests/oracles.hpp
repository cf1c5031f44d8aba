#pragma once

// Test-only oracles. Everything here is deliberately independent of the
// automata/monoid pipeline it is used to check: the regex evaluator works by
// structural recursion on words, the congruence oracle by literal context
// enumeration, and the permutation groups by composing permutations.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "relogic/automata.hpp"
#include "relogic/monoid.hpp"
#include "relogic/regex.hpp"

namespace oracles {

using namespace relogic;

// ---------------------------------------------------------------------------
// Denotational regex matcher: no automata, just an interval DP over the word
// for each syntax node, bottom-up. table[node][i*(n+1)+j] says whether the
// node's language contains w[i..j).

class DenotationalMatcher {
 public:
  explicit DenotationalMatcher(RegexPtr root) : root_(std::move(root)) {
    postorder(root_.get());
  }

  bool matches(std::string_view w) {
    const std::size_t n = w.size();
    const std::size_t stride = n + 1;
    auto cell = [&](std::size_t i, std::size_t j) { return i * stride + j; };
    tables_.assign(nodes_.size(), std::vector<char>(stride * stride, 0));
    std::vector<char> star_buf(stride * stride), tmp(stride * stride);

    for (std::size_t ni = 0; ni < nodes_.size(); ++ni) {
      const RegexNode* r = nodes_[ni];
      std::vector<char>& t = tables_[ni];
      switch (r->kind) {
        case RegexKind::EmptySet:
          break;
        case RegexKind::Epsilon:
          for (std::size_t i = 0; i <= n; ++i) t[cell(i, i)] = 1;
          break;
        case RegexKind::Letter:
          for (std::size_t i = 0; i < n; ++i)
            if (w[i] == r->letter) t[cell(i, i + 1)] = 1;
          break;
        case RegexKind::Union:
          for (const auto& c : r->children) {
            const auto& ct = tables_[index_.at(c.get())];
            for (std::size_t x = 0; x < t.size(); ++x) t[x] |= ct[x];
          }
          break;
        case RegexKind::Intersect: {
          t = tables_[index_.at(r->children[0].get())];
          for (std::size_t k = 1; k < r->children.size(); ++k) {
            const auto& ct = tables_[index_.at(r->children[k].get())];
            for (std::size_t x = 0; x < t.size(); ++x) t[x] = t[x] && ct[x];
          }
          break;
        }
        case RegexKind::Complement: {
          const auto& ct = tables_[index_.at(r->children[0].get())];
          for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i; j <= n; ++j) t[cell(i, j)] = !ct[cell(i, j)];
          break;
        }
        case RegexKind::Concat: {
          tmp = tables_[index_.at(r->children[0].get())];
          for (std::size_t c = 1; c < r->children.size(); ++c) {
            const auto& ct = tables_[index_.at(r->children[c].get())];
            std::fill(t.begin(), t.end(), 0);
            for (std::size_t i = 0; i <= n; ++i)
              for (std::size_t k = i; k <= n; ++k)
                if (tmp[cell(i, k)])
                  for (std::size_t j = k; j <= n; ++j) t[cell(i, j)] |= ct[cell(k, j)];
            tmp = t;
          }
          t = tmp;
          break;
        }
        case RegexKind::Star:
        case RegexKind::Plus:
        case RegexKind::Optional: {
          const auto& ct = tables_[index_.at(r->children[0].get())];
          // star table by increasing interval length; nonempty first factor
          std::fill(star_buf.begin(), star_buf.end(), 0);
          for (std::size_t i = 0; i <= n; ++i) star_buf[cell(i, i)] = 1;
          for (std::size_t len = 1; len <= n; ++len)
            for (std::size_t i = 0; i + len <= n; ++i) {
              std::size_t j = i + len;
              for (std::size_t k = i + 1; k <= j; ++k)
                if (ct[cell(i, k)] && star_buf[cell(k, j)]) {
                  star_buf[cell(i, j)] = 1;
                  break;
                }
            }
          if (r->kind == RegexKind::Star) {
            t = star_buf;
          } else if (r->kind == RegexKind::Optional) {
            t = ct;
            for (std::size_t i = 0; i <= n; ++i) t[cell(i, i)] = 1;
          } else {  // Plus: one copy then star
            for (std::size_t i = 0; i <= n; ++i)
              for (std::size_t k = i; k <= n; ++k)
                if (ct[cell(i, k)])
                  for (std::size_t j = k; j <= n; ++j)
                    t[cell(i, j)] |= star_buf[cell(k, j)];
          }
          break;
        }
      }
    }
    return tables_[index_.at(root_.get())][cell(0, n)] != 0;
  }

 private:
  void postorder(const RegexNode* r) {
    for (const auto& c : r->children) postorder(c.get());
    if (!index_.count(r)) {
      index_[r] = nodes_.size();
      nodes_.push_back(r);
    }
  }

  RegexPtr root_;
  std::vector<const RegexNode*> nodes_;
  std::map<const RegexNode*, std::size_t> index_;
  std::vector<std::vector<char>> tables_;
};

inline bool denot_matches(const RegexPtr& r, std::string_view w) {
  DenotationalMatcher m(r);
  return m.matches(w);
}

// ---------------------------------------------------------------------------
// Literal bounded-context congruence: enumerate every (u, v) pair and test
// membership of u x v by running the DFA on the concatenated word.

inline std::vector<std::uint32_t> literal_congruence(const Dfa& dfa, std::size_t word_len,
                                                     std::size_t ctx_len,
                                                     std::size_t* num_classes = nullptr) {
  std::vector<std::string> words = all_words(dfa.alphabet, word_len);
  std::vector<std::string> contexts = all_words(dfa.alphabet, ctx_len);
  std::map<std::vector<bool>, std::uint32_t> ids;
  std::vector<std::uint32_t> out;
  for (const auto& x : words) {
    std::vector<bool> sig;
    sig.reserve(contexts.size() * contexts.size());
    for (const auto& u : contexts)
      for (const auto& v : contexts) sig.push_back(dfa.accepts(u + x + v));
    auto [it, _] = ids.emplace(std::move(sig), static_cast<std::uint32_t>(ids.size()));
    out.push_back(it->second);
  }
  if (num_classes) *num_classes = ids.size();
  return out;
}

// ---------------------------------------------------------------------------
// Bounded Myhill-Nerode: number of distinct residual signatures of prefixes,
// using only the denotational matcher.

inline std::size_t nerode_class_count(const RegexPtr& r, const Alphabet& alphabet,
                                      std::size_t prefix_len, std::size_t suffix_len) {
  DenotationalMatcher m(r);
  std::set<std::vector<bool>> signatures;
  for (const auto& u : all_words(alphabet, prefix_len)) {
    std::vector<bool> sig;
    for (const auto& v : all_words(alphabet, suffix_len)) sig.push_back(m.matches(u + v));
    signatures.insert(sig);
  }
  return signatures.size();
}

// ---------------------------------------------------------------------------
// Minimal automaton size by plain Moore refinement over the reachable part:
// start from the accepting/rejecting split and refine by successor classes
// until stable. Deliberately naive.

inline std::size_t moore_minimal_states(const Dfa& dfa) {
  // reachable restriction
  std::vector<State> order{dfa.initial};
  std::vector<bool> seen(dfa.num_states, false);
  seen[dfa.initial] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t a = 0; a < dfa.alphabet.size(); ++a) {
      State t = dfa.delta[order[i]][a];
      if (!seen[t]) {
        seen[t] = true;
        order.push_back(t);
      }
    }
  std::map<State, std::size_t> cls;
  for (State q : order) cls[q] = dfa.accepting[q] ? 1 : 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::map<State, std::size_t> next;
    for (State q : order) {
      std::vector<std::size_t> key{cls[q]};
      for (std::size_t a = 0; a < dfa.alphabet.size(); ++a) key.push_back(cls[dfa.delta[q][a]]);
      auto [it, _] = ids.emplace(key, ids.size());
      next[q] = it->second;
    }
    bool stable = true;
    std::size_t count = 0;
    for (State q : order) count = std::max(count, next[q] + 1);
    std::size_t old_count = 0;
    for (State q : order) old_count = std::max(old_count, cls[q] + 1);
    stable = count == old_count;
    cls = std::move(next);
    if (stable) return count;
  }
}

// ---------------------------------------------------------------------------
// Permutation groups as explicit monoids.

using Perm = std::vector<std::uint8_t>;

inline Perm perm_compose(const Perm& f, const Perm& g) {  // apply f, then g
  Perm out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

inline bool perm_even(const Perm& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

inline Monoid permutation_monoid(std::size_t points, bool even_only) {
  std::vector<Perm> perms;
  Perm p(points);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!even_only || perm_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  Monoid m;
  m.size = perms.size();
  std::map<Perm, Element> index;
  for (Element i = 0; i < m.size; ++i) index[perms[i]] = i;
  m.table.assign(m.size, std::vector<Element>(m.size));
  for (Element i = 0; i < m.size; ++i)
    for (Element j = 0; j < m.size; ++j)
      m.table[i][j] = index.at(perm_compose(perms[i], perms[j]));
  Perm id(points);
  std::iota(id.begin(), id.end(), 0);
  m.identity = index.at(id);
  return m;
}

inline Monoid symmetric_group(std::size_t points) { return permutation_monoid(points, false); }
inline Monoid alternating_group(std::size_t points) { return permutation_monoid(points, true); }

// Z_n as an explicit monoid (cyclic group).
inline Monoid cyclic_group(std::size_t n) {
  Monoid m;
  m.size = n;
  m.identity = 0;
  m.table.assign(n, std::vector<Element>(n));
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) m.table[i][j] = static_cast<Element>((i + j) % n);
  return m;
}

// Two-element semilattice {1, z} with z absorbing.
inline Monoid two_semilattice() {
  Monoid m;
  m.size = 2;
  m.identity = 0;
  m.table = {{0, 1}, {1, 1}};
  return m;
}

}  // namespace oracles
