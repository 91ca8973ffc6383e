// Brute-force reference implementations used only by the tests. None of them
// share code paths with the library routine they check.
#ifndef FQUANDLE_TESTS_ORACLES_HPP_
#define FQUANDLE_TESTS_ORACLES_HPP_

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "fquandle/conj_quandle.hpp"
#include "fquandle/free_group.hpp"
#include "fquandle/subquandle.hpp"

namespace fquandle::oracle {

// Quandle action through plain group conjugation: a ▷^eps q is the conjugate
// of the group word of a by (group word of q)^eps.
inline Element act_by_conjugation(Element const& a, Element const& q,
                                  Sign eps) {
  return from_group_word(conjugate(to_group_word(a), to_group_word(q), eps));
}

struct NaiveClosure {
  std::vector<Element> elements;
  std::vector<std::optional<Derivation>> derivations;
};

// Same pair order as the library closure, but every ordered pair is tried
// and results are computed by conjugation.
inline NaiveClosure naive_closure(std::vector<Element> const& gens,
                                  std::size_t bound) {
  NaiveClosure c;
  auto insert = [&](Element const& e, std::optional<Derivation> d) {
    if (std::find(c.elements.begin(), c.elements.end(), e) ==
        c.elements.end()) {
      c.elements.push_back(e);
      c.derivations.push_back(d);
    }
  };
  for (auto const& g : gens) {
    insert(g, std::nullopt);
  }
  for (std::size_t k = 0; k < c.elements.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      for (int role = 0; role < 2; ++role) {
        for (Sign eps : {Sign::Plus, Sign::Minus}) {
          std::size_t const acted = role == 0 ? k : j;
          std::size_t const actor = role == 0 ? j : k;
          Element const r = act_by_conjugation(c.elements[acted],
                                               c.elements[actor], eps);
          if (r.tail().size() <= bound) {
            insert(r, Derivation{acted, actor, eps});
          }
        }
      }
    }
  }
  return c;
}

// |u v| through the library product, without any cancellation counting.
inline std::size_t cancelled_pairs(Word const& u, Word const& v) {
  return (u.size() + v.size() - multiply(u, v).size()) / 2;
}

// T_x by definition: w is non-shrinkable iff no closure element q and sign
// make |w q^eps| < |w| (q^eps taken as a full group word).
inline std::vector<Word> brute_force_T(GeneratorIndex axis,
                                       ClosureSet const& c) {
  std::vector<Word> out;
  for (auto const& e : c.elements()) {
    if (e.axis() != axis) {
      continue;
    }
    bool shrinkable = false;
    for (auto const& q : c.elements()) {
      Word const g = to_group_word(q);
      for (Word const& h : {g, invert(g)}) {
        if (multiply(e.tail(), h).size() < e.tail().size()) {
          shrinkable = true;
        }
      }
    }
    if (!shrinkable) {
      out.push_back(e.tail());
    }
  }
  return out;
}

// Hall criterion with central factors, phrased directly: the central letter
// of u (position |w_u| + 1) and of v must both survive in the product u v.
inline bool brute_force_hall(std::vector<Element> const& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      Word const gi = to_group_word(s[i]);
      Word const gj = to_group_word(s[j]);
      for (int si = 0; si < 2; ++si) {
        for (int sj = 0; sj < 2; ++sj) {
          if (i == j && si != sj) {
            continue;
          }
          Word const u = si == 0 ? gi : invert(gi);
          Word const v = sj == 0 ? gj : invert(gj);
          std::size_t const c = cancelled_pairs(u, v);
          // Letters of u after its centre: |w_u|; letters of v before: |w_v|.
          if (c > s[i].tail().size() || c > s[j].tail().size()) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

// Stallings folding: rank of the subgroup generated by `words` equals
// E - V + 1 of the folded graph. A set of n distinct non-trivial words is a
// free basis of the subgroup it generates iff that rank is n.
inline std::size_t stallings_rank(std::vector<Word> const& words) {
  struct Edge {
    std::size_t from;
    GeneratorIndex label;
    std::size_t to;
  };
  std::vector<Edge> edges;
  std::size_t vertices = 1;
  for (auto const& w : words) {
    std::size_t at = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::size_t const next = i + 1 == w.size() ? 0 : vertices++;
      Letter const l = w[i];
      if (l.sign == Sign::Plus) {
        edges.push_back({at, l.generator, next});
      } else {
        edges.push_back({next, l.generator, at});
      }
      at = next;
    }
  }
  std::vector<std::size_t> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      v = parent[v] = parent[parent[v]];
    }
    return v;
  };
  for (bool changed = true; changed;) {
    changed = false;
    std::set<std::tuple<std::size_t, GeneratorIndex, std::size_t>> unique;
    std::map<std::pair<std::size_t, GeneratorIndex>, std::size_t> out_edge;
    std::map<std::pair<std::size_t, GeneratorIndex>, std::size_t> in_edge;
    for (auto const& e : edges) {
      std::size_t const a = find(e.from);
      std::size_t const b = find(e.to);
      if (!unique.insert({a, e.label, b}).second) {
        continue;
      }
      auto [oi, onew] = out_edge.emplace(std::pair{a, e.label}, b);
      if (!onew && find(oi->second) != b) {
        parent[find(oi->second)] = b;
        changed = true;
        break;
      }
      auto [ii, inew] = in_edge.emplace(std::pair{b, e.label}, a);
      if (!inew && find(ii->second) != a) {
        parent[find(ii->second)] = a;
        changed = true;
        break;
      }
    }
  }
  std::set<std::tuple<std::size_t, GeneratorIndex, std::size_t>> final_edges;
  std::set<std::size_t> final_vertices;
  for (auto const& e : edges) {
    final_edges.insert({find(e.from), e.label, find(e.to)});
  }
  for (std::size_t v = 0; v < vertices; ++v) {
    final_vertices.insert(find(v));
  }
  return final_edges.size() + 1 - final_vertices.size();
}

inline bool stallings_independent(std::vector<Word> words) {
  std::vector<Word> distinct;
  for (auto const& w : words) {
    if (w.empty()) {
      return false;
    }
    if (std::find(distinct.begin(), distinct.end(), w) == distinct.end()) {
      distinct.push_back(w);
    }
  }
  return stallings_rank(distinct) == distinct.size();
}

}  // namespace fquandle::oracle

#endif  // FQUANDLE_TESTS_ORACLES_HPP_
