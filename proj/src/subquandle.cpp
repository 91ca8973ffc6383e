#include "fquandle/subquandle.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <unordered_set>

#include "fquandle/text.hpp"

namespace fquandle {

QuandleTerm QuandleTerm::leaf(std::size_t generator) {
  QuandleTerm t;
  t.leaf_ = generator;
  return t;
}

QuandleTerm QuandleTerm::node(QuandleTerm left, QuandleTerm right,
                              OpKind eps) {
  QuandleTerm t;
  t.node_ = std::make_shared<Node const>(
      Node{std::move(left), std::move(right), eps});
  return t;
}

QuandleTerm const& QuandleTerm::left() const {
  if (!node_) {
    throw Error(ErrorKind::MalformedInput, "leaf has no subterms");
  }
  return node_->left;
}

QuandleTerm const& QuandleTerm::right() const {
  if (!node_) {
    throw Error(ErrorKind::MalformedInput, "leaf has no subterms");
  }
  return node_->right;
}

OpKind QuandleTerm::op() const {
  if (!node_) {
    throw Error(ErrorKind::MalformedInput, "leaf has no operation");
  }
  return node_->eps;
}

bool operator==(QuandleTerm const& a, QuandleTerm const& b) {
  if (a.is_leaf() || b.is_leaf()) {
    return a.is_leaf() && b.is_leaf() && a.leaf_ == b.leaf_;
  }
  if (a.node_ == b.node_) {
    return true;
  }
  return a.op() == b.op() && a.left() == b.left() && a.right() == b.right();
}

Element evaluate(QuandleTerm const& term,
                 std::span<Element const> generators) {
  auto leaf_value = [&](QuandleTerm const& t) -> Element const& {
    if (t.generator() >= generators.size()) {
      throw Error(ErrorKind::MalformedInput,
                  "term refers to generator " + std::to_string(t.generator()) +
                      " of " + std::to_string(generators.size()));
    }
    return generators[t.generator()];
  };
  if (term.is_leaf()) {
    return leaf_value(term);
  }

  // Post-order walk with a memo keyed by shared node identity.
  std::unordered_map<void const*, Element> memo;
  auto value_of = [&](QuandleTerm const& t) -> Element const& {
    return t.is_leaf() ? leaf_value(t) : memo.at(t.node_id());
  };
  std::vector<QuandleTerm const*> stack{&term};
  while (!stack.empty()) {
    QuandleTerm const* t = stack.back();
    if (memo.contains(t->node_id())) {
      stack.pop_back();
      continue;
    }
    bool ready = true;
    for (QuandleTerm const* child : {&t->left(), &t->right()}) {
      if (!child->is_leaf() && !memo.contains(child->node_id())) {
        stack.push_back(child);
        ready = false;
      }
    }
    if (ready) {
      memo.emplace(t->node_id(),
                   act(value_of(t->left()), value_of(t->right()), t->op()));
      stack.pop_back();
    }
  }
  return memo.at(term.node_id());
}

std::vector<Element> dedupe(std::vector<Element> const& elements) {
  std::vector<Element> out;
  std::unordered_set<Element, ElementHash> seen;
  for (auto const& e : elements) {
    if (seen.insert(e).second) {
      out.push_back(e);
    }
  }
  return out;
}

std::optional<std::size_t> ClosureSet::index_of(Element const& e) const {
  if (!same_alphabet(e.alphabet_ptr(), alphabet_ptr())) {
    return std::nullopt;
  }
  auto it = index_.find(e);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

namespace {

// Letter sequences used as lookup keys.
using Key = std::u32string;

Key key_of(std::span<Letter const> letters) {
  Key k;
  k.reserve(letters.size());
  for (Letter l : letters) {
    k.push_back(static_cast<char32_t>(l.code()));
  }
  return k;
}

// Group word q^eps = u^-1 axis^eps u as a letter vector.
std::vector<Letter> conjugator(Element const& q, Sign eps) {
  std::vector<Letter> h;
  auto const u = q.tail().letters();
  h.reserve(2 * u.size() + 1);
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    h.push_back(it->inverse());
  }
  h.push_back(Letter{q.axis(), eps});
  h.insert(h.end(), u.begin(), u.end());
  return h;
}

// Inverse of the last k letters of w, read as the first k letters of a word
// that would cancel them: w_n^-1 w_{n-1}^-1 ... w_{n-k+1}^-1.
Key cancelling_prefix(std::span<Letter const> w, std::size_t k) {
  Key key;
  key.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    key.push_back(static_cast<char32_t>(w[w.size() - 1 - i].inverse().code()));
  }
  return key;
}

// Last k letters of a tail that the first k letters of h would cancel.
Key cancelled_suffix(std::span<Letter const> h, std::size_t k) {
  Key key;
  key.reserve(k);
  for (std::size_t i = k; i > 0; --i) {
    key.push_back(static_cast<char32_t>(h[i - 1].inverse().code()));
  }
  return key;
}

struct ActorEntry {
  std::size_t index;
  Sign eps;
};

// Index over the elements processed so far. `actors` maps a prefix of q^eps
// to entries bucketed by |tail(q)|; `acted` maps a suffix of tail(a) to
// element indices bucketed by |tail(a)|.
class PairIndex {
 public:
  explicit PairIndex(std::size_t bound) : bound_(bound) {}

  void add(std::size_t index, Element const& e) {
    std::size_t const m = e.tail().size();
    for (Sign eps : {Sign::Plus, Sign::Minus}) {
      auto const h = conjugator(e, eps);
      std::size_t const kmax = std::min(bound_, h.size());
      for (std::size_t k = 0; k <= kmax; ++k) {
        auto& buckets = actors_[key_of(std::span(h).first(k))];
        buckets.resize(bound_ + 1);
        buckets[m].push_back({index, eps});
      }
    }
    auto const w = e.tail().letters();
    for (std::size_t k = 0; k <= m; ++k) {
      auto& buckets = acted_[key_of(w.last(k))];
      buckets.resize(bound_ + 1);
      buckets[m].push_back(index);
    }
  }

  // Actors q (with sign) for which act(a, q, eps) can have a tail within the
  // bound. A superset: callers still check the actual result.
  template <typename Fn>
  void for_each_actor(Element const& a, Fn&& fn) const {
    auto const w = a.tail().letters();
    std::size_t const m = w.size();
    for (std::size_t k = 0; k <= m; ++k) {
      auto it = actors_.find(cancelling_prefix(w, k));
      if (it == actors_.end()) {
        continue;
      }
      for (std::size_t qlen = 0; qlen <= bound_; ++qlen) {
        // Partial cancellation (k < m) leaves |w| + |h| - 2k letters with no
        // stripping; full cancellation is checked directly.
        if (k < m && 2 * qlen + 1 + m > bound_ + 2 * k) {
          break;
        }
        for (auto const& entry : it->second[qlen]) {
          fn(entry);
        }
      }
    }
  }

  // Acted-on elements a for which act(a, q, eps) can have a tail within the
  // bound, for the given sign of q.
  template <typename Fn>
  void for_each_acted(Element const& q, Sign eps, Fn&& fn) const {
    auto const h = conjugator(q, eps);
    std::size_t const kmax = std::min(bound_, h.size());
    for (std::size_t k = 0; k <= kmax; ++k) {
      auto it = acted_.find(cancelled_suffix(h, k));
      if (it == acted_.end()) {
        continue;
      }
      for (std::size_t m = k; m <= bound_; ++m) {
        if (m > k && h.size() + m > bound_ + 2 * k) {
          break;
        }
        for (std::size_t index : it->second[m]) {
          fn(index);
        }
      }
    }
  }

 private:
  std::size_t bound_;
  std::unordered_map<Key, std::vector<std::vector<ActorEntry>>> actors_;
  std::unordered_map<Key, std::vector<std::vector<std::size_t>>> acted_;
};

struct Candidate {
  std::size_t other;
  bool other_is_actor;
  Sign eps;

  auto rank() const {
    return std::make_tuple(other, other_is_actor ? 0 : 1,
                           eps == Sign::Plus ? 0 : 1);
  }
  friend bool operator<(Candidate const& a, Candidate const& b) {
    return a.rank() < b.rank();
  }
  friend bool operator==(Candidate const& a, Candidate const& b) {
    return a.rank() == b.rank();
  }
};

}  // namespace

ClosureSet closure(std::vector<Element> const& gens, std::size_t bound,
                   std::size_t max_elements) {
  if (gens.empty()) {
    throw Error(ErrorKind::EmptyGeneratorSet,
                "closure needs at least one generator");
  }
  for (auto const& g : gens) {
    require_same_alphabet(gens.front().alphabet_ptr(), g.alphabet_ptr());
    if (g.tail().size() > bound) {
      throw Error(ErrorKind::BoundTooSmall,
                  "generator " + format_element(g) + " has tail length " +
                      std::to_string(g.tail().size()) + " > bound " +
                      std::to_string(bound));
    }
  }

  ClosureSet c;
  c.generators_ = dedupe(gens);
  c.bound_ = bound;
  auto insert = [&](Element e, std::optional<Derivation> d) {
    if (c.index_.contains(e)) {
      return;
    }
    if (max_elements != 0 && c.elements_.size() >= max_elements) {
      throw Error(ErrorKind::ClosureTooLarge,
                  "closure exceeds " + std::to_string(max_elements) +
                      " elements at bound " + std::to_string(bound));
    }
    c.index_.emplace(e, c.elements_.size());
    c.elements_.push_back(std::move(e));
    c.derivations_.push_back(d);
  };
  for (auto const& g : c.generators_) {
    insert(g, std::nullopt);
  }

  PairIndex pairs(bound);
  std::vector<Candidate> candidates;
  std::vector<Letter> buffer;
  for (std::size_t k = 0; k < c.elements_.size(); ++k) {
    // Copy: elements_ may reallocate while results are inserted.
    Element const current = c.elements_[k];
    candidates.clear();
    pairs.for_each_actor(current, [&](ActorEntry const& q) {
      candidates.push_back({q.index, true, q.eps});
    });
    for (Sign eps : {Sign::Plus, Sign::Minus}) {
      pairs.for_each_acted(current, eps, [&](std::size_t a) {
        candidates.push_back({a, false, eps});
      });
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    for (auto const& cand : candidates) {
      Element const& other = c.elements_[cand.other];
      Element const& acted = cand.other_is_actor ? current : other;
      Element const& actor = cand.other_is_actor ? other : current;
      // Most products are too long or already present; check both before
      // building an Element.
      act_tail_into(acted, actor, cand.eps, buffer);
      if (buffer.size() > bound ||
          c.index_.contains(ElementView{acted.axis(), buffer})) {
        continue;
      }
      insert(canonicalize(acted.axis(), reduce(c.alphabet_ptr(), buffer)),
             cand.other_is_actor ? Derivation{k, cand.other, cand.eps}
                                 : Derivation{cand.other, k, cand.eps});
    }
    pairs.add(k, current);
  }
  return c;
}

bool contains(ClosureSet const& c, Element const& e) { return c.contains(e); }

QuandleTerm express(ClosureSet const& c, Element const& e) {
  auto const target = c.index_of(e);
  if (!target) {
    throw Error(ErrorKind::NotInClosure,
                format_element(e) + " not found within bound " +
                    std::to_string(c.bound()));
  }
  // Derivations only refer to earlier indices, so terms can be assembled in
  // increasing index order over the elements the target depends on.
  std::vector<bool> needed(*target + 1, false);
  std::vector<std::size_t> stack{*target};
  while (!stack.empty()) {
    std::size_t const i = stack.back();
    stack.pop_back();
    if (needed[i]) {
      continue;
    }
    needed[i] = true;
    if (auto const& d = c.derivation(i)) {
      stack.push_back(d->acted);
      stack.push_back(d->actor);
    }
  }
  std::vector<std::optional<QuandleTerm>> terms(*target + 1);
  for (std::size_t i = 0; i <= *target; ++i) {
    if (!needed[i]) {
      continue;
    }
    if (auto const& d = c.derivation(i)) {
      terms[i] = QuandleTerm::node(*terms[d->acted], *terms[d->actor], d->eps);
    } else {
      terms[i] = QuandleTerm::leaf(i);
    }
  }
  QuandleTerm term = *terms[*target];
  if (evaluate(term, c.generators()) != e) {
    throw Error(ErrorKind::WitnessNotFound,
                "derivation replay failed for " + format_element(e));
  }
  return term;
}

}  // namespace fquandle
