#ifndef FQUANDLE_SUBQUANDLE_HPP_
#define FQUANDLE_SUBQUANDLE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fquandle/conj_quandle.hpp"

namespace fquandle {

inline constexpr std::size_t kDefaultBound = 8;

/// Expression over a list of generators built from ▷ and ◁. Subterms are
/// shared, so a term produced by express() is a DAG and stays small even when
/// its tree expansion would not.
class QuandleTerm {
 public:
  static QuandleTerm leaf(std::size_t generator);
  static QuandleTerm node(QuandleTerm left, QuandleTerm right, OpKind eps);

  bool is_leaf() const noexcept { return node_ == nullptr; }
  std::size_t generator() const noexcept { return leaf_; }
  QuandleTerm const& left() const;
  QuandleTerm const& right() const;
  OpKind op() const;

  /// Identity of the shared node, usable as a memo key; null for leaves.
  void const* node_id() const noexcept { return node_.get(); }

  friend bool operator==(QuandleTerm const& a, QuandleTerm const& b);

 private:
  struct Node;
  std::shared_ptr<Node const> node_;
  std::size_t leaf_ = 0;
};

struct QuandleTerm::Node {
  QuandleTerm left;
  QuandleTerm right;
  OpKind eps;
};

/// Evaluates a term with leaf i bound to generators[i]. Throws
/// MalformedInput if a leaf index is out of range.
Element evaluate(QuandleTerm const& term, std::span<Element const> generators);

/// act(elements[acted], elements[actor], eps) produced the element.
struct Derivation {
  std::size_t acted;
  std::size_t actor;
  OpKind eps;
};

/// A subquandle enumerated up to a tail-length bound. Elements are kept in
/// insertion order; generators come first, in the order given (after
/// deduplication), and every other element carries the derivation that first
/// produced it. A lookup miss only means "not reached within the bound".
class ClosureSet {
 public:
  std::vector<Element> const& generators() const noexcept {
    return generators_;
  }
  std::size_t bound() const noexcept { return bound_; }
  std::vector<Element> const& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  AlphabetPtr const& alphabet_ptr() const noexcept {
    return generators_.front().alphabet_ptr();
  }

  std::optional<std::size_t> index_of(Element const& e) const;
  bool contains(Element const& e) const { return index_of(e).has_value(); }

  /// Empty for generators (the first generators().size() elements).
  std::optional<Derivation> const& derivation(std::size_t i) const {
    return derivations_.at(i);
  }

 private:
  friend ClosureSet closure(std::vector<Element> const& gens,
                            std::size_t bound, std::size_t max_elements);

  std::vector<Element> generators_;
  std::size_t bound_ = 0;
  std::vector<Element> elements_;
  std::vector<std::optional<Derivation>> derivations_;
  std::unordered_map<Element, std::size_t, ElementHash, ElementEqual> index_;
};

/// Breadth-first fixed point of act(a, q, ±1) over ordered pairs, discarding
/// results whose tail exceeds `bound` letters. Element k is combined with
/// every earlier element j in increasing j, in the order act(k, j, +1),
/// act(k, j, -1), act(j, k, +1), act(j, k, -1); the output is a pure function
/// of the inputs.
///
/// Throws EmptyGeneratorSet, BoundTooSmall when a generator's tail exceeds
/// the bound, AlphabetMismatch, and ClosureTooLarge when max_elements is
/// non-zero and the enumeration would exceed it.
ClosureSet closure(std::vector<Element> const& gens,
                   std::size_t bound = kDefaultBound,
                   std::size_t max_elements = 0);

bool contains(ClosureSet const& c, Element const& e);

/// A term over c.generators() evaluating to e, read off the derivation
/// records. The result is evaluated once more before it is returned. Throws
/// NotInClosure when e was not enumerated.
QuandleTerm express(ClosureSet const& c, Element const& e);

/// Canonical elements with duplicates removed, first occurrence kept.
std::vector<Element> dedupe(std::vector<Element> const& elements);

}  // namespace fquandle

#endif  // FQUANDLE_SUBQUANDLE_HPP_
