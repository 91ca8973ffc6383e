#ifndef FQUANDLE_CONJ_QUANDLE_HPP_
#define FQUANDLE_CONJ_QUANDLE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fquandle/free_group.hpp"

namespace fquandle {

// ▷ is the exponent +1 action and ◁ the exponent -1 action; both take the
// actor on the right: a ▷ q = a^q, a ◁ q = a^(q^-1).
using OpKind = Sign;
inline constexpr OpKind kRight = Sign::Plus;
inline constexpr OpKind kLeft = Sign::Minus;

/// An element x^w of the free quandle FQ(X), held in canonical form: the tail
/// w is reduced and does not begin with x or x^-1. Canonical forms are unique,
/// so structural equality is equality in FQ(X).
class Element {
 public:
  GeneratorIndex axis() const noexcept { return axis_; }
  Word const& tail() const noexcept { return tail_; }
  AlphabetPtr const& alphabet_ptr() const noexcept {
    return tail_.alphabet_ptr();
  }
  Alphabet const& alphabet() const noexcept { return tail_.alphabet(); }

  /// Length of the group word tail^-1 x tail, always 2|tail| + 1.
  std::size_t group_length() const noexcept { return 2 * tail_.size() + 1; }

  friend Element canonicalize(GeneratorIndex axis, Word const& tail);

  friend bool operator==(Element const& a, Element const& b) noexcept {
    return a.axis_ == b.axis_ && a.tail_ == b.tail_;
  }
  // Orders by tail (shortlex) and then axis.
  friend std::strong_ordering operator<=>(Element const& a,
                                          Element const& b) noexcept {
    if (auto c = a.tail_ <=> b.tail_; c != 0) {
      return c;
    }
    return a.axis_ <=> b.axis_;
  }

 private:
  Element(GeneratorIndex axis, Word tail)
      : axis_(axis), tail_(std::move(tail)) {}

  GeneratorIndex axis_;
  Word tail_;
};

/// x^w with leading x^{±1} letters stripped from w, since x^{x^{±1}u} = x^u.
Element canonicalize(GeneratorIndex axis, Word const& tail);

/// The generator x itself.
Element generator_element(AlphabetPtr alphabet, GeneratorIndex axis);

/// tail^-1 axis tail. No cancellation happens because the element is canonical.
Word to_group_word(Element const& e);

/// Inverse of to_group_word. Throws NotInFreeQuandle unless w = u^-1 x u for a
/// generator x with exponent +1.
Element from_group_word(Word const& w);

/// a ▷^eps q: conjugates a by q^eps. The axis of a is preserved.
Element act(Element const& a, Element const& q, OpKind eps);

/// Length of tail(a) * q^eps before canonicalization, computed without
/// materialising the product.
std::size_t product_length(Word const& tail, Element const& q, Sign eps);

/// Tail length of act(a, q, eps), computed without materialising it.
std::size_t act_tail_length(Element const& a, Element const& q, Sign eps);

/// Axis and canonical tail letters without an owning Word, for lookups
/// that should not allocate. Views carry no alphabet.
struct ElementView {
  GeneratorIndex axis;
  std::span<Letter const> tail;
};

/// Writes the canonical tail of act(a, q, eps) into `out` (cleared first).
void act_tail_into(Element const& a, Element const& q, Sign eps,
                   std::vector<Letter>& out);

struct ElementHash {
  using is_transparent = void;
  std::size_t operator()(Element const& e) const noexcept;
  std::size_t operator()(ElementView const& e) const noexcept;
};

/// Element equality that also accepts views; a view matches an element of
/// any alphabet, so callers keep one alphabet per container.
struct ElementEqual {
  using is_transparent = void;
  bool operator()(Element const& a, Element const& b) const noexcept {
    return a == b;
  }
  bool operator()(Element const& a, ElementView const& b) const noexcept {
    return a.axis() == b.axis && std::ranges::equal(a.tail().letters(), b.tail);
  }
  bool operator()(ElementView const& a, Element const& b) const noexcept {
    return (*this)(b, a);
  }
};

struct WordHash {
  std::size_t operator()(Word const& w) const noexcept;
};

/// Result of a randomized check of the quandle laws in Conj(F(X)).
struct AxiomReport {
  struct Law {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    // At most a handful of formatted counterexamples.
    std::vector<std::string> counterexamples;
  };

  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t max_tail_len = 0;
  std::vector<Law> laws;

  bool passed() const noexcept;
};

/// Draws sample_count random triples (a, b, c) of canonical elements with
/// tails of at most max_tail_len letters and checks idempotence, both inverse
/// laws, and right self-distributivity for ▷ and for ◁. Equalities are exact
/// comparisons of canonical forms.
AxiomReport verify_axioms(AlphabetPtr alphabet, std::size_t sample_count,
                          std::size_t max_tail_len, std::uint64_t seed);

}  // namespace fquandle

#endif  // FQUANDLE_CONJ_QUANDLE_HPP_
