#ifndef FQUANDLE_INDEPENDENCE_HPP_
#define FQUANDLE_INDEPENDENCE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fquandle/conj_quandle.hpp"
#include "fquandle/free_group.hpp"

namespace fquandle {

/// A member of S ∪ S^-1: element `member` of the checked list, raised to
/// `sign`. Significant indices are 1-based positions in the group word.
struct SignedElement {
  std::size_t member = 0;
  Sign sign = Sign::Plus;
  std::size_t significant_index = 0;
};

/// Significant index of e^sign: the central axis letter, position |w| + 1.
/// For sign -1 this is |group word| + 1 - (|w| + 1), the same position.
std::size_t significant_index(Element const& e, Sign sign) noexcept;

enum class IndependenceMethod { Hall, Nielsen };

struct HallFailure {
  SignedElement left;
  SignedElement right;
  std::size_t depth = 0;  // cancelled letter pairs in left * right
};

struct IndependenceReport {
  IndependenceMethod method = IndependenceMethod::Hall;
  bool passed = false;
  // Human-readable verdict. A Hall failure reads as "criterion not satisfied
  // with central factors", never as "dependent".
  std::string verdict;

  // Hall
  std::size_t pairs_checked = 0;
  std::size_t failing_pairs = 0;
  std::optional<HallFailure> first_failure;

  // Nielsen
  std::size_t moves = 0;
  std::vector<Word> reduced;  // final Nielsen-reduced set
  // Index (into the deduplicated input) of the word that collapsed to 1.
  std::optional<std::size_t> collapsed;
};

/// Checks that every product u v, u, v ∈ S ∪ S^-1, u ≠ v^-1, keeps both
/// central letters: cancellation depth c satisfies c ≤ |u| - i(u) and
/// c ≤ i(v) - 1. Pairs are scanned sign-major ((+,+), (+,-), (-,+), (-,-)),
/// then by member index. Duplicates in S are ignored. Throws
/// EmptyGeneratorSet on an empty list.
IndependenceReport check_significant_factors(std::vector<Element> const& s);

/// Classical Nielsen reduction: replaces some w_i by w_i w_j^±1 or
/// w_j^±1 w_i whenever that makes it strictly smaller in the order that
/// compares length first and then the pair of half-words of w and w^-1.
/// Scans i, then j, then the four products in order; passes iff no word
/// collapses to the identity. Exact duplicates are dropped first. Throws
/// EmptyInputWord when the list or any word in it is empty.
IndependenceReport nielsen_independent(std::vector<Word> const& words);

std::vector<Word> group_words(std::vector<Element> const& elements);

/// N0, N1 and N2 of a Nielsen-reduced set, checked directly.
bool is_nielsen_reduced(std::vector<Word> const& words);

}  // namespace fquandle

#endif  // FQUANDLE_INDEPENDENCE_HPP_
