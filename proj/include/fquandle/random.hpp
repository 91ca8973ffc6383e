#ifndef FQUANDLE_RANDOM_HPP_
#define FQUANDLE_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

#include "fquandle/conj_quandle.hpp"
#include "fquandle/free_group.hpp"

namespace fquandle {

// mt19937_64 output is fixed by the standard; the distributions below are
// written out by hand so seeded streams agree across standard libraries.
using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}

/// Uniformly chosen reduced word of exactly `length` letters whose first
/// letter avoids `avoid_first` (pass alphabet size to avoid nothing).
Word random_word(AlphabetPtr const& alphabet, std::size_t length, Rng& rng,
                 GeneratorIndex avoid_first);

/// Random canonical element: uniform axis, tail length uniform in
/// [0, max_tail_len] (tails are empty for one-letter alphabets).
Element random_element(AlphabetPtr const& alphabet, std::size_t max_tail_len,
                       Rng& rng);

}  // namespace fquandle

#endif  // FQUANDLE_RANDOM_HPP_
