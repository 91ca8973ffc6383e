#ifndef FQUANDLE_FREE_GROUP_HPP_
#define FQUANDLE_FREE_GROUP_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fquandle/error.hpp"

namespace fquandle {

// Exponent of a letter, and the ε of x ▷^ε q.
enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

using GeneratorIndex = std::uint32_t;

/// Finite ordered set of generator names. Names are non-empty, distinct, and
/// contain neither whitespace nor '^', '(' or ')'.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  std::string const& name(GeneratorIndex g) const { return names_.at(g); }
  std::vector<std::string> const& names() const noexcept { return names_; }
  std::optional<GeneratorIndex> find(std::string_view name) const;

  friend bool operator==(Alphabet const&, Alphabet const&) = default;

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<Alphabet const>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

/// True when both pointers denote the same generator list.
bool same_alphabet(AlphabetPtr const& a, AlphabetPtr const& b) noexcept;

struct Letter {
  GeneratorIndex generator = 0;
  Sign sign = Sign::Plus;

  constexpr Letter inverse() const noexcept { return {generator, -sign}; }
  constexpr bool is_inverse_of(Letter other) const noexcept {
    return generator == other.generator && sign != other.sign;
  }

  // Orders x < x^-1 < y < y^-1 < ...
  constexpr std::uint32_t code() const noexcept {
    return 2 * generator + (sign == Sign::Minus ? 1u : 0u);
  }

  friend constexpr bool operator==(Letter a, Letter b) noexcept {
    return a.code() == b.code();
  }
  friend constexpr auto operator<=>(Letter a, Letter b) noexcept {
    return a.code() <=> b.code();
  }
};

/// A reduced word of the free group F(X). Construction always reduces, so a
/// Word never holds an adjacent inverse pair; the empty word is the identity.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet);

  Alphabet const& alphabet() const noexcept { return *alphabet_; }
  AlphabetPtr const& alphabet_ptr() const noexcept { return alphabet_; }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  Letter front() const noexcept { return letters_.front(); }
  Letter back() const noexcept { return letters_.back(); }
  std::span<Letter const> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend Word reduce(AlphabetPtr alphabet, std::span<Letter const> raw);

  // Structural equality; words over different alphabets are never equal.
  friend bool operator==(Word const& a, Word const& b) noexcept;
  // Shortlex on letter codes; only meaningful within one alphabet.
  friend std::strong_ordering operator<=>(Word const& a,
                                          Word const& b) noexcept;

 private:
  Word(AlphabetPtr alphabet, std::vector<Letter> reduced)
      : alphabet_(std::move(alphabet)), letters_(std::move(reduced)) {}

  friend Word multiply(Word const& u, Word const& v);
  friend Word invert(Word const& w);

  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

/// Free reduction by a single stack scan. Throws InvalidLetter when a letter
/// names a generator outside the alphabet.
Word reduce(AlphabetPtr alphabet, std::span<Letter const> raw);

Word identity(AlphabetPtr alphabet);
Word generator_word(AlphabetPtr alphabet, GeneratorIndex g,
                    Sign sign = Sign::Plus);

Word multiply(Word const& u, Word const& v);
Word invert(Word const& w);

/// (h^eps)^-1 g h^eps, i.e. g^(h^eps) with a^b = b^-1 a b.
Word conjugate(Word const& g, Word const& h, Sign eps);

/// Number of letter pairs cancelled when forming the product u v.
std::size_t cancellation_depth(std::span<Letter const> u,
                               std::span<Letter const> v) noexcept;

/// Same as cancellation_depth(u, invert(v)) without materialising the inverse.
std::size_t cancellation_depth_inverse(std::span<Letter const> u,
                                       std::span<Letter const> v) noexcept;

void require_same_alphabet(AlphabetPtr const& a, AlphabetPtr const& b);

}  // namespace fquandle

#endif  // FQUANDLE_FREE_GROUP_HPP_
