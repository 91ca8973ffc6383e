#include "fquandle/free_group.hpp"

#include <algorithm>
#include <unordered_set>

namespace fquandle {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidAlphabet:
      return "InvalidAlphabet";
    case ErrorKind::InvalidLetter:
      return "InvalidLetter";
    case ErrorKind::AlphabetMismatch:
      return "AlphabetMismatch";
    case ErrorKind::NotInFreeQuandle:
      return "NotInFreeQuandle";
    case ErrorKind::EmptyGeneratorSet:
      return "EmptyGeneratorSet";
    case ErrorKind::BoundTooSmall:
      return "BoundTooSmall";
    case ErrorKind::ClosureTooLarge:
      return "ClosureTooLarge";
    case ErrorKind::NotInClosure:
      return "NotInClosure";
    case ErrorKind::WitnessNotFound:
      return "WitnessNotFound";
    case ErrorKind::EmptyInputWord:
      return "EmptyInputWord";
    case ErrorKind::UnknownGenerator:
      return "UnknownGenerator";
    case ErrorKind::MalformedExponent:
      return "MalformedExponent";
    case ErrorKind::MalformedInput:
      return "MalformedInput";
  }
  return "Unknown";
}

namespace {

bool valid_name(std::string const& name) {
  if (name.empty()) {
    return false;
  }
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == '^' || c == '(' || c == ')' || c == ' ' || c == '\t' ||
           c == '\n' || c == '\r' || c == '\v' || c == '\f';
  });
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw Error(ErrorKind::InvalidAlphabet, "alphabet must be non-empty");
  }
  std::unordered_set<std::string> seen;
  for (auto const& n : names_) {
    if (!valid_name(n)) {
      throw Error(ErrorKind::InvalidAlphabet,
                  "invalid generator name '" + n + "'");
    }
    if (!seen.insert(n).second) {
      throw Error(ErrorKind::InvalidAlphabet, "duplicate generator '" + n + "'");
    }
  }
}

std::optional<GeneratorIndex> Alphabet::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    return std::nullopt;
  }
  return static_cast<GeneratorIndex>(it - names_.begin());
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<Alphabet const>(std::move(names));
}

bool same_alphabet(AlphabetPtr const& a, AlphabetPtr const& b) noexcept {
  return a == b || (a && b && *a == *b);
}

void require_same_alphabet(AlphabetPtr const& a, AlphabetPtr const& b) {
  if (!same_alphabet(a, b)) {
    throw Error(ErrorKind::AlphabetMismatch,
                "operands are words over different alphabets");
  }
}

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) {
    throw Error(ErrorKind::InvalidAlphabet, "null alphabet");
  }
}

Word reduce(AlphabetPtr alphabet, std::span<Letter const> raw) {
  if (!alphabet) {
    throw Error(ErrorKind::InvalidAlphabet, "null alphabet");
  }
  std::vector<Letter> stack;
  stack.reserve(raw.size());
  for (Letter l : raw) {
    if (l.generator >= alphabet->size() ||
        (l.sign != Sign::Plus && l.sign != Sign::Minus)) {
      throw Error(ErrorKind::InvalidLetter,
                  "generator index " + std::to_string(l.generator) +
                      " outside alphabet of size " +
                      std::to_string(alphabet->size()));
    }
    if (!stack.empty() && stack.back().is_inverse_of(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(alphabet), std::move(stack));
}

Word identity(AlphabetPtr alphabet) { return Word(std::move(alphabet)); }

Word generator_word(AlphabetPtr alphabet, GeneratorIndex g, Sign sign) {
  Letter l{g, sign};
  return reduce(std::move(alphabet), std::span<Letter const>(&l, 1));
}

std::size_t cancellation_depth(std::span<Letter const> u,
                               std::span<Letter const> v) noexcept {
  std::size_t c = 0;
  std::size_t const limit = std::min(u.size(), v.size());
  while (c < limit && u[u.size() - 1 - c].is_inverse_of(v[c])) {
    ++c;
  }
  return c;
}

std::size_t cancellation_depth_inverse(std::span<Letter const> u,
                                       std::span<Letter const> v) noexcept {
  // The k-th letter of v^-1 is the inverse of v[|v|-1-k]; it cancels against
  // u[|u|-1-k] exactly when those two letters are equal.
  std::size_t c = 0;
  std::size_t const limit = std::min(u.size(), v.size());
  while (c < limit && u[u.size() - 1 - c] == v[v.size() - 1 - c]) {
    ++c;
  }
  return c;
}

Word multiply(Word const& u, Word const& v) {
  require_same_alphabet(u.alphabet_, v.alphabet_);
  std::size_t const c = cancellation_depth(u.letters_, v.letters_);
  std::vector<Letter> out;
  out.reserve(u.size() + v.size() - 2 * c);
  out.insert(out.end(), u.letters_.begin(), u.letters_.end() - c);
  out.insert(out.end(), v.letters_.begin() + c, v.letters_.end());
  return Word(u.alphabet_, std::move(out));
}

Word invert(Word const& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(w.alphabet_, std::move(out));
}

Word conjugate(Word const& g, Word const& h, Sign eps) {
  Word const by = eps == Sign::Plus ? h : invert(h);
  return multiply(multiply(invert(by), g), by);
}

bool operator==(Word const& a, Word const& b) noexcept {
  return a.letters_ == b.letters_ && same_alphabet(a.alphabet_, b.alphabet_);
}

std::strong_ordering operator<=>(Word const& a, Word const& b) noexcept {
  if (auto c = a.size() <=> b.size(); c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(
      a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
      b.letters_.end());
}

}  // namespace fquandle
