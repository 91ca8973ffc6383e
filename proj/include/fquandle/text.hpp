#ifndef FQUANDLE_TEXT_HPP_
#define FQUANDLE_TEXT_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fquandle/conj_quandle.hpp"
#include "fquandle/free_group.hpp"

namespace fquandle {

class QuandleTerm;

// Word grammar: whitespace-separated letters, each `name` or `name^-1`; the
// identity prints as `1`.
std::string format_word(Word const& w);
std::string format_letter(Alphabet const& alphabet, Letter l);

// Element grammar: `x` for an empty tail, otherwise `x^(w)`.
std::string format_element(Element const& e);

/// Leaves print as <prefix><i>; nodes as `(left |> right)` for ▷ and
/// `(left <| right)` for ◁.
std::string format_term(QuandleTerm const& term,
                        std::string_view leaf_prefix = "g");

/// Parses and reduces. Accepts `1` (or an empty string) for the identity
/// unless `1` is a generator name. Throws UnknownGenerator or
/// MalformedExponent.
Word parse_word(AlphabetPtr const& alphabet, std::string_view text);

/// Accepts `x^(w)` (canonicalized) or a raw group word u^-1 x u.
Element parse_element(AlphabetPtr const& alphabet, std::string_view text);

/// `alphabet: x y z` or just `x y z`.
AlphabetPtr parse_alphabet(std::string_view text);

struct ProblemLine {
  std::size_t line_number;
  std::string text;
};

/// A problem file: first significant line declares the alphabet, each further
/// significant line holds one item. Blank lines and `#` comments are skipped.
struct ProblemText {
  AlphabetPtr alphabet;
  std::vector<ProblemLine> items;
};

ProblemText read_problem(std::istream& in);

/// read_problem with every item parsed in element grammar.
struct Problem {
  AlphabetPtr alphabet;
  std::vector<Element> generators;
};

Problem parse_problem(std::istream& in);

std::string trim(std::string_view s);

}  // namespace fquandle

#endif  // FQUANDLE_TEXT_HPP_
