#ifndef FQUANDLE_TESTS_HELPERS_HPP_
#define FQUANDLE_TESTS_HELPERS_HPP_

#include <string>
#include <vector>

#include "fquandle/conj_quandle.hpp"
#include "fquandle/free_group.hpp"
#include "fquandle/text.hpp"

namespace fquandle::test {

inline AlphabetPtr const& xy() {
  static AlphabetPtr const a = make_alphabet({"x", "y"});
  return a;
}

inline AlphabetPtr const& xyz() {
  static AlphabetPtr const a = make_alphabet({"x", "y", "z"});
  return a;
}

inline Word word(std::string const& text, AlphabetPtr const& a = xy()) {
  return parse_word(a, text);
}

inline Element elem(std::string const& text, AlphabetPtr const& a = xy()) {
  return parse_element(a, text);
}

inline std::vector<Element> elems(std::vector<std::string> const& texts,
                                  AlphabetPtr const& a = xy()) {
  std::vector<Element> out;
  for (auto const& t : texts) {
    out.push_back(elem(t, a));
  }
  return out;
}

}  // namespace fquandle::test

#endif  // FQUANDLE_TESTS_HELPERS_HPP_
