#include "fquandle/text.hpp"

#include <cctype>
#include <istream>
#include <sstream>

#include "fquandle/subquandle.hpp"

namespace fquandle {

std::string trim(std::string_view s) {
  auto is_space = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  };
  while (!s.empty() && is_space(s.front())) {
    s.remove_prefix(1);
  }
  while (!s.empty() && is_space(s.back())) {
    s.remove_suffix(1);
  }
  return std::string(s);
}

namespace {

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

}  // namespace

std::string format_letter(Alphabet const& alphabet, Letter l) {
  std::string s = alphabet.name(l.generator);
  if (l.sign == Sign::Minus) {
    s += "^-1";
  }
  return s;
}

std::string format_word(Word const& w) {
  if (w.empty()) {
    return "1";
  }
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) {
      s += ' ';
    }
    s += format_letter(w.alphabet(), w[i]);
  }
  return s;
}

std::string format_element(Element const& e) {
  std::string s = e.alphabet().name(e.axis());
  if (!e.tail().empty()) {
    s += "^(" + format_word(e.tail()) + ")";
  }
  return s;
}

std::string format_term(QuandleTerm const& term,
                        std::string_view leaf_prefix) {
  if (term.is_leaf()) {
    return std::string(leaf_prefix) + std::to_string(term.generator());
  }
  return "(" + format_term(term.left(), leaf_prefix) +
         (term.op() == kRight ? " |> " : " <| ") +
         format_term(term.right(), leaf_prefix) + ")";
}

Word parse_word(AlphabetPtr const& alphabet, std::string_view text) {
  std::vector<Letter> letters;
  auto const tokens = split_ws(text);
  if (tokens.size() == 1 && tokens[0] == "1" && !alphabet->find("1")) {
    return identity(alphabet);
  }
  for (auto const& tok : tokens) {
    auto const caret = tok.find('^');
    std::string const name = tok.substr(0, caret);
    Sign sign = Sign::Plus;
    if (caret != std::string::npos) {
      std::string const exponent = tok.substr(caret + 1);
      if (exponent == "-1") {
        sign = Sign::Minus;
      } else if (exponent != "1") {
        throw Error(ErrorKind::MalformedExponent,
                    "exponent '" + exponent + "' in '" + tok +
                        "' (expected -1)");
      }
    }
    auto const g = alphabet->find(name);
    if (!g) {
      throw Error(ErrorKind::UnknownGenerator, "'" + name + "'");
    }
    letters.push_back({*g, sign});
  }
  return reduce(alphabet, letters);
}

Element parse_element(AlphabetPtr const& alphabet, std::string_view text) {
  std::string const s = trim(text);
  auto const open = s.find('(');
  if (open == std::string::npos) {
    return from_group_word(parse_word(alphabet, s));
  }
  // name ^ ( word )
  std::string const head = trim(std::string_view(s).substr(0, open));
  if (head.empty() || head.back() != '^' || s.back() != ')') {
    throw Error(ErrorKind::MalformedInput,
                "expected element of the form x^(w), got '" + s + "'");
  }
  std::string const name = trim(std::string_view(head).substr(0, head.size() - 1));
  auto const axis = alphabet->find(name);
  if (!axis) {
    throw Error(ErrorKind::UnknownGenerator, "'" + name + "'");
  }
  std::string_view const inner =
      std::string_view(s).substr(open + 1, s.size() - open - 2);
  if (inner.find_first_of("()") != std::string_view::npos) {
    throw Error(ErrorKind::MalformedInput, "nested parentheses in '" + s + "'");
  }
  return canonicalize(*axis, parse_word(alphabet, inner));
}

AlphabetPtr parse_alphabet(std::string_view text) {
  std::string s = trim(text);
  constexpr std::string_view kPrefix = "alphabet:";
  if (s.starts_with(kPrefix)) {
    s = s.substr(kPrefix.size());
  }
  return make_alphabet(split_ws(s));
}

ProblemText read_problem(std::istream& in) {
  ProblemText problem;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto const hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::string const text = trim(line);
    if (text.empty()) {
      continue;
    }
    if (!problem.alphabet) {
      if (!text.starts_with("alphabet:")) {
        throw Error(ErrorKind::MalformedInput,
                    "line " + std::to_string(number) +
                        ": expected 'alphabet: ...' declaration");
      }
      problem.alphabet = parse_alphabet(text);
      continue;
    }
    problem.items.push_back({number, text});
  }
  if (!problem.alphabet) {
    throw Error(ErrorKind::MalformedInput, "missing alphabet declaration");
  }
  return problem;
}

Problem parse_problem(std::istream& in) {
  ProblemText text = read_problem(in);
  Problem problem{text.alphabet, {}};
  for (auto const& item : text.items) {
    try {
      problem.generators.push_back(parse_element(text.alphabet, item.text));
    } catch (Error const& e) {
      throw Error(e.kind(), "line " + std::to_string(item.line_number) + ": " +
                                e.detail());
    }
  }
  return problem;
}

}  // namespace fquandle
