#include "fquandle/independence.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "fquandle/subquandle.hpp"
#include "fquandle/text.hpp"

namespace fquandle {

std::size_t significant_index(Element const& e, Sign sign) noexcept {
  std::size_t const central = e.tail().size() + 1;
  return sign == Sign::Plus ? central : e.group_length() + 1 - central;
}

std::vector<Word> group_words(std::vector<Element> const& elements) {
  std::vector<Word> out;
  out.reserve(elements.size());
  for (auto const& e : elements) {
    out.push_back(to_group_word(e));
  }
  return out;
}

IndependenceReport check_significant_factors(std::vector<Element> const& s) {
  if (s.empty()) {
    throw Error(ErrorKind::EmptyGeneratorSet, "no elements to check");
  }
  std::vector<Element> const members = dedupe(s);
  std::vector<std::array<Word, 2>> words;  // [+1, -1]
  for (auto const& e : members) {
    require_same_alphabet(members.front().alphabet_ptr(), e.alphabet_ptr());
    Word g = to_group_word(e);
    Word inv = invert(g);
    words.push_back({std::move(g), std::move(inv)});
  }

  IndependenceReport report;
  report.method = IndependenceMethod::Hall;
  constexpr std::array<std::pair<Sign, Sign>, 4> kSignOrder{{
      {Sign::Plus, Sign::Plus},
      {Sign::Plus, Sign::Minus},
      {Sign::Minus, Sign::Plus},
      {Sign::Minus, Sign::Minus},
  }};
  auto slot = [](Sign s) { return s == Sign::Plus ? 0 : 1; };
  for (auto [su, sv] : kSignOrder) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (i == j && su != sv) {
          continue;  // u = v^-1
        }
        Word const& u = words[i][slot(su)];
        Word const& v = words[j][slot(sv)];
        std::size_t const iu = significant_index(members[i], su);
        std::size_t const iv = significant_index(members[j], sv);
        std::size_t const depth = cancellation_depth(u.letters(), v.letters());
        ++report.pairs_checked;
        if (depth <= u.size() - iu && depth <= iv - 1) {
          continue;
        }
        if (report.failing_pairs++ == 0) {
          report.first_failure =
              HallFailure{{i, su, iu}, {j, sv, iv}, depth};
        }
      }
    }
  }
  report.passed = report.failing_pairs == 0;
  if (report.passed) {
    report.verdict =
        "central factors are significant: the set is independent";
  } else {
    auto const& f = *report.first_failure;
    auto name = [&](SignedElement const& se) {
      return format_element(members[se.member]) +
             (se.sign == Sign::Minus ? "^-1" : "");
    };
    report.verdict = "criterion not satisfied with central factors: product " +
                     name(f.left) + " * " + name(f.right) + " cancels " +
                     std::to_string(f.depth) +
                     " letter(s) into a central factor (independence "
                     "undecided by this check)";
  }
  return report;
}

namespace {

// Well-order on classes {w, w^-1}: length, then the smaller and the larger of
// the two initial half-words of w and w^-1.
struct ClassKey {
  std::size_t length = 0;
  std::vector<std::uint32_t> low;
  std::vector<std::uint32_t> high;

  friend auto operator<=>(ClassKey const&, ClassKey const&) = default;
};

ClassKey class_key(Word const& w) {
  std::size_t const half = (w.size() + 1) / 2;
  std::vector<std::uint32_t> a;
  std::vector<std::uint32_t> b;
  a.reserve(half);
  b.reserve(half);
  for (std::size_t i = 0; i < half; ++i) {
    a.push_back(w[i].code());
    b.push_back(w[w.size() - 1 - i].inverse().code());
  }
  if (b < a) {
    std::swap(a, b);
  }
  return {w.size(), std::move(a), std::move(b)};
}

}  // namespace

IndependenceReport nielsen_independent(std::vector<Word> const& input) {
  if (input.empty()) {
    throw Error(ErrorKind::EmptyInputWord, "no words to check");
  }
  std::vector<Word> words;
  for (auto const& w : input) {
    require_same_alphabet(input.front().alphabet_ptr(), w.alphabet_ptr());
    if (w.empty()) {
      throw Error(ErrorKind::EmptyInputWord,
                  "the identity cannot belong to an independent set");
    }
    if (std::find(words.begin(), words.end(), w) == words.end()) {
      words.push_back(w);
    }
  }

  IndependenceReport report;
  report.method = IndependenceMethod::Nielsen;
  std::vector<ClassKey> keys;
  for (auto const& w : words) {
    keys.push_back(class_key(w));
  }

  bool progress = true;
  while (progress && !report.collapsed) {
    progress = false;
    for (std::size_t i = 0; i < words.size() && !progress; ++i) {
      for (std::size_t j = 0; j < words.size() && !progress; ++j) {
        if (i == j) {
          continue;
        }
        Word const inv_j = invert(words[j]);
        std::array<Word, 4> const products{
            multiply(words[i], words[j]), multiply(words[i], inv_j),
            multiply(words[j], words[i]), multiply(inv_j, words[i])};
        for (auto const& p : products) {
          if (p.empty()) {
            report.collapsed = i;
            words[i] = p;
            ++report.moves;
            progress = true;
            break;
          }
          ClassKey key = class_key(p);
          if (key < keys[i]) {
            words[i] = p;
            keys[i] = std::move(key);
            ++report.moves;
            progress = true;
            break;
          }
        }
      }
    }
  }

  report.reduced = words;
  report.passed = !report.collapsed.has_value();
  if (report.passed) {
    report.verdict = "Nielsen reduction reached a reduced set of " +
                     std::to_string(words.size()) +
                     " words: the set is independent";
  } else {
    report.verdict = "word " + std::to_string(*report.collapsed) +
                     " reduced to the identity after " +
                     std::to_string(report.moves) +
                     " move(s): the set is dependent";
  }
  return report;
}

bool is_nielsen_reduced(std::vector<Word> const& words) {
  std::vector<Word> signed_words;
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].empty()) {
      return false;  // N0
    }
    signed_words.push_back(words[i]);
    signed_words.push_back(invert(words[i]));
    owner.push_back(i);
    owner.push_back(i);
  }
  auto inverse_pair = [&](std::size_t a, std::size_t b) {
    return owner[a] == owner[b] && a != b;
  };
  std::size_t const n = signed_words.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (inverse_pair(a, b)) {
        continue;
      }
      Word const uv = multiply(signed_words[a], signed_words[b]);
      // N1
      if (uv.size() < signed_words[a].size() ||
          uv.size() < signed_words[b].size()) {
        return false;
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (inverse_pair(b, c)) {
          continue;
        }
        // N2
        std::size_t const uvw = multiply(uv, signed_words[c]).size();
        if (uvw + signed_words[b].size() <=
            signed_words[a].size() + signed_words[c].size()) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace fquandle
