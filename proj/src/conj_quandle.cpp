#include "fquandle/conj_quandle.hpp"

#include <algorithm>

#include "fquandle/random.hpp"
#include "fquandle/text.hpp"

namespace fquandle {

Element canonicalize(GeneratorIndex axis, Word const& tail) {
  if (axis >= tail.alphabet().size()) {
    throw Error(ErrorKind::InvalidLetter,
                "axis " + std::to_string(axis) + " outside alphabet");
  }
  std::size_t skip = 0;
  while (skip < tail.size() && tail[skip].generator == axis) {
    ++skip;
  }
  if (skip == 0) {
    return Element(axis, tail);
  }
  return Element(axis, reduce(tail.alphabet_ptr(), tail.letters().subspan(skip)));
}

Element generator_element(AlphabetPtr alphabet, GeneratorIndex axis) {
  return canonicalize(axis, identity(std::move(alphabet)));
}

namespace {

void append_conjugate(std::vector<Letter>& out, Element const& q, Sign eps) {
  auto const u = q.tail().letters();
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    out.push_back(it->inverse());
  }
  out.push_back(Letter{q.axis(), eps});
  out.insert(out.end(), u.begin(), u.end());
}

}  // namespace

Word to_group_word(Element const& e) {
  std::vector<Letter> raw;
  raw.reserve(e.group_length());
  append_conjugate(raw, e, Sign::Plus);
  return reduce(e.alphabet_ptr(), raw);
}

Element from_group_word(Word const& w) {
  std::size_t const n = w.size();
  if (n % 2 == 0) {
    throw Error(ErrorKind::NotInFreeQuandle,
                "even length " + std::to_string(n) +
                    "; free quandle elements have odd length");
  }
  std::size_t const m = n / 2;
  Letter const centre = w[m];
  if (centre.sign != Sign::Plus) {
    throw Error(ErrorKind::NotInFreeQuandle,
                "central letter has exponent -1 (conjugate of an inverse)");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!w[i].is_inverse_of(w[n - 1 - i])) {
      throw Error(ErrorKind::NotInFreeQuandle,
                  "word is not of the form u^-1 x u");
    }
  }
  return canonicalize(centre.generator,
                      reduce(w.alphabet_ptr(), w.letters().subspan(m + 1)));
}

Element act(Element const& a, Element const& q, OpKind eps) {
  require_same_alphabet(a.alphabet_ptr(), q.alphabet_ptr());
  std::vector<Letter> raw(a.tail().begin(), a.tail().end());
  raw.reserve(raw.size() + q.group_length());
  append_conjugate(raw, q, eps);
  return canonicalize(a.axis(), reduce(a.alphabet_ptr(), raw));
}

namespace {

// Letters of q^eps = u^-1 axis^eps u, read by position.
class Conjugator {
 public:
  Conjugator(Element const& q, Sign eps)
      : u_(q.tail().letters()), centre_{q.axis(), eps} {}

  std::size_t size() const noexcept { return 2 * u_.size() + 1; }

  Letter operator[](std::size_t k) const noexcept {
    std::size_t const m = u_.size();
    if (k < m) {
      return u_[m - 1 - k].inverse();
    }
    if (k == m) {
      return centre_;
    }
    return u_[k - m - 1];
  }

 private:
  std::span<Letter const> u_;
  Letter centre_;
};

std::size_t cancelled(Word const& tail, Conjugator const& h) {
  std::size_t c = 0;
  std::size_t const limit = std::min(tail.size(), h.size());
  while (c < limit && tail[tail.size() - 1 - c].is_inverse_of(h[c])) {
    ++c;
  }
  return c;
}

}  // namespace

std::size_t product_length(Word const& tail, Element const& q, Sign eps) {
  Conjugator const h(q, eps);
  return tail.size() + h.size() - 2 * cancelled(tail, h);
}

std::size_t act_tail_length(Element const& a, Element const& q, Sign eps) {
  Conjugator const h(q, eps);
  Word const& w = a.tail();
  std::size_t const c = cancelled(w, h);
  if (c < w.size()) {
    // The product still starts with w[0], which is not an axis letter.
    return w.size() + h.size() - 2 * c;
  }
  std::size_t k = c;
  while (k < h.size() && h[k].generator == a.axis()) {
    ++k;
  }
  return h.size() - k;
}

void act_tail_into(Element const& a, Element const& q, Sign eps,
                   std::vector<Letter>& out) {
  Conjugator const h(q, eps);
  auto const w = a.tail().letters();
  std::size_t const c = cancelled(a.tail(), h);
  out.assign(w.begin(), w.end() - static_cast<std::ptrdiff_t>(c));
  std::size_t k = c;
  if (out.empty()) {
    while (k < h.size() && h[k].generator == a.axis()) {
      ++k;
    }
  }
  for (; k < h.size(); ++k) {
    out.push_back(h[k]);
  }
}

namespace {

std::size_t mix(std::size_t h, std::size_t v) noexcept {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::size_t hash_letters(std::span<Letter const> letters) noexcept {
  std::size_t h = letters.size();
  for (Letter l : letters) {
    h = mix(h, l.code());
  }
  return h;
}

}  // namespace

std::size_t WordHash::operator()(Word const& w) const noexcept {
  return hash_letters(w.letters());
}

std::size_t ElementHash::operator()(Element const& e) const noexcept {
  return mix(hash_letters(e.tail().letters()), e.axis());
}

std::size_t ElementHash::operator()(ElementView const& e) const noexcept {
  return mix(hash_letters(e.tail), e.axis);
}

bool AxiomReport::passed() const noexcept {
  for (auto const& law : laws) {
    if (law.failed != 0) {
      return false;
    }
  }
  return true;
}

AxiomReport verify_axioms(AlphabetPtr alphabet, std::size_t sample_count,
                          std::size_t max_tail_len, std::uint64_t seed) {
  if (sample_count == 0) {
    throw Error(ErrorKind::MalformedInput, "sample count must be positive");
  }
  AxiomReport report;
  report.samples = sample_count;
  report.seed = seed;
  report.max_tail_len = max_tail_len;
  for (char const* name :
       {"idempotence", "inverse_right_then_left", "inverse_left_then_right",
        "self_distributivity_right", "self_distributivity_left"}) {
    report.laws.push_back(AxiomReport::Law{name, 0, 0, {}});
  }

  constexpr std::size_t kMaxCounterexamples = 5;
  auto record = [&](std::size_t law, bool ok, Element const& a,
                    Element const& b, Element const& c) {
    auto& l = report.laws[law];
    ++l.checked;
    if (!ok) {
      ++l.failed;
      if (l.counterexamples.size() < kMaxCounterexamples) {
        l.counterexamples.push_back("a=" + format_element(a) +
                                    " b=" + format_element(b) +
                                    " c=" + format_element(c));
      }
    }
  };

  Rng rng(seed);
  for (std::size_t s = 0; s < sample_count; ++s) {
    Element const a = random_element(alphabet, max_tail_len, rng);
    Element const b = random_element(alphabet, max_tail_len, rng);
    Element const c = random_element(alphabet, max_tail_len, rng);

    record(0, act(a, a, kRight) == a && act(a, a, kLeft) == a, a, b, c);
    record(1, act(act(a, b, kRight), b, kLeft) == a, a, b, c);
    record(2, act(act(a, b, kLeft), b, kRight) == a, a, b, c);
    for (OpKind eps : {kRight, kLeft}) {
      Element const lhs = act(act(a, b, eps), c, eps);
      Element const rhs = act(act(a, c, eps), act(b, c, eps), eps);
      record(eps == kRight ? 3 : 4, lhs == rhs, a, b, c);
    }
  }
  return report;
}

Word random_word(AlphabetPtr const& alphabet, std::size_t length, Rng& rng,
                 GeneratorIndex avoid_first) {
  std::size_t const n = alphabet->size();
  std::vector<Letter> letters;
  letters.reserve(length);
  while (letters.size() < length) {
    Letter l{static_cast<GeneratorIndex>(uniform_below(rng, n)),
             uniform_below(rng, 2) == 0 ? Sign::Plus : Sign::Minus};
    if (letters.empty() && l.generator == avoid_first) {
      if (n == 1) {
        break;
      }
      continue;
    }
    if (!letters.empty() && letters.back().is_inverse_of(l)) {
      continue;
    }
    letters.push_back(l);
  }
  return reduce(alphabet, letters);
}

Element random_element(AlphabetPtr const& alphabet, std::size_t max_tail_len,
                       Rng& rng) {
  auto const axis =
      static_cast<GeneratorIndex>(uniform_below(rng, alphabet->size()));
  std::size_t const len = uniform_below(rng, max_tail_len + 1);
  return canonicalize(axis, random_word(alphabet, len, rng, axis));
}

}  // namespace fquandle
