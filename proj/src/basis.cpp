#include "fquandle/basis.hpp"

#include <algorithm>
#include <numeric>

namespace fquandle {

bool BasisReport::all_witnessed() const noexcept {
  return std::all_of(witnesses.begin(), witnesses.end(),
                     [](Witness const& w) { return w.term.has_value(); });
}

bool BasisReport::certified() const noexcept {
  return all_witnessed() && hall.passed && nielsen.passed;
}

std::optional<ShrinkMove> is_shrinkable(Word const& w, GeneratorIndex axis,
                                        ClosureSet const& c) {
  if (w.empty()) {
    return std::nullopt;
  }
  for (auto const& q : c.elements()) {
    // Only q with |q| = 2|u| + 1 <= 2|w| - 1 can shorten w.
    if (q.tail().size() >= w.size()) {
      continue;
    }
    for (Sign eps : {Sign::Minus, Sign::Plus}) {
      if (product_length(w, q, eps) < w.size()) {
        Element const target = canonicalize(axis, w);
        return ShrinkMove{target, q, eps, act(target, q, eps)};
      }
    }
  }
  return std::nullopt;
}

std::vector<Word> compute_T(GeneratorIndex axis, ClosureSet const& c) {
  std::vector<Word> out;
  for (auto const& e : c.elements()) {
    if (e.axis() == axis && !is_shrinkable(e.tail(), axis, c)) {
      out.push_back(e.tail());
    }
  }
  return out;
}

namespace {

std::vector<Witness> witnesses_in(ClosureSet const* reclosure,
                                  std::vector<Element> const& targets) {
  std::vector<Witness> out;
  out.reserve(targets.size());
  for (auto const& t : targets) {
    Witness w{t, std::nullopt};
    if (reclosure && reclosure->contains(t)) {
      w.term = express(*reclosure, t);
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

std::vector<Witness> generation_witnesses(std::vector<Element> const& basis,
                                          std::vector<Element> const& targets,
                                          std::size_t bound) {
  if (basis.empty()) {
    return witnesses_in(nullptr, targets);
  }
  ClosureSet const reclosure = closure(basis, bound);
  return witnesses_in(&reclosure, targets);
}

bool generates(std::vector<Element> const& basis,
               std::vector<Element> const& targets, std::size_t bound) {
  auto const witnesses = generation_witnesses(basis, targets, bound);
  return std::all_of(witnesses.begin(), witnesses.end(),
                     [&](Witness const& w) {
                       return w.term &&
                              evaluate(*w.term, dedupe(basis)) == w.generator;
                     });
}

namespace {

// `reclosure`, when given, must be closure(report.candidate, report.bound).
void fill_verdicts(BasisReport& report,
                   ClosureSet const* reclosure = nullptr) {
  report.witnesses =
      reclosure ? witnesses_in(reclosure, report.input)
                : generation_witnesses(report.candidate, report.input,
                                       report.bound);
  report.hall = check_significant_factors(report.candidate);
  report.nielsen = nielsen_independent(group_words(report.candidate));
}

// First shrink move of the greedy strategy: smallest target index, then
// smallest q index in c, then eps = -1 before +1, where q must lie in the
// bounded closure of the other working elements. Then target is the result
// acted on by q with the opposite sign, so the new working set still
// generates the old one; a q reachable only through the target could lose it.
// Every such closure sits inside c, so scanning c finds all candidates.
std::optional<ShrinkMove> next_move(std::vector<Element> const& working,
                                    ClosureSet const& c) {
  if (working.size() < 2) {
    return std::nullopt;
  }
  for (std::size_t t = 0; t < working.size(); ++t) {
    Word const& w = working[t].tail();
    std::vector<Element> others;
    for (std::size_t i = 0; i < working.size(); ++i) {
      if (i != t) {
        others.push_back(working[i]);
      }
    }
    std::optional<ClosureSet> reach;
    for (auto const& q : c.elements()) {
      if (q.tail().size() >= w.size()) {
        continue;
      }
      for (Sign eps : {Sign::Minus, Sign::Plus}) {
        if (product_length(w, q, eps) >= w.size()) {
          continue;
        }
        bool const direct =
            std::find(others.begin(), others.end(), q) != others.end();
        if (!direct) {
          if (!reach) {
            reach = closure(others, c.bound());
          }
          if (!reach->contains(q)) {
            break;  // the other sign has the same q
          }
        }
        return ShrinkMove{working[t], q, eps, act(working[t], q, eps)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

BasisReport compute_S(ClosureSet const& c) {
  BasisReport report;
  report.input = c.generators();
  report.bound = c.bound();
  report.method = BasisMethod::PaperS;
  auto const alphabet_size =
      static_cast<GeneratorIndex>(c.alphabet_ptr()->size());
  for (GeneratorIndex x = 0; x < alphabet_size; ++x) {
    for (auto const& w : compute_T(x, c)) {
      report.candidate.push_back(canonicalize(x, w));
    }
  }
  fill_verdicts(report);
  return report;
}

BasisReport greedy_shrink(std::vector<Element> const& gens,
                          ClosureSet const& c) {
  for (auto const& g : gens) {
    if (!c.contains(g)) {
      throw Error(ErrorKind::NotInClosure,
                  "greedy_shrink input is not an element of the closure");
    }
  }
  BasisReport report;
  report.input = dedupe(gens);
  report.bound = c.bound();
  report.method = BasisMethod::Greedy;

  std::vector<Element> working = report.input;
  for (;;) {
    auto move = next_move(working, c);
    if (!move) {
      break;
    }
    std::replace(working.begin(), working.end(), move->target, move->result);
    working = dedupe(working);
    report.moves.push_back(std::move(*move));
  }
  report.candidate = std::move(working);
  if (report.moves.empty() && c.generators() == report.candidate) {
    fill_verdicts(report, &c);
  } else {
    fill_verdicts(report);
  }
  return report;
}

StabilityReport check_stability(std::vector<Element> const& gens,
                                std::size_t bound) {
  StabilityReport report;
  report.bound = bound;
  report.candidate = compute_S(closure(gens, bound)).candidate;
  report.candidate_at_next = compute_S(closure(gens, bound + 2)).candidate;
  auto sorted = [](std::vector<Element> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  report.stable = sorted(report.candidate) == sorted(report.candidate_at_next);
  return report;
}

}  // namespace fquandle
