#ifndef FQUANDLE_BASIS_HPP_
#define FQUANDLE_BASIS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "fquandle/conj_quandle.hpp"
#include "fquandle/independence.hpp"
#include "fquandle/subquandle.hpp"

namespace fquandle {

/// target ▷^eps by = result, with a strictly shorter tail than target.
struct ShrinkMove {
  Element target;
  Element by;
  Sign eps;
  Element result;
};

enum class BasisMethod { PaperS, Greedy };

struct Witness {
  Element generator;
  // Term over the candidate list; empty when the generator was not reached
  // within the bound.
  std::optional<QuandleTerm> term;
};

struct BasisReport {
  std::vector<Element> input;
  std::size_t bound = kDefaultBound;
  BasisMethod method = BasisMethod::PaperS;
  std::vector<Element> candidate;
  std::vector<Witness> witnesses;
  IndependenceReport hall;
  IndependenceReport nielsen;
  std::vector<ShrinkMove> moves;  // greedy only

  bool all_witnessed() const noexcept;
  /// Generation witnesses for every input plus both independence checks.
  bool certified() const noexcept;
};

/// First q in closure order, trying eps = -1 before +1, with
/// |w q^eps| < |w|. Equal lengths cannot occur: the two lengths differ in
/// parity.
std::optional<ShrinkMove> is_shrinkable(Word const& w, GeneratorIndex axis,
                                        ClosureSet const& c);

/// Tails of the non-shrinkable closure elements with the given axis, in
/// closure order. Shrinkability quantifies over the closure only.
std::vector<Word> compute_T(GeneratorIndex axis, ClosureSet const& c);

/// Candidate basis { x^w : x in the alphabet, w in compute_T(x, c) } with
/// generation witnesses for c.generators() (from a re-closure of the
/// candidate at the same bound) and both independence verdicts. Missing
/// witnesses are recorded in the report rather than thrown.
BasisReport compute_S(ClosureSet const& c);

/// Shrinks the (deduplicated) generators one move at a time. Each move takes
/// the first target in working-set order, then the first q in c's order
/// (eps = -1 before +1), such that q shrinks the target and lies in the
/// closure of the other working elements at c.bound(); the target is replaced
/// by the move's result.
/// Throws NotInClosure if some generator is not in c.
BasisReport greedy_shrink(std::vector<Element> const& gens,
                          ClosureSet const& c);

/// Expresses each target over `basis` inside closure(basis, bound).
std::vector<Witness> generation_witnesses(std::vector<Element> const& basis,
                                          std::vector<Element> const& targets,
                                          std::size_t bound);

/// True when every target has a replaying witness over `basis`.
bool generates(std::vector<Element> const& basis,
               std::vector<Element> const& targets, std::size_t bound);

/// compute_S at `bound` and at `bound + 2`, compared as sets.
struct StabilityReport {
  std::size_t bound = 0;
  std::vector<Element> candidate;
  std::vector<Element> candidate_at_next;
  bool stable = false;
};

StabilityReport check_stability(std::vector<Element> const& gens,
                                std::size_t bound);

}  // namespace fquandle

#endif  // FQUANDLE_BASIS_HPP_
