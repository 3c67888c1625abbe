#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nsgps/semigroup.hpp"

namespace nsgps {

  // Gcd chain of an ordered generator list (a_0, ..., a_h):
  // d_1 = a_0, d_{k+1} = gcd(d_k, a_k), e_k = d_k / d_{k+1}.
  struct ArrangementReport {
    std::vector<Int> arrangement;
    std::vector<Int> d_seq;  // d_1 .. d_{h+1}
    std::vector<Int> e_seq;  // e_1 .. e_h
    bool             free = false;
  };

  std::vector<Int> const& special_gaps(Semigroup const& s);

  // S u {x}; throws NotSpecialGap unless x in SG(S).
  Semigroup add_special_gap(Semigroup const& s, Int x);

  // S \ {g}; throws NotMinimalGenerator unless g is a minimal generator.
  Semigroup remove_minimal_generator(Semigroup const& s, Int g);

  // N counts as symmetric (and irreducible) with F = -1, never pseudo-symmetric.
  bool is_symmetric(Semigroup const& s) noexcept;
  bool is_pseudo_symmetric(Semigroup const& s) noexcept;
  bool is_irreducible(Semigroup const& s) noexcept;

  struct OverSemigroupOptions {
    std::size_t max_count = 1'000'000;
  };

  // Every numerical semigroup containing S (S and N included), ordered by
  // genus ascending and then lexicographically on minimal generators.
  // Throws ResourceLimit past options.max_count.
  std::vector<Semigroup> oversemigroups(Semigroup const&     s,
                                        OverSemigroupOptions options = {});

  enum class DecompositionRoute {
    // Greedy cover over the minimal irreducible oversemigroups, falling back
    // to the constructive route when the search exceeds the node budget.
    Automatic,
    // Minimal irreducible oversemigroups only; throws ResourceLimit past budget.
    Exact,
    // One maximal oversemigroup avoiding each uncovered special gap.
    Constructive,
    // Fewest components among the minimal irreducible oversemigroups
    // (exhaustive; requires |SG(S)| <= 20).
    MinimumCardinality
  };

  struct DecompositionOptions {
    DecompositionRoute route       = DecompositionRoute::Automatic;
    std::size_t        node_budget = 2'000;
  };

  // Irreducible S_1, ..., S_r with S = S_1 n ... n S_r, none redundant;
  // returned by genus ascending, then lexicographically.
  std::vector<Semigroup> decompose_into_irreducibles(Semigroup const&     s,
                                                     DecompositionOptions options
                                                     = {});

  // The irreducible oversemigroups of S that are minimal under inclusion and
  // miss at least one special gap of S. Throws ResourceLimit past node_budget.
  std::vector<Semigroup> minimal_irreducible_oversemigroups(
      Semigroup const& s,
      std::size_t      node_budget = 2'000);

  // Componentwise intersection, as a numerical semigroup.
  Semigroup intersection(std::span<Semigroup const> parts);

  // e(S) = m(S); checked against t(S) = m(S) - 1.
  bool is_med(Semigroup const& s);

  // < {n} u (n + Ap(S, n) \ {0}) >; throws NotMember when n not in S*.
  Semigroup med_closure(Semigroup const& s, Int n);

  // Throws NotAPermutation unless <gens> is a reordering of the minimal
  // generators of S.
  ArrangementReport arrangement_report(Semigroup const&     s,
                                       std::span<Int const> gens);

  // Free-arrangement check on an arbitrary sequence of positive integers (not
  // necessarily minimal generators): e_k > 1, d_{h+1} = 1 and
  // e_k a_k in <a_0, ..., a_{k-1}> for every k.
  ArrangementReport arrangement_of(std::span<Int const> sequence);

  bool is_telescopic(Semigroup const& s);

  inline constexpr std::size_t kMaxFreeSearchGenerators = 12;

  // Searches every arrangement of the minimal generators; throws
  // TooManyGenerators when e(S) > kMaxFreeSearchGenerators.
  bool is_free(Semigroup const& s);

  // A free arrangement when one exists, else an empty report.
  ArrangementReport free_arrangement(Semigroup const& s);

  // The unique (lambda_0, ..., lambda_h) with x = sum lambda_k a_k and
  // 0 <= lambda_k < e_k for k >= 1. Throws NotFree.
  std::vector<Int> standard_representation(ArrangementReport const& report,
                                           Int                      x);

  // x in S iff lambda_0 >= 0 in its standard representation.
  bool member_by_standard_representation(ArrangementReport const& report,
                                         Int                      x);

  // { sum lambda_k a_k : 0 <= lambda_k < e_k, k >= 1 }, sorted; for a free
  // arrangement this is Ap(S, a_0).
  std::vector<Int> free_apery_set(ArrangementReport const& report);

}  // namespace nsgps
