#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nsgps/presentations.hpp"
#include "nsgps/semigroup.hpp"

namespace nsgps {

  // Non-negative rational kept in lowest terms.
  struct Rational {
    Int num = 0;
    Int den = 1;

    static Rational make(Int num, Int den);

    bool operator==(Rational const&) const = default;
  };

  // "23/10", or just "3" for integers.
  std::string to_string(Rational const& q);

  struct LengthSet {
    Int              element = 0;
    std::vector<Int> lengths;  // ascending, distinct
  };

  // L(s) from Z(s); throws NotMember.
  LengthSet lengths(Semigroup const& s, Int element);

  // L(s) for every s in [0, bound] through the recursion
  // L(s) = union over i of (L(s - n_i) + 1). Empty entries mark gaps.
  std::vector<std::vector<Int>> length_sets_up_to(Semigroup const& s, Int bound);

  Rational elasticity_of(Semigroup const& s, Int element);

  // n_p / n_1, checked against rho(n_1 n_p).
  Rational elasticity(Semigroup const& s);

  // Consecutive differences of L(s), ascending and distinct.
  std::vector<Int> delta_of(Semigroup const& s, Int element);

  // gcd of the length differences across a minimal presentation.
  // Throws HalfFactorial for N.
  Int delta_min(Semigroup const& s);

  // max Delta(b) over the Betti elements. Throws HalfFactorial for N.
  Int delta_max(Semigroup const& s);

  // Union of Delta(s) for s in S, s <= bound.
  std::vector<Int> delta_up_to(Semigroup const& s, Int bound);

  // max(|x - x^y|, |y - x^y|); throws DimensionMismatch.
  Int distance(Factorization const& x, Factorization const& y);

  // Least N such that Z(s) is N-connected: the largest edge of a minimum
  // spanning tree of the complete distance graph. 0 when |Z(s)| <= 1.
  Int catenary_of(Semigroup const& s, Int element);

  // A chain from x to y inside Z(s) whose steps never exceed c(s), read off
  // the minimum spanning tree. Throws InvalidArgument when x or y is not a
  // factorization of s.
  std::vector<Factorization> catenary_chain(Semigroup const&     s,
                                            Int                  element,
                                            Factorization const& x,
                                            Factorization const& y);

  // max c(b) over the Betti elements; 0 for N.
  Int catenary(Semigroup const& s);

  inline constexpr std::size_t kDefaultOmegaCap = 10'000'000;

  // Minimal elements of Z(s + S) under the componentwise order, ascending.
  // Throws NotMember, and DiagnosticOverflow once more than <cap> vectors
  // have been generated.
  std::vector<Factorization> omega_minimals(Semigroup const& s,
                                            Int              element,
                                            std::size_t      cap
                                            = kDefaultOmegaCap);

  Int omega_of(Semigroup const& s,
               Int              element,
               std::size_t      cap = kDefaultOmegaCap);

  // max omega(S, n_i) over the minimal generators; 1 for N.
  Int omega(Semigroup const& s, std::size_t cap = kDefaultOmegaCap);

  struct InvariantReport {
    Rational           elasticity;
    std::optional<Int> delta_min;
    std::optional<Int> delta_max;
    Int                catenary = 0;
    Int                omega    = 0;
  };

  // Throws InvariantViolation if max Delta(S) + 2 <= c(S) <= omega(S) fails.
  InvariantReport invariant_report(Semigroup const& s,
                                   std::size_t      omega_cap = kDefaultOmegaCap);

}  // namespace nsgps
