#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "nsgps/semigroup.hpp"

namespace nsgps {

  // A point of N^p: coefficients over the minimal generators n_1 < ... < n_p.
  struct Factorization {
    std::vector<Int> coords;

    Int length() const noexcept;

    auto operator<=>(Factorization const&) const = default;
    bool operator==(Factorization const&) const  = default;
  };

  // The image sum coords[i] * n_i.
  Int evaluate(Semigroup const& s, Factorization const& x);

  // x . y != 0, i.e. the supports meet.
  bool supports_meet(Factorization const& x, Factorization const& y);

  struct PresentationRelation {
    Factorization lhs;
    Factorization rhs;
    Int           element;
  };

  // Z(s), lexicographically descending. Empty when s is not in S.
  std::vector<Factorization> factorizations(Semigroup const& s, Int element);

  // Connected components of the graph on <set> with an edge between x and y
  // whenever x . y != 0. Each class ascending, classes ordered by least member.
  std::vector<std::vector<Factorization>>
  r_classes_of(std::vector<Factorization> set);

  // R-classes of Z(element); throws NotMember.
  std::vector<std::vector<Factorization>> r_classes(Semigroup const& s,
                                                    Int              element);

  // Elements whose factorization graph is disconnected, ascending.
  std::vector<Int> betti_elements(Semigroup const& s);

  // For each Betti element b with R-classes R_1, ..., R_t (R_1 holding the
  // lexicographically least factorization) the relations joining the least
  // member of R_1 with the least member of R_k, k >= 2. Each pair is written
  // with the degree-reverse-lexicographically larger side first.
  std::vector<PresentationRelation> minimal_presentation(Semigroup const& s);

  // Whether every two factorizations of <element> are connected by a chain
  // of moves z -> z - a + b with (a, b) or (b, a) a relation and z >= a.
  bool kernel_reachability_check(Semigroup const&                        s,
                                 std::span<PresentationRelation const> relations,
                                 Int                                     element);

  // "x1^3*x2 - x3^2" style strings, one per relation of the minimal
  // presentation.
  std::vector<std::string> binomials_text(Semigroup const& s);
  std::string              binomial_text(PresentationRelation const& relation);

}  // namespace nsgps
