#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nsgps/semigroup.hpp"

namespace nsgps {

  struct EnumerationOptions {
    // Requests above these raise ResourceLimit.
    Int max_genus     = 80;
    Int max_frobenius = 200;
    // Worker threads for the genus tree; 0 picks the hardware concurrency.
    unsigned threads = 0;
    // Cap on the number of semigroups a listing may return.
    std::size_t max_results = 5'000'000;
  };

  // Every semigroup of genus g, lexicographically by minimal generators.
  // Walks the tree rooted at N in which the children of S are S \ {x} for the
  // minimal generators x > F(S).
  std::vector<Semigroup> with_genus(Int g, EnumerationOptions const& options = {});

  // n_0, ..., n_gmax. Independent of the thread count.
  std::vector<std::uint64_t> count_by_genus(Int                       gmax,
                                            EnumerationOptions const& options
                                            = {});

  // Every semigroup with Frobenius number F, lexicographically. F = -1 gives
  // {N}; other F < 1 give nothing.
  std::vector<Semigroup> with_frobenius(Int F, EnumerationOptions const& options = {});

  // Symmetric (odd F) or pseudo-symmetric (even F) semigroups with Frobenius
  // number F, lexicographically.
  std::vector<Semigroup> irreducible_with_frobenius(Int F,
                                                    EnumerationOptions const& options
                                                    = {});

  // Free semigroups with Frobenius number F, lexicographically.
  std::vector<Semigroup> free_with_frobenius(Int F,
                                             EnumerationOptions const& options = {});

}  // namespace nsgps
