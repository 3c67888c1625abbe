#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "nsgps/error.hpp"

namespace nsgps {

  using Int = std::int64_t;

  // Checked integer helpers. Anything that would wrap raises ErrorKind::Overflow.
  namespace arith {
    Int add(Int a, Int b);
    Int sub(Int a, Int b);
    Int mul(Int a, Int b);
    Int gcd(std::span<Int const> values) noexcept;
    // Residue in [0, m) for m > 0, also for negative a.
    Int mod(Int a, Int m) noexcept;
    // Floor division for b > 0.
    Int floor_div(Int a, Int b) noexcept;
    // Inverse of a modulo m, requires gcd(a, m) = 1 and m >= 1.
    Int inverse_mod(Int a, Int m);
  }  // namespace arith

  // Minimum of <gens> (an arbitrary finite set of positive integers, any gcd)
  // in each residue class modulo <modulus>; -1 marks classes that the monoid
  // never reaches. Computed as a shortest-path problem over the residues.
  std::vector<Int> residue_minima(std::span<Int const> gens, Int modulus);

  // Membership in the submonoid generated by <gens>; gens need not be coprime.
  bool in_submonoid(Int x, std::span<Int const> gens);

  struct AperyList {
    Int              modulus = 1;
    std::vector<Int> residues{0};

    std::vector<Int> sorted() const;
  };

  namespace detail {
    struct Memo;
  }

  // A numerical semigroup stored by its minimal generators, its conductor,
  // the membership bits on [0, conductor] and its Apery list with respect to
  // the multiplicity. Values are immutable; the attached cache is shared by
  // copies and may be filled concurrently (fills are idempotent).
  class Semigroup {
   public:
    // The whole of N.
    Semigroup();

    std::span<Int const> generators() const noexcept {
      return _generators;
    }
    Int multiplicity() const noexcept {
      return _generators.front();
    }
    std::size_t embedding_dimension() const noexcept {
      return _generators.size();
    }
    Int conductor() const noexcept {
      return _conductor;
    }
    Int frobenius() const noexcept {
      return _conductor - 1;
    }
    Int genus() const noexcept {
      return _genus;
    }
    bool is_whole() const noexcept {
      return _conductor == 0;
    }

    // x in S iff x >= 0 and x >= w(x mod m), w the Apery list of the multiplicity.
    bool contains(Int x) const noexcept;

    // Membership bits over [0, conductor].
    std::vector<bool> const& small_bits() const noexcept {
      return _small;
    }
    // Members of S in [0, conductor], ascending.
    std::vector<Int> small_elements() const;

    AperyList const&        apery(Int n) const;
    std::vector<Int> const& gaps() const;
    std::vector<Int> const& pseudo_frobenius() const;
    std::vector<Int> const& special_gaps() const;

    friend bool operator==(Semigroup const& a, Semigroup const& b) noexcept {
      return a._generators == b._generators;
    }
    // Lexicographic on the minimal generator lists.
    friend bool operator<(Semigroup const& a, Semigroup const& b) noexcept {
      return a._generators < b._generators;
    }

   private:
    friend Semigroup from_generators(std::span<Int const> gens);

    std::vector<Int>              _generators{1};
    Int                           _conductor = 0;
    Int                           _genus     = 0;
    std::vector<bool>             _small{true};
    std::vector<Int>              _apery_m{0};
    std::shared_ptr<detail::Memo> _memo;
  };

  // Largest conductor for which the membership bit set is materialised.
  inline constexpr Int kMaxConductor = Int(1) << 28;

  // Builds <gens> with its minimal generating system. Throws EmptyInput,
  // InvalidArgument (non-positive entries), NotNumerical (gcd != 1),
  // Overflow, or ResourceLimit (conductor above kMaxConductor).
  Semigroup from_generators(std::span<Int const> gens);
  Semigroup from_generators(std::initializer_list<Int> gens);

  // Flagged variant for inputs with gcd d != 1: returns d and the numerical
  // semigroup <gens / d>, which is isomorphic to <gens>.
  std::pair<Int, Semigroup> from_generators_reduced(std::span<Int const> gens);

  inline Semigroup naturals() {
    return Semigroup();
  }

  inline bool contains(Semigroup const& s, Int x) noexcept {
    return s.contains(x);
  }

  // Ap(S, n) for n in S*; residues[i] is the least element of S congruent to i.
  AperyList apery(Semigroup const& s, Int n);

  // { x in S : x - n not in S }, ascending; n need not belong to S.
  std::vector<Int> apery_wrt_integer(Semigroup const& s, Int n);

  struct NotableElements {
    Int              frobenius;
    Int              conductor;
    Int              genus;
    std::vector<Int> gaps;
    Int              multiplicity;
    Int              embedding_dim;
    // n(S): number of elements of S below F(S).
    Int sporadic_count;
  };

  NotableElements notable_elements(Semigroup const& s);

  inline std::vector<Int> const& gaps(Semigroup const& s) {
    return s.gaps();
  }

  // F(S) = max Ap(S, n) - n and g(S) = sum Ap(S, n) / n - (n - 1) / 2, for
  // any n in S*. Returned as (frobenius, genus).
  std::pair<Int, Int> selmer(Semigroup const& s, Int n);

  struct JohnsonReduction {
    Int       d;
    Semigroup reduced;
  };

  // With n_p = <pivot> (a minimal generator, the largest one by default):
  // d = gcd of the remaining generators and T = <n_1/d, ..., n_{p-1}/d, n_p>.
  // Verifies F(S) = dF(T) + (d-1)n_p and g(S) = dg(T) + (d-1)(n_p-1)/2.
  // Throws Underdetermined when e(S) < 2, NotMinimalGenerator for a bad pivot.
  JohnsonReduction johnson_reduce(Semigroup const& s);
  JohnsonReduction johnson_reduce(Semigroup const& s, Int pivot);

  inline std::vector<Int> const& pseudo_frobenius(Semigroup const& s) {
    return s.pseudo_frobenius();
  }

  // PF(S) from the maximal elements of Ap(S, n) with respect to <=_S.
  std::vector<Int> pseudo_frobenius_from_apery(Semigroup const& s, Int n);

  inline Int type(Semigroup const& s) {
    return static_cast<Int>(s.pseudo_frobenius().size());
  }

  // a <=_S b iff b - a in S.
  inline bool le_s(Semigroup const& s, Int a, Int b) noexcept {
    return s.contains(b - a);
  }

  // F(S) + 1 <= e(S) n(S). Also asserts F(S) + 1 <= (t(S) + 1) n(S), which
  // always holds, and throws InvariantViolation otherwise.
  bool wilf_check(Semigroup const& s);

}  // namespace nsgps
