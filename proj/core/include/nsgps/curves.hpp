#pragma once

#include <span>
#include <vector>

#include "nsgps/enumerate.hpp"
#include "nsgps/semigroup.hpp"

namespace nsgps {

  // Characteristic data (m, d, r, e) of a branch or of a free arrangement.
  // Indices follow the usual notation: m_seq = m_1..m_h, d_seq = d_1..d_{h+1},
  // r_seq = r_0..r_h, e_seq = e_1..e_h, with n = r_0 = d_1.
  struct CharSequences {
    Int              n = 1;
    std::vector<Int> m_seq;
    std::vector<Int> d_seq{1};
    std::vector<Int> r_seq{1};
    std::vector<Int> e_seq;

    std::size_t h() const noexcept {
      return e_seq.size();
    }

    bool operator==(CharSequences const&) const = default;
  };

  // Throws NonIncreasing unless m is strictly increasing, GcdNotOne unless
  // gcd(n, m) = 1, and InvalidArgument when some m_k leaves d unchanged.
  CharSequences char_from_m(Int n, std::span<Int const> m_seq);

  // Inverse of char_from_m: m_1 = r_1, m_k = r_k - r_{k-1} e_{k-1} + m_{k-1}.
  // Throws GcdNotOne unless gcd(r) = 1, InvalidArgument when the gcd chain
  // stalls or r_0 <= 0.
  CharSequences char_from_r(std::span<Int const> r_seq);

  // r_k d_k < r_{k+1} d_{k+1}, positive entries, and r free as arranged.
  bool is_local_branch(CharSequences const& c);

  // r_1 < n with r_1 not dividing n, r_k d_k > r_{k+1} d_{k+1}, positive
  // entries, and r free as arranged. The sequence (1) counts as one.
  bool is_delta_sequence(CharSequences const& c);

  // <r_0, ..., r_h>; throws InvalidArgument for non-positive entries.
  Semigroup semigroup_of(CharSequences const& c);

  // sum (e_k - 1) r_k - n + 1.
  Int conductor_of(CharSequences const& c);

  // r'_0 = n, r'_k = n (n / d_k) - r_k. The conductors of the two sides add up
  // to (n - 1)(n - 2); this and m'_k = n - m_k are verified before returning.
  // Throws NotDeltaSequence.
  CharSequences infinity_dual(CharSequences const& c);

  // All delta-sequences (r_0, ..., r_h) whose semigroup has Frobenius number F,
  // ordered lexicographically.
  std::vector<std::vector<Int>> delta_sequences_with_frobenius(
      Int                       F,
      EnumerationOptions const& options = {});

  // r_k = d_{k+1} for every k >= 1.
  bool is_coordinate_like(CharSequences const& c);

  // r_k = 2 d_{k+1} for every k >= 1.
  bool is_minimal_int(CharSequences const& c);

}  // namespace nsgps
