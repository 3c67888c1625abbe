#include "nsgps/curves.hpp"

#include <algorithm>
#include <numeric>

#include "nsgps/classify.hpp"

namespace nsgps {

  namespace {

    // Fills d and e from r_0 and the later entries, checking the gcd chain.
    void gcd_chain(CharSequences& c) {
      c.d_seq = {c.n};
      c.e_seq.clear();
      for (std::size_t k = 1; k < c.r_seq.size(); ++k) {
        Int const d = c.d_seq.back();
        Int const g = std::gcd(d, c.r_seq[k]);
        if (g == d) {
          raise(ErrorKind::InvalidArgument,
                "entry " + std::to_string(c.r_seq[k])
                    + " leaves the gcd chain unchanged at " + std::to_string(d));
        }
        c.d_seq.push_back(g);
        c.e_seq.push_back(d / g);
      }
      if (c.d_seq.back() != 1) {
        raise(ErrorKind::GcdNotOne,
              "gcd of the sequence is " + std::to_string(c.d_seq.back()));
      }
    }

    bool positive(std::vector<Int> const& v) {
      return std::all_of(v.begin(), v.end(), [](Int x) { return x > 0; });
    }

    bool free_as_arranged(CharSequences const& c) {
      return arrangement_of(c.r_seq).free;
    }

    struct DeltaSearch {
      Int                           F;
      std::vector<Int>              r;
      std::vector<Int>              d;     // d_1 .. d_{k+1}
      Int                           mass;  // sum (e_j - 1) r_j so far
      std::vector<std::vector<Int>> out;

      void extend() {
        Int const n    = r.front();
        Int const dk   = d.back();
        if (dk == 1) {
          if (mass - n == F) {
            out.push_back(r);
          }
          return;
        }
        // r_{k+1} < r_k e_k, or r_1 < n for the first step.
        Int const upper = r.size() == 1
                              ? n - 1
                              : r.back() * (d[d.size() - 2] / dk) - 1;
        for (Int x = 1; x <= upper; ++x) {
          Int const g = std::gcd(dk, x);
          if (g == dk) {
            continue;
          }
          Int const e    = dk / g;
          Int const more = (e - 1) * x;
          if (mass + more > F + n) {
            continue;
          }
          std::vector<Int> prefix = r;
          if (!in_submonoid(e * x, prefix)) {
            continue;
          }
          r.push_back(x);
          d.push_back(g);
          mass += more;
          extend();
          mass -= more;
          d.pop_back();
          r.pop_back();
        }
      }
    };

  }  // namespace

  CharSequences char_from_m(Int n, std::span<Int const> m_seq) {
    if (n <= 0) {
      raise(ErrorKind::InvalidArgument, "n must be positive");
    }
    for (std::size_t k = 1; k < m_seq.size(); ++k) {
      if (m_seq[k] <= m_seq[k - 1]) {
        raise(ErrorKind::NonIncreasing,
              "characteristic exponents must increase strictly");
      }
    }
    CharSequences c;
    c.n     = n;
    c.m_seq = {m_seq.begin(), m_seq.end()};
    c.r_seq = {n};
    Int d   = n;
    for (std::size_t k = 0; k < m_seq.size(); ++k) {
      Int const g = std::gcd(d, m_seq[k]);
      if (g == d) {
        raise(ErrorKind::InvalidArgument,
              "m_" + std::to_string(k + 1) + " does not lower the gcd");
      }
      if (k == 0) {
        c.r_seq.push_back(m_seq[0]);
      } else {
        Int const e_prev = c.e_seq.back();
        c.r_seq.push_back(arith::add(arith::mul(c.r_seq.back(), e_prev),
                                     m_seq[k] - m_seq[k - 1]));
      }
      c.e_seq.push_back(d / g);
      d = g;
    }
    if (d != 1) {
      raise(ErrorKind::GcdNotOne, "gcd(n, m) is " + std::to_string(d));
    }
    gcd_chain(c);
    return c;
  }

  CharSequences char_from_r(std::span<Int const> r_seq) {
    if (r_seq.empty()) {
      raise(ErrorKind::EmptyInput, "empty r-sequence");
    }
    if (r_seq[0] <= 0) {
      raise(ErrorKind::InvalidArgument, "r_0 must be positive");
    }
    CharSequences c;
    c.n     = r_seq[0];
    c.r_seq = {r_seq.begin(), r_seq.end()};
    gcd_chain(c);
    for (std::size_t k = 1; k <= c.h(); ++k) {
      if (k == 1) {
        c.m_seq.push_back(c.r_seq[1]);
      } else {
        c.m_seq.push_back(c.r_seq[k]
                          - arith::mul(c.r_seq[k - 1], c.e_seq[k - 2])
                          + c.m_seq.back());
      }
    }
    return c;
  }

  bool is_local_branch(CharSequences const& c) {
    if (!positive(c.r_seq)) {
      return false;
    }
    for (std::size_t k = 1; k < c.h(); ++k) {
      if (c.r_seq[k] * c.d_seq[k - 1] >= c.r_seq[k + 1] * c.d_seq[k]) {
        return false;
      }
    }
    return free_as_arranged(c);
  }

  bool is_delta_sequence(CharSequences const& c) {
    if (c.h() == 0) {
      return c.n == 1;
    }
    if (!positive(c.r_seq) || c.r_seq[1] >= c.n || c.n % c.r_seq[1] == 0) {
      return false;
    }
    for (std::size_t k = 1; k < c.h(); ++k) {
      if (c.r_seq[k] * c.d_seq[k - 1] <= c.r_seq[k + 1] * c.d_seq[k]) {
        return false;
      }
    }
    return free_as_arranged(c);
  }

  Semigroup semigroup_of(CharSequences const& c) {
    if (!positive(c.r_seq)) {
      raise(ErrorKind::InvalidArgument, "r-sequence has non-positive entries");
    }
    return from_generators(c.r_seq);
  }

  Int conductor_of(CharSequences const& c) {
    Int total = 1 - c.n;
    for (std::size_t k = 1; k <= c.h(); ++k) {
      total = arith::add(total, arith::mul(c.e_seq[k - 1] - 1, c.r_seq[k]));
    }
    return total;
  }

  CharSequences infinity_dual(CharSequences const& c) {
    if (!is_delta_sequence(c)) {
      raise(ErrorKind::NotDeltaSequence, "not a delta-sequence");
    }
    Int const        n = c.n;
    std::vector<Int> r{n};
    for (std::size_t k = 1; k <= c.h(); ++k) {
      r.push_back(arith::mul(n, n / c.d_seq[k - 1]) - c.r_seq[k]);
    }
    CharSequences dual = char_from_r(r);
    for (std::size_t k = 0; k < c.h(); ++k) {
      if (dual.m_seq[k] != n - c.m_seq[k]) {
        raise(ErrorKind::InvariantViolation,
              "dual characteristic exponents differ from n - m_k");
      }
    }
    if (conductor_of(c) + conductor_of(dual) != (n - 1) * (n - 2)) {
      raise(ErrorKind::InvariantViolation,
            "conductors do not add up to (n - 1)(n - 2)");
    }
    return dual;
  }

  std::vector<std::vector<Int>> delta_sequences_with_frobenius(
      Int                       F,
      EnumerationOptions const& options) {
    if (F == -1) {
      return {{1}};
    }
    if (F < 1 || F % 2 == 0) {
      return {};
    }
    if (F > options.max_frobenius) {
      raise(ErrorKind::ResourceLimit,
            "Frobenius number " + std::to_string(F)
                + " exceeds the configured limit "
                + std::to_string(options.max_frobenius));
    }
    // F = sum (e_k - 1) r_k - n >= n - 2 because the e_k multiply to n and
    // every r_k is at least 1; hence n <= F + 2.
    DeltaSearch search{F, {}, {}, 0, {}};
    for (Int n = 3; n <= F + 2; ++n) {
      search.r = {n};
      search.d = {n};
      search.extend();
      if (search.out.size() > options.max_results) {
        raise(ErrorKind::ResourceLimit, "too many delta-sequences");
      }
    }
    auto& out = search.out;
    // The first step must not divide n.
    std::erase_if(out, [](std::vector<Int> const& r) { return r[0] % r[1] == 0; });
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_coordinate_like(CharSequences const& c) {
    for (std::size_t k = 1; k <= c.h(); ++k) {
      if (c.r_seq[k] != c.d_seq[k]) {
        return false;
      }
    }
    return true;
  }

  bool is_minimal_int(CharSequences const& c) {
    for (std::size_t k = 1; k <= c.h(); ++k) {
      if (c.r_seq[k] != 2 * c.d_seq[k]) {
        return false;
      }
    }
    return true;
  }

}  // namespace nsgps
