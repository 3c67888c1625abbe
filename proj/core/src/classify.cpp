#include "nsgps/classify.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

namespace nsgps {

  namespace {

    std::vector<Int> with_extra(std::span<Int const> gens,
                                std::initializer_list<Int> extra) {
      std::vector<Int> out(gens.begin(), gens.end());
      out.insert(out.end(), extra.begin(), extra.end());
      return out;
    }

    // U subset of T, read off the minimal generators of U.
    bool is_subset(Semigroup const& u, Semigroup const& t) {
      return std::all_of(u.generators().begin(),
                         u.generators().end(),
                         [&t](Int g) { return t.contains(g); });
    }

    bool canonical_less(Semigroup const& a, Semigroup const& b) {
      if (a.genus() != b.genus()) {
        return a.genus() < b.genus();
      }
      return a < b;
    }

    using CoverMask = std::uint64_t;

    struct Candidate {
      Semigroup s;
      // Bit i set when the i-th special gap of the base is missing from s.
      std::vector<bool> covers;
    };

    std::vector<Candidate> cover_candidates(Semigroup const&              base,
                                            std::vector<Semigroup> const& parts) {
      auto const&            sg = base.special_gaps();
      std::vector<Candidate> out;
      for (auto const& t : parts) {
        Candidate c{t, std::vector<bool>(sg.size(), false)};
        for (std::size_t i = 0; i < sg.size(); ++i) {
          c.covers[i] = !t.contains(sg[i]);
        }
        out.push_back(std::move(c));
      }
      return out;
    }

    // Drops components, latest first, whose special gaps the others cover.
    std::vector<Candidate> prune_redundant(std::vector<Candidate> chosen) {
      for (std::size_t i = chosen.size(); i-- > 0;) {
        std::size_t const n = chosen[i].covers.size();
        bool              redundant = true;
        for (std::size_t bit = 0; bit < n && redundant; ++bit) {
          bool covered = false;
          for (std::size_t j = 0; j < chosen.size(); ++j) {
            if (j != i && chosen[j].covers[bit]) {
              covered = true;
              break;
            }
          }
          redundant = covered;
        }
        if (redundant) {
          chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(i));
        }
      }
      return chosen;
    }

    std::vector<Semigroup> finish(std::vector<Candidate> chosen) {
      chosen = prune_redundant(std::move(chosen));
      std::vector<Semigroup> out;
      for (auto& c : chosen) {
        out.push_back(std::move(c.s));
      }
      std::sort(out.begin(), out.end(), canonical_less);
      return out;
    }

    // Order used to break ties between candidates covering equally many
    // uncovered special gaps.
    // Fewer gaps first, then larger multiplicity, then lexicographic.
    bool tie_break_less(Semigroup const& a, Semigroup const& b) {
      auto key = [](Semigroup const& t) {
        return std::make_tuple(t.genus(), -t.multiplicity());
      };
      if (key(a) != key(b)) {
        return key(a) < key(b);
      }
      return a < b;
    }

    std::vector<Semigroup> greedy_cover(Semigroup const&              s,
                                        std::vector<Semigroup> const& parts) {
      auto              candidates = cover_candidates(s, parts);
      std::size_t const n          = s.special_gaps().size();
      std::vector<bool> covered(n, false);
      std::vector<Candidate> chosen;
      std::vector<bool>      used(candidates.size(), false);
      auto remaining = [&] {
        return std::count(covered.begin(), covered.end(), false);
      };
      while (remaining() > 0) {
        std::size_t best       = candidates.size();
        std::size_t best_score = 0;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          if (used[i]) {
            continue;
          }
          std::size_t score = 0;
          for (std::size_t bit = 0; bit < n; ++bit) {
            score += (!covered[bit] && candidates[i].covers[bit]) ? 1 : 0;
          }
          if (score == 0) {
            continue;
          }
          if (best == candidates.size() || score > best_score
              || (score == best_score
                  && tie_break_less(candidates[i].s, candidates[best].s))) {
            best       = i;
            best_score = score;
          }
        }
        if (best == candidates.size()) {
          raise(ErrorKind::InvariantViolation,
                "irreducible oversemigroups do not cover SG(S)");
        }
        used[best] = true;
        for (std::size_t bit = 0; bit < n; ++bit) {
          covered[bit] = covered[bit] || candidates[best].covers[bit];
        }
        chosen.push_back(candidates[best]);
      }
      return finish(std::move(chosen));
    }

    std::vector<Semigroup>
    minimum_cardinality_cover(Semigroup const&              s,
                              std::vector<Semigroup> const& parts) {
      std::size_t const n = s.special_gaps().size();
      if (n > 20) {
        raise(ErrorKind::ResourceLimit,
              "minimum-cardinality decomposition needs |SG(S)| <= 20, got "
                  + std::to_string(n));
      }
      std::vector<Semigroup> ordered(parts);
      std::sort(ordered.begin(), ordered.end(), tie_break_less);
      auto                   candidates = cover_candidates(s, ordered);
      std::vector<CoverMask> masks;
      for (auto const& c : candidates) {
        CoverMask m = 0;
        for (std::size_t bit = 0; bit < n; ++bit) {
          if (c.covers[bit]) {
            m |= CoverMask(1) << bit;
          }
        }
        masks.push_back(m);
      }
      CoverMask const full = (CoverMask(1) << n) - 1;
      constexpr auto  kUnseen = std::numeric_limits<std::size_t>::max();
      // Breadth-first over coverage masks: first arrival is a fewest-parts
      // cover, parents follow candidate order so the result is reproducible.
      std::vector<std::size_t> via(std::size_t(1) << n, kUnseen);
      std::vector<CoverMask>   parent(std::size_t(1) << n, 0);
      std::deque<CoverMask>    queue{0};
      via[0] = candidates.size();
      while (!queue.empty() && via[full] == kUnseen) {
        CoverMask cur = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < masks.size(); ++i) {
          CoverMask next = cur | masks[i];
          if (via[next] == kUnseen) {
            via[next]    = i;
            parent[next] = cur;
            queue.push_back(next);
          }
        }
      }
      if (via[full] == kUnseen) {
        raise(ErrorKind::InvariantViolation,
              "irreducible oversemigroups do not cover SG(S)");
      }
      std::vector<Candidate> chosen;
      for (CoverMask m = full; m != 0; m = parent[m]) {
        chosen.push_back(candidates[via[m]]);
      }
      return finish(std::move(chosen));
    }

    // Adds, while possible, the largest x not in U with x != h, 2x != h and
    // h - x not in U. Each such x is a special gap of U, and the process ends
    // at an irreducible semigroup with Frobenius number h. Adding x can only
    // disqualify larger candidates (h - x' = x), so one descending pass over
    // [1, h) suffices.
    Semigroup maximal_avoiding(Semigroup const& s, Int h) {
      std::vector<char> in(static_cast<std::size_t>(h) + 1, 0);
      for (Int x = 0; x < h; ++x) {
        in[x] = s.contains(x) ? 1 : 0;
      }
      for (Int x = h - 1; x > 0; --x) {
        if (!in[x] && 2 * x != h && !in[h - x]) {
          in[x] = 1;
        }
      }
      std::vector<Int> gens;
      for (Int x = 1; x < h; ++x) {
        if (in[x]) {
          gens.push_back(x);
        }
      }
      for (Int x = h + 1; x <= 2 * h + 1; ++x) {
        gens.push_back(x);
      }
      Semigroup u = from_generators(gens);
      if (u.frobenius() != h || !is_irreducible(u)) {
        raise(ErrorKind::InvariantViolation,
              "maximal oversemigroup avoiding " + std::to_string(h)
                  + " is not irreducible");
      }
      for (Int g : s.generators()) {
        if (!u.contains(g)) {
          raise(ErrorKind::InvariantViolation,
                "maximal oversemigroup avoiding " + std::to_string(h)
                    + " does not contain S");
        }
      }
      return u;
    }

    std::vector<Semigroup> constructive_decomposition(Semigroup const& s) {
      auto const&            sg = s.special_gaps();
      std::vector<Semigroup> parts;
      for (auto it = sg.rbegin(); it != sg.rend(); ++it) {
        bool covered = std::any_of(parts.begin(),
                                   parts.end(),
                                   [h = *it](Semigroup const& t) {
                                     return !t.contains(h);
                                   });
        if (!covered) {
          parts.push_back(maximal_avoiding(s, *it));
        }
      }
      return finish(cover_candidates(s, parts));
    }

  }  // namespace

  std::vector<Int> const& special_gaps(Semigroup const& s) {
    return s.special_gaps();
  }

  Semigroup add_special_gap(Semigroup const& s, Int x) {
    auto const& sg = s.special_gaps();
    if (!std::binary_search(sg.begin(), sg.end(), x)) {
      raise(ErrorKind::NotSpecialGap,
            std::to_string(x) + " is not a special gap");
    }
    return from_generators(with_extra(s.generators(), {x}));
  }

  Semigroup remove_minimal_generator(Semigroup const& s, Int g) {
    auto gens = s.generators();
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) {
      raise(ErrorKind::NotMinimalGenerator,
            std::to_string(g) + " is not a minimal generator");
    }
    // S \ {g} = < (G \ {g}) u (g + G \ {g}) u {2g, 3g} >.
    std::vector<Int> out;
    for (Int n : gens) {
      if (n != g) {
        out.push_back(n);
        out.push_back(arith::add(g, n));
      }
    }
    out.push_back(arith::mul(2, g));
    out.push_back(arith::mul(3, g));
    return from_generators(out);
  }

  bool is_symmetric(Semigroup const& s) noexcept {
    return 2 * s.genus() == s.frobenius() + 1;
  }

  bool is_pseudo_symmetric(Semigroup const& s) noexcept {
    return !s.is_whole() && 2 * s.genus() == s.frobenius() + 2;
  }

  bool is_irreducible(Semigroup const& s) noexcept {
    return is_symmetric(s) || is_pseudo_symmetric(s);
  }

  std::vector<Semigroup> oversemigroups(Semigroup const&     s,
                                        OverSemigroupOptions options) {
    std::set<std::vector<Int>> seen;
    std::vector<Semigroup>     out{s};
    seen.emplace(s.generators().begin(), s.generators().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
      // Copy: out may reallocate while we extend it.
      Semigroup const t = out[i];
      for (Int x : t.special_gaps()) {
        Semigroup u = from_generators(with_extra(t.generators(), {x}));
        if (seen.emplace(u.generators().begin(), u.generators().end()).second) {
          if (out.size() >= options.max_count) {
            raise(ErrorKind::ResourceLimit,
                  "more than " + std::to_string(options.max_count)
                      + " oversemigroups");
          }
          out.push_back(std::move(u));
        }
      }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  }

  std::vector<Semigroup>
  minimal_irreducible_oversemigroups(Semigroup const& s,
                                     std::size_t      node_budget) {
    if (is_irreducible(s)) {
      return {s};
    }
    auto const& sg = s.special_gaps();
    auto misses_some_special_gap = [&sg](Semigroup const& t) {
      return std::any_of(sg.begin(), sg.end(), [&t](Int h) {
        return !t.contains(h);
      });
    };

    std::set<std::vector<Int>> seen;
    seen.emplace(s.generators().begin(), s.generators().end());
    std::vector<Semigroup> frontier{s};
    std::vector<Semigroup> irreducible;
    while (!frontier.empty()) {
      std::vector<Semigroup> next;
      for (auto const& t : frontier) {
        for (Int x : t.special_gaps()) {
          Semigroup u = from_generators(with_extra(t.generators(), {x}));
          if (!seen.emplace(u.generators().begin(), u.generators().end())
                   .second) {
            continue;
          }
          if (seen.size() > node_budget) {
            raise(ErrorKind::ResourceLimit,
                  "oversemigroup search exceeded "
                      + std::to_string(node_budget) + " nodes");
          }
          if (!misses_some_special_gap(u)) {
            continue;
          }
          if (is_irreducible(u)) {
            irreducible.push_back(std::move(u));
          } else {
            next.push_back(std::move(u));
          }
        }
      }
      frontier = std::move(next);
    }

    std::vector<Semigroup> minimal;
    for (auto const& t : irreducible) {
      bool has_smaller = std::any_of(
          irreducible.begin(), irreducible.end(), [&t](Semigroup const& u) {
            return !(u == t) && is_subset(u, t);
          });
      if (!has_smaller) {
        minimal.push_back(t);
      }
    }
    std::sort(minimal.begin(), minimal.end(), canonical_less);
    return minimal;
  }

  std::vector<Semigroup> decompose_into_irreducibles(Semigroup const&     s,
                                                     DecompositionOptions options) {
    if (is_irreducible(s)) {
      return {s};
    }
    switch (options.route) {
      case DecompositionRoute::Exact:
        return greedy_cover(
            s, minimal_irreducible_oversemigroups(s, options.node_budget));
      case DecompositionRoute::Constructive:
        return constructive_decomposition(s);
      case DecompositionRoute::MinimumCardinality:
        return minimum_cardinality_cover(
            s, minimal_irreducible_oversemigroups(s, options.node_budget));
      case DecompositionRoute::Automatic:
        break;
    }
    try {
      return greedy_cover(
          s, minimal_irreducible_oversemigroups(s, options.node_budget));
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::ResourceLimit) {
        throw;
      }
    }
    return constructive_decomposition(s);
  }

  Semigroup intersection(std::span<Semigroup const> parts) {
    if (parts.empty()) {
      raise(ErrorKind::EmptyInput, "intersection of no semigroups");
    }
    Int bound = 0;
    for (auto const& t : parts) {
      bound = std::max(bound, t.conductor());
    }
    // Every integer >= bound is in the intersection, so [1, 2 bound + 1]
    // contains a generating set.
    std::vector<Int> gens;
    for (Int x = 1; x <= 2 * bound + 1; ++x) {
      if (std::all_of(parts.begin(), parts.end(), [x](Semigroup const& t) {
            return t.contains(x);
          })) {
        gens.push_back(x);
      }
    }
    return from_generators(gens);
  }

  bool is_med(Semigroup const& s) {
    bool const by_dimension
        = static_cast<Int>(s.embedding_dimension()) == s.multiplicity();
    bool const by_type = type(s) == s.multiplicity() - 1;
    if (by_dimension != by_type) {
      raise(ErrorKind::InvariantViolation,
            "e(S) = m(S) and t(S) = m(S) - 1 disagree");
    }
    return by_dimension;
  }

  Semigroup med_closure(Semigroup const& s, Int n) {
    auto const&      ap = s.apery(n);
    std::vector<Int> gens{n};
    for (Int w : ap.residues) {
      if (w != 0) {
        gens.push_back(arith::add(n, w));
      }
    }
    return from_generators(gens);
  }

  ArrangementReport arrangement_of(std::span<Int const> sequence) {
    if (sequence.empty()) {
      raise(ErrorKind::EmptyInput, "empty arrangement");
    }
    for (Int a : sequence) {
      if (a <= 0) {
        raise(ErrorKind::InvalidArgument,
              "arrangement entries must be positive");
      }
    }
    ArrangementReport r;
    r.arrangement.assign(sequence.begin(), sequence.end());
    r.d_seq.push_back(sequence[0]);
    for (std::size_t k = 1; k < sequence.size(); ++k) {
      Int d = std::gcd(r.d_seq.back(), sequence[k]);
      r.e_seq.push_back(r.d_seq.back() / d);
      r.d_seq.push_back(d);
    }
    r.free = r.d_seq.back() == 1;
    for (std::size_t k = 1; k < sequence.size() && r.free; ++k) {
      Int e = r.e_seq[k - 1];
      r.free = e > 1
               && in_submonoid(arith::mul(e, sequence[k]),
                               sequence.subspan(0, k));
    }
    return r;
  }

  ArrangementReport arrangement_report(Semigroup const&     s,
                                       std::span<Int const> gens) {
    std::vector<Int> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end());
    if (!std::equal(sorted.begin(),
                    sorted.end(),
                    s.generators().begin(),
                    s.generators().end())) {
      raise(ErrorKind::NotAPermutation,
            "arrangement is not a permutation of the minimal generators");
    }
    return arrangement_of(gens);
  }

  bool is_telescopic(Semigroup const& s) {
    return arrangement_of(s.generators()).free;
  }

  namespace {
    bool extend_free(std::vector<Int>&        prefix,
                     std::vector<bool>&       used,
                     std::span<Int const>     gens,
                     Int                      d) {
      if (prefix.size() == gens.size()) {
        return d == 1;
      }
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (used[i]) {
          continue;
        }
        Int a = gens[i];
        if (prefix.empty()) {
          used[i] = true;
          prefix.push_back(a);
          if (extend_free(prefix, used, gens, a)) {
            return true;
          }
          prefix.pop_back();
          used[i] = false;
          continue;
        }
        Int next = std::gcd(d, a);
        if (next == d) {
          continue;
        }
        if (!in_submonoid(arith::mul(d / next, a), prefix)) {
          continue;
        }
        used[i] = true;
        prefix.push_back(a);
        if (extend_free(prefix, used, gens, next)) {
          return true;
        }
        prefix.pop_back();
        used[i] = false;
      }
      return false;
    }
  }  // namespace

  ArrangementReport free_arrangement(Semigroup const& s) {
    auto gens = s.generators();
    if (gens.size() > kMaxFreeSearchGenerators) {
      raise(ErrorKind::TooManyGenerators,
            "free-arrangement search limited to "
                + std::to_string(kMaxFreeSearchGenerators) + " generators");
    }
    std::vector<Int>  prefix;
    std::vector<bool> used(gens.size(), false);
    if (extend_free(prefix, used, gens, 0)) {
      return arrangement_of(prefix);
    }
    return {};
  }

  bool is_free(Semigroup const& s) {
    return !free_arrangement(s).arrangement.empty();
  }

  std::vector<Int> standard_representation(ArrangementReport const& report,
                                           Int                      x) {
    if (!report.free) {
      raise(ErrorKind::NotFree, "arrangement is not free");
    }
    auto const&       a = report.arrangement;
    std::size_t const h = a.size() - 1;
    std::vector<Int>  lambda(a.size(), 0);
    Int               y = x;
    for (std::size_t k = h; k >= 1; --k) {
      Int const d_next = report.d_seq[k];
      Int const e      = report.e_seq[k - 1];
      // y is a multiple of d_{k+1}; solve lambda (a_k / d_{k+1}) = y / d_{k+1}
      // modulo e_k.
      Int const target = arith::mod(y / d_next, e);
      Int const unit   = arith::mod(a[k] / d_next, e);
      Int const l = arith::mul(target, arith::inverse_mod(unit, e)) % e;
      lambda[k]   = l;
      y           = arith::sub(y, arith::mul(l, a[k]));
    }
    lambda[0] = y / a[0];
    return lambda;
  }

  bool member_by_standard_representation(ArrangementReport const& report,
                                         Int                      x) {
    return standard_representation(report, x)[0] >= 0;
  }

  std::vector<Int> free_apery_set(ArrangementReport const& report) {
    std::vector<Int> out{0};
    auto const&      a = report.arrangement;
    for (std::size_t k = 1; k < a.size(); ++k) {
      std::vector<Int> next;
      next.reserve(out.size() * static_cast<std::size_t>(report.e_seq[k - 1]));
      for (Int base : out) {
        for (Int l = 0; l < report.e_seq[k - 1]; ++l) {
          next.push_back(arith::add(base, arith::mul(l, a[k])));
        }
      }
      out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace nsgps
