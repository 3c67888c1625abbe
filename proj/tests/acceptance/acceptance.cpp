// Acceptance run: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nsgps/classify.hpp"
#include "nsgps/curves.hpp"
#include "nsgps/enumerate.hpp"
#include "nsgps/invariants.hpp"
#include "nsgps/presentations.hpp"
#include "oracles.hpp"

using namespace nsgps;
using V = std::vector<Int>;

namespace {

  class Checker {
   public:
    void expect(bool ok, std::string const& what) {
      ++_checks;
      if (!ok && _failures.size() < 5) {
        _failures.push_back(what);
      }
      _failed += ok ? 0 : 1;
    }

    template <class T>
    void equal(T const& got, T const& want, std::string const& what) {
      expect(got == want, what);
    }

    // Runs a step limited by its own time budget.
    void timed(std::string const& what, double limit_s, std::function<void()> const& body) {
      auto const t0 = std::chrono::steady_clock::now();
      body();
      double const s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::ostringstream msg;
      msg << what << " took " << s << " s (limit " << limit_s << " s)";
      expect(s < limit_s, msg.str());
    }

    std::size_t checks() const noexcept {
      return _checks;
    }
    std::size_t failed() const noexcept {
      return _failed;
    }
    std::vector<std::string> const& failures() const noexcept {
      return _failures;
    }

   private:
    std::size_t              _checks = 0;
    std::size_t              _failed = 0;
    std::vector<std::string> _failures;
  };

  V vec(std::span<Int const> s) {
    return {s.begin(), s.end()};
  }

  std::vector<V> lists(std::vector<Semigroup> const& v) {
    std::vector<V> out;
    for (auto const& s : v) {
      out.push_back(vec(s.generators()));
    }
    return out;
  }

  void golden_sessions(Checker& c) {
    c.timed("golden sessions", 1.0, [&] {
      auto a = from_generators({5, 9, 21});
      c.equal(a.small_elements(), V{0, 5, 9, 10, 14, 15, 18, 19, 20, 21, 23}, "<5,9,21> small elements");
      c.equal(apery(a, 5).sorted(), V{0, 9, 18, 21, 27}, "<5,9,21> Ap(S,5)");
      c.equal(apery_wrt_integer(a, 6), V{0, 5, 9, 10, 14, 18, 19, 23, 28}, "<5,9,21> Ap(S,6)");

      auto b = from_generators({5, 7, 9});
      c.equal(b.frobenius(), Int{13}, "<5,7,9> F");
      c.equal(b.conductor(), Int{14}, "<5,7,9> C");
      c.equal(b.apery(5).residues, V{0, 16, 7, 18, 9}, "<5,7,9> Apery");
      c.equal(b.genus(), Int{8}, "<5,7,9> genus");
      c.equal(b.gaps(), V{1, 2, 3, 4, 6, 8, 11, 13}, "<5,7,9> gaps");
      c.equal(pseudo_frobenius(b), V{11, 13}, "<5,7,9> PF");
      c.equal(type(b), Int{2}, "<5,7,9> type");

      auto j = from_generators({20, 30, 17});
      c.equal(j.frobenius(), Int{163}, "<20,30,17> F");
      c.equal(j.genus(), Int{82}, "<20,30,17> genus");

      auto d = from_generators({7, 9, 11, 17});
      c.equal(special_gaps(d), V{13, 15, 19}, "<7,9,11,17> special gaps");
      c.equal(oversemigroups(d).size(), std::size_t{51}, "<7,9,11,17> oversemigroups");
      auto parts = decompose_into_irreducibles(d);
      c.equal(lists(parts),
              std::vector<V>{{7, 8, 9, 10, 11, 12}, {7, 9, 10, 11, 12, 13}, {7, 9, 11, 13, 15, 17}},
              "<7,9,11,17> decomposition");

      c.equal(lists(oversemigroups(from_generators({3, 5, 7}))),
              std::vector<V>{{1}, {2, 3}, {3, 4, 5}, {3, 5, 7}}, "<3,5,7> oversemigroups");
      c.equal(vec(med_closure(from_generators({4, 7, 9}), 4).generators()), V{4, 11, 13, 18},
              "<4,7,9> MED closure");
    });
  }

  void census(Checker& c) {
    c.timed("genus census", 30.0, [&] {
      std::vector<std::uint64_t> const want{1,    1,    2,    4,    7,     12,    23,
                                            39,   67,   118,  204,  343,   592,   1001,
                                            1693, 2857, 4806, 8045, 13467, 22464, 37396};
      c.equal(count_by_genus(20), want, "n_g for g <= 20");
    });
    c.timed("Frobenius 16 census", 30.0, [&] {
      auto l = with_frobenius(16);
      c.equal(l.size(), std::size_t{205}, "|F = 16|");
      std::size_t    t2 = 0;
      std::size_t    ps = 0;
      std::vector<V> diff;
      for (auto const& s : l) {
        if (type(s) != 2) {
          continue;
        }
        ++t2;
        if (is_pseudo_symmetric(s)) {
          ++ps;
        } else {
          diff.push_back(vec(s.generators()));
        }
      }
      c.equal(t2, std::size_t{14}, "type 2 count");
      c.equal(ps, std::size_t{7}, "pseudo-symmetric count");
      c.equal(diff,
              std::vector<V>{{3, 14, 19}, {3, 17, 19}, {5, 7, 18}, {5, 9, 12}, {6, 7, 11},
                             {6, 9, 11, 13}, {7, 10, 11, 12, 13}},
              "type 2, not pseudo-symmetric");
    });
    c.timed("free/irreducible table", 60.0, [&] {
      std::vector<std::pair<std::size_t, std::size_t>> const want{
          {1, 1},    {1, 1},    {2, 2},    {3, 3},    {2, 3},    {4, 6},     {5, 8},
          {3, 7},    {7, 15},   {8, 20},   {5, 18},   {11, 36},  {11, 44},   {9, 45},
          {14, 83},  {17, 109}, {12, 101}, {18, 174}, {24, 246}, {16, 227},  {27, 420},
          {31, 546}, {21, 498}, {35, 926}, {38, 1182}, {27, 1121}};
      std::vector<std::pair<std::size_t, std::size_t>> got;
      for (Int F = 1; F <= 51; F += 2) {
        got.emplace_back(free_with_frobenius(F).size(), irreducible_with_frobenius(F).size());
      }
      c.equal(got, want, "(free, irreducible) for odd F <= 51");
    });
  }

  void presentations(Checker& c) {
    c.timed("presentations", 5.0, [&] {
      auto a = from_generators({5, 7, 11, 13});
      c.equal(betti_elements(a), V{18, 20, 21, 22, 24, 26}, "<5,7,11,13> Betti");
      c.equal(minimal_presentation(a).size(), std::size_t{6}, "<5,7,11,13> cardinality");
      auto t = from_generators({10, 11, 17, 23});
      c.equal(betti_elements(t), V{33, 34, 40, 69}, "<10,11,17,23> Betti");

      auto b = from_generators({3, 5, 7});
      std::set<std::set<V>> got;
      for (auto const& r : minimal_presentation(b)) {
        got.insert({r.lhs.coords, r.rhs.coords});
      }
      std::set<std::set<V>> const want{{V{0, 2, 0}, V{1, 0, 1}},
                                       {V{3, 1, 0}, V{0, 0, 2}},
                                       {V{4, 0, 0}, V{0, 1, 1}}};
      c.equal(got, want, "<3,5,7> presentation");

      for (auto const* s : {&a, &b, &t}) {
        auto const rel = minimal_presentation(*s);
        bool       all = true;
        for (Int x = 0; x <= s->conductor() + 2 * s->generators().back(); ++x) {
          if (s->contains(x)) {
            all = all && kernel_reachability_check(*s, rel, x);
          }
        }
        c.expect(all, "kernel reachability on every element");
        for (std::size_t k = 0; k < rel.size(); ++k) {
          auto fewer = rel;
          fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
          c.expect(!kernel_reachability_check(*s, fewer, rel[k].element),
                   "reachability fails without relation " + std::to_string(k));
        }
      }
    });
  }

  void invariants(Checker& c) {
    c.timed("invariants", 5.0, [&] {
      auto s = from_generators({10, 11, 17, 23});
      c.equal(lengths(s, 60).lengths, V{4, 5, 6}, "L(60)");
      c.equal(elasticity_of(s, 60), Rational{3, 2}, "rho(60)");
      c.equal(delta_of(s, 60), V{1}, "Delta(60)");
      c.equal(elasticity(s), Rational{23, 10}, "rho(S)");
      c.equal(delta_max(s), Int{3}, "max Delta(S)");
      c.equal(catenary_of(s, 60), Int{4}, "c(60)");
      c.equal(catenary(s), Int{6}, "c(S)");
      c.equal(omega(s), Int{6}, "omega(S)");
      auto r = invariant_report(s);
      c.expect(*r.delta_max + 2 <= r.catenary && r.catenary <= r.omega, "chain");
      c.equal(catenary_of(from_generators({10, 11, 23, 35}), 77), Int{3}, "c(77)");
    });
  }

  void curves(Checker& c) {
    c.timed("curves", 10.0, [&] {
      auto seqs = delta_sequences_with_frobenius(11);
      c.equal(seqs, std::vector<V>{{5, 4}, {6, 4, 9}, {7, 3}, {9, 6, 4}, {10, 4, 5}, {13, 2}},
              "delta-sequences, F = 11");
      std::vector<V> gens;
      for (auto const& r : seqs) {
        gens.push_back(vec(semigroup_of(char_from_r(r)).generators()));
      }
      c.equal(gens, std::vector<V>{{4, 5}, {4, 6, 9}, {3, 7}, {4, 6, 9}, {4, 5}, {2, 13}},
              "semigroups, F = 11");
      std::size_t seen = 0;
      for (Int F = 1; F <= 31; F += 2) {
        for (auto const& r : delta_sequences_with_frobenius(F)) {
          ++seen;
          auto const ch = char_from_r(r);
          auto const s  = semigroup_of(ch);
          std::string const tag = "F = " + std::to_string(F) + " seq " + std::to_string(seen);
          c.equal(conductor_of(ch), s.conductor(), "conductor, " + tag);
          c.equal(s.frobenius(), F, "Frobenius, " + tag);
          auto const d = infinity_dual(ch);
          c.equal(conductor_of(ch) + conductor_of(d), (ch.n - 1) * (ch.n - 2), "duality, " + tag);
        }
      }
      c.expect(seen > 0, "some sequences");
    });
  }

  void properties(Checker& c) {
    c.timed("randomized properties", 120.0, [&] {
      std::mt19937_64 rng(20240611);
      std::size_t     omega_cases = 0;
      for (int trial = 0; trial < 500; ++trial) {
        auto       gens = oracle::random_generators(rng, 6, 150);
        auto const s    = from_generators(gens);
        auto const scan = oracle::scan(gens);
        std::string tag = "trial " + std::to_string(trial);

        bool member_ok = s.frobenius() == scan.frobenius;
        for (Int x = 0; x < static_cast<Int>(scan.member.size()) && member_ok; ++x) {
          member_ok = s.contains(x) == scan.member[x];
        }
        c.expect(member_ok, "membership, " + tag);

        // Selmer, straight from the Apery residues.
        std::uniform_int_distribution<Int> pick(1, s.conductor() + 2 * s.generators().back());
        int                                probes = 0;
        while (probes < 3) {
          Int const n = pick(rng);
          if (!scan.member.at(n)) {
            continue;
          }
          ++probes;
          auto const& ap   = s.apery(n).residues;
          Int         top  = 0;
          Int         quot = 0;
          for (Int w : ap) {
            top = std::max(top, w);
            quot += w / n;
          }
          c.equal(top - n, scan.frobenius, "Selmer F, " + tag);
          c.equal(quot, static_cast<Int>(scan.gaps.size()), "Selmer g, " + tag);
        }

        // Gaps maximal for <=_S are those with x + n_i in S for every generator.
        V maximal;
        for (Int x : scan.gaps) {
          bool ok = true;
          for (Int g : s.generators()) {
            ok = ok && oracle::in(scan, x + g);
          }
          if (ok) {
            maximal.push_back(x);
          }
        }
        c.equal(pseudo_frobenius_from_apery(s, s.multiplicity()), maximal, "PF, " + tag);

        auto parts = decompose_into_irreducibles(s);
        c.expect(intersection(parts) == s, "decomposition, " + tag);

        auto seq = oracle::random_free_sequence(rng, 150, 4);
        auto rep = arrangement_of(seq);
        c.expect(rep.free && free_apery_set(rep) == apery(from_generators(seq), seq.front()).sorted(),
                 "glued arrangement, " + tag);
        if (s.embedding_dimension() <= kMaxFreeSearchGenerators) {
          auto fa = free_arrangement(s);
          if (fa.free) {
            c.expect(free_apery_set(fa) == apery(s, fa.arrangement.front()).sorted(),
                     "free arrangement, " + tag);
          }
        }

        V g = vec(s.generators());
        for (Int n : g) {
          if (oracle::omega_box_points(g, n, s.conductor()) > 5000) {
            continue;
          }
          ++omega_cases;
          std::vector<V> got;
          for (auto const& f : omega_minimals(s, n)) {
            got.push_back(f.coords);
          }
          std::sort(got.begin(), got.end());
          c.equal(got, oracle::omega_by_dominance(s, n).minimals, "omega minimals, " + tag);
        }
      }
      c.expect(omega_cases > 0, "omega instances exercised");
    });
  }

}  // namespace

int main() {
  struct Criterion {
    int                          id;
    char const*                  name;
    std::function<void(Checker&)> run;
  };
  std::vector<Criterion> const criteria{
      {1, "golden sessions", golden_sessions}, {2, "census", census},
      {3, "presentations", presentations},     {4, "invariants", invariants},
      {5, "curves", curves},                   {6, "randomized properties", properties}};

  int failed = 0;
  for (auto const& cr : criteria) {
    Checker    c;
    auto const t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (std::exception const& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.failed() == 0) {
      std::printf("PASS criterion %d: %s (%zu checks, %.2f s)\n", cr.id, cr.name, c.checks(), secs);
    } else {
      ++failed;
      std::string detail;
      for (auto const& f : c.failures()) {
        detail += (detail.empty() ? "" : "; ") + f;
      }
      std::printf("FAIL criterion %d: %s (%zu of %zu checks failed: %s)\n", cr.id, cr.name,
                  c.failed(), c.checks(), detail.c_str());
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
