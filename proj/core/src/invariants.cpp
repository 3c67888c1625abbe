#include "nsgps/invariants.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace nsgps {

  namespace {

    void require_member(Semigroup const& s, Int element) {
      if (!s.contains(element)) {
        raise(ErrorKind::NotMember,
              std::to_string(element) + " is not in the semigroup");
      }
    }

    std::vector<Int> differences(std::vector<Int> const& sorted) {
      std::set<Int> d;
      for (std::size_t i = 1; i < sorted.size(); ++i) {
        d.insert(sorted[i] - sorted[i - 1]);
      }
      return {d.begin(), d.end()};
    }

    // Shortest and longest factorization lengths of <element>, by dynamic
    // programming over [0, element].
    std::pair<Int, Int> length_bounds(Semigroup const& s, Int element) {
      constexpr Int kNone = -1;
      auto          gens  = s.generators();
      std::vector<Int> lo(static_cast<std::size_t>(element) + 1, kNone);
      std::vector<Int> hi(lo.size(), kNone);
      lo[0] = hi[0] = 0;
      for (Int x = 1; x <= element; ++x) {
        for (Int g : gens) {
          if (g > x || lo[x - g] == kNone) {
            continue;
          }
          Int const a = lo[x - g] + 1;
          Int const b = hi[x - g] + 1;
          lo[x]       = lo[x] == kNone ? a : std::min(lo[x], a);
          hi[x]       = std::max(hi[x], b);
        }
      }
      return {lo[element], hi[element]};
    }

    struct Tree {
      std::vector<Factorization>            nodes;
      std::vector<std::size_t>              parent;
      std::vector<Int>                      weight;  // edge to parent
      Int                                   max_edge = 0;
    };

    // Prim's algorithm on the complete distance graph, rooted at index 0.
    Tree spanning_tree(std::vector<Factorization> z) {
      Tree t;
      t.nodes = std::move(z);
      std::size_t const n = t.nodes.size();
      t.parent.assign(n, 0);
      t.weight.assign(n, 0);
      if (n <= 1) {
        return t;
      }
      constexpr Int    kInf = std::numeric_limits<Int>::max();
      std::vector<Int> best(n, kInf);
      std::vector<bool> in(n, false);
      best[0] = 0;
      for (std::size_t step = 0; step < n; ++step) {
        std::size_t u = n;
        for (std::size_t v = 0; v < n; ++v) {
          if (!in[v] && (u == n || best[v] < best[u])) {
            u = v;
          }
        }
        in[u] = true;
        if (u != 0) {
          t.weight[u] = best[u];
          t.max_edge  = std::max(t.max_edge, best[u]);
        }
        for (std::size_t v = 0; v < n; ++v) {
          if (!in[v]) {
            Int const d = distance(t.nodes[u], t.nodes[v]);
            if (d < best[v]) {
              best[v]     = d;
              t.parent[v] = u;
            }
          }
        }
      }
      return t;
    }

  }  // namespace

  Rational Rational::make(Int num, Int den) {
    if (den <= 0 || num < 0) {
      raise(ErrorKind::InvalidArgument, "rational must be non-negative with positive denominator");
    }
    Int const g = std::gcd(num, den);
    return Rational{num / g, den / g};
  }

  std::string to_string(Rational const& q) {
    if (q.den == 1) {
      return std::to_string(q.num);
    }
    return std::to_string(q.num) + "/" + std::to_string(q.den);
  }

  LengthSet lengths(Semigroup const& s, Int element) {
    require_member(s, element);
    std::set<Int> ls;
    for (auto const& z : factorizations(s, element)) {
      ls.insert(z.length());
    }
    return LengthSet{element, {ls.begin(), ls.end()}};
  }

  std::vector<std::vector<Int>> length_sets_up_to(Semigroup const& s,
                                                  Int              bound) {
    if (bound < 0) {
      return {};
    }
    std::vector<std::vector<Int>> out(static_cast<std::size_t>(bound) + 1);
    out[0] = {0};
    auto gens = s.generators();
    for (Int x = 1; x <= bound; ++x) {
      std::set<Int> acc;
      for (Int g : gens) {
        if (g <= x) {
          for (Int l : out[x - g]) {
            acc.insert(l + 1);
          }
        }
      }
      out[x].assign(acc.begin(), acc.end());
    }
    return out;
  }

  Rational elasticity_of(Semigroup const& s, Int element) {
    auto const ls = lengths(s, element).lengths;
    if (ls.front() == 0) {
      return Rational{1, 1};
    }
    return Rational::make(ls.back(), ls.front());
  }

  Rational elasticity(Semigroup const& s) {
    Int const n1 = s.multiplicity();
    Int const np = s.generators().back();
    Rational const rho = Rational::make(np, n1);
    auto const [lo, hi] = length_bounds(s, arith::mul(n1, np));
    if (Rational::make(hi, lo) != rho) {
      raise(ErrorKind::InvariantViolation,
            "elasticity of n_1 n_p disagrees with n_p / n_1");
    }
    return rho;
  }

  std::vector<Int> delta_of(Semigroup const& s, Int element) {
    return differences(lengths(s, element).lengths);
  }

  Int delta_min(Semigroup const& s) {
    if (s.is_whole()) {
      raise(ErrorKind::HalfFactorial, "the Delta set of N is empty");
    }
    Int g = 0;
    for (auto const& rel : minimal_presentation(s)) {
      g = std::gcd(g, rel.lhs.length() - rel.rhs.length());
    }
    return g;
  }

  Int delta_max(Semigroup const& s) {
    if (s.is_whole()) {
      raise(ErrorKind::HalfFactorial, "the Delta set of N is empty");
    }
    Int best = 0;
    for (Int b : betti_elements(s)) {
      auto const d = delta_of(s, b);
      if (!d.empty()) {
        best = std::max(best, d.back());
      }
    }
    return best;
  }

  std::vector<Int> delta_up_to(Semigroup const& s, Int bound) {
    std::set<Int> acc;
    for (auto const& ls : length_sets_up_to(s, bound)) {
      for (Int d : differences(ls)) {
        acc.insert(d);
      }
    }
    return {acc.begin(), acc.end()};
  }

  Int distance(Factorization const& x, Factorization const& y) {
    if (x.coords.size() != y.coords.size()) {
      raise(ErrorKind::DimensionMismatch,
            "factorizations of different dimension");
    }
    Int dx = 0;
    Int dy = 0;
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
      Int const m = std::min(x.coords[i], y.coords[i]);
      dx += x.coords[i] - m;
      dy += y.coords[i] - m;
    }
    return std::max(dx, dy);
  }

  Int catenary_of(Semigroup const& s, Int element) {
    require_member(s, element);
    return spanning_tree(factorizations(s, element)).max_edge;
  }

  std::vector<Factorization> catenary_chain(Semigroup const&     s,
                                            Int                  element,
                                            Factorization const& x,
                                            Factorization const& y) {
    require_member(s, element);
    Tree const t    = spanning_tree(factorizations(s, element));
    auto       find = [&](Factorization const& f) {
      auto it = std::find(t.nodes.begin(), t.nodes.end(), f);
      if (it == t.nodes.end()) {
        raise(ErrorKind::InvalidArgument,
              "not a factorization of " + std::to_string(element));
      }
      return static_cast<std::size_t>(it - t.nodes.begin());
    };
    // Paths to the root, then splice at the lowest common ancestor.
    auto to_root = [&](std::size_t v) {
      std::vector<std::size_t> path{v};
      while (v != 0) {
        v = t.parent[v];
        path.push_back(v);
      }
      return path;
    };
    auto px = to_root(find(x));
    auto py = to_root(find(y));
    while (px.size() >= 2 && py.size() >= 2
           && px[px.size() - 2] == py[py.size() - 2]) {
      px.pop_back();
      py.pop_back();
    }
    std::vector<Factorization> chain;
    for (std::size_t v : px) {
      chain.push_back(t.nodes[v]);
    }
    for (std::size_t i = py.size() - 1; i-- > 0;) {
      chain.push_back(t.nodes[py[i]]);
    }
    return chain;
  }

  Int catenary(Semigroup const& s) {
    Int best = 0;
    for (Int b : betti_elements(s)) {
      best = std::max(best, catenary_of(s, b));
    }
    return best;
  }

  std::vector<Factorization> omega_minimals(Semigroup const& s,
                                            Int              element,
                                            std::size_t      cap) {
    require_member(s, element);
    auto              gens = s.generators();
    std::size_t const p    = gens.size();

    // Each vector is produced once, from the vector obtained by lowering its
    // last nonzero coordinate. Members of Z(s + S) are never expanded: any
    // vector above one is not minimal, and the complement is downward closed
    // so every non-member is still reached.
    struct Item {
      std::vector<Int> z;
      Int              value;
      std::size_t      last;  // index of the last nonzero coordinate
    };
    std::vector<Item>          stack{{std::vector<Int>(p, 0), 0, 0}};
    std::vector<Factorization> minimals;
    std::size_t                generated = 1;
    while (!stack.empty()) {
      Item item = std::move(stack.back());
      stack.pop_back();
      if (s.contains(item.value - element)) {
        bool minimal = true;
        for (std::size_t i = 0; i < p && minimal; ++i) {
          if (item.z[i] > 0 && s.contains(item.value - gens[i] - element)) {
            minimal = false;
          }
        }
        if (minimal) {
          minimals.push_back(Factorization{std::move(item.z)});
        }
        continue;
      }
      for (std::size_t i = item.last; i < p; ++i) {
        if (++generated > cap) {
          raise(ErrorKind::DiagnosticOverflow,
                "omega search exceeded " + std::to_string(cap) + " vectors");
        }
        Item next{item.z, arith::add(item.value, gens[i]), i};
        ++next.z[i];
        stack.push_back(std::move(next));
      }
    }
    std::sort(minimals.begin(), minimals.end());
    return minimals;
  }

  Int omega_of(Semigroup const& s, Int element, std::size_t cap) {
    Int best = 0;
    for (auto const& z : omega_minimals(s, element, cap)) {
      best = std::max(best, z.length());
    }
    return best;
  }

  Int omega(Semigroup const& s, std::size_t cap) {
    Int best = 0;
    for (Int g : s.generators()) {
      best = std::max(best, omega_of(s, g, cap));
    }
    return best;
  }

  InvariantReport invariant_report(Semigroup const& s, std::size_t omega_cap) {
    InvariantReport r;
    r.elasticity = elasticity(s);
    if (!s.is_whole()) {
      r.delta_min = delta_min(s);
      r.delta_max = delta_max(s);
    }
    r.catenary = catenary(s);
    r.omega    = omega(s, omega_cap);
    Int const floor = r.delta_max ? *r.delta_max + 2 : 0;
    if (floor > r.catenary || r.catenary > r.omega) {
      raise(ErrorKind::InvariantViolation,
            "max Delta + 2 <= c <= omega fails: " + std::to_string(floor)
                + ", " + std::to_string(r.catenary) + ", "
                + std::to_string(r.omega));
    }
    return r;
  }

}  // namespace nsgps
