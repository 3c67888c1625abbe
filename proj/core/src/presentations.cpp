#include "nsgps/presentations.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace nsgps {

  namespace {

    void descend(std::span<Int const>        gens,
                 std::size_t                 index,
                 Int                         remaining,
                 std::vector<Int>&           coords,
                 std::vector<Factorization>& out) {
      if (index == 0) {
        if (remaining % gens[0] == 0) {
          coords[0] = remaining / gens[0];
          out.push_back(Factorization{coords});
          coords[0] = 0;
        }
        return;
      }
      Int const g = gens[index];
      for (Int k = remaining / g; k >= 0; --k) {
        coords[index] = k;
        descend(gens, index - 1, remaining - k * g, coords, out);
      }
      coords[index] = 0;
    }

    struct UnionFind {
      std::vector<std::size_t> parent;

      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t(0));
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    };

    // Degree reverse lexicographic order with x1 > x2 > ... > xp.
    bool degrevlex_greater(Factorization const& a, Factorization const& b) {
      if (a.length() != b.length()) {
        return a.length() > b.length();
      }
      for (std::size_t i = a.coords.size(); i-- > 0;) {
        if (a.coords[i] != b.coords[i]) {
          return a.coords[i] < b.coords[i];
        }
      }
      return false;
    }

    std::string monomial(std::vector<Int> const& coords) {
      std::string out;
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) {
          continue;
        }
        if (!out.empty()) {
          out += '*';
        }
        out += 'x' + std::to_string(i + 1);
        if (coords[i] != 1) {
          out += '^' + std::to_string(coords[i]);
        }
      }
      return out.empty() ? std::string("1") : out;
    }

  }  // namespace

  Int Factorization::length() const noexcept {
    return std::accumulate(coords.begin(), coords.end(), Int(0));
  }

  Int evaluate(Semigroup const& s, Factorization const& x) {
    auto gens = s.generators();
    if (x.coords.size() != gens.size()) {
      raise(ErrorKind::DimensionMismatch,
            "factorization has " + std::to_string(x.coords.size())
                + " coordinates, semigroup has " + std::to_string(gens.size())
                + " generators");
    }
    Int total = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      total = arith::add(total, arith::mul(x.coords[i], gens[i]));
    }
    return total;
  }

  bool supports_meet(Factorization const& x, Factorization const& y) {
    std::size_t const n = std::min(x.coords.size(), y.coords.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (x.coords[i] != 0 && y.coords[i] != 0) {
        return true;
      }
    }
    return false;
  }

  std::vector<Factorization> factorizations(Semigroup const& s, Int element) {
    std::vector<Factorization> out;
    if (element < 0 || !s.contains(element)) {
      return out;
    }
    auto             gens = s.generators();
    std::vector<Int> coords(gens.size(), 0);
    descend(gens, gens.size() - 1, element, coords, out);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }

  std::vector<std::vector<Factorization>>
  r_classes_of(std::vector<Factorization> set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    UnionFind uf(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        if (supports_meet(set[i], set[j])) {
          uf.unite(i, j);
        }
      }
    }
    // Roots are the least index of each component, so visiting in order gives
    // classes sorted by least member with ascending contents.
    std::vector<std::vector<Factorization>> classes;
    std::vector<std::size_t>                slot(set.size(), set.size());
    for (std::size_t i = 0; i < set.size(); ++i) {
      std::size_t const root = uf.find(i);
      if (slot[root] == set.size()) {
        slot[root] = classes.size();
        classes.emplace_back();
      }
      classes[slot[root]].push_back(set[i]);
    }
    return classes;
  }

  std::vector<std::vector<Factorization>> r_classes(Semigroup const& s,
                                                    Int              element) {
    if (!s.contains(element)) {
      raise(ErrorKind::NotMember,
            std::to_string(element) + " is not in the semigroup");
    }
    return r_classes_of(factorizations(s, element));
  }

  std::vector<Int> betti_elements(Semigroup const& s) {
    auto gens = s.generators();
    if (gens.size() < 2) {
      return {};
    }
    std::set<Int> candidates;
    for (Int w : s.apery(gens[0]).residues) {
      for (std::size_t i = 1; i < gens.size(); ++i) {
        candidates.insert(arith::add(gens[i], w));
      }
    }
    std::vector<Int> out;
    for (Int b : candidates) {
      if (r_classes(s, b).size() >= 2) {
        out.push_back(b);
      }
    }
    return out;
  }

  std::vector<PresentationRelation> minimal_presentation(Semigroup const& s) {
    std::vector<PresentationRelation> out;
    for (Int b : betti_elements(s)) {
      auto classes = r_classes(s, b);
      // classes[0] holds the least factorization overall.
      Factorization const& root = classes[0].front();
      for (std::size_t k = 1; k < classes.size(); ++k) {
        Factorization const& rep = classes[k].front();
        if (degrevlex_greater(root, rep)) {
          out.push_back({root, rep, b});
        } else {
          out.push_back({rep, root, b});
        }
      }
    }
    return out;
  }

  bool kernel_reachability_check(Semigroup const&                      s,
                                 std::span<PresentationRelation const> relations,
                                 Int                                   element) {
    if (!s.contains(element)) {
      raise(ErrorKind::NotMember,
            std::to_string(element) + " is not in the semigroup");
    }
    auto z = factorizations(s, element);
    if (z.size() <= 1) {
      return true;
    }
    std::set<Factorization>   seen{z.front()};
    std::queue<Factorization> queue;
    queue.push(z.front());
    auto try_move = [&](Factorization const& at, Factorization const& from,
                        Factorization const& to) {
      if (from.coords.size() != at.coords.size()
          || to.coords.size() != at.coords.size()) {
        raise(ErrorKind::DimensionMismatch, "relation dimension differs");
      }
      Factorization next = at;
      for (std::size_t i = 0; i < at.coords.size(); ++i) {
        if (at.coords[i] < from.coords[i]) {
          return;
        }
        next.coords[i] += to.coords[i] - from.coords[i];
      }
      if (seen.insert(next).second) {
        queue.push(std::move(next));
      }
    };
    while (!queue.empty()) {
      Factorization at = queue.front();
      queue.pop();
      for (auto const& rel : relations) {
        try_move(at, rel.lhs, rel.rhs);
        try_move(at, rel.rhs, rel.lhs);
      }
    }
    return seen.size() == z.size();
  }

  std::string binomial_text(PresentationRelation const& relation) {
    return monomial(relation.lhs.coords) + " - " + monomial(relation.rhs.coords);
  }

  std::vector<std::string> binomials_text(Semigroup const& s) {
    std::vector<std::string> out;
    for (auto const& rel : minimal_presentation(s)) {
      out.push_back(binomial_text(rel));
    }
    return out;
  }

}  // namespace nsgps
