#include "nsgps/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bitset>
#include <exception>
#include <mutex>
#include <thread>

#include "nsgps/classify.hpp"

namespace nsgps {

  namespace {

    // Elements at or past kTreeWidth are members of every node in the tree;
    // genus g needs conductor + multiplicity <= 3g + 1 < kTreeWidth.
    constexpr std::size_t kTreeWidth = 256;

    // A node of the genus tree. dec[y] counts the unordered pairs {a, y - a}
    // of elements summing to y, so y > 0 is a minimal generator iff dec[y] = 1.
    struct Node {
      std::bitset<kTreeWidth>                  member;
      std::array<std::uint8_t, kTreeWidth>     dec;
      Int                                      conductor    = 0;
      Int                                      multiplicity = 1;
      Int                                      genus        = 0;
    };

    Node root() {
      Node n;
      n.member.set();
      for (std::size_t y = 0; y < kTreeWidth; ++y) {
        n.dec[y] = static_cast<std::uint8_t>(y / 2 + 1);
      }
      return n;
    }

    template <typename Visit>
    void for_each_child(Node const& n, Visit&& visit) {
      Int const lo = std::max<Int>(n.conductor, 1);
      for (Int x = lo; x < lo + n.multiplicity; ++x) {
        if (n.dec[x] != 1) {
          continue;
        }
        Node child = n;
        child.member.reset(x);
        for (std::size_t y = x; y < kTreeWidth; ++y) {
          if (n.member[y - x]) {
            --child.dec[y];
          }
        }
        child.conductor = x + 1;
        child.genus     = n.genus + 1;
        if (x == n.multiplicity) {
          child.multiplicity = x + 1;
        }
        visit(child);
      }
    }

    std::vector<Int> minimal_generators(Node const& n) {
      std::vector<Int> gens;
      Int const        top = std::max<Int>(n.conductor, 1) + n.multiplicity;
      for (Int y = 1; y < top; ++y) {
        if (n.member[y] && n.dec[y] == 1) {
          gens.push_back(y);
        }
      }
      return gens;
    }

    unsigned worker_count(EnumerationOptions const& options) {
      unsigned t = options.threads;
      if (t == 0) {
        t = std::max(1u, std::thread::hardware_concurrency());
      }
      return t;
    }

    void check_genus(Int g, EnumerationOptions const& options) {
      Int const width_cap = static_cast<Int>(kTreeWidth - 2) / 3;
      if (g > options.max_genus || g > width_cap) {
        raise(ErrorKind::ResourceLimit,
              "genus " + std::to_string(g) + " exceeds the configured limit "
                  + std::to_string(std::min(options.max_genus, width_cap)));
      }
    }

    // Splits the tree below depth <gmax> into independent subtrees. Nodes
    // visited while splitting are reported to <on_node>.
    template <typename OnNode>
    std::vector<Node> frontier(Int gmax, std::size_t want, OnNode&& on_node) {
      std::vector<Node> level{root()};
      on_node(level.front());
      while (level.size() < want && !level.empty()
             && level.front().genus < gmax) {
        std::vector<Node> next;
        for (Node const& n : level) {
          for_each_child(n, [&](Node const& c) {
            on_node(c);
            next.push_back(c);
          });
        }
        level = std::move(next);
      }
      return level;
    }

    // Runs <work>(node, worker_index) on each frontier node's subtree, with
    // the frontier node itself already reported.
    template <typename Work>
    void run_parallel(std::vector<Node> const& roots, unsigned threads,
                      Work&& work) {
      std::atomic<std::size_t> next{0};
      std::exception_ptr       failure;
      std::mutex               failure_lock;
      auto                     loop = [&](unsigned worker) {
        try {
          for (std::size_t i = next++; i < roots.size(); i = next++) {
            work(roots[i], worker);
          }
        } catch (...) {
          std::lock_guard lock(failure_lock);
          if (!failure) {
            failure = std::current_exception();
          }
          next = roots.size();
        }
      };
      if (threads <= 1) {
        loop(0);
      } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) {
          pool.emplace_back(loop, w);
        }
      }
      if (failure) {
        std::rethrow_exception(failure);
      }
    }

    template <typename OnNode>
    void descend(Node const& n, Int gmax, OnNode& on_node) {
      if (n.genus >= gmax) {
        return;
      }
      for_each_child(n, [&](Node const& c) {
        on_node(c);
        descend(c, gmax, on_node);
      });
    }

    void check_results(std::size_t count, EnumerationOptions const& options) {
      if (count > options.max_results) {
        raise(ErrorKind::ResourceLimit,
              "more than " + std::to_string(options.max_results)
                  + " semigroups requested");
      }
    }

    void check_frobenius(Int F, EnumerationOptions const& options) {
      if (F > options.max_frobenius) {
        raise(ErrorKind::ResourceLimit,
              "Frobenius number " + std::to_string(F)
                  + " exceeds the configured limit "
                  + std::to_string(options.max_frobenius));
      }
    }

    std::vector<Semigroup> sorted(std::vector<Semigroup> v) {
      std::sort(v.begin(), v.end());
      return v;
    }

    // Members below F are given by <small>; everything above F is a member.
    Semigroup build(std::vector<char> const& small, Int F) {
      std::vector<Int> gens;
      for (Int x = 1; x < static_cast<Int>(small.size()); ++x) {
        if (small[x]) {
          gens.push_back(x);
        }
      }
      for (Int x = F + 1; x <= 2 * F + 1; ++x) {
        gens.push_back(x);
      }
      return from_generators(gens);
    }

    // Depth-first choice of membership for 1, ..., F - 1. A value that is a
    // sum of two chosen elements is forced in; a member x is refused when
    // F - x is already a member, so F never becomes a sum.
    struct FrobeniusSearch {
      Int                        F;
      EnumerationOptions const&  options;
      std::vector<char>          in;
      std::vector<Semigroup>     out;

      bool forced(Int x) const {
        for (Int a = 1; 2 * a <= x; ++a) {
          if (in[a] && in[x - a]) {
            return true;
          }
        }
        return false;
      }

      void run(Int x) {
        if (x == F) {
          out.push_back(build(in, F));
          check_results(out.size(), options);
          return;
        }
        bool const must    = forced(x);
        Int const  mirror  = F - x;
        bool const allowed = 2 * x != F && !(mirror > 0 && mirror < x && in[mirror]);
        if (!must) {
          run(x + 1);
        }
        if (allowed) {
          in[x] = 1;
          run(x + 1);
          in[x] = 0;
        }
      }
    };

    // Decides the elements below F/2; the rest follows from x in S iff
    // F - x not in S (x != F/2). Pruning keeps every sum of two chosen
    // elements a member: sums below F/2 are forced, sums strictly between
    // F/2 and F must avoid F - (a + b) in S, and F/2 is never a sum.
    struct IrreducibleSearch {
      Int                       F;
      EnumerationOptions const& options;
      Int                       half;  // largest x with 2x < F
      std::vector<char>         in;
      std::vector<Semigroup>    out;

      bool forced(Int x) const {
        for (Int a = 1; 2 * a <= x; ++a) {
          if (in[a] && in[x - a]) {
            return true;
          }
        }
        return false;
      }

      bool compatible(Int x) const {
        for (Int a = 1; a <= x; ++a) {
          if (a != x && !in[a]) {
            continue;
          }
          if (2 * (a + x) == F) {
            return false;
          }
          Int const c = F - a - x;
          if (c >= 1 && c <= x && (c == x || in[c])) {
            return false;
          }
        }
        return true;
      }

      void run(Int x) {
        if (x > half) {
          std::vector<char> full(F, 0);
          for (Int y = 1; y < F; ++y) {
            if (2 * y < F) {
              full[y] = in[y];
            } else if (2 * y > F) {
              full[y] = !in[F - y];
            }
          }
          out.push_back(build(full, F));
          check_results(out.size(), options);
          return;
        }
        bool const must = forced(x);
        if (!must) {
          run(x + 1);
        }
        if (compatible(x)) {
          in[x] = 1;
          run(x + 1);
          in[x] = 0;
        }
      }
    };

    // A sequence with gcd 1 is free iff it is {1}, or some entry g leaves
    // the others with gcd d > 1, g lies in <others / d>, and others / d is
    // free. Used past the arrangement-search limit of is_free.
    bool free_by_gluing(std::vector<Int> const& a) {
      if (a.size() == 1) {
        return a[0] == 1;
      }
      for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<Int> rest;
        for (std::size_t j = 0; j < a.size(); ++j) {
          if (j != i) {
            rest.push_back(a[j]);
          }
        }
        Int const d = arith::gcd(rest);
        if (d == 1) {
          continue;
        }
        for (Int& x : rest) {
          x /= d;
        }
        if (in_submonoid(a[i], rest) && free_by_gluing(rest)) {
          return true;
        }
      }
      return false;
    }

  }  // namespace

  std::vector<std::uint64_t> count_by_genus(Int gmax,
                                            EnumerationOptions const& options) {
    if (gmax < 0) {
      raise(ErrorKind::InvalidArgument, "genus must be non-negative");
    }
    check_genus(gmax, options);
    unsigned const             threads = worker_count(options);
    std::vector<std::uint64_t> counts(gmax + 1, 0);
    auto roots = frontier(gmax, 64 * std::size_t(threads),
                          [&](Node const& n) { ++counts[n.genus]; });

    std::vector<std::vector<std::uint64_t>> local(
        threads, std::vector<std::uint64_t>(gmax + 1, 0));
    run_parallel(roots, threads, [&](Node const& r, unsigned w) {
      auto& mine    = local[w];
      auto  on_node = [&](Node const& n) { ++mine[n.genus]; };
      descend(r, gmax, on_node);
    });
    for (auto const& l : local) {
      for (Int g = 0; g <= gmax; ++g) {
        counts[g] += l[g];
      }
    }
    return counts;
  }

  std::vector<Semigroup> with_genus(Int g, EnumerationOptions const& options) {
    if (g < 0) {
      raise(ErrorKind::InvalidArgument, "genus must be non-negative");
    }
    check_genus(g, options);
    unsigned const                             threads = worker_count(options);
    std::vector<std::vector<std::vector<Int>>> found(threads);
    std::vector<std::vector<Int>>              head;
    auto roots = frontier(g, 64 * std::size_t(threads), [&](Node const& n) {
      if (n.genus == g) {
        head.push_back(minimal_generators(n));
      }
    });
    std::atomic<std::size_t> total{head.size()};
    check_results(total, options);
    run_parallel(roots, threads, [&](Node const& r, unsigned w) {
      auto on_node = [&](Node const& n) {
        if (n.genus == g) {
          found[w].push_back(minimal_generators(n));
          check_results(++total, options);
        }
      };
      descend(r, g, on_node);
    });
    std::vector<Semigroup> out;
    out.reserve(total);
    for (auto const& gens : head) {
      out.push_back(from_generators(gens));
    }
    for (auto const& part : found) {
      for (auto const& gens : part) {
        out.push_back(from_generators(gens));
      }
    }
    return sorted(std::move(out));
  }

  std::vector<Semigroup> with_frobenius(Int F, EnumerationOptions const& options) {
    if (F == -1) {
      return {naturals()};
    }
    if (F < 1) {
      return {};
    }
    check_frobenius(F, options);
    FrobeniusSearch search{F, options, std::vector<char>(F, 0), {}};
    search.run(1);
    return sorted(std::move(search.out));
  }

  std::vector<Semigroup> irreducible_with_frobenius(Int F,
                                                    EnumerationOptions const& options) {
    if (F == -1) {
      return {naturals()};
    }
    if (F < 1) {
      return {};
    }
    check_frobenius(F, options);
    IrreducibleSearch search{F, options, (F - 1) / 2, std::vector<char>(F, 0), {}};
    search.run(1);
    return sorted(std::move(search.out));
  }

  std::vector<Semigroup> free_with_frobenius(Int F, EnumerationOptions const& options) {
    // Free semigroups are symmetric, so F is odd (or N).
    if (F != -1 && F % 2 == 0) {
      return {};
    }
    std::vector<Semigroup> out;
    for (auto& s : irreducible_with_frobenius(F, options)) {
      bool const free = s.embedding_dimension() > kMaxFreeSearchGenerators
                            ? free_by_gluing({s.generators().begin(),
                                              s.generators().end()})
                            : is_free(s);
      if (free) {
        out.push_back(std::move(s));
      }
    }
    return out;
  }

}  // namespace nsgps
