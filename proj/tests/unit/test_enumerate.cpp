#include <doctest.h>

#include <algorithm>
#include <set>

#include "nsgps/classify.hpp"
#include "nsgps/enumerate.hpp"
#include "oracles.hpp"
#include "printing.hpp"

using namespace nsgps;
using V = std::vector<Int>;

namespace {
  V vec(std::span<Int const> s) {
    return {s.begin(), s.end()};
  }

  // Semigroups with Frobenius number F as the subsets of [1, F) closed under
  // addition below F, by direct subset enumeration.
  std::size_t count_with_frobenius_by_subsets(Int F) {
    std::size_t count = 0;
    Int const   width = F - 1;
    for (std::uint32_t mask = 0; mask < (1u << width); ++mask) {
      auto in = [&](Int x) {
        return x == 0 || (x > F) || (x > 0 && x < F && (mask >> (x - 1) & 1u));
      };
      bool closed = true;
      for (Int a = 1; a < F && closed; ++a) {
        for (Int b = a; a + b <= F && closed; ++b) {
          closed = !(in(a) && in(b)) || in(a + b);
        }
      }
      count += closed ? 1 : 0;
    }
    return count;
  }
}  // namespace

TEST_CASE("genus census") {
  std::vector<std::uint64_t> const expected{1,    1,    2,    4,    7,     12,    23,
                                            39,   67,   118,  204,  343,   592,   1001,
                                            1693, 2857, 4806, 8045, 13467, 22464, 37396};
  CHECK(count_by_genus(20) == expected);
  CHECK(with_genus(0).size() == 1);
  CHECK(with_genus(0).front().is_whole());
  CHECK(vec(with_genus(1).front().generators()) == V{2, 3});
}

TEST_CASE("census is independent of the thread count") {
  auto const one = count_by_genus(16, {.threads = 1});
  for (unsigned t : {2u, 3u, 8u}) {
    CHECK(count_by_genus(16, {.threads = t}) == one);
  }
  auto a = with_genus(9, {.threads = 1});
  auto b = with_genus(9, {.threads = 4});
  CHECK(a == b);
  CHECK(a.size() == 118);
  CHECK(std::is_sorted(a.begin(), a.end()));
  CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
  for (auto const& s : a) {
    REQUIRE(s.genus() == 9);
  }
}

TEST_CASE("limits raise instead of truncating") {
  CHECK_THROWS_AS(count_by_genus(81), Error);
  CHECK_THROWS_AS(with_frobenius(201), Error);
  CHECK_THROWS_AS(with_genus(12, {.max_results = 10}), Error);
  CHECK_THROWS_AS(count_by_genus(-1), Error);
}

TEST_CASE("Frobenius number 16") {
  auto l = with_frobenius(16);
  CHECK(l.size() == 205);
  std::vector<Semigroup> type2;
  std::copy_if(l.begin(), l.end(), std::back_inserter(type2),
               [](auto const& s) { return type(s) == 2; });
  CHECK(type2.size() == 14);
  std::vector<V> difference;
  std::size_t    pseudo = 0;
  for (auto const& s : type2) {
    if (is_pseudo_symmetric(s)) {
      ++pseudo;
    } else {
      difference.push_back(vec(s.generators()));
    }
  }
  CHECK(pseudo == 7);
  CHECK(difference
        == std::vector<V>{{3, 14, 19},
                          {3, 17, 19},
                          {5, 7, 18},
                          {5, 9, 12},
                          {6, 7, 11},
                          {6, 9, 11, 13},
                          {7, 10, 11, 12, 13}});
}

TEST_CASE("Frobenius conventions") {
  auto n = with_frobenius(-1);
  REQUIRE(n.size() == 1);
  CHECK(n.front().is_whole());
  CHECK(with_frobenius(0).empty());
  CHECK(with_frobenius(-7).empty());
  CHECK(vec(with_frobenius(1).front().generators()) == V{2, 3});
  CHECK(free_with_frobenius(10).empty());
  CHECK(irreducible_with_frobenius(1).size() == 1);
}

TEST_CASE("counts by Frobenius number match subset enumeration") {
  for (Int F = 1; F <= 18; ++F) {
    CAPTURE(F);
    auto l = with_frobenius(F);
    CHECK(l.size() == count_with_frobenius_by_subsets(F));
    CHECK(std::is_sorted(l.begin(), l.end()));
    for (auto const& s : l) {
      REQUIRE(s.frobenius() == F);
    }
  }
}

TEST_CASE("with_frobenius agrees with the genus tree") {
  // Genus is at most F, so the tree up to genus F sees every candidate.
  for (Int F = 1; F <= 13; ++F) {
    std::vector<Semigroup> from_tree;
    for (Int g = (F + 1) / 2; g <= F; ++g) {
      for (auto const& s : with_genus(g)) {
        if (s.frobenius() == F) {
          from_tree.push_back(s);
        }
      }
    }
    std::sort(from_tree.begin(), from_tree.end());
    CHECK(from_tree == with_frobenius(F));
  }
}

TEST_CASE("free and irreducible pairs for odd Frobenius numbers") {
  std::vector<std::pair<std::size_t, std::size_t>> const expected{
      {1, 1},   {1, 1},    {2, 2},    {3, 3},    {2, 3},    {4, 6},    {5, 8},
      {3, 7},   {7, 15},   {8, 20},   {5, 18},   {11, 36},  {11, 44},  {9, 45},
      {14, 83}, {17, 109}, {12, 101}, {18, 174}, {24, 246}, {16, 227}, {27, 420},
      {31, 546}, {21, 498}, {35, 926}, {38, 1182}, {27, 1121}};
  std::vector<std::pair<std::size_t, std::size_t>> got;
  for (Int F = 1; F <= 51; F += 2) {
    got.emplace_back(free_with_frobenius(F).size(), irreducible_with_frobenius(F).size());
  }
  CHECK(got == expected);
}

TEST_CASE("irreducible listings agree with filtering") {
  for (Int F = 1; F <= 20; ++F) {
    CAPTURE(F);
    std::vector<Semigroup> irr;
    std::vector<Semigroup> fr;
    for (auto const& s : with_frobenius(F)) {
      if (is_irreducible(s)) {
        irr.push_back(s);
      }
      if (s.embedding_dimension() > kMaxFreeSearchGenerators) {
        continue;  // past the arrangement search limit
      }
      if (is_free(s)) {
        fr.push_back(s);
      }
    }
    CHECK(irreducible_with_frobenius(F) == irr);
    CHECK(free_with_frobenius(F) == fr);
  }
}

TEST_CASE("irreducible semigroups are maximal for their Frobenius number") {
  for (Int F : {17, 22, 25}) {
    for (auto const& s : irreducible_with_frobenius(F)) {
      REQUIRE(s.frobenius() == F);
      // Adding any gap other than F either changes F or breaks closure.
      for (Int x : s.gaps()) {
        if (x == F) {
          continue;
        }
        auto const& sg = special_gaps(s);
        REQUIRE_FALSE(std::binary_search(sg.begin(), sg.end(), x));
      }
    }
  }
}
