#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "sphclass/errors.hpp"
#include "sphclass/rootsys.hpp"
#include "types.hpp"

using namespace sphclass;
using namespace sphclass::rootsys;

TEST_CASE("cartan matrices agree with the Euclidean realisation") {
  for (const auto t : testing_types::simple_types(8)) {
    CAPTURE(t.name());
    const auto expected = oracle::cartan(t);
    const auto actual = cartan_matrix(t);
    REQUIRE(actual.size() == expected.size());
    for (std::size_t i = 0; i < actual.size(); ++i)
      for (std::size_t j = 0; j < actual.size(); ++j) CHECK(actual[i][j] == expected[i][j]);
  }
}

TEST_CASE("G2 uses the Bourbaki convention") {
  CHECK(cartan_matrix({Family::G, 2}) == IntMatrix{{2, -1}, {-3, 2}});
}

TEST_CASE("positive roots match reflection closure") {
  for (const auto t : testing_types::simple_types(8)) {
    CAPTURE(t.name());
    auto expected = oracle::positive_roots(t);
    auto actual = positive_roots(t);
    std::sort(expected.begin(), expected.end());
    auto sorted = actual;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == expected);
    auto height = [](const IntVector& r) { return std::accumulate(r.begin(), r.end(), std::int64_t{0}); };
    CHECK(std::is_sorted(actual.begin(), actual.end(),
                         [&](const IntVector& a, const IntVector& b) { return height(a) < height(b); }));
  }
}

TEST_CASE("group dimensions: closed form, root count and oracle agree") {
  for (const auto t : testing_types::simple_types(8)) {
    CAPTURE(t.name());
    CHECK(dim_group(t) == oracle::dim_group(t));
    CHECK(dim_group_closed_form(t) == oracle::dim_group(t));
  }
}

TEST_CASE("Weyl group orders equal the orbit of rho") {
  for (const auto t : testing_types::simple_types(6)) {
    CAPTURE(t.name());
    CHECK(weyl_order(t) == BigInt(oracle::weyl_order(t)));
  }
}

TEST_CASE("Weyl group orders of E7 and E8 equal the product of the invariant degrees") {
  auto product = [](std::initializer_list<int> degrees) {
    BigInt p = 1;
    for (int d : degrees) p *= d;
    return p;
  };
  CHECK(weyl_order({Family::E, 7}) == product({2, 6, 8, 10, 12, 14, 18}));
  CHECK(weyl_order({Family::E, 8}) == product({2, 8, 12, 14, 18, 20, 24, 30}));
  // The number of positive roots is the sum of (degree - 1).
  CHECK(positive_roots({Family::E, 7}).size() == 1 + 5 + 7 + 9 + 11 + 13 + 17);
  CHECK(positive_roots({Family::E, 8}).size() == 1 + 7 + 11 + 13 + 17 + 19 + 23 + 29);
}

TEST_CASE("symmetrizer is proportional to squared root lengths") {
  for (const auto t : testing_types::simple_types(8)) {
    CAPTURE(t.name());
    const auto g = oracle::gram(t);
    std::int64_t lo = g[0][0];
    for (std::size_t i = 0; i < g.size(); ++i) lo = std::min(lo, g[i][i]);
    const auto& d = root_system(t).symmetrizer();
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(d[i] == g[i][i] / lo);
  }
}

TEST_CASE("highest root is dominant and has the largest height") {
  for (const auto t : testing_types::simple_types(8)) {
    const auto& rs = root_system(t);
    const auto w = rs.highest_root_weight();
    CHECK(std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x >= 0; }));
    const auto& last = rs.positive_roots().back();
    IntVector expected(t.rank, 0);
    for (int i = 0; i < t.rank; ++i)
      for (int j = 0; j < t.rank; ++j) expected[j] += last[i] * rs.cartan()[i][j];
    CHECK(w == expected);
  }
}

TEST_CASE("opposition involution is -w0 on fundamental weights") {
  for (const auto t : testing_types::simple_types(8)) {
    CAPTURE(t.name());
    const auto c = oracle::cartan(t);
    const auto tau = opposition_involution(t);
    for (int i = 0; i < t.rank; ++i) {
      oracle::Vec minus(t.rank, 0);
      minus[i] = -1;
      oracle::Vec expected(t.rank, 0);
      expected[tau[i]] = 1;
      CHECK(oracle::dominant_conjugate(c, minus) == expected);
    }
  }
}

TEST_CASE("diagram automorphisms match a brute-force permutation search") {
  for (const auto t : testing_types::simple_types(7)) {
    CAPTURE(t.name());
    const auto c = oracle::cartan(t);
    std::vector<int> perm(t.rank);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t count = 0;
    do {
      bool ok = true;
      for (int i = 0; i < t.rank && ok; ++i)
        for (int j = 0; j < t.rank && ok; ++j) ok = c[perm[i]][perm[j]] == c[i][j];
      count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(diagram_automorphisms(t).size() == count);
  }
}

TEST_CASE("parabolic orders equal |W| over the orbit of a weight with that stabilizer") {
  for (const auto t : testing_types::simple_types(5)) {
    const auto c = cartan_matrix(t);
    for (int mask = 0; mask < (1 << t.rank); ++mask) {
      std::vector<int> nodes;
      oracle::Vec w(t.rank, 1);
      for (int i = 0; i < t.rank; ++i) {
        if (mask & (1 << i)) {
          nodes.push_back(i);
          w[i] = 0;
        }
      }
      CAPTURE(t.name());
      CAPTURE(mask);
      CHECK(parabolic_order(c, nodes) * BigInt(oracle::orbit_size(t, w)) == weyl_order(t));
    }
  }
}

TEST_CASE("subdiagram components") {
  const auto e8 = cartan_matrix({Family::E, 8});
  CHECK(subdiagram_components(e8, {0, 2, 3, 4}) == std::vector<SimpleType>{{Family::A, 4}});
  CHECK(subdiagram_components(e8, {0, 1}).size() == 2);
  const auto d5 = cartan_matrix({Family::D, 5});
  const auto all = subdiagram_components(d5, {0, 1, 2, 3, 4});
  REQUIRE(all.size() == 1);
  CHECK(all[0].family == Family::D);
  CHECK(all[0].rank == 5);
  CHECK(subdiagram_components(d5, {}).empty());
}

TEST_CASE("type validation") {
  CHECK_THROWS_AS(validate({Family::A, 0}), InvalidRank);
  CHECK_THROWS_AS(validate({Family::D, 2}), NonSimple);
  CHECK_THROWS_AS(validate({Family::E, 5}), InvalidRank);
  CHECK_THROWS_AS(validate({Family::G, 3}), InvalidRank);
  CHECK_THROWS_AS(validate({Family::B, 1}), InvalidRank);
  CHECK_NOTHROW(validate({Family::D, 3}));
  CHECK(canonicalize({Family::D, 3}) == SimpleType{Family::A, 3});
  CHECK(canonicalize({Family::C, 2}) == SimpleType{Family::B, 2});
}

TEST_CASE("simple type names parse back") {
  for (const auto t : testing_types::simple_types(8)) CHECK(SimpleType::parse(t.name()) == t);
  CHECK_THROWS_AS(SimpleType::parse("X3"), ParseError);
  CHECK_THROWS_AS(SimpleType::parse("E9"), InvalidRank);
}
