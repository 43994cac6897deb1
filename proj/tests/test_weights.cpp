#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sphclass/errors.hpp"
#include "sphclass/weights.hpp"
#include "types.hpp"

using namespace sphclass;
using namespace sphclass::weights;
using rootsys::Family;

namespace {

// Calls f on every weight of t with coefficients in [0, bound].
template <class F>
void for_each_weight(SimpleType t, int bound, F&& f) {
  IntVector c(t.rank, 0);
  while (true) {
    f(Weight(t, c));
    int i = 0;
    while (i < t.rank && c[i] == bound) c[i++] = 0;
    if (i == t.rank) return;
    ++c[i];
  }
}

}  // namespace

TEST_CASE("weight construction and spelling") {
  const SimpleType a3{Family::A, 3};
  CHECK(Weight(a3, {2, 0, 1}).to_string() == "2w1+w3");
  CHECK(Weight::zero(a3).to_string() == "0");
  CHECK(Weight::fundamental(a3, 2).coeffs == IntVector{0, 1, 0});
  CHECK(Weight(a3, {2, 0, 1}).support() == std::vector<int>{1, 3});
  CHECK_THROWS_AS(Weight(a3, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Weight(a3, {1, -1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Weight({Family::E, 5}, {0, 0, 0, 0, 0}), InvalidRank);
  CHECK_THROWS_AS(Weight::fundamental(a3, 4), std::invalid_argument);
}

TEST_CASE("characteristics") {
  CHECK(is_characteristic(0));
  CHECK(is_characteristic(2));
  CHECK(is_characteristic(97));
  CHECK_FALSE(is_characteristic(1));
  CHECK_FALSE(is_characteristic(4));
  CHECK_FALSE(is_characteristic(-3));
}

TEST_CASE("orbit sizes agree with reflection orbits on small types") {
  for (const auto t : testing_types::simple_types(3)) {
    CAPTURE(t.name());
    for_each_weight(t, 2, [&](const Weight& w) {
      CAPTURE(w.to_string());
      CHECK(weyl_orbit_size(w) == BigInt(oracle::orbit_size(t, w.coeffs)));
    });
  }
}

TEST_CASE("Weyl dimensions agree with Freudenthal multiplicities") {
  for (const auto t : testing_types::simple_types(3)) {
    CAPTURE(t.name());
    for_each_weight(t, 2, [&](const Weight& w) {
      CAPTURE(w.to_string());
      CHECK(weyl_dim(w) == oracle::freudenthal_dim(t, w.coeffs));
    });
  }
  for (const auto t : testing_types::simple_types(6)) {
    for (int i = 1; i <= t.rank; ++i) {
      if (t.rank > 4 && i > 2) break;
      const auto w = Weight::fundamental(t, i);
      CAPTURE(t.name());
      CAPTURE(i);
      CHECK(weyl_dim(w) == oracle::freudenthal_dim(t, w.coeffs));
    }
  }
}

TEST_CASE("the adjoint representation has the dimension of the group") {
  for (const auto t : testing_types::simple_types(8)) {
    CAPTURE(t.name());
    const Weight theta(t, rootsys::root_system(t).highest_root_weight());
    CHECK(weyl_dim(theta) == BigInt(oracle::dim_group(t)));
  }
}

TEST_CASE("Weyl dimension is invariant under diagram automorphisms") {
  for (const auto t : testing_types::simple_types(6)) {
    for (const auto& sigma : rootsys::diagram_automorphisms(t)) {
      for_each_weight(t, 1, [&](const Weight& w) {
        IntVector moved(t.rank);
        for (int i = 0; i < t.rank; ++i) moved[sigma[i]] = w.coeffs[i];
        CHECK(weyl_dim(Weight(t, moved)) == weyl_dim(w));
      });
    }
  }
}

TEST_CASE("p-adic expansion") {
  const SimpleType a1{Family::A, 1};
  const auto e = p_adic_expansion(Weight(a1, {5}), 2);
  REQUIRE(e.pieces.size() == 2);
  CHECK(e.pieces[0].first == 0);
  CHECK(e.pieces[0].second.coeffs == IntVector{1});
  CHECK(e.pieces[1].first == 2);
  CHECK(e.pieces[1].second.coeffs == IntVector{1});
  CHECK_FALSE(e.frobenius_factored);
  CHECK(p_adic_expansion(Weight(a1, {4}), 2).frobenius_factored);
  CHECK(p_adic_expansion(Weight::zero(a1), 3).pieces.empty());
  CHECK_THROWS_AS(p_adic_expansion(Weight(a1, {1}), 0), CharZero);
  CHECK_THROWS_AS(p_adic_expansion(Weight(a1, {1}), 4), std::invalid_argument);
}

TEST_CASE("p-adic expansion reassembles into restricted pieces") {
  for (long long p : {2, 3, 5, 7}) {
    for (const auto t : testing_types::simple_types(3)) {
      for_each_weight(t, 9, [&](const Weight& w) {
        if (t.rank == 3 && w.coeffs[2] > 3) return;
        const auto e = p_adic_expansion(w, p);
        IntVector sum(t.rank, 0);
        long long power = 1;
        int last = 0;
        for (const auto& [i, piece] : e.pieces) {
          for (; last < i; ++last) power *= p;
          CHECK(is_p_restricted(piece, p));
          CHECK_FALSE(piece.is_zero());
          for (int k = 0; k < t.rank; ++k) sum[k] += power * piece.coeffs[k];
        }
        CHECK(sum == w.coeffs);
      });
    }
  }
}

TEST_CASE("dominant enumeration is complete below the orbit cap") {
  for (const auto t : testing_types::simple_types(4)) {
    CAPTURE(t.name());
    const BigInt cap = 40;
    const auto en = enumerate_dominant_weights(t, cap, 3);
    std::set<IntVector> listed;
    for (const auto& w : en.weights()) listed.insert(w.coeffs);
    for (const auto& f : en.families) CHECK(f.orbit_size <= cap);
    for_each_weight(t, 3, [&](const Weight& w) {
      if (w.is_zero()) return;
      const bool small = BigInt(oracle::orbit_size(t, w.coeffs)) <= cap;
      CHECK(listed.count(w.coeffs) == (small ? 1u : 0u));
    });
  }
}

TEST_CASE("orbit of w_i is at most the orbit of w_i + w_j") {
  for (const auto t : testing_types::simple_types(8)) {
    for (int i = 1; i <= t.rank; ++i) {
      for (int j = 1; j <= t.rank; ++j) {
        if (i == j) continue;
        IntVector c(t.rank, 0);
        c[i - 1] = 1;
        const BigInt single = weyl_orbit_size(Weight(t, c));
        c[j - 1] = 1;
        CHECK(single <= weyl_orbit_size(Weight(t, c)));
      }
    }
  }
}
