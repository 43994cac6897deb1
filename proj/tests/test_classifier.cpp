#include <set>

#include "doctest.h"
#include "sphclass/classifier.hpp"
#include "sphclass/groups.hpp"
#include "sphclass/weights.hpp"
#include "types.hpp"

using namespace sphclass;
using namespace sphclass::classifier;
using rootsys::Family;

namespace {

GroupDescriptor g(std::string_view s) { return groups::parse(s); }

// dim G/B for G = SL(v), SO(v), Sp(v), computed test-side.
long long flag_dim(GFamily f, long long v) {
  switch (f) {
    case GFamily::SL: return v * (v - 1) / 2;
    case GFamily::SOOdd: return ((v - 1) / 2) * ((v - 1) / 2);
    case GFamily::SOEven: return (v / 2) * (v / 2 - 1);
    case GFamily::Sp: return (v / 2) * (v / 2);
  }
  return -1;
}

}  // namespace

TEST_CASE("dimension inequality") {
  const auto a = check_eq2(g("Sp(8)"), g("Sp(4)xSp(2)"));
  CHECK_FALSE(a.passes);
  CHECK(a.dim_H == 13);
  CHECK(a.dim_flag_G == 16);
  const auto b = check_eq2(g("SO(8)"), g("G2"));
  CHECK(b.passes);
  CHECK(b.dim_H == 14);
  CHECK(b.dim_flag_G == 12);
  CHECK(check_eq2(g("SL(2)"), g("SL(2)")).passes);
}

TEST_CASE("dimension bound table is the inequality solved for dim V") {
  for (long long d = 1; d <= 400; ++d) {
    for (long long v = 1; v <= 60; ++v) {
      for (GFamily f : {GFamily::SL, GFamily::SOOdd, GFamily::SOEven, GFamily::Sp}) {
        if ((f == GFamily::SOOdd && v % 2 == 0) || ((f == GFamily::SOEven || f == GFamily::Sp) && v % 2 == 1))
          continue;
        CAPTURE(d);
        CAPTURE(v);
        CAPTURE(to_string(f));
        CHECK(dimV_allowed(v, f, d) == (d >= flag_dim(f, v)));
      }
    }
  }
}

TEST_CASE("family groups have the right flag dimension") {
  for (int v = 2; v <= 30; ++v) {
    CHECK(groups::dim_flag(family_group(GFamily::SL, v)) == flag_dim(GFamily::SL, v));
    const auto fam = v % 2 ? GFamily::SOOdd : GFamily::SOEven;
    CHECK(orthogonal_family(v) == fam);
    if (v >= 3) CHECK(groups::dim_flag(family_group(fam, v)) == flag_dim(fam, v));
    if (v % 2 == 0) CHECK(groups::dim_flag(family_group(GFamily::Sp, v)) == flag_dim(GFamily::Sp, v));
  }
}

TEST_CASE("orbit filter on small types") {
  CHECK(lemma6_filter({Family::B, 3}) == std::vector<int>{1, 3});
  CHECK(lemma6_filter({Family::E, 6}).empty());
  CHECK(lemma6_filter({Family::F, 4}).empty());
}

TEST_CASE("orbit filter passes exactly the weights under the bound") {
  for (const auto t : testing_types::simple_types(8)) {
    const long long d = rootsys::dim_group(t);
    std::vector<int> expected;
    for (int i = 1; i <= t.rank; ++i) {
      const long long s = static_cast<long long>(weights::weyl_orbit_size(weights::Weight::fundamental(t, i)));
      // s <= 2 sqrt(d + 1/4) + 1
      if (s <= 1 || (s - 1) * (s - 1) <= 4 * d + 1) expected.push_back(i);
    }
    CAPTURE(t.name());
    CHECK(lemma6_filter(t) == expected);
  }
}

TEST_CASE("irreducible candidates in characteristic 2 include the twisted SL(2)") {
  bool found = false;
  for (const auto& c : enumerate_irreducible_candidates(2, 4)) {
    if (c.H.family == Family::A && c.H.rank == 1 && c.omega.coeffs == rootsys::IntVector{3}) {
      found = true;
      CHECK(c.dimV == 4);
      CHECK(c.family == GFamily::SOEven);
    }
  }
  CHECK(found);
}

TEST_CASE("candidates respect restrictedness and admissibility") {
  for (long long p : {0LL, 2LL, 3LL}) {
    for (const auto& c : enumerate_irreducible_candidates(p, 6)) {
      CAPTURE(c.H.name());
      CAPTURE(c.omega.to_string());
      if (c.verdict == CandidateVerdict::NotSubgroup) continue;
      REQUIRE(c.G.has_value());
      CHECK(groups::dim(*c.G) >= rootsys::dim_group(c.H));
      if (c.verdict == CandidateVerdict::NotSphericalByEq2)
        CHECK_FALSE(check_eq2(*c.G, GroupDescriptor(groups::Factor::type_atom(c.H))).passes);
    }
  }
}

TEST_CASE("orthogonality check for the C4 stabilizer") {
  const auto gs = genstab_rank_check({Family::C, 4}, {{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK(gs.S0.empty());
  CHECK(gs.torus_dim_bound == 1);
}

TEST_CASE("orthogonality check with no generators keeps every simple root") {
  const auto gs = genstab_rank_check({Family::A, 3}, {});
  CHECK(gs.S0.size() == 3);
}

TEST_CASE("audits reproduce") {
  for (const auto& records : {audit_eq4(), audit_grid(), audit_tensor(), audit_sosp2(60), audit_spin7(), audit_g2()}) {
    for (const auto& r : records) {
      CAPTURE(r.claim_id);
      CHECK(r.verdict == report::Status::Reproduced);
    }
  }
}
