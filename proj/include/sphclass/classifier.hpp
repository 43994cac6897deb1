#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sphclass/groups.hpp"
#include "sphclass/report.hpp"
#include "sphclass/weights.hpp"

namespace sphclass::classifier {

using groups::GroupDescriptor;
using rootsys::SimpleType;
using weights::Weight;

struct Eq2Result {
  bool passes = false;
  int dim_H = 0;
  int dim_flag_G = 0;
};

/// dim H >= dim G/B: necessary for H to be spherical in G.
Eq2Result check_eq2(const GroupDescriptor& G, const GroupDescriptor& H);

enum class GFamily { SL, SOOdd, SOEven, Sp };

std::string to_string(GFamily f);
/// Ambient classical group of the family acting on a space of dimension dimV.
GroupDescriptor family_group(GFamily f, int dimV);
/// Family of the natural module of dimension dimV; nullopt when the parity
/// does not fit (odd dimension for Sp).
std::optional<GFamily> orthogonal_family(int dimV);

/// Largest dim V compatible with dim H >= dim G(V)/B, decided in integers:
///   SL:      (2v-1)^2 <= 8d+1
///   SO odd:  (v-1)^2  <= 4d
///   SO even: (v-1)^2  <= 4d+1
///   Sp:      v^2      <= 4d
bool dimV_allowed(long long dimV, GFamily family, long long dim_H);

/// Fundamental weights w_i (1-based indices) with (|W w_i| - 1)^2 <= 4 dim H + 1.
std::vector<int> lemma6_filter(SimpleType H);

struct Table4Row {
  SimpleType type;
  std::vector<int> weights;
};

/// The orbit filter over every simple type of rank <= max_rank, by family then rank.
std::vector<Table4Row> reproduce_table4(int max_rank);

/// Expected filter output on the stable range, indexed by family and rank.
std::vector<int> table4_expected(SimpleType t);

enum class CandidateVerdict { EqualsG, NotSubgroup, NotSphericalByEq2, SphericalCandidate };

std::string to_string(CandidateVerdict v);

/// Characteristic class used by the grid: 0 stands for every p other than 2 and 3.
using PClass = int;
inline constexpr PClass kGenericP = 0;

struct CandidatePair {
  SimpleType H;
  Weight omega;
  GFamily family;
  PClass p;
  int dimV = 0;
  CandidateVerdict verdict = CandidateVerdict::NotSubgroup;
  /// Ambient group when the module exists.
  std::optional<GroupDescriptor> G;
};

/// Irreducible candidates at characteristic p (0 or prime): the weights passing
/// the orbit filter plus 2w1 and 3w1 on A1, reduced modulo diagram
/// automorphisms, with factoring exclusions applied. Families are sampled for
/// ranks up to `max_rank`.
std::vector<CandidatePair> enumerate_irreducible_candidates(long long p, int max_rank = 8);

/// Symbol of one grid cell: "=", "-", "x", or an inclusion "SO(7)<SL(7)"
/// optionally restricted to characteristic classes "[p=2]", "[p!=2]".
struct GridCell {
  std::string symbol;
};

struct GridRow {
  std::string label;   // e.g. "B_n w1"
  std::string h_cond;  // characteristic restriction of the row, e.g. "p!=2"
  GridCell sl, so, sp;
};

/// The 13-row table of irreducible simple spherical candidates, recomputed.
std::vector<GridRow> compute_grid();
/// The same table as published, used as the audit target.
std::vector<GridRow> expected_grid();

/// Weights that survive every bound but are absent from the published table.
std::vector<CandidatePair> needs_char_p_data(long long p, int max_rank = 8);

struct TensorFamilyResult {
  std::string family;  // "SL(m)(x)SL(n)<SL(mn)", ...
  int m = 0, n = 0;
  bool passes = false;
  bool expected_survivor = false;
};

/// Every admissible tensor instance with 2 <= n <= m <= sweep (and parity /
/// characteristic constraints per family) checked against dim H >= dim G/B.
std::vector<TensorFamilyResult> tensor_sweep(int sweep = 40);

struct IdentityFailure {
  char form;  // 'O' or 'S'
  int n, m;
};

/// Both flag-dimension identities for 1 <= m, 2m <= n <= n_max; returns failures.
std::vector<IdentityFailure> sosp2_identity_failures(int n_max);

struct GenStab {
  std::vector<int> S0;  // 1-based indices of simple roots orthogonal to every generator
  int torus_dim_bound = 0;
};

/// Generators given in the fundamental-weight basis.
GenStab genstab_rank_check(SimpleType t, const std::vector<rootsys::IntVector>& generators);

/// Each audit returns one record per claim; verdict "reproduced" or "diverged".
std::vector<report::Record> audit_eq4();
std::vector<report::Record> audit_grid();
std::vector<report::Record> audit_tensor();
std::vector<report::Record> audit_sosp2(int n_max = 200);
std::vector<report::Record> audit_spin7();
std::vector<report::Record> audit_g2();

}  // namespace sphclass::classifier
