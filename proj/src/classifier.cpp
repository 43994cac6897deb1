#include "sphclass/classifier.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "sphclass/errors.hpp"

namespace sphclass::classifier {

namespace {

using groups::Factor;
using groups::FactorKind;
using rootsys::Family;
using rootsys::IntVector;

std::string str(long long v) { return std::to_string(v); }
std::string str(const BigInt& v) { return v.str(); }

std::string join_ints(const std::vector<int>& xs, const char* prefix = "w") {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += ",";
    out += prefix + std::to_string(x);
  }
  return out.empty() ? "-" : out;
}

// ---- admissibility data -------------------------------------------------

enum class Form { None, Orthogonal, Symplectic };

struct ModuleData {
  Form odd_form = Form::None;       // invariant form when p != 2
  bool orthogonal_at_2 = false;     // a nondegenerate quadratic form survives at p = 2
  std::optional<int> dim_at_2;      // irreducible dimension at p = 2 when below the Weyl dimension
  bool excluded_at_2 = false;       // factors through another row at p = 2
  bool excluded_at_3 = false;       // factors through another row at p = 3
};

// Recorded for exactly the rows of the irreducible candidate table; weights are
// assumed reduced modulo diagram automorphisms.
std::optional<ModuleData> module_data(const Weight& w) {
  const auto& c = w.coeffs;
  const SimpleType t = w.type;
  const auto only = [&](int i, std::int64_t v) {
    for (int k = 0; k < t.rank; ++k)
      if (c[k] != (k == i - 1 ? v : 0)) return false;
    return true;
  };
  switch (t.family) {
    case Family::A:
      if (only(1, 1)) return ModuleData{};  // SL(n) itself; the form is not recorded
      if (t.rank == 1 && only(1, 2)) return ModuleData{Form::Orthogonal};
      if (t.rank == 1 && only(1, 3)) return ModuleData{Form::Symplectic};
      if (t.rank == 3 && only(2, 1)) return ModuleData{Form::Orthogonal, true};
      if (t.rank == 4 && only(2, 1)) return ModuleData{};
      break;
    case Family::B:
      // B_n w1 at p = 2 is not the natural module of SO(2n+1).
      if (only(1, 1)) return ModuleData{Form::Orthogonal, false, std::nullopt, true};
      if (t.rank == 3 && only(3, 1)) return ModuleData{Form::Orthogonal, true};
      break;
    case Family::C:
      if (only(1, 1)) return ModuleData{Form::Symplectic};
      if (t.rank == 2 && only(2, 1)) return ModuleData{Form::Orthogonal, false, std::nullopt, true};
      if (t.rank == 3 && only(3, 1)) return ModuleData{Form::Symplectic, false, std::nullopt, true};
      break;
    case Family::D:
      if (only(1, 1)) return ModuleData{Form::Orthogonal, true};
      break;
    case Family::G:
      if (only(1, 1)) return ModuleData{Form::Orthogonal, false, 6};
      if (only(2, 1)) return ModuleData{Form::Orthogonal, false, std::nullopt, false, true};
      break;
    default: break;
  }
  return std::nullopt;
}

bool is_selfdual(const Weight& w) {
  const auto tau = rootsys::opposition_involution(w.type);
  for (int i = 0; i < w.type.rank; ++i)
    if (w.coeffs[i] != w.coeffs[tau[i]]) return false;
  return true;
}

Weight reduce_by_automorphisms(const Weight& w) {
  Weight best = w;
  for (const auto& sigma : rootsys::diagram_automorphisms(w.type)) {
    IntVector c(w.type.rank, 0);
    for (int i = 0; i < w.type.rank; ++i) c[sigma[i]] = w.coeffs[i];
    if (c > best.coeffs) best.coeffs = c;
  }
  return best;
}

PClass pclass_of(long long p) { return p == 2 || p == 3 ? static_cast<PClass>(p) : kGenericP; }

// The row exists at p: p-restricted and not factoring through another row.
bool row_present(const Weight& w, const ModuleData& data, long long p) {
  if (!weights::is_p_restricted(w, p)) return false;
  if (p == 2 && data.excluded_at_2) return false;
  if (p == 3 && data.excluded_at_3) return false;
  return true;
}

int module_dim(const Weight& w, const ModuleData& data, long long p) {
  if (p == 2 && data.dim_at_2) return *data.dim_at_2;
  return static_cast<int>(weights::weyl_dim(w));
}

bool admissible(GFamily f, const Weight& w, const ModuleData& data, long long p, int dimV) {
  switch (f) {
    case GFamily::SL: return true;
    case GFamily::SOOdd:
    case GFamily::SOEven:
      if (orthogonal_family(dimV) != f) return false;
      return p == 2 ? data.orthogonal_at_2 : data.odd_form == Form::Orthogonal;
    case GFamily::Sp:
      if (dimV % 2 != 0) return false;
      // At p = 2 every selfdual irreducible module is symplectic.
      if (p == 2) return data.odd_form != Form::None && is_selfdual(w);
      return data.odd_form == Form::Symplectic;
  }
  return false;
}

CandidatePair evaluate(const Weight& w, const ModuleData& data, GFamily f, long long p) {
  CandidatePair c{w.type, w, f, pclass_of(p)};
  c.dimV = module_dim(w, data, p);
  if (!admissible(f, w, data, p, c.dimV)) {
    c.verdict = CandidateVerdict::NotSubgroup;
    return c;
  }
  c.G = family_group(f, c.dimV);
  const int dim_H = rootsys::dim_group(w.type);
  if (groups::dim(*c.G) == dim_H) c.verdict = CandidateVerdict::EqualsG;
  else if (!dimV_allowed(c.dimV, f, dim_H)) c.verdict = CandidateVerdict::NotSphericalByEq2;
  else c.verdict = CandidateVerdict::SphericalCandidate;
  return c;
}

std::vector<SimpleType> types_up_to(int max_rank) {
  std::vector<SimpleType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({Family::B, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::C, r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({Family::D, r});
  for (int r = 6; r <= std::min(8, max_rank); ++r) out.push_back({Family::E, r});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

const GFamily kFamilies[] = {GFamily::SL, GFamily::SOOdd, GFamily::SOEven, GFamily::Sp};
const PClass kClasses[] = {kGenericP, 2, 3};

std::string class_label(const std::vector<PClass>& cls) {
  const bool g = std::count(cls.begin(), cls.end(), kGenericP) > 0;
  const bool two = std::count(cls.begin(), cls.end(), 2) > 0;
  const bool three = std::count(cls.begin(), cls.end(), 3) > 0;
  if (g && two && three) return "";
  if (g && two) return "p!=3";
  if (g && three) return "p!=2";
  if (g) return "p!=2,3";
  if (two && three) return "p=2,3";
  if (two) return "p=2";
  if (three) return "p=3";
  return "never";
}

struct RowSpec {
  std::string label;
  std::vector<Weight> samples;
};

std::vector<RowSpec> grid_rows() {
  auto fund = [](Family f, int r, int i, std::int64_t a = 1) {
    Weight w = Weight::zero({f, r});
    w.coeffs[i - 1] = a;
    return w;
  };
  auto family = [&](Family f, int lo) {
    std::vector<Weight> out;
    for (int r = lo; r <= 8; ++r) out.push_back(fund(f, r, 1));
    return out;
  };
  return {
      {"A_n-1 w1", family(Family::A, 1)},
      {"B_n w1", family(Family::B, 3)},
      {"C_n w1", family(Family::C, 2)},
      {"D_n w1", family(Family::D, 4)},
      {"A1 2w1", {fund(Family::A, 1, 1, 2)}},
      {"A1 3w1", {fund(Family::A, 1, 1, 3)}},
      {"A3 w2", {fund(Family::A, 3, 2)}},
      {"A4 w2", {fund(Family::A, 4, 2)}},
      {"B3 w3", {fund(Family::B, 3, 3)}},
      {"C2 w2", {fund(Family::C, 2, 2)}},
      {"C3 w3", {fund(Family::C, 3, 3)}},
      {"G2 w1", {fund(Family::G, 2, 1)}},
      {"G2 w2", {fund(Family::G, 2, 2)}},
  };
}

// Combines per-class verdicts of one column into a grid symbol.
std::string combine(const std::vector<std::pair<PClass, CandidateVerdict>>& cells,
                    const std::vector<PClass>& row_classes) {
  std::vector<PClass> incl;
  std::set<std::string> kinds;
  for (const auto& [cls, v] : cells) {
    switch (v) {
      case CandidateVerdict::NotSubgroup: break;
      case CandidateVerdict::EqualsG: kinds.insert("="); break;
      case CandidateVerdict::NotSphericalByEq2: kinds.insert("x"); break;
      case CandidateVerdict::SphericalCandidate:
        kinds.insert("<");
        incl.push_back(cls);
        break;
    }
  }
  if (kinds.empty()) return "-";
  if (kinds.size() > 1) {
    std::string mixed;
    for (const auto& k : kinds) mixed += k;
    return "mixed(" + mixed + ")";
  }
  const std::string k = *kinds.begin();
  if (k != "<" || incl == row_classes) return k;
  return "<[" + class_label(incl) + "]";
}

std::string grid_family_index(GFamily f) {
  return f == GFamily::SL ? "SL" : f == GFamily::Sp ? "Sp" : "SO";
}

}  // namespace

Eq2Result check_eq2(const GroupDescriptor& G, const GroupDescriptor& H) {
  Eq2Result r;
  r.dim_H = groups::dim(H);
  r.dim_flag_G = groups::dim_flag(G);
  r.passes = r.dim_H >= r.dim_flag_G;
  return r;
}

std::string to_string(GFamily f) {
  switch (f) {
    case GFamily::SL: return "SL";
    case GFamily::SOOdd: return "SO_odd";
    case GFamily::SOEven: return "SO_even";
    case GFamily::Sp: return "Sp";
  }
  return "?";
}

GroupDescriptor family_group(GFamily f, int dimV) {
  switch (f) {
    case GFamily::SL: return GroupDescriptor(Factor::classical(FactorKind::SL, dimV));
    case GFamily::SOOdd:
    case GFamily::SOEven: return GroupDescriptor(Factor::classical(FactorKind::SO, dimV));
    case GFamily::Sp: return GroupDescriptor(Factor::classical(FactorKind::Sp, dimV));
  }
  throw std::logic_error("unknown family");
}

std::optional<GFamily> orthogonal_family(int dimV) {
  if (dimV < 1) return std::nullopt;
  return dimV % 2 ? GFamily::SOOdd : GFamily::SOEven;
}

bool dimV_allowed(long long v, GFamily family, long long d) {
  switch (family) {
    case GFamily::SL: return (2 * v - 1) * (2 * v - 1) <= 8 * d + 1;
    case GFamily::SOOdd: return (v - 1) * (v - 1) <= 4 * d;
    case GFamily::SOEven: return (v - 1) * (v - 1) <= 4 * d + 1;
    case GFamily::Sp: return v * v <= 4 * d;
  }
  return false;
}

std::vector<int> lemma6_filter(SimpleType H) {
  const BigInt bound = 4 * BigInt(rootsys::dim_group(H)) + 1;
  std::vector<int> out;
  for (int i = 1; i <= H.rank; ++i) {
    const BigInt s = weights::weyl_orbit_size(Weight::fundamental(H, i));
    if ((s - 1) * (s - 1) <= bound) out.push_back(i);
  }
  return out;
}

std::vector<Table4Row> reproduce_table4(int max_rank) {
  if (max_rank < 1) throw std::invalid_argument("max_rank must be positive");
  std::vector<Table4Row> out;
  for (SimpleType t : types_up_to(max_rank)) out.push_back({t, lemma6_filter(t)});
  return out;
}

std::vector<int> table4_expected(SimpleType t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
      if (n <= 4) {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i + 1;
        return all;
      }
      return {1, n};
    case Family::B:
      if (n == 2) return {1, 2};
      if (n == 3) return {1, 3};
      return {1};
    case Family::C:
      if (n == 2) return {1, 2};
      if (n == 3) return {1, 3};
      return {1};
    case Family::D:
      if (n == 3) return {1, 2, 3};
      if (n == 4) return {1, 3, 4};
      return {1};
    case Family::G: return {1, 2};
    default: return {};
  }
}

std::string to_string(CandidateVerdict v) {
  switch (v) {
    case CandidateVerdict::EqualsG: return "equals_G";
    case CandidateVerdict::NotSubgroup: return "not_subgroup";
    case CandidateVerdict::NotSphericalByEq2: return "not_spherical_by_eq2";
    case CandidateVerdict::SphericalCandidate: return "spherical_candidate";
  }
  return "?";
}

std::vector<CandidatePair> enumerate_irreducible_candidates(long long p, int max_rank) {
  if (!weights::is_characteristic(p)) throw std::invalid_argument("characteristic must be 0 or prime");
  std::vector<Weight> pool;
  for (const auto& row : reproduce_table4(max_rank)) {
    for (int i : row.weights) {
      Weight w = reduce_by_automorphisms(Weight::fundamental(row.type, i));
      if (std::find(pool.begin(), pool.end(), w) == pool.end()) pool.push_back(w);
    }
  }
  const SimpleType a1{Family::A, 1};
  pool.push_back(Weight(a1, {2}));
  pool.push_back(Weight(a1, {3}));

  std::vector<CandidatePair> out;
  for (const Weight& w : pool) {
    const auto data = module_data(w);
    if (!data || !row_present(w, *data, p)) continue;
    for (GFamily f : kFamilies) {
      const int dimV = module_dim(w, *data, p);
      if (f == GFamily::SOOdd || f == GFamily::SOEven) {
        if (orthogonal_family(dimV) != f) continue;
      }
      out.push_back(evaluate(w, *data, f, p));
    }
  }
  if (p > 0) {
    // Frobenius-twisted tensor product: highest weight (p+1)w1 on SL(2).
    Weight w(a1, {p + 1});
    CandidatePair c{a1, w, GFamily::SOEven, pclass_of(p)};
    c.dimV = 1;
    for (const auto& [i, piece] : weights::p_adic_expansion(w, p).pieces)
      c.dimV *= static_cast<int>(weights::weyl_dim(piece));
    c.G = family_group(GFamily::SOEven, c.dimV);
    c.verdict = check_eq2(*c.G, GroupDescriptor(Factor::twisted_sl2(static_cast<int>(p)))).passes
                    ? CandidateVerdict::SphericalCandidate
                    : CandidateVerdict::NotSphericalByEq2;
    out.push_back(c);
  }
  return out;
}

std::vector<GridRow> compute_grid() {
  std::vector<GridRow> out;
  for (const auto& spec : grid_rows()) {
    GridRow row{spec.label, "", {}, {}, {}};
    std::optional<std::string> h_cond;
    std::array<std::optional<std::string>, 3> cols;
    bool uniform = true;
    for (const Weight& sample : spec.samples) {
      const ModuleData data = *module_data(sample);
      std::vector<PClass> present;
      for (PClass cls : kClasses)
        if (row_present(sample, data, cls)) present.push_back(cls);
      const std::string cond = class_label(present);
      if (h_cond && *h_cond != cond) uniform = false;
      h_cond = cond;

      std::array<std::vector<std::pair<PClass, CandidateVerdict>>, 3> cells;
      for (PClass cls : present) {
        const int dimV = module_dim(sample, data, cls);
        for (GFamily f : kFamilies) {
          if ((f == GFamily::SOOdd || f == GFamily::SOEven) && orthogonal_family(dimV) != f) continue;
          const int col = f == GFamily::SL ? 0 : f == GFamily::Sp ? 2 : 1;
          cells[col].emplace_back(cls, evaluate(sample, data, f, cls).verdict);
        }
      }
      for (int col = 0; col < 3; ++col) {
        const std::string sym = combine(cells[col], present);
        if (cols[col] && *cols[col] != sym) uniform = false;
        cols[col] = sym;
      }
    }
    row.h_cond = h_cond.value_or("");
    row.sl.symbol = uniform ? *cols[0] : "non-uniform";
    row.so.symbol = uniform ? *cols[1] : "non-uniform";
    row.sp.symbol = uniform ? *cols[2] : "non-uniform";
    out.push_back(row);
  }
  return out;
}

std::vector<GridRow> expected_grid() {
  auto row = [](std::string label, std::string cond, std::string sl, std::string so, std::string sp) {
    return GridRow{std::move(label), std::move(cond), {std::move(sl)}, {std::move(so)}, {std::move(sp)}};
  };
  return {
      row("A_n-1 w1", "", "=", "-", "-"),
      row("B_n w1", "p!=2", "<", "=", "-"),
      row("C_n w1", "", "<", "-", "="),
      row("D_n w1", "", "<", "=", "<[p=2]"),
      row("A1 2w1", "p!=2", "<", "=", "-"),
      row("A1 3w1", "p!=2,3", "x", "-", "x"),
      row("A3 w2", "", "<", "=", "<[p=2]"),
      row("A4 w2", "", "x", "-", "-"),
      row("B3 w3", "", "x", "<", "<[p=2]"),
      row("C2 w2", "p!=2", "<", "=", "-"),
      row("C3 w3", "p!=2", "x", "-", "x"),
      row("G2 w1", "", "x", "<[p!=2]", "<[p=2]"),
      row("G2 w2", "p!=3", "x", "x", "x"),
  };
}

std::vector<CandidatePair> needs_char_p_data(long long p, int max_rank) {
  if (!weights::is_characteristic(p)) throw std::invalid_argument("characteristic must be 0 or prime");
  std::vector<CandidatePair> out;
  std::vector<Weight> seen;
  for (const auto& row : reproduce_table4(max_rank)) {
    const int dim_H = rootsys::dim_group(row.type);
    const BigInt orbit_bound = 4 * BigInt(dim_H) + 1;
    const auto& pool = row.weights;
    // Dominant combinations of the surviving fundamental weights, coefficients 1..3.
    const int k = static_cast<int>(pool.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::vector<int> support;
      for (int b = 0; b < k; ++b)
        if (mask & (1 << b)) support.push_back(pool[b]);
      std::vector<int> digits(support.size(), 1);
      while (true) {
        Weight w = Weight::zero(row.type);
        for (std::size_t s = 0; s < support.size(); ++s) w.coeffs[support[s] - 1] = digits[s];
        w = reduce_by_automorphisms(w);
        const bool fundamental = support.size() == 1 && digits[0] == 1;
        const bool listed = row.type == SimpleType{Family::A, 1} && (digits[0] == 2 || digits[0] == 3);
        if (!fundamental && !listed && weights::is_p_restricted(w, p) &&
            std::find(seen.begin(), seen.end(), w) == seen.end()) {
          seen.push_back(w);
          const BigInt s = weights::weyl_orbit_size(w);
          if ((s - 1) * (s - 1) <= orbit_bound) {
            const BigInt wd = weights::weyl_dim(w);
            for (GFamily f : kFamilies) {
              if (wd > 100000) break;
              const int dimV = static_cast<int>(wd);
              if ((f == GFamily::SOOdd || f == GFamily::SOEven) && orthogonal_family(dimV) != f) continue;
              if (dimV_allowed(dimV, f, dim_H)) {
                CandidatePair c{row.type, w, f, pclass_of(p), dimV, CandidateVerdict::SphericalCandidate,
                                family_group(f, dimV)};
                out.push_back(c);
              }
            }
          }
        }
        std::size_t i = 0;
        while (i < digits.size() && digits[i] == 3) digits[i++] = 1;
        if (i == digits.size()) break;
        ++digits[i];
      }
    }
  }
  return out;
}

std::vector<TensorFamilyResult> tensor_sweep(int sweep) {
  std::vector<TensorFamilyResult> out;
  auto g = [](FactorKind k, int n) { return GroupDescriptor(Factor::classical(k, n)); };
  auto prod = [](FactorKind a, int m, FactorKind b, int n) {
    GroupDescriptor d;
    d.factors = {Factor::classical(a, m), Factor::classical(b, n)};
    d.joins = {groups::Join::Tensor};
    return d;
  };
  auto add = [&](const std::string& fam, int m, int n, const GroupDescriptor& H, const GroupDescriptor& G,
                 bool survivor) {
    out.push_back({fam, m, n, check_eq2(G, H).passes, survivor});
  };
  for (int m = 2; m <= sweep; ++m) {
    for (int n = 2; n <= m; ++n) {
      add("SL(m)(x)SL(n)<SL(mn)", m, n, prod(FactorKind::SL, m, FactorKind::SL, n), g(FactorKind::SL, m * n),
          m == 2 && n == 2);
      add("SO(m)(x)SO(n)<SO(mn)", m, n, prod(FactorKind::SO, m, FactorKind::SO, n), g(FactorKind::SO, m * n),
          m == 2 && n == 2);
      if (m % 2 == 0 && n % 2 == 0)
        add("Sp(m)(x)Sp(n)<SO(mn)", m, n, prod(FactorKind::Sp, m, FactorKind::Sp, n), g(FactorKind::SO, m * n),
            n == 2 && (m == 2 || m == 4));
    }
  }
  for (int m = 2; m <= sweep; m += 2)
    for (int n = 2; n <= sweep; ++n)
      add("Sp(m)(x)SO(n)<Sp(mn)", m, n, prod(FactorKind::Sp, m, FactorKind::SO, n), g(FactorKind::Sp, m * n),
          m == 2 && n == 2);
  return out;
}

std::vector<IdentityFailure> sosp2_identity_failures(int n_max) {
  std::vector<IdentityFailure> out;
  auto so = [](int k) { return Factor::classical(FactorKind::SO, k); };
  auto sp = [](int k) { return Factor::classical(FactorKind::Sp, 2 * k); };
  for (int n = 2; n <= n_max; ++n) {
    for (int m = 1; 2 * m <= n; ++m) {
      // Orthogonal: flag(SO(n)) + borel(SO(n-2m)) - dim SO(n-m) = dim SO(m).
      const Factor a = so(n), b = so(n - 2 * m), c = so(n - m), d = so(m);
      const long long lhs2 = (a.dim() - a.rank()) + (b.dim() + b.rank()) - 2LL * c.dim();
      const long long literal_so = 2LL * d.dim();
      if (lhs2 != static_cast<long long>(m) * (m - 1) || literal_so != lhs2) out.push_back({'O', n, m});
      // Symplectic: flag(Sp(2n)) + borel(Sp(2n-4m)) - dim Sp(2n-2m) = dim SO(2m).
      const Factor e = sp(n), f = sp(n - 2 * m), h = sp(n - m);
      const long long lhs = (e.dim() - e.rank()) / 2 + (f.dim() + f.rank()) / 2 - h.dim();
      const long long nn = n, mm = m;
      const long long literal = nn * nn + (nn - 2 * mm) * (nn - 2 * mm + 1) - (nn - mm) * (2 * nn - 2 * mm + 1);
      if (lhs != mm * (2 * mm - 1) || literal != lhs || so(2 * m).dim() != lhs) out.push_back({'S', n, m});
    }
  }
  return out;
}

GenStab genstab_rank_check(SimpleType t, const std::vector<IntVector>& generators) {
  rootsys::validate(t);
  GenStab out;
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != t.rank) throw std::invalid_argument("generator length mismatch");
  }
  // <chi, alpha_i^vee> is the i-th fundamental coordinate of chi.
  for (int i = 0; i < t.rank; ++i) {
    bool orth = true;
    for (const auto& g : generators) orth = orth && g[i] == 0;
    if (orth) out.S0.push_back(i + 1);
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : generators) rows.emplace_back(g.begin(), g.end());
  int rank = 0;
  for (int col = 0; col < t.rank && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) pivot = r;
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / rows[rank][col];
      for (int k = col; k < t.rank; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  out.torus_dim_bound = t.rank - rank;
  return out;
}

// ---- audits ------------------------------------------------------------

std::vector<report::Record> audit_eq4() {
  std::vector<report::Record> out;
  for (const auto& row : reproduce_table4(8)) {
    const auto expected = table4_expected(row.type);
    out.push_back(report::make("eq4." + row.type.name(), "orbit-filter/" + row.type.name(),
                               {{"computed", join_ints(row.weights)}, {"expected", join_ints(expected)}},
                               row.weights == expected));
  }
  // Families stabilize: A_n -> {w1, wn}, B_n, C_n -> {w1} (n >= 4), D_n -> {w1} (n >= 5).
  const std::pair<Family, int> stable[] = {{Family::A, 5}, {Family::B, 4}, {Family::C, 4}, {Family::D, 5}};
  for (const auto& [fam, lo] : stable) {
    bool ok = true;
    std::string first_bad = "-";
    for (int n = lo; n <= 30 && ok; ++n) {
      const SimpleType t{fam, n};
      if (lemma6_filter(t) != table4_expected(t)) {
        ok = false;
        first_bad = t.name();
      }
    }
    const std::string name = std::string(1, static_cast<char>(fam));
    out.push_back(report::make("eq4.stable." + name, "orbit-filter/" + name + "_n",
                               {{"ranks", str(lo) + ".." + "30"}, {"first_divergence", first_bad}}, ok));
  }
  report::sort_canonical(out);
  return out;
}

std::vector<report::Record> audit_grid() {
  std::vector<report::Record> out;
  const auto got = compute_grid();
  const auto want = expected_grid();
  for (std::size_t i = 0; i < want.size(); ++i) {
    const auto& g = got.at(i);
    const auto& w = want[i];
    const char* cols[] = {"SL", "SO", "Sp"};
    const GridCell* gc[] = {&g.sl, &g.so, &g.sp};
    const GridCell* wc[] = {&w.sl, &w.so, &w.sp};
    for (int c = 0; c < 3; ++c) {
      std::string id = "grid.";
      id += (i + 1 < 10 ? "0" : "") + std::to_string(i + 1) + "." + cols[c];
      out.push_back(report::make(id, "irreducible-grid/" + w.label,
                                 {{"computed", gc[c]->symbol},
                                  {"expected", wc[c]->symbol},
                                  {"row_condition", g.h_cond.empty() ? "any" : g.h_cond}},
                                 gc[c]->symbol == wc[c]->symbol && g.h_cond == w.h_cond && g.label == w.label));
    }
  }
  for (long long p : {0LL, 2LL, 3LL, 5LL}) {
    const auto extra = needs_char_p_data(p);
    std::string listed;
    for (const auto& c : extra) listed += (listed.empty() ? "" : ";") + c.H.name() + ":" + c.omega.to_string();
    out.push_back(report::make("grid.needs-char-p-data.p" + str(p), "irreducible-grid/non-fundamental",
                               {{"count", str(static_cast<long long>(extra.size()))},
                                {"weights", listed.empty() ? "-" : listed}},
                               true));
  }
  report::sort_canonical(out);
  return out;
}

std::vector<report::Record> audit_tensor() {
  std::map<std::string, std::pair<int, int>> counts;  // family -> (survivors ok, mismatches)
  std::vector<std::string> survivors;
  std::string first_bad;
  int mismatches = 0;
  for (const auto& r : tensor_sweep(40)) {
    if (r.passes) survivors.push_back(r.family + "@" + str(r.m) + "," + str(r.n));
    if (r.passes != r.expected_survivor) {
      ++mismatches;
      if (first_bad.empty()) first_bad = r.family + "@" + str(r.m) + "," + str(r.n);
    }
  }
  std::string list;
  for (const auto& s : survivors) list += (list.empty() ? "" : ";") + s;
  std::vector<report::Record> out;
  out.push_back(report::make("tensor.survivors", "tensor-products",
                             {{"count", str(static_cast<long long>(survivors.size()))}, {"passing", list}},
                             survivors.size() == 5 && mismatches == 0));
  out.push_back(report::make("tensor.sweep", "tensor-products",
                             {{"bound", "40"},
                              {"mismatches", str(mismatches)},
                              {"first_mismatch", first_bad.empty() ? "-" : first_bad}},
                             mismatches == 0));
  // Spot values used in the surrounding argument.
  GroupDescriptor sp4sp2;
  sp4sp2.factors = {Factor::classical(FactorKind::Sp, 4), Factor::classical(FactorKind::Sp, 2)};
  sp4sp2.joins = {groups::Join::Tensor};
  const auto so8 = check_eq2(GroupDescriptor(Factor::classical(FactorKind::SO, 8)), sp4sp2);
  const auto sp8 = check_eq2(GroupDescriptor(Factor::classical(FactorKind::Sp, 8)), sp4sp2);
  out.push_back(report::make("tensor.sp4sp2.so8", "tensor-products/Sp(4)(x)Sp(2)",
                             {{"dim_H", str(so8.dim_H)}, {"dim_G/B", str(so8.dim_flag_G)}},
                             so8.passes && so8.dim_H == 13 && so8.dim_flag_G == 12));
  out.push_back(report::make("tensor.sp4sp2.sp8", "tensor-products/Sp(4)(x)Sp(2)",
                             {{"dim_H", str(sp8.dim_H)}, {"dim_G/B", str(sp8.dim_flag_G)}},
                             !sp8.passes && sp8.dim_H == 13 && sp8.dim_flag_G == 16));
  report::sort_canonical(out);
  return out;
}

std::vector<report::Record> audit_sosp2(int n_max) {
  const auto fails = sosp2_identity_failures(n_max);
  long long so = 0, sp = 0;
  for (const auto& f : fails) (f.form == 'O' ? so : sp) += 1;
  long long pairs = 0;
  for (int n = 2; n <= n_max; ++n) pairs += n / 2;
  std::vector<report::Record> out;
  out.push_back(report::make("sosp2.orthogonal", "flag-identity/SO",
                             {{"n_max", str(n_max)}, {"pairs", str(pairs)}, {"failures", str(so)}}, so == 0));
  out.push_back(report::make("sosp2.symplectic", "flag-identity/Sp",
                             {{"n_max", str(n_max)}, {"pairs", str(pairs)}, {"failures", str(sp)}}, sp == 0));
  return out;
}

std::vector<report::Record> audit_spin7() {
  std::vector<report::Record> out;
  auto sp = [](int k) { return Factor::classical(FactorKind::Sp, k); };
  for (int n = 5; n <= 7; ++n) {
    GroupDescriptor H;
    H.factors = {Factor::classical(FactorKind::Spin, 7), sp(2 * n - 8)};
    H.joins = {groups::Join::Product};
    const auto r = check_eq2(GroupDescriptor(sp(2 * n)), H);
    out.push_back(report::make("spin7.n" + str(n), "spin7-times-sp",
                               {{"dim_H", str(r.dim_H)}, {"dim_G/B", str(r.dim_flag_G)}, {"eq2", r.passes ? "pass" : "fail"}},
                               !r.passes));
  }
  const int spin7 = Factor::classical(FactorKind::Spin, 7).dim();
  const int so8 = Factor::classical(FactorKind::SO, 8).dim();
  out.push_back(report::make("spin7.n>=8", "spin7-times-sp",
                             {{"dim_Spin(7)", str(spin7)}, {"dim_SO(8)", str(so8)}, {"m", "4"}},
                             spin7 == 21 && so8 == 28 && spin7 < so8));
  report::sort_canonical(out);
  return out;
}

std::vector<report::Record> audit_g2() {
  std::vector<report::Record> out;
  auto sp = [](int k) { return Factor::classical(FactorKind::Sp, k); };
  const Factor g2 = Factor::exceptional({Family::G, 2});
  {
    GroupDescriptor H;
    H.factors = {g2, sp(4)};
    H.joins = {groups::Join::Product};
    const auto r = check_eq2(GroupDescriptor(sp(10)), H);
    out.push_back(report::make("g2.n5", "g2-times-sp",
                               {{"dim_H", str(r.dim_H)}, {"dim_G/B", str(r.dim_flag_G)}, {"eq2", r.passes ? "pass" : "fail"}},
                               !r.passes && r.dim_H == 24 && r.dim_flag_G == 25));
  }
  const int so6 = Factor::classical(FactorKind::SO, 6).dim();
  out.push_back(report::make("g2.n>=6", "g2-times-sp",
                             {{"dim_G2", str(g2.dim())}, {"dim_SO(6)", str(so6)}, {"m", "3"}},
                             g2.dim() == 14 && so6 == 15 && g2.dim() < so6));
  const SimpleType c4{Family::C, 4};
  const auto gs = genstab_rank_check(c4, {{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  out.push_back(report::make("g2.n4.orthogonality", "g2-times-sp/C4",
                             {{"S0", join_ints(gs.S0, "a")}, {"torus_dim_bound", str(gs.torus_dim_bound)}},
                             gs.S0.empty() && gs.torus_dim_bound == 1));
  GroupDescriptor H;
  H.factors = {g2, sp(2)};
  H.joins = {groups::Join::Product};
  const GroupDescriptor G(sp(8));
  const int codim = groups::dim(G) - groups::dim(H);
  const int dim_B = (groups::dim(G) + groups::rank(G)) / 2;
  out.push_back(report::make("g2.n4.dimension", "g2-times-sp/C4",
                             {{"dim_G/H", str(codim)}, {"dim_B", str(dim_B)}, {"orbit_lower_bound", str(dim_B - gs.torus_dim_bound)}},
                             codim == 19 && dim_B - gs.torus_dim_bound >= codim));
  report::sort_canonical(out);
  return out;
}

}  // namespace sphclass::classifier
