#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sphclass/rootsys.hpp"

namespace sphclass::groups {

using rootsys::SimpleType;

enum class FactorKind {
  SL,           // SL(n)
  SO,           // SO(n)
  Sp,           // Sp(n), n even
  GL,           // GL(n)
  SGL,          // S(GL(m) x GL(n))
  Spin,         // Spin(n)
  Torus,        // Gm
  TwistedSL2,   // image of SL(2) under the (q+1)w1 representation
  Exceptional,  // E6, E7, E8, F4, G2
  TypeAtom,     // A<n>, B<n>, C<n>, D<n>: a subgroup named by root-system type
  ShortRoot,    // At1, At2: short-root subsystem subgroups
  Trivial,      // "1"
};

struct Factor {
  FactorKind kind = FactorKind::Trivial;
  int n = 0;  // degree, torus dim, twist q, or 1/2 for ShortRoot
  int m = 0;  // first degree of SGL(m, n)
  SimpleType type{};  // Exceptional and TypeAtom only

  static Factor classical(FactorKind kind, int n);
  static Factor sgl(int m, int n);
  static Factor torus();
  static Factor twisted_sl2(int q);
  static Factor exceptional(SimpleType t);
  static Factor type_atom(SimpleType t);
  static Factor short_root(int rank);
  static Factor trivial();

  int dim() const;
  int rank() const;
  /// Descriptor-grammar spelling, e.g. "Sp(8)", "SGL(4,3)", "DeltaSL2(q=4)".
  std::string to_string() const;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// How a factor attaches to its predecessor.
enum class Join { Product, Central, Tensor };

/// A formal product of factors. `joins[i]` links factors[i] to factors[i+1].
struct GroupDescriptor {
  std::vector<Factor> factors;
  std::vector<Join> joins;

  GroupDescriptor() = default;
  explicit GroupDescriptor(Factor f) : factors{f} {}

  bool has_tensor() const;
  bool is_single() const { return factors.size() == 1; }
  std::string to_string() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Parses the descriptor grammar:
///   desc   := factor (sep factor)*      sep := "x" | "*" | "(x)"
///   factor := SL(n) | SO(n) | Sp(n) | GL(n) | SGL(m,n) | Spin(n) | Gm
///           | DeltaSL2(q=N) | G2 | F4 | E6 | E7 | E8 | A<n> | B<n> | C<n> | D<n>
///           | At1 | At2 | 1
/// Whitespace is ignored. "*" may only follow Gm. Degenerate degrees that
/// describe the trivial group (SL(1), SO(1), Sp(0)) are accepted.
/// Throws ParseError with a column, or InvalidFactor / InvalidRank.
GroupDescriptor parse(std::string_view text);

int dim(const GroupDescriptor& g);
int rank(const GroupDescriptor& g);
/// (dim - rank) / 2, the dimension of the flag variety of a reductive group.
int dim_flag(const GroupDescriptor& g);

struct Normalized {
  GroupDescriptor group;
  /// One entry per substitution, e.g. "SO(9)->Sp(8)".
  std::vector<std::string> trace;
};

/// For p = 2 replaces every SO(2n+1), n >= 1, by Sp(2n); identity otherwise.
Normalized normalize_strictly_classical(const GroupDescriptor& g, long long p);

struct SimpleTypeResult {
  std::optional<SimpleType> type;
  std::string reason;  // set when `type` is empty
};

/// Cartan type of a simple descriptor; SO(2), SO(4), tori and products are
/// reported as non-simple with a reason.
SimpleTypeResult simple_type_of(const GroupDescriptor& g);

/// Classical family of a single-factor group, used to interpret a query's
/// ambient group. A/B/C/D type atoms map to SL/SO/Sp/SO; Spin(n) maps to SO(n).
std::optional<Factor> as_classical_ambient(const GroupDescriptor& g);

/// Order-independent identity of a subgroup up to the isomorphisms that do
/// not change the embedding: trivial factors dropped, tori merged,
/// GL(n) = Gm.SL(n), SL(2) = Sp(2), small Spin groups identified with their
/// classical models. With `exceptional_ambient` every classical factor is
/// replaced by its root-system type. A/B/C/D atoms are rejected with
/// AmbiguousDescriptor unless `exceptional_ambient` is set.
std::string canonical_key(const GroupDescriptor& g, bool exceptional_ambient);

}  // namespace sphclass::groups
