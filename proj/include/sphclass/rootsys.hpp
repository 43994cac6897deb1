#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sphclass/bigint.hpp"

namespace sphclass::rootsys {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Cartan type of an irreducible root system, e.g. {Family::B, 3}.
/// Construction does not validate; use `validate` or `canonicalize`.
struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;

  /// "A4", "G2", ...
  std::string name() const;

  /// Parses "A4", "E8", ... Throws ParseError on malformed text and
  /// InvalidRank/NonSimple for out-of-range ranks.
  static SimpleType parse(std::string_view text);
};

using IntMatrix = std::vector<std::vector<int>>;

/// Coordinates in the simple-root basis (roots) or the fundamental-weight
/// basis (weights); which one is always stated by the caller.
using IntVector = std::vector<std::int64_t>;

/// Throws InvalidRank (or NonSimple for D2) unless `t` is a valid Cartan type.
/// D3 is accepted.
void validate(SimpleType t);

/// Canonical representative: D3 -> A3, C2 -> B2, everything else unchanged.
SimpleType canonicalize(SimpleType t);

/// Bourbaki-labelled Cartan matrix with cartan[i][j] = <alpha_i, alpha_j^vee>.
IntMatrix cartan_matrix(SimpleType t);

/// Immutable root datum for one simple type. Obtain shared instances through
/// `root_system`, which caches them.
class RootSystem {
 public:
  explicit RootSystem(SimpleType t);

  SimpleType type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank; }
  const IntMatrix& cartan() const noexcept { return cartan_; }

  /// Positive roots in simple-root coordinates, sorted by height then
  /// lexicographically.
  const std::vector<IntVector>& positive_roots() const noexcept { return positive_roots_; }

  /// Half squared lengths of the simple roots, normalized so short roots
  /// have value 1 (all ones when simply laced).
  const std::vector<std::int64_t>& symmetrizer() const noexcept { return symmetrizer_; }

  /// Simple root alpha_i expressed in the fundamental-weight basis.
  IntVector simple_root_as_weight(int i) const;

  /// Highest root expressed in the fundamental-weight basis.
  IntVector highest_root_weight() const;

  /// <weight, beta^vee> scaled by |beta|^2 / 2 for a positive root beta,
  /// i.e. sum_i beta_i * d_i * weight_i. Ratios of these equal ratios of
  /// coroot pairings, which is all the dimension formula needs.
  std::int64_t scaled_coroot_pairing(const IntVector& weight_fund, const IntVector& root) const;

  int dim_group() const noexcept {
    return 2 * static_cast<int>(positive_roots_.size()) + type_.rank;
  }

 private:
  SimpleType type_;
  IntMatrix cartan_;
  std::vector<std::int64_t> symmetrizer_;
  std::vector<IntVector> positive_roots_;
};

/// Cached, thread-safe access to root systems.
const RootSystem& root_system(SimpleType t);

std::vector<IntVector> positive_roots(SimpleType t);
int dim_group(SimpleType t);
BigInt weyl_order(SimpleType t);

/// Symmetrizer of an arbitrary Cartan matrix of finite type (see
/// RootSystem::symmetrizer). Works per connected component.
std::vector<std::int64_t> symmetrizer(const IntMatrix& cartan);

/// Types of the connected components of the Dynkin subdiagram spanned by
/// `nodes` (indices into `cartan`). Component types are unlabelled: only the
/// family and rank are meaningful, not the Bourbaki numbering.
std::vector<SimpleType> subdiagram_components(const IntMatrix& cartan, const std::vector<int>& nodes);

/// Order of the parabolic subgroup generated by the simple reflections in `nodes`.
BigInt parabolic_order(const IntMatrix& cartan, const std::vector<int>& nodes);

/// All permutations sigma of the nodes with cartan[sigma i][sigma j] = cartan[i][j].
std::vector<std::vector<int>> diagram_automorphisms(SimpleType t);

/// The involution tau with -w0(omega_i) = omega_{tau(i)}.
std::vector<int> opposition_involution(SimpleType t);

/// Closed-form dimension table used by consistency checks.
int dim_group_closed_form(SimpleType t);

}  // namespace sphclass::rootsys
