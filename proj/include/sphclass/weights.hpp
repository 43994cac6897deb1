#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sphclass/bigint.hpp"
#include "sphclass/rootsys.hpp"

namespace sphclass::weights {

using rootsys::IntVector;
using rootsys::SimpleType;

/// Dominant integral weight in the fundamental-weight basis.
struct Weight {
  SimpleType type;
  IntVector coeffs;

  /// Throws InvalidRank for an invalid type and std::invalid_argument when the
  /// length mismatches the rank or a coefficient is negative.
  Weight(SimpleType t, IntVector c);

  static Weight zero(SimpleType t);
  /// omega_i with Bourbaki index i in 1..rank.
  static Weight fundamental(SimpleType t, int i);

  bool is_zero() const;
  /// 1-based indices of the nonzero coefficients.
  std::vector<int> support() const;
  /// "0", "w1", "2w1+w3", ...
  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;
};

/// True for 0 and for primes.
bool is_characteristic(long long p);

/// |W w| = |W| / |W_S0| with S0 the simple roots orthogonal to w.
BigInt weyl_orbit_size(const Weight& w);

/// Dimension of the characteristic-zero irreducible module of highest weight w.
BigInt weyl_dim(const Weight& w);

struct PAdicExpansion {
  /// (i, w^(i)) with every w^(i) nonzero and p-restricted, by increasing i.
  std::vector<std::pair<int, Weight>> pieces;
  /// Set when w is nonzero and w^(0) = 0, i.e. w is a Frobenius twist.
  bool frobenius_factored = false;
};

/// w = sum_i p^i w^(i). Throws CharZero for p = 0 and std::invalid_argument
/// when p is not prime.
PAdicExpansion p_adic_expansion(const Weight& w, long long p);

/// Every coefficient < p; always true for p = 0.
bool is_p_restricted(const Weight& w, long long p);

/// All dominant weights with a fixed zero pattern share one orbit size.
struct SupportFamily {
  std::vector<int> support;  // 1-based, increasing
  BigInt orbit_size;
  /// Sum of the fundamental weights in the support.
  Weight representative;
  /// The family continues past the coefficient bound; always true, kept explicit.
  bool unbounded = true;
};

struct DominantEnumeration {
  SimpleType type;
  int coefficient_bound = 4;
  std::vector<SupportFamily> families;

  /// Members of every family with all coefficients in 1..coefficient_bound on
  /// the support, ordered by family then lexicographically.
  std::vector<Weight> weights() const;
};

/// Nonzero dominant weights with orbit size <= orbit_cap, grouped by support.
DominantEnumeration enumerate_dominant_weights(SimpleType t, const BigInt& orbit_cap,
                                               int coefficient_bound = 4);

}  // namespace sphclass::weights
