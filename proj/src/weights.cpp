#include "sphclass/weights.hpp"

#include <stdexcept>

#include "sphclass/errors.hpp"

namespace sphclass::weights {

Weight::Weight(SimpleType t, IntVector c) : type(t), coeffs(std::move(c)) {
  rootsys::validate(type);
  if (static_cast<int>(coeffs.size()) != type.rank)
    throw std::invalid_argument("weight length does not match rank of " + type.name());
  for (auto v : coeffs)
    if (v < 0) throw std::invalid_argument("weight is not dominant");
}

Weight Weight::zero(SimpleType t) {
  rootsys::validate(t);
  return Weight(t, IntVector(t.rank, 0));
}

Weight Weight::fundamental(SimpleType t, int i) {
  Weight w = zero(t);
  if (i < 1 || i > t.rank) throw std::invalid_argument("fundamental weight index out of range");
  w.coeffs[i - 1] = 1;
  return w;
}

bool Weight::is_zero() const {
  for (auto v : coeffs)
    if (v != 0) return false;
  return true;
}

std::vector<int> Weight::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) s.push_back(static_cast<int>(i) + 1);
  return s;
}

std::string Weight::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (coeffs[i] != 1) out += std::to_string(coeffs[i]);
    out += 'w' + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

bool is_characteristic(long long p) {
  if (p == 0) return true;
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

BigInt weyl_orbit_size(const Weight& w) {
  const auto& rs = rootsys::root_system(w.type);
  std::vector<int> zeros;
  for (int i = 0; i < rs.rank(); ++i)
    if (w.coeffs[i] == 0) zeros.push_back(i);
  return rootsys::weyl_order(w.type) / rootsys::parabolic_order(rs.cartan(), zeros);
}

BigInt weyl_dim(const Weight& w) {
  const auto& rs = rootsys::root_system(w.type);
  IntVector shifted = w.coeffs;
  IntVector rho(rs.rank(), 1);
  for (auto& c : shifted) c += 1;
  BigInt num = 1, den = 1;
  for (const auto& beta : rs.positive_roots()) {
    num *= rs.scaled_coroot_pairing(shifted, beta);
    den *= rs.scaled_coroot_pairing(rho, beta);
  }
  if (num % den != 0) throw Error("non-integral Weyl dimension for " + w.to_string());
  return num / den;
}

PAdicExpansion p_adic_expansion(const Weight& w, long long p) {
  if (p == 0) throw CharZero("p-adic expansion needs a positive characteristic");
  if (!is_characteristic(p)) throw std::invalid_argument("characteristic must be prime");
  PAdicExpansion out;
  IntVector rest = w.coeffs;
  for (int i = 0;; ++i) {
    bool any = false;
    IntVector digit(rest.size(), 0);
    for (std::size_t k = 0; k < rest.size(); ++k) {
      digit[k] = rest[k] % p;
      rest[k] /= p;
      any = any || rest[k] != 0;
    }
    Weight piece(w.type, digit);
    if (!piece.is_zero()) out.pieces.emplace_back(i, std::move(piece));
    if (!any) break;
  }
  out.frobenius_factored = !w.is_zero() && (out.pieces.empty() || out.pieces.front().first != 0);
  return out;
}

bool is_p_restricted(const Weight& w, long long p) {
  if (p == 0) return true;
  for (auto v : w.coeffs)
    if (v >= p) return false;
  return true;
}

std::vector<Weight> DominantEnumeration::weights() const {
  std::vector<Weight> out;
  for (const auto& fam : families) {
    IntVector c(type.rank, 0);
    for (int i : fam.support) c[i - 1] = 1;
    while (true) {
      out.emplace_back(type, c);
      // Odometer over the support, coefficients 1..bound.
      std::size_t k = 0;
      while (k < fam.support.size()) {
        auto& slot = c[fam.support[fam.support.size() - 1 - k] - 1];
        if (slot < coefficient_bound) {
          ++slot;
          break;
        }
        slot = 1;
        ++k;
      }
      if (k == fam.support.size()) break;
    }
  }
  return out;
}

DominantEnumeration enumerate_dominant_weights(SimpleType t, const BigInt& orbit_cap, int coefficient_bound) {
  if (orbit_cap < 1) throw std::invalid_argument("orbit cap must be positive");
  if (coefficient_bound < 1) throw std::invalid_argument("coefficient bound must be positive");
  rootsys::validate(t);
  DominantEnumeration out{t, coefficient_bound, {}};
  // Orbit size grows with the support, so a failing support prunes all supersets.
  std::vector<int> support;
  auto visit = [&](auto&& self, int next) -> void {
    for (int i = next; i <= t.rank; ++i) {
      support.push_back(i);
      IntVector c(t.rank, 0);
      for (int s : support) c[s - 1] = 1;
      Weight rep(t, c);
      BigInt size = weyl_orbit_size(rep);
      if (size <= orbit_cap) {
        out.families.push_back({support, size, rep, true});
        self(self, i + 1);
      }
      support.pop_back();
    }
  };
  visit(visit, 1);
  return out;
}

}  // namespace sphclass::weights
