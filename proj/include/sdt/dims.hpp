#pragma once

// Dimensions of the symmetry classes V_chi(SD_{8n}) inside the 4n-fold tensor
// power of an m-dimensional space.

#include <optional>
#include <stdexcept>
#include <vector>

#include "sdt/chartab.hpp"

namespace sdt {

/// A quantity that must be a rational integer (or divisible) was not.
class DivisibilityError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// chi(1)/|G| * sum_g chi(g) m^{c(g)}, with c(g) the cycle count of the
/// embedded permutation. This is the reference value.
BigInt dim_general(int n, int m, CharacterId id);

/// The printed closed-form dimension formulas, evaluated literally; cosine
/// sums are carried in Z[zeta] as zeta^k + zeta^-k. Throws
/// DivisibilityError when the literal expression is not an integer.
///
/// For odd n the chi_3 formula has a juxtaposed term
/// "sum_{k} m^{gcd(4n,k)} 2n m^n" with no operator; it is read as a
/// product.
BigInt dim_closed_form(int n, int m, CharacterId id);

/// sum over k in Cdag_odd ∪ (2n-1)Cdag_odd of m^{gcd(4n,k)} (zeta^{hk} - zeta^{-hk}),
/// i.e. 2i times the sine sum that drops out of the psi_h dimension.
CycloInt odd_sine_sum(int n, int m, int h);

struct DimEntry {
  CharacterId character;
  BigInt general;
  std::optional<BigInt> closed_form;  // empty when the formula is not integral
  bool agree = false;
};

struct DimReport {
  int n = 0;
  int m = 0;
  std::vector<DimEntry> entries;  // character table order
  /// sum_chi dim V_chi == m^{4n}
  bool total_identity_holds = false;
};

DimReport dim_report(int n, int m);

}  // namespace sdt
