#pragma once

// Irreducible characters of SD_{8n}.
//
// Linear characters are determined by their values on a and b. For even n
// there are four (chi_0..chi_3, values +-1); odd n adds chi_4..chi_7 with
// chi(a) = +-i. Every degree-2 character is the trace of
//
//   a^r   -> diag(w^{hr}, w^{(2n-1)hr})
//   b a^r -> antidiag(w^{(2n-1)hr}, w^{hr})
//
// so its value at a^r is zeta^{hr} + zeta^{(2n-1)hr} and it vanishes on
// reflections. zeta_h uses even h, psi_h odd h.

#include <string>
#include <vector>

#include "sdt/cyclo.hpp"
#include "sdt/group.hpp"

namespace sdt {

struct IndexSets {
  int n = 0;
  std::vector<int> C1;          // {0, 2, ..., 2n}
  std::vector<int> C2_even;     // {1, 3, ..., n-1}
  std::vector<int> C3_even;     // {2n+1, 2n+3, ..., 3n-1}
  std::vector<int> C2_odd;      // {1, 3, ..., n}
  std::vector<int> C3_odd;      // {2n+1, 2n+3, ..., 3n}
  std::vector<int> Cdag_even;   // C1 \ {0, 2n}
  std::vector<int> Cdag_odd;    // C2_even ∪ C3_even
  std::vector<int> C_odd_23;    // C2_odd ∪ C3_odd
  std::vector<int> Cstar_even;  // (C1 ∪ C2_even ∪ C3_even) \ {0, 2n}
  std::vector<int> Cstar_odd;   // (C1 ∪ C2_odd ∪ C3_odd) \ {0, n, 2n, 3n}
};

/// Odd-progression sets stop at the last odd value not exceeding the stated
/// bound, so for odd n C2_even = {1, 3, ..., n-2}.
IndexSets index_sets(int n);

enum class CharacterKind { Linear, Zeta, Psi };

struct CharacterId {
  CharacterKind kind = CharacterKind::Linear;
  int param = 0;  // i for chi_i, h for zeta_h / psi_h

  static CharacterId linear(int i) { return {CharacterKind::Linear, i}; }
  static CharacterId zeta(int h) { return {CharacterKind::Zeta, h}; }
  static CharacterId psi(int h) { return {CharacterKind::Psi, h}; }

  int degree() const { return kind == CharacterKind::Linear ? 1 : 2; }
  /// "chi:0", "zeta:2", "psi:1"
  std::string to_string() const;
  /// "χ0", "ς2", "ψ1"
  std::string display_name() const;

  auto operator<=>(const CharacterId&) const = default;
};

/// Parses "chi:<i>", "zeta:<h>", "psi:<h>" and validates against n.
/// Throws std::invalid_argument on syntax or range errors.
CharacterId parse_character(int n, const std::string& spec);

bool is_valid_character(int n, CharacterId id);

/// All irreducible characters in table order: linear, then zeta_h for
/// h in Cdag_even, then psi_h for h in Cdag_odd (even n) or
/// C_odd_23 \ {n, 3n} (odd n).
std::vector<CharacterId> character_ids(int n);

/// Values of a linear character on the generators, as powers of zeta.
struct LinearGenerators {
  int a_exponent;  // chi(a) = zeta^{a_exponent}, one of 0, n, 2n, 3n
  int b_exponent;  // chi(b) = zeta^{b_exponent}, one of 0, 2n
};
LinearGenerators linear_generators(int n, int i);

CycloInt character_value(int n, CharacterId id, SDElement g);

/// Values of one character on all 8n elements, indexed by SemiDihedral::index.
std::vector<CycloInt> character_values(int n, CharacterId id);

/// Human-readable value, e.g. "1", "-i", "2cos(3π/4)", "2i·sin(π/4)", "0".
std::string trig_label(int n, CharacterId id, SDElement g);

class CharacterTable {
public:
  explicit CharacterTable(int n);

  int n() const { return n_; }
  const std::vector<CharacterId>& rows() const { return rows_; }
  const std::vector<ConjugacyClass>& columns() const { return columns_; }
  /// Class labels: names of the representatives.
  std::vector<std::string> column_labels() const;
  const CycloInt& value(std::size_t row, std::size_t column) const { return values_[row][column]; }

private:
  int n_;
  std::vector<CharacterId> rows_;
  std::vector<ConjugacyClass> columns_;
  std::vector<std::vector<CycloInt>> values_;
};

CharacterTable character_table(int n);

struct ScaledValue {
  CycloInt num;
  BigInt den;
};

/// (sum_g chi1(g) conj(chi2(g)), 8n), unreduced.
ScaledValue char_inner_product(int n, CharacterId id1, CharacterId id2);

}  // namespace sdt
