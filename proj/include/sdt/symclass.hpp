#pragma once

// Orbits of SD_{8n} on sequences of length 4n over {1..m}, stabilizer
// character sums, Gram matrices of the decomposable symmetrized tensors
// e*_{sigma.alpha}, and the orthogonal *-basis decision.
//
// For gamma an orbit representative and sigma_1, sigma_2 in G,
//   <e*_{sigma_1.gamma}, e*_{sigma_2.gamma}>
//       = chi(1)/|G| * sum_{x in sigma_2 G_gamma sigma_1^{-1}} chi(x).
// Gram entries here keep only the character sum; the positive factor
// chi(1)/|G| plays no role in zero tests.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdt/chartab.hpp"
#include "sdt/group.hpp"

namespace sdt {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget);
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// A word of length 4n over {1, ..., m}. Ordered lexicographically.
struct Sequence {
  int n = 0;
  int m = 0;
  std::vector<std::uint8_t> letters;

  static Sequence constant(int n, int m, int letter = 1);
  /// Builds and validates; throws std::invalid_argument on bad letters or length.
  static Sequence from_letters(int n, int m, std::vector<int> letters);

  std::string to_string() const;  // "(1,2,2,2)"
  auto operator<=>(const Sequence& other) const { return letters <=> other.letters; }
  bool operator==(const Sequence& other) const { return letters == other.letters; }
};

/// sigma.alpha with (sigma.alpha)[t] = alpha[T(sigma)^{-1}(t)].
Sequence act(int n, SDElement g, const Sequence& alpha);

/// {g : g.alpha = alpha}, sorted.
std::vector<SDElement> stabilizer(int n, const Sequence& alpha);

struct OrbitData {
  Sequence representative;  // least member
  std::vector<Sequence> members;  // sorted
  std::vector<SDElement> stabilizer;  // sorted
  /// coset_reps[i] is the least g with g.representative == members[i].
  std::vector<SDElement> coset_reps;
};

/// Full partition of the m^{4n} sequences, ordered by representative.
/// Throws BudgetExceeded if m^{4n} > budget.
std::vector<OrbitData> orbits(int n, int m, std::uint64_t budget = kDefaultBudget);

/// m^{4n}, saturating at UINT64_MAX.
std::uint64_t sequence_count(int n, int m);

/// Number of sequences fixed by g, by enumerating all m^{4n} of them.
std::uint64_t count_fixed_sequences(int n, int m, SDElement g, std::uint64_t budget = kDefaultBudget);

/// sum over G_alpha of chi; alpha lies in Omega iff this is nonzero.
CycloInt stabilizer_char_sum(int n, CharacterId id, const Sequence& alpha);
CycloInt stabilizer_char_sum(int n, CharacterId id, const OrbitData& orbit);

/// Orbit representatives whose stabilizer character sum is nonzero.
std::vector<Sequence> delta_bar(int n, int m, CharacterId id, std::uint64_t budget = kDefaultBudget);

class GramData {
public:
  GramData(int n, OrbitData orbit, CharacterId character, std::vector<CycloInt> entries, int orbital_dim);

  int n() const { return n_; }
  const OrbitData& orbit() const { return orbit_; }
  CharacterId character() const { return character_; }
  std::size_t size() const { return orbit_.members.size(); }
  /// sum over sigma_j G sigma_i^{-1} of chi, sigma = coset_reps.
  const CycloInt& entry(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }
  int orbital_dim() const { return orbital_dim_; }

private:
  int n_;
  OrbitData orbit_;
  CharacterId character_;
  std::vector<CycloInt> entries_;
  int orbital_dim_;
};

/// Throws std::invalid_argument when the representative is outside Omega.
GramData gram(int n, CharacterId id, const OrbitData& orbit);

/// orbital_dim = chi(1) * stabilizer sum / |G_alpha|, exact.
int orbital_dimension(int n, CharacterId id, const OrbitData& orbit);

struct BasisSearch {
  bool found = false;
  std::vector<std::size_t> witness;  // member indices, pairwise orthogonal
};

/// Exact branch-and-bound search for orbital_dim members with pairwise zero
/// Gram entries. Such a set spans the orbital subspace.
BasisSearch orbital_basis_search(const GramData& gram);

enum class DecisionMethod { Exhaustive, Predicted };

struct OrbitOutcome {
  Sequence representative;
  std::size_t orbit_size = 0;
  std::size_t stabilizer_order = 0;
  int orbital_dim = 0;
  bool found = false;
  std::vector<Sequence> witness;  // empty when !found
};

struct BasisDecision {
  int n = 0;
  int m = 0;
  CharacterId character;
  DecisionMethod method = DecisionMethod::Exhaustive;
  bool exists = false;
  std::vector<OrbitOutcome> orbits;  // the orbits in Delta-bar, by representative
  std::optional<std::size_t> first_failure;  // index into orbits
};

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
};

BasisDecision decide_orthogonal_basis(int n, int m, CharacterId id, const SearchOptions& options = {});
/// Same, reusing a precomputed orbit partition for (n, m).
BasisDecision decide_orthogonal_basis(int n, int m, CharacterId id, const std::vector<OrbitData>& all_orbits,
                                      unsigned jobs = 1);

/// 2-adic valuation of num/den. Throws std::invalid_argument on zero input.
int nu2(long long num, long long den);

/// Linear: true. zeta_h: nu2(h / 2n) < 0. psi_h: false. Assumes m >= 2.
bool predicted_basis(int n, CharacterId id);

/// Direct scan: some t1, t2 in [0, 4n) with zeta^{(t1-t2)h} + zeta^{-(t1-t2)h} = 0.
/// Requires 1 <= h < 2n.
bool cosine_vanishing_exists(int n, int h);

}  // namespace sdt
