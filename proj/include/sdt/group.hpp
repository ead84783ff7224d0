#pragma once

// The semi-dihedral group SD_{8n} = <a, b | a^{4n} = b^2 = 1, bab = a^{2n-1}>,
// n >= 2, with elements kept in the normal form b^s a^r.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace sdt {

/// b^s a^r with s in {0,1} and 0 <= r < 4n.
struct SDElement {
  int s = 0;
  int r = 0;

  static constexpr SDElement identity() { return {0, 0}; }
  static constexpr SDElement a(int r = 1) { return {0, r}; }
  static constexpr SDElement b() { return {1, 0}; }

  bool is_rotation() const { return s == 0; }
  auto operator<=>(const SDElement&) const = default;
};

/// Reject n < 2.
void validate_n(int n);

class SemiDihedral {
public:
  explicit SemiDihedral(int n);

  int n() const { return n_; }
  /// 4n, the order of a.
  int rotation_order() const { return 4 * n_; }
  /// 8n.
  int order() const { return 8 * n_; }

  /// Normalizes exponents: b^(s mod 2) a^(r mod 4n).
  SDElement element(int s, long long r) const;
  bool contains(SDElement g) const;

  SDElement multiply(SDElement g, SDElement h) const;
  SDElement inverse(SDElement g) const;
  SDElement conjugate(SDElement x, SDElement by) const;  // by * x * by^-1
  SDElement power(SDElement g, long long k) const;

  /// All 8n elements in (s, r) order; index(g) is the position in this list.
  std::vector<SDElement> elements() const;
  std::size_t index(SDElement g) const { return static_cast<std::size_t>(g.s * 4 * n_ + g.r); }
  SDElement at(std::size_t index) const;

  /// "1", "a", "a^3", "b", "ba", "ba^5".
  std::string name(SDElement g) const;

private:
  void check(SDElement g) const;
  int n_;
};

struct ConjugacyClass {
  SDElement representative;
  std::vector<SDElement> members;  // sorted
};

struct ConjClassReport {
  int n = 0;
  std::vector<ConjugacyClass> classes;  // sorted by representative
};

/// Brute-force classes: {g x g^-1 : g in G}. Representatives are the least
/// member in (s, r) order, which coincide with the usual names
/// 1, a^r (r in C1, C2, C3), b, ba, ba^2, ba^3.
ConjClassReport conjugacy_classes(int n);

/// Expected class count: 2n+3 for even n, 2n+6 for odd n.
int expected_class_count(int n);

struct CyclicIntersection {
  int r = 0;            // 0 encodes H ∩ <a> = {1}
  bool proper = false;  // <a^r> is strictly smaller than H
};

/// For a subgroup H given as an explicit element set, the least r with
/// H ∩ <a> = <a^r>. Throws std::invalid_argument if H is not a subgroup.
CyclicIntersection cyclic_intersection(const SemiDihedral& group, std::span<const SDElement> subgroup);

/// True iff the set is nonempty and closed under multiplication and inverse.
bool is_subgroup(const SemiDihedral& group, std::span<const SDElement> elements);

}  // namespace sdt
