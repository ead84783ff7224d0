#pragma once

// Permutations of {1, ..., N} and the embedding T : SD_{8n} -> S_{4n},
// T(a)(t) = t + 1, T(b)(t) = (2n - 1) t, residues taken in {1, ..., 4n}.

#include <vector>

#include "sdt/group.hpp"

namespace sdt {

struct CycleDecomposition {
  /// Every point appears once; fixed points are length-1 cycles. Each cycle
  /// starts at its least point and cycles are sorted by first point.
  std::vector<std::vector<int>> cycles;

  std::size_t count() const { return cycles.size(); }
};

class Permutation {
public:
  /// Identity on {1, ..., degree}.
  explicit Permutation(int degree);
  /// images[t - 1] is the image of point t. Throws unless a bijection.
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  CycleDecomposition cycle_decomposition() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

/// t -> p(q(t)); q is applied first. Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

/// T(b^s a^r) = T(b)^s ∘ T(a)^r, a homomorphism into S_{4n}.
Permutation embed(int n, SDElement g);

/// Number of cycles of T(g), fixed points included, by case analysis:
/// gcd(4n, r) for a^r (4n for the identity); n for b a^r with r odd;
/// for b a^r with r even, 2n+1 when n is even, else 2n+2 or 2n as r/2 is
/// even or odd.
int cycle_count_formula(int n, SDElement g);

}  // namespace sdt
