#include "sdt/perm.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace sdt {

Permutation::Permutation(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  images_.resize(static_cast<std::size_t>(degree));
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int N = degree();
  if (N < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<bool> hit(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > N || hit[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("images do not form a bijection of {1.." + std::to_string(N) + "}");
    hit[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int t = 1; t <= degree(); ++t) inv[static_cast<std::size_t>((*this)(t) - 1)] = t;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int t = 1; t <= degree(); ++t)
    if ((*this)(t) != t) return false;
  return true;
}

CycleDecomposition Permutation::cycle_decomposition() const {
  CycleDecomposition out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    for (int t = start; !seen[static_cast<std::size_t>(t - 1)]; t = (*this)(t)) {
      seen[static_cast<std::size_t>(t - 1)] = true;
      cycle.push_back(t);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch " + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int t = 1; t <= p.degree(); ++t) images[static_cast<std::size_t>(t - 1)] = p(q(t));
  return Permutation(std::move(images));
}

namespace {

// Residue of v modulo N in {1, ..., N}.
int residue(long long v, int N) {
  long long r = v % N;
  if (r <= 0) r += N;
  return static_cast<int>(r);
}

}  // namespace

Permutation embed(int n, SDElement g) {
  const SemiDihedral group(n);
  if (!group.contains(g)) throw std::invalid_argument("embed: element not in group");
  const int N = group.rotation_order();
  std::vector<int> images(static_cast<std::size_t>(N));
  for (int t = 1; t <= N; ++t) {
    long long v = residue(static_cast<long long>(t) + g.r, N);
    if (g.s == 1) v = residue((2LL * n - 1) * v, N);
    images[static_cast<std::size_t>(t - 1)] = static_cast<int>(v);
  }
  return Permutation(std::move(images));
}

int cycle_count_formula(int n, SDElement g) {
  const SemiDihedral group(n);
  if (!group.contains(g)) throw std::invalid_argument("cycle_count_formula: element not in group");
  const int N = group.rotation_order();
  if (g.s == 0) return std::gcd(N, g.r);  // gcd(4n, 0) = 4n
  if (g.r % 2 == 1) return n;
  if (n % 2 == 0) return 2 * n + 1;
  return (g.r / 2) % 2 == 0 ? 2 * n + 2 : 2 * n;
}

}  // namespace sdt
