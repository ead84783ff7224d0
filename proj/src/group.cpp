#include "sdt/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sdt {

void validate_n(int n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2, got " + std::to_string(n));
}

SemiDihedral::SemiDihedral(int n) : n_(n) { validate_n(n); }

SDElement SemiDihedral::element(int s, long long r) const {
  const long long N = rotation_order();
  long long rr = r % N;
  if (rr < 0) rr += N;
  return {((s % 2) + 2) % 2, static_cast<int>(rr)};
}

bool SemiDihedral::contains(SDElement g) const {
  return (g.s == 0 || g.s == 1) && g.r >= 0 && g.r < rotation_order();
}

void SemiDihedral::check(SDElement g) const {
  if (!contains(g))
    throw std::invalid_argument("element (s=" + std::to_string(g.s) + ", r=" + std::to_string(g.r) +
                                ") is not in SD_" + std::to_string(order()));
}

SDElement SemiDihedral::multiply(SDElement g, SDElement h) const {
  check(g);
  check(h);
  // a^k b = b a^{(2n-1)k}: moving b^{s2} left past a^{r1}.
  const long long k = g.r;
  const long long pushed = h.s == 1 ? (2LL * n_ - 1) * k : k;
  return element(g.s ^ h.s, pushed + h.r);
}

SDElement SemiDihedral::inverse(SDElement g) const {
  check(g);
  if (g.s == 0) return element(0, -static_cast<long long>(g.r));
  return element(1, (2LL * n_ + 1) * g.r);
}

SDElement SemiDihedral::conjugate(SDElement x, SDElement by) const {
  return multiply(multiply(by, x), inverse(by));
}

SDElement SemiDihedral::power(SDElement g, long long k) const {
  check(g);
  if (k < 0) return power(inverse(g), -k);
  SDElement result = SDElement::identity();
  SDElement base = g;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<SDElement> SemiDihedral::elements() const {
  std::vector<SDElement> out;
  out.reserve(static_cast<std::size_t>(order()));
  for (int s = 0; s < 2; ++s)
    for (int r = 0; r < rotation_order(); ++r) out.push_back({s, r});
  return out;
}

SDElement SemiDihedral::at(std::size_t index) const {
  if (index >= static_cast<std::size_t>(order())) throw std::out_of_range("element index out of range");
  const auto N = static_cast<std::size_t>(rotation_order());
  return {static_cast<int>(index / N), static_cast<int>(index % N)};
}

std::string SemiDihedral::name(SDElement g) const {
  check(g);
  std::string out = g.s ? "b" : "";
  if (g.r == 1) out += "a";
  else if (g.r > 1) out += "a^" + std::to_string(g.r);
  return out.empty() ? "1" : out;
}

ConjClassReport conjugacy_classes(int n) {
  const SemiDihedral group(n);
  const auto elems = group.elements();
  std::vector<bool> seen(elems.size(), false);
  ConjClassReport report;
  report.n = n;
  // Elements are visited in (s, r) order, so the first unseen one is the
  // least member of its class.
  for (const auto& x : elems) {
    if (seen[group.index(x)]) continue;
    std::set<SDElement> members;
    for (const auto& g : elems) members.insert(group.conjugate(x, g));
    for (const auto& y : members) seen[group.index(y)] = true;
    report.classes.push_back({x, {members.begin(), members.end()}});
  }
  return report;
}

int expected_class_count(int n) {
  validate_n(n);
  return n % 2 == 0 ? 2 * n + 3 : 2 * n + 6;
}

bool is_subgroup(const SemiDihedral& group, std::span<const SDElement> elements) {
  if (elements.empty()) return false;
  std::vector<bool> in(static_cast<std::size_t>(group.order()), false);
  for (const auto& g : elements) {
    if (!group.contains(g)) return false;
    in[group.index(g)] = true;
  }
  for (const auto& g : elements) {
    if (!in[group.index(group.inverse(g))]) return false;
    for (const auto& h : elements)
      if (!in[group.index(group.multiply(g, h))]) return false;
  }
  return true;
}

CyclicIntersection cyclic_intersection(const SemiDihedral& group, std::span<const SDElement> subgroup) {
  if (!is_subgroup(group, subgroup)) throw std::invalid_argument("cyclic_intersection: set is not a subgroup");
  const int N = group.rotation_order();
  // The least positive rotation exponent in H generates H ∩ <a>.
  int r = 0;
  for (const auto& g : subgroup)
    if (g.s == 0 && g.r > 0 && (r == 0 || g.r < r)) r = g.r;
  const int cyclic_order = r == 0 ? 1 : N / std::gcd(N, r);
  std::set<SDElement> distinct(subgroup.begin(), subgroup.end());
  return {r, static_cast<int>(distinct.size()) > cyclic_order};
}

}  // namespace sdt
