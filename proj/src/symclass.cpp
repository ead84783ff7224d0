#include "sdt/symclass.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "sdt/parallel.hpp"
#include "sdt/perm.hpp"

namespace sdt {

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("enumerating " + std::to_string(required) + " sequences exceeds the budget of " +
                         std::to_string(budget)),
      required_(required),
      budget_(budget) {}

// ---------------------------------------------------------------------------
// Sequence

namespace {

void validate_alphabet(int m) {
  if (m < 1 || m > 255) throw std::invalid_argument("alphabet size m must be in [1, 255], got " + std::to_string(m));
}

}  // namespace

Sequence Sequence::constant(int n, int m, int letter) {
  validate_n(n);
  validate_alphabet(m);
  return from_letters(n, m, std::vector<int>(static_cast<std::size_t>(4 * n), letter));
}

Sequence Sequence::from_letters(int n, int m, std::vector<int> letters) {
  validate_n(n);
  validate_alphabet(m);
  if (letters.size() != static_cast<std::size_t>(4 * n))
    throw std::invalid_argument("sequence length must be 4n = " + std::to_string(4 * n));
  Sequence s{n, m, {}};
  s.letters.reserve(letters.size());
  for (int v : letters) {
    if (v < 1 || v > m) throw std::invalid_argument("sequence letter " + std::to_string(v) + " outside {1.." + std::to_string(m) + "}");
    s.letters.push_back(static_cast<std::uint8_t>(v));
  }
  return s;
}

std::string Sequence::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < letters.size(); ++i) out << (i ? "," : "") << static_cast<int>(letters[i]);
  out << ")";
  return out.str();
}

namespace {

// source[g][t]: the position whose letter lands at t under g, 0-based.
std::vector<std::vector<int>> source_positions(int n) {
  const SemiDihedral group(n);
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(group.order()));
  for (const auto& g : group.elements()) {
    const Permutation inv = embed(n, g).inverse();
    std::vector<int> src(static_cast<std::size_t>(inv.degree()));
    for (int t = 1; t <= inv.degree(); ++t) src[static_cast<std::size_t>(t - 1)] = inv(t) - 1;
    out.push_back(std::move(src));
  }
  return out;
}

}  // namespace

Sequence act(int n, SDElement g, const Sequence& alpha) {
  if (alpha.n != n || alpha.letters.size() != static_cast<std::size_t>(4 * n))
    throw std::invalid_argument("act: sequence length does not match 4n");
  const Permutation inv = embed(n, g).inverse();
  Sequence out = alpha;
  for (int t = 1; t <= inv.degree(); ++t)
    out.letters[static_cast<std::size_t>(t - 1)] = alpha.letters[static_cast<std::size_t>(inv(t) - 1)];
  return out;
}

std::vector<SDElement> stabilizer(int n, const Sequence& alpha) {
  const SemiDihedral group(n);
  std::vector<SDElement> out;
  for (const auto& g : group.elements())
    if (act(n, g, alpha) == alpha) out.push_back(g);
  return out;
}

std::uint64_t sequence_count(int n, int m) {
  std::uint64_t total = 1;
  for (int t = 0; t < 4 * n; ++t) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(m))
      return std::numeric_limits<std::uint64_t>::max();
    total *= static_cast<std::uint64_t>(m);
  }
  return total;
}

std::vector<OrbitData> orbits(int n, int m, std::uint64_t budget) {
  const SemiDihedral group(n);
  validate_alphabet(m);
  const std::uint64_t total = sequence_count(n, m);
  if (total > budget) throw BudgetExceeded(total, budget);

  const int N = group.rotation_order();
  const auto src = source_positions(n);
  const auto elems = group.elements();
  const auto M = static_cast<std::uint64_t>(m);

  auto decode = [&](std::uint64_t code, std::vector<std::uint8_t>& digits) {
    for (int t = N - 1; t >= 0; --t) {
      digits[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(code % M);
      code /= M;
    }
  };
  auto to_sequence = [&](const std::vector<std::uint8_t>& digits) {
    Sequence s{n, m, digits};
    for (auto& d : s.letters) ++d;
    return s;
  };

  std::vector<bool> visited(total, false);
  std::vector<OrbitData> out;
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(N));
  std::vector<std::uint8_t> image(static_cast<std::size_t>(N));
  std::vector<std::uint64_t> images(elems.size());
  std::vector<std::vector<std::uint8_t>> image_digits(elems.size());

  // Codes are base-m numerals with position 1 most significant, so increasing
  // code order is lexicographic order and the first unvisited code is the
  // least member of its orbit.
  for (std::uint64_t code = 0; code < total; ++code) {
    if (visited[code]) continue;
    decode(code, digits);
    OrbitData orbit;
    orbit.representative = to_sequence(digits);
    for (std::size_t gi = 0; gi < elems.size(); ++gi) {
      std::uint64_t c = 0;
      for (int t = 0; t < N; ++t) {
        image[static_cast<std::size_t>(t)] = digits[static_cast<std::size_t>(src[gi][static_cast<std::size_t>(t)])];
        c = c * M + image[static_cast<std::size_t>(t)];
      }
      images[gi] = c;
      image_digits[gi] = image;
      if (c == code) orbit.stabilizer.push_back(elems[gi]);
    }
    std::vector<std::size_t> order(elems.size());
    std::iota(order.begin(), order.end(), 0);
    // Stable sort keeps the least group element first among equal images.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return images[x] < images[y]; });
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::size_t gi = order[k];
      if (k > 0 && images[gi] == images[order[k - 1]]) continue;
      visited[images[gi]] = true;
      orbit.members.push_back(to_sequence(image_digits[gi]));
      orbit.coset_reps.push_back(elems[gi]);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

std::uint64_t count_fixed_sequences(int n, int m, SDElement g, std::uint64_t budget) {
  const SemiDihedral group(n);
  validate_alphabet(m);
  const std::uint64_t total = sequence_count(n, m);
  if (total > budget) throw BudgetExceeded(total, budget);
  const Permutation p = embed(n, g);
  const int N = group.rotation_order();
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(N));
  std::uint64_t fixed = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int t = N - 1; t >= 0; --t) {
      digits[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(c % static_cast<std::uint64_t>(m));
      c /= static_cast<std::uint64_t>(m);
    }
    bool same = true;
    for (int t = 1; t <= N && same; ++t) same = digits[static_cast<std::size_t>(p(t) - 1)] == digits[static_cast<std::size_t>(t - 1)];
    if (same) ++fixed;
  }
  return fixed;
}

CycloInt stabilizer_char_sum(int n, CharacterId id, const Sequence& alpha) {
  CycloInt sum = CycloInt::zero(4 * n);
  for (const auto& g : stabilizer(n, alpha)) sum += character_value(n, id, g);
  return sum;
}

CycloInt stabilizer_char_sum(int n, CharacterId id, const OrbitData& orbit) {
  CycloInt sum = CycloInt::zero(4 * n);
  for (const auto& g : orbit.stabilizer) sum += character_value(n, id, g);
  return sum;
}

std::vector<Sequence> delta_bar(int n, int m, CharacterId id, std::uint64_t budget) {
  std::vector<Sequence> out;
  for (const auto& orbit : orbits(n, m, budget))
    if (!stabilizer_char_sum(n, id, orbit).is_zero()) out.push_back(orbit.representative);
  return out;
}

// ---------------------------------------------------------------------------
// Gram matrices

GramData::GramData(int n, OrbitData orbit, CharacterId character, std::vector<CycloInt> entries, int orbital_dim)
    : n_(n), orbit_(std::move(orbit)), character_(character), entries_(std::move(entries)), orbital_dim_(orbital_dim) {
  if (entries_.size() != size() * size()) throw std::invalid_argument("GramData: entry count does not match orbit size");
}

int orbital_dimension(int n, CharacterId id, const OrbitData& orbit) {
  const auto sum = stabilizer_char_sum(n, id, orbit).as_integer();
  if (!sum) throw std::logic_error("orbital_dimension: stabilizer character sum is not a rational integer");
  const BigInt scaled = *sum * id.degree();
  const auto order = static_cast<long long>(orbit.stabilizer.size());
  if (scaled % order != 0) throw std::logic_error("orbital_dimension: chi(1) * sum not divisible by |G_alpha|");
  return static_cast<int>(scaled / order);
}

GramData gram(int n, CharacterId id, const OrbitData& orbit) {
  const SemiDihedral group(n);
  if (stabilizer_char_sum(n, id, orbit).is_zero())
    throw std::invalid_argument("gram: representative " + orbit.representative.to_string() + " is not in Omega for " +
                                id.to_string());
  const auto values = character_values(n, id);
  const std::size_t k = orbit.coset_reps.size();
  std::vector<CycloInt> entries;
  entries.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    const SDElement left_inv = group.inverse(orbit.coset_reps[i]);
    for (std::size_t j = 0; j < k; ++j) {
      CycloInt sum = CycloInt::zero(group.rotation_order());
      for (const auto& x : orbit.stabilizer)
        sum += values[group.index(group.multiply(group.multiply(orbit.coset_reps[j], x), left_inv))];
      entries.push_back(std::move(sum));
    }
  }
  return GramData(n, orbit, id, std::move(entries), orbital_dimension(n, id, orbit));
}

namespace {

bool extend_clique(const std::vector<std::vector<bool>>& adjacent, std::vector<std::size_t>& clique,
                   const std::vector<std::size_t>& candidates, std::size_t target) {
  if (clique.size() == target) return true;
  for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
    if (clique.size() + (candidates.size() - idx) < target) return false;
    const std::size_t v = candidates[idx];
    std::vector<std::size_t> next;
    for (std::size_t u = idx + 1; u < candidates.size(); ++u)
      if (adjacent[v][candidates[u]]) next.push_back(candidates[u]);
    clique.push_back(v);
    if (extend_clique(adjacent, clique, next, target)) return true;
    clique.pop_back();
  }
  return false;
}

}  // namespace

BasisSearch orbital_basis_search(const GramData& gram) {
  const std::size_t k = gram.size();
  const auto target = static_cast<std::size_t>(gram.orbital_dim());
  BasisSearch result;
  if (target == 0) return result;

  std::vector<std::size_t> vertices;
  for (std::size_t i = 0; i < k; ++i)
    if (!gram.entry(i, i).is_zero()) vertices.push_back(i);

  std::vector<std::vector<bool>> adjacent(k, std::vector<bool>(k, false));
  std::vector<std::size_t> degree(k, 0);
  for (std::size_t i : vertices)
    for (std::size_t j : vertices)
      if (i != j && gram.entry(i, j).is_zero()) {
        adjacent[i][j] = true;
        ++degree[i];
      }
  // High-degree vertices first; the search itself is exhaustive.
  std::stable_sort(vertices.begin(), vertices.end(), [&](std::size_t x, std::size_t y) { return degree[x] > degree[y]; });
  std::erase_if(vertices, [&](std::size_t v) { return degree[v] + 1 < target; });

  std::vector<std::size_t> clique;
  if (extend_clique(adjacent, clique, vertices, target)) {
    std::sort(clique.begin(), clique.end());
    result.found = true;
    result.witness = std::move(clique);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Decisions

BasisDecision decide_orthogonal_basis(int n, int m, CharacterId id, const SearchOptions& options) {
  if (!is_valid_character(n, id)) throw std::invalid_argument("invalid character " + id.to_string());
  return decide_orthogonal_basis(n, m, id, orbits(n, m, options.budget), options.jobs);
}

BasisDecision decide_orthogonal_basis(int n, int m, CharacterId id, const std::vector<OrbitData>& all_orbits,
                                      unsigned jobs) {
  if (!is_valid_character(n, id)) throw std::invalid_argument("invalid character " + id.to_string());
  std::vector<std::optional<OrbitOutcome>> slots(all_orbits.size());
  parallel_for(all_orbits.size(), jobs, [&](std::size_t i) {
    const OrbitData& orbit = all_orbits[i];
    if (stabilizer_char_sum(n, id, orbit).is_zero()) return;
    const GramData g = gram(n, id, orbit);
    const BasisSearch search = orbital_basis_search(g);
    OrbitOutcome outcome;
    outcome.representative = orbit.representative;
    outcome.orbit_size = orbit.members.size();
    outcome.stabilizer_order = orbit.stabilizer.size();
    outcome.orbital_dim = g.orbital_dim();
    outcome.found = search.found;
    for (std::size_t w : search.witness) outcome.witness.push_back(orbit.members[w]);
    slots[i] = std::move(outcome);
  });

  BasisDecision decision;
  decision.n = n;
  decision.m = m;
  decision.character = id;
  decision.method = DecisionMethod::Exhaustive;
  for (auto& slot : slots) {
    if (!slot) continue;
    if (!slot->found && !decision.first_failure) decision.first_failure = decision.orbits.size();
    decision.orbits.push_back(std::move(*slot));
  }
  decision.exists = !decision.first_failure.has_value();
  return decision;
}

int nu2(long long num, long long den) {
  if (num == 0 || den == 0) throw std::invalid_argument("nu2: zero numerator or denominator");
  auto valuation = [](long long v) {
    int e = 0;
    while (v % 2 == 0) {
      v /= 2;
      ++e;
    }
    return e;
  };
  return valuation(num) - valuation(den);
}

bool predicted_basis(int n, CharacterId id) {
  if (!is_valid_character(n, id)) throw std::invalid_argument("invalid character " + id.to_string());
  switch (id.kind) {
    case CharacterKind::Linear: return true;
    case CharacterKind::Zeta: return nu2(id.param, 2LL * n) < 0;
    case CharacterKind::Psi: return false;
  }
  return false;
}

bool cosine_vanishing_exists(int n, int h) {
  validate_n(n);
  if (h < 1 || h >= 2 * n) throw std::invalid_argument("cosine_vanishing_exists: h must satisfy 1 <= h < 2n");
  const int N = 4 * n;
  for (int t1 = 0; t1 < N; ++t1)
    for (int t2 = 0; t2 < N; ++t2) {
      const long long e = static_cast<long long>(t1 - t2) * h;
      if ((CycloInt::root_power(N, e) + CycloInt::root_power(N, -e)).is_zero()) return true;
    }
  return false;
}

}  // namespace sdt
