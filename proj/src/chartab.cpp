#include "sdt/chartab.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace sdt {

namespace {

std::vector<int> odd_progression(int first, int bound) {
  std::vector<int> out;
  for (int v = first; v <= bound; v += 2) out.push_back(v);
  return out;
}

std::vector<int> sorted_union(std::vector<int> x, const std::vector<int>& y) {
  x.insert(x.end(), y.begin(), y.end());
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

std::vector<int> without(std::vector<int> x, std::initializer_list<int> drop) {
  std::erase_if(x, [&](int v) { return std::find(drop.begin(), drop.end(), v) != drop.end(); });
  return x;
}

bool contains(const std::vector<int>& xs, int v) { return std::find(xs.begin(), xs.end(), v) != xs.end(); }

}  // namespace

IndexSets index_sets(int n) {
  validate_n(n);
  IndexSets s;
  s.n = n;
  for (int v = 0; v <= 2 * n; v += 2) s.C1.push_back(v);
  s.C2_even = odd_progression(1, n - 1);
  s.C3_even = odd_progression(2 * n + 1, 3 * n - 1);
  s.C2_odd = odd_progression(1, n);
  s.C3_odd = odd_progression(2 * n + 1, 3 * n);
  s.Cdag_even = without(s.C1, {0, 2 * n});
  s.Cdag_odd = sorted_union(s.C2_even, s.C3_even);
  s.C_odd_23 = sorted_union(s.C2_odd, s.C3_odd);
  s.Cstar_even = without(sorted_union(sorted_union(s.C1, s.C2_even), s.C3_even), {0, 2 * n});
  s.Cstar_odd = without(sorted_union(sorted_union(s.C1, s.C2_odd), s.C3_odd), {0, n, 2 * n, 3 * n});
  return s;
}

std::string CharacterId::to_string() const {
  switch (kind) {
    case CharacterKind::Linear: return "chi:" + std::to_string(param);
    case CharacterKind::Zeta: return "zeta:" + std::to_string(param);
    case CharacterKind::Psi: return "psi:" + std::to_string(param);
  }
  return {};
}

std::string CharacterId::display_name() const {
  switch (kind) {
    case CharacterKind::Linear: return "χ" + std::to_string(param);
    case CharacterKind::Zeta: return "ς" + std::to_string(param);
    case CharacterKind::Psi: return "ψ" + std::to_string(param);
  }
  return {};
}

namespace {

std::vector<int> psi_params(const IndexSets& s) {
  if (s.n % 2 == 0) return s.Cdag_odd;
  return without(s.C_odd_23, {s.n, 3 * s.n});
}

}  // namespace

bool is_valid_character(int n, CharacterId id) {
  if (n < 2) return false;
  const IndexSets s = index_sets(n);
  switch (id.kind) {
    case CharacterKind::Linear: return id.param >= 0 && id.param < (n % 2 == 0 ? 4 : 8);
    case CharacterKind::Zeta: return contains(s.Cdag_even, id.param);
    case CharacterKind::Psi: return contains(psi_params(s), id.param);
  }
  return false;
}

CharacterId parse_character(int n, const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("character spec must look like chi:<i>, zeta:<h> or psi:<h>");
  const std::string kind = spec.substr(0, colon);
  const std::string num = spec.substr(colon + 1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
  if (ec != std::errc{} || ptr != num.data() + num.size() || num.empty())
    throw std::invalid_argument("bad character parameter in '" + spec + "'");
  CharacterId id;
  if (kind == "chi") id = CharacterId::linear(value);
  else if (kind == "zeta") id = CharacterId::zeta(value);
  else if (kind == "psi") id = CharacterId::psi(value);
  else throw std::invalid_argument("unknown character kind '" + kind + "'");
  if (!is_valid_character(n, id))
    throw std::invalid_argument("character " + spec + " is not an irreducible character of SD_" + std::to_string(8 * n));
  return id;
}

std::vector<CharacterId> character_ids(int n) {
  const IndexSets s = index_sets(n);
  std::vector<CharacterId> out;
  const int linear = n % 2 == 0 ? 4 : 8;
  for (int i = 0; i < linear; ++i) out.push_back(CharacterId::linear(i));
  for (int h : s.Cdag_even) out.push_back(CharacterId::zeta(h));
  for (int h : psi_params(s)) out.push_back(CharacterId::psi(h));
  return out;
}

LinearGenerators linear_generators(int n, int i) {
  validate_n(n);
  if (i < 0 || i >= (n % 2 == 0 ? 4 : 8)) throw std::invalid_argument("no linear character chi_" + std::to_string(i));
  // chi_0..chi_3: chi(a) in {1, -1}; chi_4..chi_7: chi(a) in {i, -i}.
  static constexpr int a_quarter[8] = {0, 0, 2, 2, 1, 1, 3, 3};  // chi(a) = i^{a_quarter}
  const int b_sign = (i % 2 == 0) ? 0 : 2 * n;
  return {a_quarter[i] * n, b_sign};
}

CycloInt character_value(int n, CharacterId id, SDElement g) {
  const SemiDihedral group(n);
  if (!group.contains(g)) throw std::invalid_argument("character_value: element not in group");
  if (!is_valid_character(n, id)) throw std::invalid_argument("invalid character " + id.to_string());
  const int N = group.rotation_order();
  if (id.kind == CharacterKind::Linear) {
    const auto gen = linear_generators(n, id.param);
    const long long e = static_cast<long long>(g.s) * gen.b_exponent + static_cast<long long>(g.r) * gen.a_exponent;
    return CycloInt::root_power(N, e);
  }
  if (g.s == 1) return CycloInt::zero(N);
  const long long hr = static_cast<long long>(id.param) * g.r;
  return CycloInt::root_power(N, hr) + CycloInt::root_power(N, (2LL * n - 1) * hr);
}

std::vector<CycloInt> character_values(int n, CharacterId id) {
  const SemiDihedral group(n);
  std::vector<CycloInt> out;
  out.reserve(static_cast<std::size_t>(group.order()));
  for (const auto& g : group.elements()) out.push_back(character_value(n, id, g));
  return out;
}

namespace {

// Angle e*pi/(2n) written as a reduced fraction of pi.
std::string pi_fraction(long long e, int n) {
  long long den = 2LL * n;
  const long long g = std::gcd(e, den);
  e /= g;
  den /= g;
  std::string out = e == 1 ? "π" : std::to_string(e) + "π";
  if (den != 1) out += "/" + std::to_string(den);
  return out;
}

}  // namespace

std::string trig_label(int n, CharacterId id, SDElement g) {
  const SemiDihedral group(n);
  const int N = group.rotation_order();
  if (id.kind == CharacterKind::Linear) {
    const auto gen = linear_generators(n, id.param);
    const long long e = (static_cast<long long>(g.s) * gen.b_exponent + static_cast<long long>(g.r) * gen.a_exponent) % N;
    if (e == 0) return "1";
    if (e == 2 * n) return "-1";
    return e == n ? "i" : "-i";
  }
  if (g.s == 1) return "0";
  const long long hr = (static_cast<long long>(id.param) * g.r) % N;
  if (hr == 0) return "2";
  if (hr % 2 == 0) return "2cos(" + pi_fraction(hr, n) + ")";
  return "2i·sin(" + pi_fraction(hr, n) + ")";
}

CharacterTable::CharacterTable(int n) : n_(n), rows_(character_ids(n)), columns_(conjugacy_classes(n).classes) {
  values_.reserve(rows_.size());
  for (const auto& id : rows_) {
    std::vector<CycloInt> row;
    row.reserve(columns_.size());
    for (const auto& cls : columns_) row.push_back(character_value(n, id, cls.representative));
    values_.push_back(std::move(row));
  }
}

std::vector<std::string> CharacterTable::column_labels() const {
  const SemiDihedral group(n_);
  std::vector<std::string> out;
  for (const auto& cls : columns_) out.push_back(group.name(cls.representative));
  return out;
}

CharacterTable character_table(int n) { return CharacterTable(n); }

ScaledValue char_inner_product(int n, CharacterId id1, CharacterId id2) {
  const SemiDihedral group(n);
  const auto v1 = character_values(n, id1);
  const auto v2 = character_values(n, id2);
  CycloInt sum = CycloInt::zero(group.rotation_order());
  for (std::size_t k = 0; k < v1.size(); ++k) sum += v1[k] * v2[k].conjugate();
  return {std::move(sum), BigInt(group.order())};
}

}  // namespace sdt
