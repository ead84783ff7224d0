#include "sdt/dims.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sdt/perm.hpp"

namespace sdt {

namespace {

void validate_m(int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1, got " + std::to_string(m));
}

BigInt power(int m, int e) { return boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(e)); }

BigInt exact_quotient(const CycloInt& numerator, const BigInt& divisor, const char* what) {
  const auto value = numerator.as_integer();
  if (!value) throw DivisibilityError(std::string(what) + ": numerator " + numerator.to_string() + " is not a rational integer");
  if (*value % divisor != 0)
    throw DivisibilityError(std::string(what) + ": " + value->str() + " is not divisible by " + divisor.str());
  return *value / divisor;
}

// m^{gcd(4n, k)}
BigInt gcd_power(int n, int m, int k) { return power(m, std::gcd(4 * n, k)); }

std::vector<int> bar_union(int n, const std::vector<int>& set) {
  std::set<int> out(set.begin(), set.end());
  for (int s : set) out.insert(static_cast<int>((static_cast<long long>(2 * n - 1) * s) % (4 * n)));
  return {out.begin(), out.end()};
}

}  // namespace

BigInt dim_general(int n, int m, CharacterId id) {
  validate_m(m);
  const SemiDihedral group(n);
  if (!is_valid_character(n, id)) throw std::invalid_argument("invalid character " + id.to_string());
  CycloInt sum = CycloInt::zero(group.rotation_order());
  for (const auto& g : group.elements()) sum += character_value(n, id, g) * power(m, cycle_count_formula(n, g));
  sum *= BigInt(id.degree());
  const BigInt dim = exact_quotient(sum, BigInt(group.order()), "dim_general");
  if (dim < 0) throw std::logic_error("dim_general: negative dimension for " + id.to_string());
  return dim;
}

CycloInt odd_sine_sum(int n, int m, int h) {
  const IndexSets sets = index_sets(n);
  const int N = 4 * n;
  CycloInt sum = CycloInt::zero(N);
  for (int k : bar_union(n, sets.Cdag_odd))
    sum += (CycloInt::root_power(N, static_cast<long long>(h) * k) - CycloInt::root_power(N, -static_cast<long long>(h) * k)) *
           gcd_power(n, m, k);
  return sum;
}

BigInt dim_closed_form(int n, int m, CharacterId id) {
  validate_m(m);
  if (!is_valid_character(n, id)) throw std::invalid_argument("invalid character " + id.to_string());
  const IndexSets sets = index_sets(n);
  const int N = 4 * n;
  const BigInt bn(n);

  BigInt full_sum = 0;  // sum over k in [0, 4n)
  for (int k = 0; k < N; ++k) full_sum += gcd_power(n, m, k);
  BigInt even_dag = 0;  // sum over Cdag_even
  for (int k : sets.Cdag_even) even_dag += gcd_power(n, m, k);
  BigInt odd_dag_bar = 0;  // sum over Cdag_odd ∪ bar(Cdag_odd)
  for (int k : bar_union(n, sets.Cdag_odd)) odd_dag_bar += gcd_power(n, m, k);

  // cosine sum over `ks` of m^gcd * (zeta^{hk} + zeta^{-hk}) = 2 * sum m^gcd cos(hk pi/2n)
  auto twice_cos_sum = [&](int h, const std::vector<int>& ks) {
    CycloInt acc = CycloInt::zero(N);
    for (int k : ks)
      acc += (CycloInt::root_power(N, static_cast<long long>(h) * k) + CycloInt::root_power(N, -static_cast<long long>(h) * k)) *
             gcd_power(n, m, k);
    return acc;
  };

  const BigInt eight_n = 8 * bn;
  if (id.kind == CharacterKind::Zeta) {
    std::vector<int> all(static_cast<std::size_t>(N));
    std::iota(all.begin(), all.end(), 0);
    // (1/2n) sum cos = (1/4n) * twice_cos_sum
    return exact_quotient(twice_cos_sum(id.param, all), 4 * bn, "dim_closed_form");
  }
  if (id.kind == CharacterKind::Psi) {
    // (1/4n)[m^{4n} - m^{2n} + 4 sum_{Cdag_even} m^gcd cos]
    CycloInt num = twice_cos_sum(id.param, sets.Cdag_even) * BigInt(2);
    num += CycloInt(N, power(m, 4 * n) - power(m, 2 * n));
    return exact_quotient(num, 4 * bn, "dim_closed_form");
  }

  BigInt numerator;
  if (n % 2 == 0) {
    const BigInt refl_odd = 2 * bn * power(m, n);           // 2n m^n
    const BigInt refl_even = 2 * bn * power(m, 2 * n + 1);  // 2n m^{2n+1}
    const BigInt alternating = power(m, 4 * n) + power(m, 2 * n) + 2 * even_dag - odd_dag_bar;
    switch (id.param) {
      case 0: numerator = refl_odd + refl_even + full_sum; break;
      case 1: numerator = -refl_odd - refl_even + full_sum; break;
      case 2: numerator = alternating + refl_even - refl_odd; break;
      case 3: numerator = alternating - refl_even + refl_odd; break;
      default: throw std::logic_error("unreachable linear character");
    }
  } else {
    const BigInt m_n = power(m, n);
    const BigInt n_m2n = bn * power(m, 2 * n);
    const BigInt n_m2n2 = bn * power(m, 2 * n + 2);
    const BigInt head = power(m, 4 * n) + power(m, 2 * n) - 2 * m_n + 2 * even_dag;
    BigInt quarter_sum = 0;  // sum over Cdag_even ∪ bar(Cdag_even) of (-1)^{k/2} m^gcd
    for (int k : bar_union(n, sets.Cdag_even)) quarter_sum += ((k / 2) % 2 == 0 ? 1 : -1) * gcd_power(n, m, k);
    const BigInt quartic = power(m, 4 * n) - power(m, 2 * n) + quarter_sum;
    switch (id.param) {
      case 0: numerator = 2 * bn * m_n + n_m2n + n_m2n2 + full_sum; break;
      case 1: numerator = -2 * bn * m_n - n_m2n - n_m2n2 + full_sum; break;
      case 2: numerator = head - odd_dag_bar - 2 * bn * m_n + n_m2n + n_m2n2; break;
      case 3: numerator = head - odd_dag_bar * (2 * bn * m_n) - n_m2n - n_m2n2; break;
      case 4:
      case 6: numerator = quartic + n_m2n2 - n_m2n; break;
      case 5:
      case 7: numerator = quartic - n_m2n2 + n_m2n; break;
      default: throw std::logic_error("unreachable linear character");
    }
  }
  return exact_quotient(CycloInt(N, numerator), eight_n, "dim_closed_form");
}

DimReport dim_report(int n, int m) {
  validate_m(m);
  DimReport report;
  report.n = n;
  report.m = m;
  BigInt total = 0;
  for (const auto& id : character_ids(n)) {
    DimEntry entry{id, dim_general(n, m, id), std::nullopt, false};
    try {
      entry.closed_form = dim_closed_form(n, m, id);
      entry.agree = *entry.closed_form == entry.general;
    } catch (const DivisibilityError&) {
      entry.agree = false;
    }
    total += entry.general;
    report.entries.push_back(std::move(entry));
  }
  // dim V_chi already carries the factor chi(1): the tensor power is the
  // direct sum of the V_chi, so the plain sum is m^{4n}.
  report.total_identity_holds = total == power(m, 4 * n);
  return report;
}

}  // namespace sdt
