#include "sdt/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace sdt {

int euler_phi(int k) {
  if (k < 1) throw std::invalid_argument("euler_phi: k must be >= 1");
  int result = k;
  int rest = k;
  for (int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coeff) {
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
  c.back() = std::move(coeff);
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial operator+(const IntPolynomial& x, const IntPolynomial& y) {
  std::vector<BigInt> c(std::max(x.coeffs_.size(), y.coeffs_.size()));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) c[i] += x.coeffs_[i];
  for (std::size_t i = 0; i < y.coeffs_.size(); ++i) c[i] += y.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& x, const IntPolynomial& y) {
  std::vector<BigInt> c(std::max(x.coeffs_.size(), y.coeffs_.size()));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) c[i] += x.coeffs_[i];
  for (std::size_t i = 0; i < y.coeffs_.size(); ++i) c[i] -= y.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<BigInt> c(x.coeffs_.size() + y.coeffs_.size() - 1);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) c[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

namespace {

// Long division by a monic polynomial; returns {quotient, remainder}.
std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& x, const IntPolynomial& d) {
  if (d.is_zero() || d.coeffs().back() != 1)
    throw std::domain_error("polynomial division: divisor must be monic");
  std::vector<BigInt> rem = x.coeffs();
  const int dd = d.degree();
  if (x.degree() < dd) return {IntPolynomial{}, x};
  std::vector<BigInt> quot(static_cast<std::size_t>(x.degree() - dd) + 1);
  for (int i = x.degree(); i >= dd; --i) {
    const BigInt lead = rem[static_cast<std::size_t>(i)];
    if (lead == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = lead;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= lead * d.coeffs()[static_cast<std::size_t>(j)];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

}  // namespace

IntPolynomial IntPolynomial::exact_div(const IntPolynomial& divisor) const {
  auto [q, r] = divmod_monic(*this, divisor);
  if (!r.is_zero()) throw std::domain_error("polynomial division: nonzero remainder");
  return q;
}

IntPolynomial IntPolynomial::mod(const IntPolynomial& modulus) const {
  return divmod_monic(*this, modulus).second;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) out << mag;
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

const IntPolynomial& cyclotomic_polynomial(int k) {
  if (k < 1) throw std::invalid_argument("cyclotomic_polynomial: k must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<IntPolynomial>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(k); it != cache.end()) return *it->second;
  }
  // x^k - 1 divided by every Phi_d, d | k, d < k.
  IntPolynomial acc = IntPolynomial::monomial(k) - IntPolynomial::monomial(0);
  for (int d = 1; d < k; ++d) {
    if (k % d == 0) acc = acc.exact_div(cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(k, std::make_unique<IntPolynomial>(std::move(acc)));
  return *it->second;
}

// ---------------------------------------------------------------------------
// CycloInt

void validate_order(int order) {
  if (order < 8 || order % 4 != 0)
    throw std::invalid_argument("cyclotomic order must be 4n with n >= 2, got " + std::to_string(order));
}

namespace {

// Reduction data for one order: the reduced form of zeta^e for 0 <= e < order.
struct RingTables {
  int order = 0;
  int phi = 0;
  std::vector<std::vector<BigInt>> powers;
};

const RingTables& tables_for(int order) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<RingTables>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(order); it != cache.end()) return *it->second;
  }
  validate_order(order);
  auto t = std::make_unique<RingTables>();
  t->order = order;
  t->phi = euler_phi(order);
  const IntPolynomial& modulus = cyclotomic_polynomial(order);
  t->powers.reserve(static_cast<std::size_t>(order));
  for (int e = 0; e < order; ++e) {
    std::vector<BigInt> v = IntPolynomial::monomial(e).mod(modulus).coeffs();
    v.resize(static_cast<std::size_t>(t->phi));
    t->powers.push_back(std::move(v));
  }
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(order, std::move(t));
  return *it->second;
}

}  // namespace

CycloInt::CycloInt(int order, BigInt value) : order_(order) {
  const RingTables& t = tables_for(order);
  coeffs_.assign(static_cast<std::size_t>(t.phi), BigInt(0));
  coeffs_[0] = std::move(value);
}

CycloInt::CycloInt(int order, std::vector<BigInt> coeffs) : order_(order) {
  const RingTables& t = tables_for(order);
  const auto phi = static_cast<std::size_t>(t.phi);
  if (coeffs.size() <= phi) {
    coeffs.resize(phi);
    coeffs_ = std::move(coeffs);
    return;
  }
  // Reduce higher powers through zeta^order = 1 and the power table.
  coeffs_.assign(phi, BigInt(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const auto& p = t.powers[k % static_cast<std::size_t>(order)];
    for (std::size_t j = 0; j < phi; ++j)
      if (p[j] != 0) coeffs_[j] += coeffs[k] * p[j];
  }
}

CycloInt CycloInt::root_power(int order, std::int64_t e) {
  const RingTables& t = tables_for(order);
  std::int64_t r = e % order;
  if (r < 0) r += order;
  return CycloInt(order, t.powers[static_cast<std::size_t>(r)]);
}

bool CycloInt::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<BigInt> CycloInt::as_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

CycloInt CycloInt::conjugate() const {
  const RingTables& t = tables_for(order_);
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const auto& p = t.powers[(static_cast<std::size_t>(order_) - k) % static_cast<std::size_t>(order_)];
    for (std::size_t j = 0; j < out.size(); ++j)
      if (p[j] != 0) out[j] += coeffs_[k] * p[j];
  }
  return CycloInt(order_, std::move(out));
}

std::complex<double> CycloInt::to_complex() const {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / order_;
    acc += coeffs_[k].convert_to<double>() * std::polar(1.0, angle);
  }
  return acc;
}

void CycloInt::check_same_order(const CycloInt& y) const {
  if (order_ != y.order_)
    throw OrderMismatch("cyclotomic order mismatch: " + std::to_string(order_) + " vs " + std::to_string(y.order_));
}

CycloInt& CycloInt::operator+=(const CycloInt& y) {
  check_same_order(y);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += y.coeffs_[i];
  return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& y) {
  check_same_order(y);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= y.coeffs_[i];
  return *this;
}

CycloInt& CycloInt::operator*=(const BigInt& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

CycloInt& CycloInt::operator*=(const CycloInt& y) {
  *this = *this * y;
  return *this;
}

CycloInt operator*(const CycloInt& x, const CycloInt& y) {
  x.check_same_order(y);
  const std::size_t phi = x.coeffs_.size();
  std::vector<BigInt> product(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j)
      if (y.coeffs_[j] != 0) product[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return CycloInt(x.order_, std::move(product));
}

CycloInt CycloInt::operator-() const {
  CycloInt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const CycloInt& x, const CycloInt& y) {
  x.check_same_order(y);
  return x.coeffs_ == y.coeffs_;
}

std::string CycloInt::to_string() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out << (i ? "," : "") << coeffs_[i];
  out << "}";
  return out.str();
}

}  // namespace sdt
