#pragma once

// Exact arithmetic in Z[zeta], zeta = exp(i*pi/(2n)) a primitive 4n-th root
// of unity. Values are kept reduced modulo the cyclotomic polynomial of the
// order, so equality of coefficient vectors is equality of complex numbers.

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sdt {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when two ring elements of different orders meet in one operation.
class OrderMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

int euler_phi(int k);

/// Dense integer polynomial, ascending degree, no trailing zeros.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial monomial(int degree, BigInt coeff = 1);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coeff(int i) const;

  friend IntPolynomial operator+(const IntPolynomial& x, const IntPolynomial& y);
  friend IntPolynomial operator-(const IntPolynomial& x, const IntPolynomial& y);
  friend IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Exact division by a monic divisor. Throws std::domain_error if the
  /// divisor is not monic or the remainder is nonzero.
  IntPolynomial exact_div(const IntPolynomial& divisor) const;
  /// Remainder modulo a monic polynomial.
  IntPolynomial mod(const IntPolynomial& modulus) const;

  std::string to_string() const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Phi_k, by dividing x^k - 1 by Phi_d for every proper divisor d of k.
/// Results are memoized; safe to call from multiple threads.
const IntPolynomial& cyclotomic_polynomial(int k);

/// Element of Z[zeta] with zeta a primitive `order`-th root of unity, where
/// order = 4n for some n >= 2.
class CycloInt {
public:
  CycloInt(int order, BigInt value);
  CycloInt(int order, std::vector<BigInt> coeffs);

  static CycloInt zero(int order) { return CycloInt(order, BigInt(0)); }
  static CycloInt one(int order) { return CycloInt(order, BigInt(1)); }
  /// zeta^(e mod order), reduced.
  static CycloInt root_power(int order, std::int64_t e);

  int order() const { return order_; }
  /// Length phi(order) coefficient vector in the power basis 1, zeta, ...
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// The rational integer this value equals, if it is one.
  std::optional<BigInt> as_integer() const;

  /// Image under zeta -> zeta^-1 (complex conjugation).
  CycloInt conjugate() const;
  std::complex<double> to_complex() const;

  CycloInt& operator+=(const CycloInt& y);
  CycloInt& operator-=(const CycloInt& y);
  CycloInt& operator*=(const CycloInt& y);
  CycloInt& operator*=(const BigInt& k);

  friend CycloInt operator+(CycloInt x, const CycloInt& y) { return x += y; }
  friend CycloInt operator-(CycloInt x, const CycloInt& y) { return x -= y; }
  friend CycloInt operator*(const CycloInt& x, const CycloInt& y);
  friend CycloInt operator*(CycloInt x, const BigInt& k) { return x *= k; }
  friend CycloInt operator*(const BigInt& k, CycloInt x) { return x *= k; }
  CycloInt operator-() const;

  friend bool operator==(const CycloInt& x, const CycloInt& y);

  /// "{c0,c1,...}"
  std::string to_string() const;

private:
  void check_same_order(const CycloInt& y) const;

  int order_;
  std::vector<BigInt> coeffs_;
};

void validate_order(int order);

}  // namespace sdt
