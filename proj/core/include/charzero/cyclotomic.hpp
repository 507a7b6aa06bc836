#pragma once

#include <string>
#include <vector>

namespace charzero {

/// Shared context for the ring Z[x]/(Phi_e): the cyclotomic polynomial itself
/// plus the canonical coordinates of x^j for j up to 2e, which turns reduction
/// into table lookups with no intermediate coefficient blowup.
class CyclotomicRing {
public:
  explicit CyclotomicRing(long long e);

  long long conductor() const { return e_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }  // = phi(e)
  const std::vector<long long>& modulus() const { return phi_; }

  /// Canonical coordinates (length degree()) of sum_j coeffs[j] * zeta^j.
  /// Exponents may run up to 2e (enough for products of reduced values).
  std::vector<long long> reduce(const std::vector<long long>& coeffs) const;

  /// Registry of rings keyed by conductor; thread-safe, built once each.
  static const CyclotomicRing& get(long long e);

private:
  long long e_;
  std::vector<long long> phi_;                      // coefficients of Phi_e, ascending
  std::vector<std::vector<long long>> power_basis_; // x^j mod Phi_e for j in [0, 2e]
};

/// Coefficients of Phi_e computed by exact integer polynomial division of
/// x^e - 1 by the product of Phi_d over proper divisors d of e.
std::vector<long long> cyclotomic_polynomial(long long e);

/// An element of Z[zeta_e], stored canonically reduced mod Phi_e.  Equality,
/// zero tests and ordering are therefore exact coefficient comparisons.
/// Arithmetic requires matching conductors (integers embed anywhere).
class Cyclotomic {
public:
  Cyclotomic() : e_(1), coeffs_{0} {}

  static Cyclotomic integer(long long n, long long e = 1);
  /// c * zeta_e^j
  static Cyclotomic zeta_power(long long e, long long j, long long c = 1);
  /// sum_j coeffs[j] * zeta_e^j (exponents indexed from 0, any length <= 2e).
  static Cyclotomic from_coeffs(long long e, const std::vector<long long>& coeffs);

  long long conductor() const { return e_; }
  const std::vector<long long>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_integer() const;  // canonical form is a constant
  long long integer_value() const;

  Cyclotomic conjugated() const;  // zeta -> zeta^{-1}

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, long long s);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Total order used for canonical row sorting: conductor, then coefficients
  /// lexicographically.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

  /// Rendering like "1-2*z6^1"; display only, values stay exact.
  std::string str() const;

  /// Floating approximations, display only.
  double approx_real() const;
  double approx_imag() const;

private:
  long long e_;
  std::vector<long long> coeffs_;  // canonical, length = phi(e) (degree of Phi_e)
};

}  // namespace charzero
