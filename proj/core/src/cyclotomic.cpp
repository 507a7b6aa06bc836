#include "charzero/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "charzero/errors.hpp"

namespace charzero {

namespace {

// Exact division of polynomials with integer coefficients; the divisor must be
// monic and the division must leave no remainder.
std::vector<long long> exact_poly_div(std::vector<long long> num,
                                      const std::vector<long long>& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  if (dd < 0 || den[dd] != 1) throw InternalError("exact_poly_div: divisor not monic");
  std::vector<long long> q(dn - dd + 1, 0);
  for (int i = dn; i >= dd; --i) {
    const long long c = num[i];
    if (c == 0) continue;
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (long long c : num)
    if (c != 0) throw InternalError("exact_poly_div: nonzero remainder");
  return q;
}

std::vector<long long> poly_mul(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(long long e) {
  if (e < 1) throw std::invalid_argument("cyclotomic_polynomial: e must be positive");
  // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d, computed for all divisors
  // in ascending order.
  std::map<long long, std::vector<long long>> phi;
  std::vector<long long> divisors;
  for (long long d = 1; d <= e; ++d)
    if (e % d == 0) divisors.push_back(d);
  for (long long d : divisors) {
    std::vector<long long> xn_minus_1(static_cast<std::size_t>(d) + 1, 0);
    xn_minus_1[0] = -1;
    xn_minus_1[static_cast<std::size_t>(d)] = 1;
    std::vector<long long> denom{1};
    for (long long dd : divisors) {
      if (dd == d || d % dd != 0) continue;
      denom = poly_mul(denom, phi[dd]);
    }
    phi[d] = exact_poly_div(std::move(xn_minus_1), denom);
  }
  return phi[e];
}

CyclotomicRing::CyclotomicRing(long long e) : e_(e), phi_(cyclotomic_polynomial(e)) {
  const int deg = degree();
  power_basis_.resize(static_cast<std::size_t>(2 * e_) + 1);
  std::vector<long long> cur(deg, 0);
  if (deg > 0) cur[0] = 1;  // x^0
  for (long long j = 0; j <= 2 * e_; ++j) {
    power_basis_[static_cast<std::size_t>(j)] = cur;
    if (deg == 0) continue;
    // multiply by x, then fold the overflow term through Phi_e (monic)
    long long top = cur[deg - 1];
    for (int i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < deg; ++i) cur[i] -= top * phi_[i];
  }
}

std::vector<long long> CyclotomicRing::reduce(const std::vector<long long>& coeffs) const {
  if (coeffs.size() > power_basis_.size())
    throw std::invalid_argument("cyclotomic reduce: exponent beyond 2e");
  const int deg = degree();
  std::vector<long long> out(deg, 0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const long long c = coeffs[j];
    if (c == 0) continue;
    const auto& basis = power_basis_[j];
    for (int i = 0; i < deg; ++i) out[i] += c * basis[i];
  }
  return out;
}

const CyclotomicRing& CyclotomicRing::get(long long e) {
  static std::mutex mutex;
  static std::map<long long, std::unique_ptr<CyclotomicRing>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = registry.find(e);
  if (it == registry.end())
    it = registry.emplace(e, std::make_unique<CyclotomicRing>(e)).first;
  return *it->second;
}

Cyclotomic Cyclotomic::integer(long long n, long long e) {
  return from_coeffs(e, {n});
}

Cyclotomic Cyclotomic::zeta_power(long long e, long long j, long long c) {
  if (e < 1) throw std::invalid_argument("zeta_power: conductor must be positive");
  j %= e;
  if (j < 0) j += e;
  std::vector<long long> coeffs(static_cast<std::size_t>(j) + 1, 0);
  coeffs[static_cast<std::size_t>(j)] = c;
  return from_coeffs(e, coeffs);
}

Cyclotomic Cyclotomic::from_coeffs(long long e, const std::vector<long long>& coeffs) {
  Cyclotomic v;
  v.e_ = e;
  v.coeffs_ = CyclotomicRing::get(e).reduce(coeffs);
  return v;
}

bool Cyclotomic::is_zero() const {
  for (long long c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

long long Cyclotomic::integer_value() const {
  if (!is_integer()) throw std::domain_error("cyclotomic value is not a rational integer");
  return coeffs_.empty() ? 0 : coeffs_[0];
}

Cyclotomic Cyclotomic::conjugated() const {
  // zeta^j -> zeta^{e-j}
  std::vector<long long> raw(static_cast<std::size_t>(e_) + 1, 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const std::size_t jj = j == 0 ? 0 : static_cast<std::size_t>(e_) - j;
    raw[jj] += coeffs_[j];
  }
  return from_coeffs(e_, raw);
}

namespace {

// Promote integer operands into the other ring; genuine mixes are a caller bug.
std::pair<Cyclotomic, Cyclotomic> same_ring(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() == b.conductor()) return {a, b};
  if (a.is_integer()) return {Cyclotomic::integer(a.integer_value(), b.conductor()), b};
  if (b.is_integer()) return {a, Cyclotomic::integer(b.integer_value(), a.conductor())};
  throw std::invalid_argument("cyclotomic arithmetic: conductor mismatch");
}

}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) {
    auto [aa, bb] = same_ring(a, b);
    return aa + bb;
  }
  std::vector<long long> c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
  return Cyclotomic::from_coeffs(a.conductor(), c);
}

Cyclotomic operator-(const Cyclotomic& a) {
  std::vector<long long> c = a.coeffs();
  for (auto& x : c) x = -x;
  return Cyclotomic::from_coeffs(a.conductor(), c);
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) {
    auto [aa, bb] = same_ring(a, b);
    return aa * bb;
  }
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<long long> prod(ca.size() + cb.size() - 1, 0);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) prod[i + j] += ca[i] * cb[j];
  }
  return Cyclotomic::from_coeffs(a.conductor(), prod);
}

Cyclotomic operator*(const Cyclotomic& a, long long s) {
  std::vector<long long> c = a.coeffs();
  for (auto& x : c) x *= s;
  return Cyclotomic::from_coeffs(a.conductor(), c);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() == b.conductor()) return a.coeffs() == b.coeffs();
  return a.is_integer() && b.is_integer() && a.integer_value() == b.integer_value();
}

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
  return a.coeffs() < b.coeffs();
}

std::string Cyclotomic::str() const {
  if (is_integer()) return std::to_string(integer_value());
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const long long c = coeffs_[j];
    if (c == 0) continue;
    if (!first && c > 0) out << "+";
    if (j == 0) {
      out << c;
    } else {
      if (c == -1)
        out << "-";
      else if (c != 1)
        out << c << "*";
      out << "z" << e_ << "^" << j;
    }
    first = false;
  }
  return out.str();
}

double Cyclotomic::approx_real() const {
  double acc = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    acc += static_cast<double>(coeffs_[j]) *
           std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(e_));
  return acc;
}

double Cyclotomic::approx_imag() const {
  double acc = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    acc += static_cast<double>(coeffs_[j]) *
           std::sin(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(e_));
  return acc;
}

}  // namespace charzero
