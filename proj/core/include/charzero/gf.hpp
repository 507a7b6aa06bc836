#pragma once

#include <vector>

namespace charzero {

/// Arithmetic tables for the field with q elements, for prime q and for the
/// prime powers the constructions need (4, 8, 9, 16).  Elements are encoded
/// as integers in [0, q): residues when q is prime, otherwise coefficient
/// vectors of F_p[x]/(f) packed in base p with the constant term lowest, f
/// taken from a fixed table of irreducible polynomials.
class GaloisField {
public:
  explicit GaloisField(int q);

  int size() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return deg_; }

  int add(int a, int b) const { return add_[a][b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add_[a][neg_[b]]; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const;  // throws std::domain_error for 0
  int pow(int a, long long e) const;

  /// Smallest generator of the multiplicative group, in element encoding
  /// order.
  int primitive_element() const { return primitive_; }

  /// Modulus coefficients, ascending, length degree+1; empty for prime q.
  const std::vector<int>& modulus() const { return modulus_; }

private:
  int q_ = 0;
  int p_ = 0;
  int deg_ = 1;
  int primitive_ = 0;
  std::vector<int> modulus_;
  std::vector<std::vector<int>> add_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> neg_;
  std::vector<int> inv_;
};

}  // namespace charzero
