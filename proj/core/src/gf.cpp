#include "charzero/gf.hpp"

#include <stdexcept>
#include <string>

namespace charzero {

namespace {

// Fixed irreducible polynomials (ascending coefficients) for the non-prime
// sizes in range; x^2+x+1, x^3+x+1, x^2+2x+2, x^4+x+1.
struct StoredPoly {
  int q;
  int p;
  std::vector<int> coeffs;
};

const StoredPoly kPolys[] = {
    {4, 2, {1, 1, 1}},
    {8, 2, {1, 1, 0, 1}},
    {9, 3, {2, 2, 1}},
    {16, 2, {1, 1, 0, 0, 1}},
};

bool prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> unpack(int a, int p, int deg) {
  std::vector<int> c(deg);
  for (int i = 0; i < deg; ++i) {
    c[i] = a % p;
    a /= p;
  }
  return c;
}

int pack(const std::vector<int>& c, int p, int deg) {
  int a = 0;
  for (int i = deg - 1; i >= 0; --i) a = a * p + c[i];
  return a;
}

}  // namespace

GaloisField::GaloisField(int q) : q_(q) {
  if (q < 2) throw std::invalid_argument("field size must be at least 2");
  if (prime(q)) {
    p_ = q;
    deg_ = 1;
  } else {
    for (const auto& sp : kPolys)
      if (sp.q == q) {
        p_ = sp.p;
        deg_ = static_cast<int>(sp.coeffs.size()) - 1;
        modulus_ = sp.coeffs;
      }
    if (p_ == 0)
      throw std::invalid_argument("no stored irreducible polynomial for field size " +
                                  std::to_string(q));
  }

  add_.assign(q, std::vector<int>(q));
  mul_.assign(q, std::vector<int>(q));
  neg_.assign(q, 0);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    const auto ca = unpack(a, p_, deg_);
    for (int b = 0; b < q; ++b) {
      const auto cb = unpack(b, p_, deg_);
      std::vector<int> sum(deg_);
      for (int i = 0; i < deg_; ++i) sum[i] = (ca[i] + cb[i]) % p_;
      add_[a][b] = pack(sum, p_, deg_);

      std::vector<int> prod(2 * deg_ - 1, 0);
      for (int i = 0; i < deg_; ++i)
        for (int j = 0; j < deg_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
      // reduce modulo the (monic) stored polynomial
      for (int i = 2 * deg_ - 2; i >= deg_; --i) {
        const int c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < deg_; ++j)
          prod[i - deg_ + j] = ((prod[i - deg_ + j] - c * modulus_[j]) % p_ + p_) % p_;
      }
      prod.resize(deg_);
      mul_[a][b] = pack(prod, p_, deg_);
    }
  }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (add_[a][b] == 0) neg_[a] = b;
      if (mul_[a][b] == 1) inv_[a] = b;
    }

  for (int g = 1; g < q; ++g) {
    int x = g;
    int ord = 1;
    while (x != 1) {
      x = mul_[x][g];
      ++ord;
    }
    if (ord == q - 1) {
      primitive_ = g;
      break;
    }
  }
  if (primitive_ == 0) throw std::logic_error("no primitive element found");
}

int GaloisField::inv(int a) const {
  if (a == 0) throw std::domain_error("field inverse of zero");
  return inv_[a];
}

int GaloisField::pow(int a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int r = 1;
  while (e > 0) {
    if (e & 1) r = mul_[r][a];
    a = mul_[a][a];
    e >>= 1;
  }
  return r;
}

}  // namespace charzero
