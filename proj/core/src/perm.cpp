#include "charzero/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "charzero/errors.hpp"

namespace charzero {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree())
      throw std::invalid_argument("permutation image out of range");
    if (seen[v]) throw std::invalid_argument("permutation image repeated");
    seen[v] = 1;
  }
}

Permutation Permutation::from_images_unchecked(std::vector<int> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return from_images_unchecked(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

long long Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  long long ord = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    const long long g = std::gcd(ord, len);
    if (ord / g > 2'000'000'000LL / len)
      throw InternalError("permutation order overflows 64 bits");
    ord = ord / g * len;
  }
  return ord;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  invert_into(inv, images_);
  return from_images_unchecked(std::move(inv));
}

Permutation Permutation::from_cycles(const std::string& text, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size())
    throw std::invalid_argument("cycle notation: empty string (use \"()\" for the identity)");

  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(')
      throw std::invalid_argument("cycle notation: expected '('");
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("cycle notation: expected a point number");
      long long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > degree) break;
        ++pos;
      }
      if (value < 1 || value > degree)
        throw std::invalid_argument("cycle notation: point " + std::to_string(value) +
                                    " outside [1, " + std::to_string(degree) + "]");
      const int point = static_cast<int>(value - 1);
      if (used[point])
        throw std::invalid_argument("cycle notation: point " + std::to_string(value) +
                                    " repeated");
      used[point] = 1;
      cycle.push_back(point);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
        if (pos < text.size() && text[pos] == ')')
          throw std::invalid_argument("cycle notation: trailing comma");
      }
    }
    if (pos == text.size())
      throw std::invalid_argument("cycle notation: missing ')'");
    ++pos;  // ')'
    if (cycle.size() == 1)
      throw std::invalid_argument("cycle notation: singleton cycle");
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return from_images_unchecked(std::move(img));
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out << ',';
      out << (j + 1);
      seen[j] = 1;
      j = images_[j];
      first = false;
    } while (j != i);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> out(p.degree());
  compose_into(out, p.images(), q.images());
  return Permutation::from_images_unchecked(std::move(out));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  // g^{-1} p g: point g(i) maps to g(p(i)).
  if (p.degree() != g.degree())
    throw std::invalid_argument("conjugate: degree mismatch");
  std::vector<int> out(p.degree());
  const auto& pi = p.images();
  const auto& gi = g.images();
  for (int i = 0; i < p.degree(); ++i) out[gi[i]] = gi[pi[i]];
  return Permutation::from_images_unchecked(std::move(out));
}

void compose_into(std::vector<int>& out, const std::vector<int>& p, const std::vector<int>& q) {
  const std::size_t n = p.size();
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = q[p[i]];
}

void invert_into(std::vector<int>& out, const std::vector<int>& p) {
  const std::size_t n = p.size();
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) out[p[i]] = static_cast<int>(i);
}

}  // namespace charzero
