#include "charzero/constructions.hpp"

#include <array>
#include <map>
#include <mutex>
#include <sstream>

#include "charzero/errors.hpp"
#include "charzero/gf.hpp"
#include "charzero/structure.hpp"

namespace charzero {

namespace {

void assert_order(const Group& g, long long expected) {
  if (g.order() != expected) {
    std::ostringstream msg;
    msg << "constructed group " << g.name() << " has order " << g.order()
        << ", expected " << expected;
    throw InternalError(msg.str());
  }
}

/// Right-regular action of a multiplication law on [0, n): the permutation of
/// a generator h sends g to g*h, which matches the library's left-to-right
/// composition.
template <typename MulFn>
Group regular_group(int n, const std::vector<int>& gen_elements, MulFn mul,
                    std::string name) {
  std::vector<Permutation> gens;
  gens.reserve(gen_elements.size());
  for (int h : gen_elements) {
    std::vector<int> img(n);
    for (int g = 0; g < n; ++g) img[g] = mul(g, h);
    gens.push_back(Permutation(std::move(img)));
  }
  return Group(n, std::move(gens), std::move(name));
}

// ---- extraspecial 2-groups ----
// Elements (x, y, z) in F_2^k x F_2^k x F_2 packed as bits z | x | y with the
// product twisted by a bilinear cocycle: z'' = z + z' + f((x,y); (x',y')).
// f = sum_i y_i x'_i gives the plus type (central product of D8 factors);
// adding x_1 x'_1 + y_1 y'_1 flips the squaring form's Arf invariant and
// gives the minus type (one Q8 factor).
int esp2_mul(int k, bool minus, int a, int b) {
  const int mask = (1 << k) - 1;
  const int az = a & 1, ax = (a >> 1) & mask, ay = (a >> (1 + k)) & mask;
  const int bz = b & 1, bx = (b >> 1) & mask, by = (b >> (1 + k)) & mask;
  int f = __builtin_popcount(ay & bx) & 1;
  if (minus) f ^= (ax & bx & 1) ^ (ay & by & 1);
  const int z = az ^ bz ^ f;
  return ((ay ^ by) << (1 + k)) | ((ax ^ bx) << 1) | z;
}

// ---- extraspecial 3-groups of exponent 3 ----
// Same shape over F_3 with f = x . y' (the Heisenberg cocycle); every cube
// collapses to the identity.
int exp3_mul(int k, int a, int b) {
  std::array<int, 32> da{}, db{};
  const int len = 2 * k + 1;
  for (int i = 0; i < len; ++i) {
    da[i] = a % 3;
    a /= 3;
    db[i] = b % 3;
    b /= 3;
  }
  int f = 0;
  for (int i = 0; i < k; ++i) f += da[1 + i] * db[1 + k + i];
  int out = 0;
  for (int i = len - 1; i >= 1; --i) out = out * 3 + (da[i] + db[i]) % 3;
  out = out * 3 + (da[0] + db[0] + f) % 3;
  return out;
}

// ---- extraspecial 27 of exponent 9 ----
// C9 extended by the order-3 automorphism a -> a^4; element (i, j) packed as
// j*9 + i.
int exp9_mul(int a, int b) {
  static const int pow4[3] = {1, 4, 7};
  const int ia = a % 9, ja = a / 9;
  const int ib = b % 9, jb = b / 9;
  return ((ja + jb) % 3) * 9 + (ia + ib * pow4[ja]) % 9;
}

// ---- central product for exponent-9 type at k >= 2 ----
// Pairs (u, v) from the exponent-9 order-27 group and the exponent-3 group of
// order 3^(2k-1), with the two centers identified.  Each coset has a unique
// representative whose exp3 central digit is zero; the exp3 z-overflow is
// absorbed into the exp9 center (its element 3 = the central generator).
int exp9_cp_mul(int k, int a, int b) {
  const int ua = a % 27, ub = b % 27;
  const int va = (a / 27) * 3, vb = (b / 27) * 3;
  int u = exp9_mul(ua, ub);
  int v = exp3_mul(k - 1, va, vb);
  const int zv = v % 3;
  u = (u / 9) * 9 + (u % 9 + 3 * zv) % 9;
  return u + 27 * (v / 3);
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// ---- projective line machinery ----
// Points of P^1(F_q): x in [0, q) is (x : 1), q is (1 : 0).  Matrices act on
// row vectors and the image is normalized by its last nonzero coordinate.
using Mat2 = std::array<std::array<int, 2>, 2>;

int apply_projective(const GaloisField& f, const Mat2& m, int pt) {
  const int q = f.size();
  const int a = pt == q ? 1 : pt;
  const int b = pt == q ? 0 : 1;
  const int na = f.add(f.mul(a, m[0][0]), f.mul(b, m[1][0]));
  const int nb = f.add(f.mul(a, m[0][1]), f.mul(b, m[1][1]));
  if (nb != 0) return f.mul(na, f.inv(nb));
  if (na == 0) throw InternalError("projective image of a point is zero");
  return q;
}

Permutation projective_perm(const GaloisField& f, const Mat2& m) {
  std::vector<int> img(f.size() + 1);
  for (int pt = 0; pt <= f.size(); ++pt) img[pt] = apply_projective(f, m, pt);
  return Permutation(std::move(img));
}

std::vector<Permutation> pgl2_generators(const GaloisField& f) {
  const int w = f.primitive_element();
  const Mat2 shift{{{1, 0}, {1, 1}}};     // x -> x + 1
  const Mat2 scale{{{w, 0}, {0, 1}}};     // x -> w x
  const Mat2 weyl{{{0, 1}, {1, 0}}};      // x -> 1/x, swapping 0 and infinity
  return {projective_perm(f, shift), projective_perm(f, scale),
          projective_perm(f, weyl)};
}

}  // namespace

Group trivial_group() { return Group::trivial(1, "trivial"); }

Group cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: n must be positive");
  if (n == 1) return Group::trivial(1, "C1");
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  Group g(n, {Permutation(std::move(img))}, "C" + std::to_string(n));
  assert_order(g, n);
  return g;
}

Group dihedral(int n) {
  if (n < 3) throw std::invalid_argument("dihedral: n must be at least 3");
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  Group g(n, {Permutation(std::move(rot)), Permutation(std::move(refl))},
          "dihedral(" + std::to_string(n) + ")");
  assert_order(g, 2LL * n);
  return g;
}

Group symmetric(int n) {
  if (n < 1) throw std::invalid_argument("symmetric: n must be positive");
  const std::string name = "S" + std::to_string(n);
  if (n == 1) return Group::trivial(1, name);
  std::vector<int> swap01(n), cyc(n);
  for (int i = 0; i < n; ++i) {
    swap01[i] = i;
    cyc[i] = (i + 1) % n;
  }
  swap01[0] = 1;
  swap01[1] = 0;
  Group g(n, {Permutation(std::move(swap01)), Permutation(std::move(cyc))}, name);
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  assert_order(g, f);
  return g;
}

Group alternating(int n) {
  if (n < 1) throw std::invalid_argument("alternating: n must be positive");
  const std::string name = "A" + std::to_string(n);
  if (n <= 2) return Group::trivial(n, name);
  std::vector<int> three(n), cyc(n);
  for (int i = 0; i < n; ++i) {
    three[i] = i < 3 ? (i + 1) % 3 : i;
    cyc[i] = i;
  }
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  } else {
    for (int i = 1; i < n; ++i) cyc[i] = i == n - 1 ? 1 : i + 1;
  }
  Group g(n, {Permutation(std::move(three)), Permutation(std::move(cyc))}, name);
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  assert_order(g, f / 2);
  return g;
}

Group extraspecial(int p, int k, ExtraspecialType type) {
  if (k < 1) throw std::invalid_argument("extraspecial: k must be positive");
  if (p == 2 && type != ExtraspecialType::plus && type != ExtraspecialType::minus)
    throw std::invalid_argument("extraspecial: p=2 takes type plus or minus");
  if (p == 3 && type != ExtraspecialType::exp3 && type != ExtraspecialType::exp9)
    throw std::invalid_argument("extraspecial: p=3 takes type exp3 or exp9");
  if (p != 2 && p != 3) throw std::invalid_argument("extraspecial: p must be 2 or 3");
  const long long order = ipow(p, 2 * k + 1);
  if (order > 2048)
    throw std::invalid_argument("extraspecial: order exceeds the 2048 bound");
  const int n = static_cast<int>(order);

  std::string name = "extraspecial(" + std::to_string(p) + "," + std::to_string(k) + ",";
  switch (type) {
    case ExtraspecialType::plus: name += "plus)"; break;
    case ExtraspecialType::minus: name += "minus)"; break;
    case ExtraspecialType::exp3: name += "exp3)"; break;
    case ExtraspecialType::exp9: name += "exp9)"; break;
  }

  Group g;
  if (p == 2) {
    const bool minus = type == ExtraspecialType::minus;
    std::vector<int> gens;
    for (int i = 0; i < k; ++i) {
      gens.push_back(1 << (1 + i));
      gens.push_back(1 << (1 + k + i));
    }
    g = regular_group(n, gens, [k, minus](int a, int b) { return esp2_mul(k, minus, a, b); },
                      name);
  } else if (type == ExtraspecialType::exp3) {
    std::vector<int> gens;
    for (int i = 0; i < k; ++i) {
      gens.push_back(static_cast<int>(ipow(3, 1 + i)));
      gens.push_back(static_cast<int>(ipow(3, 1 + k + i)));
    }
    g = regular_group(n, gens, [k](int a, int b) { return exp3_mul(k, a, b); }, name);
  } else if (k == 1) {
    g = regular_group(27, {1, 9}, [](int a, int b) { return exp9_mul(a, b); }, name);
  } else {
    std::vector<int> gens{1, 9};  // the exponent-9 block
    for (int i = 0; i < k - 1; ++i) {
      gens.push_back(27 * static_cast<int>(ipow(3, i)));
      gens.push_back(27 * static_cast<int>(ipow(3, k - 1 + i)));
    }
    g = regular_group(n, gens, [k](int a, int b) { return exp9_cp_mul(k, a, b); }, name);
  }
  assert_order(g, order);
  return g;
}

Group agl1(int q) {
  const GaloisField f(q);
  std::vector<Permutation> gens;
  for (int i = 0; i < f.degree(); ++i) {
    const int basis = static_cast<int>(ipow(f.characteristic(), i));
    std::vector<int> img(q);
    for (int x = 0; x < q; ++x) img[x] = f.add(x, basis);
    gens.push_back(Permutation(std::move(img)));
  }
  const int w = f.primitive_element();
  std::vector<int> img(q);
  for (int x = 0; x < q; ++x) img[x] = f.mul(w, x);
  gens.push_back(Permutation(std::move(img)));
  Group g(q, std::move(gens), "agl1(" + std::to_string(q) + ")");
  assert_order(g, static_cast<long long>(q) * (q - 1));
  return g;
}

Group pgl2(int q) {
  if (q < 4 || q > 13) throw std::invalid_argument("pgl2: q must be between 4 and 13");
  const GaloisField f(q);
  Group g(q + 1, pgl2_generators(f), "pgl2(" + std::to_string(q) + ")");
  assert_order(g, static_cast<long long>(q) * (q - 1) * (q + 1));
  return g;
}

Group psl2(int q) {
  if (q < 4 || q > 13) throw std::invalid_argument("psl2: q must be between 4 and 13");
  const std::string name = "psl2(" + std::to_string(q) + ")";
  if (q % 2 == 0) {
    const GaloisField f(q);
    Group g(q + 1, pgl2_generators(f), name);
    assert_order(g, static_cast<long long>(q) * (q - 1) * (q + 1));
    return g;
  }
  Group g = derived_subgroup(pgl2(q));
  g.set_name(name);
  assert_order(g, static_cast<long long>(q) * (q - 1) * (q + 1) / 2);
  return g;
}

Group pgammal2_8() {
  const GaloisField f(8);
  auto gens = pgl2_generators(f);
  std::vector<int> frob(9);
  for (int x = 0; x < 8; ++x) frob[x] = f.mul(x, x);
  frob[8] = 8;
  gens.push_back(Permutation(std::move(frob)));
  Group g(9, std::move(gens), "pgammal2(8)");
  assert_order(g, 1512);
  return g;
}

Group psl3_7() {
  // Points of P^2(F_7) normalized by the last nonzero coordinate:
  // (a : b : 1) -> 7a + b, (a : 1 : 0) -> 49 + a, (1 : 0 : 0) -> 56.
  constexpr int q = 7;
  auto point_index = [](int a, int b, int c) {
    if (c != 0) {
      // scale to c = 1
      static const int inv7[7] = {0, 1, 4, 5, 2, 3, 6};
      const int ic = inv7[c];
      return (a * ic % q) * q + (b * ic % q);
    }
    if (b != 0) {
      static const int inv7[7] = {0, 1, 4, 5, 2, 3, 6};
      return 49 + a * inv7[b] % q;
    }
    return 56;
  };
  auto point_coords = [](int idx, int& a, int& b, int& c) {
    if (idx < 49) {
      a = idx / q;
      b = idx % q;
      c = 1;
    } else if (idx < 56) {
      a = idx - 49;
      b = 1;
      c = 0;
    } else {
      a = 1;
      b = 0;
      c = 0;
    }
  };
  using Mat3 = std::array<std::array<int, 3>, 3>;
  auto transvection_perm = [&](int r, int s) {
    // identity plus the unit matrix E_{rs}, acting on row vectors
    Mat3 m{};
    for (int i = 0; i < 3; ++i) m[i][i] = 1;
    m[r][s] = (m[r][s] + 1) % q;
    std::vector<int> img(57);
    for (int idx = 0; idx < 57; ++idx) {
      int a, b, c;
      point_coords(idx, a, b, c);
      const int v[3] = {a, b, c};
      int w[3] = {0, 0, 0};
      for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) w[j] = (w[j] + v[i] * m[i][j]) % q;
      img[idx] = point_index(w[0], w[1], w[2]);
    }
    return Permutation(std::move(img));
  };
  Group g(57,
          {transvection_perm(0, 1), transvection_perm(1, 0), transvection_perm(1, 2),
           transvection_perm(2, 1)},
          "psl3(7)");
  assert_order(g, 1876896);
  return g;
}

Group vector_semidirect_cyclic(int p, int k,
                               const std::vector<std::vector<int>>& matrix, int m) {
  if (p < 2 || k < 1 || m < 1)
    throw std::invalid_argument("vector_semidirect_cyclic: bad parameters");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("vector_semidirect_cyclic: p must be prime");
  if (static_cast<int>(matrix.size()) != k)
    throw std::invalid_argument("vector_semidirect_cyclic: matrix must be k by k");
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != k)
      throw std::invalid_argument("vector_semidirect_cyclic: matrix must be k by k");

  using Mat = std::vector<std::vector<int>>;
  auto mat_mul = [p, k](const Mat& a, const Mat& b) {
    Mat c(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i)
      for (int l = 0; l < k; ++l)
        for (int j = 0; j < k; ++j) c[i][j] = (c[i][j] + a[i][l] * b[l][j]) % p;
    return c;
  };
  Mat reduced(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) reduced[i][j] = ((matrix[i][j] % p) + p) % p;
  auto is_identity = [k](const Mat& a) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (a[i][j] != (i == j ? 1 : 0)) return false;
    return true;
  };
  Mat pw = reduced;
  for (int t = 1; t < m; ++t) {
    if (is_identity(pw))
      throw std::invalid_argument("vector_semidirect_cyclic: matrix order below m");
    pw = mat_mul(pw, reduced);
  }
  if (!is_identity(pw))
    throw std::invalid_argument("vector_semidirect_cyclic: matrix order is not m");

  const long long n_ll = ipow(p, k);
  if (n_ll > kEnumerationCap)
    throw std::invalid_argument("vector_semidirect_cyclic: degree too large");
  const int n = static_cast<int>(n_ll);
  auto unpack_digit = [p](int v, int i) {
    while (i-- > 0) v /= p;
    return v % p;
  };
  std::vector<Permutation> gens;
  for (int i = 0; i < k; ++i) {
    const int step = static_cast<int>(ipow(p, i));
    std::vector<int> img(n);
    for (int v = 0; v < n; ++v) {
      const int d = unpack_digit(v, i);
      img[v] = v + (d + 1 == p ? (1 - p) * step : step);
    }
    gens.push_back(Permutation(std::move(img)));
  }
  if (m > 1) {
    std::vector<int> img(n);
    for (int v = 0; v < n; ++v) {
      int w = 0;
      for (int j = k - 1; j >= 0; --j) {
        int acc = 0;
        for (int i = 0; i < k; ++i) acc += unpack_digit(v, i) * reduced[i][j];
        w = w * p + acc % p;
      }
      img[v] = w;
    }
    gens.push_back(Permutation(std::move(img)));
  }
  std::ostringstream name;
  name << "vector_semidirect(" << p << "," << k << "," << m << ")";
  Group g(n, std::move(gens), name.str());
  assert_order(g, n_ll * m);
  return g;
}

Group elementary_abelian(int p, int k) {
  std::vector<std::vector<int>> id(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i) id[i][i] = 1;
  Group g = vector_semidirect_cyclic(p, k, id, 1);
  g.set_name("elementary_abelian(" + std::to_string(p) + "," + std::to_string(k) + ")");
  return g;
}

Group g75() {
  Group g = vector_semidirect_cyclic(5, 2, {{0, 1}, {4, 4}}, 3);
  g.set_name("g75");
  assert_order(g, 75);
  return g;
}

Group psl37_sylow3_normalizer(std::uint64_t seed) {
  static std::mutex mutex;
  static std::map<std::uint64_t, Group> cache;
  std::lock_guard<std::mutex> lock(mutex);
  const auto it = cache.find(seed);
  if (it != cache.end()) return it->second;
  const Group s = psl3_7();
  const Group q = sylow_subgroup(s, 3, seed);
  Group n = normalizer(s, q);
  n.set_name("psl37_sylow3_normalizer");
  cache.emplace(seed, n);
  return n;
}

Group construct_by_name(const std::string& name, const std::vector<long long>& params) {
  auto arity = [&](std::size_t want) {
    if (params.size() != want) {
      std::ostringstream msg;
      msg << "constructor " << name << " takes " << want << " parameter(s), got "
          << params.size();
      throw std::invalid_argument(msg.str());
    }
  };
  auto as_int = [](long long v) { return static_cast<int>(v); };

  if (name == "trivial") {
    arity(0);
    return trivial_group();
  }
  if (name == "cyclic") {
    arity(1);
    return cyclic(as_int(params[0]));
  }
  if (name == "dihedral") {
    arity(1);
    return dihedral(as_int(params[0]));
  }
  if (name == "symmetric") {
    arity(1);
    return symmetric(as_int(params[0]));
  }
  if (name == "alternating") {
    arity(1);
    return alternating(as_int(params[0]));
  }
  if (name == "extraspecial") {
    arity(3);
    const int p = as_int(params[0]);
    const long long t = params[2];
    if (t != 0 && t != 1)
      throw std::invalid_argument("extraspecial: type parameter must be 0 or 1");
    const ExtraspecialType type =
        p == 2 ? (t == 0 ? ExtraspecialType::plus : ExtraspecialType::minus)
               : (t == 0 ? ExtraspecialType::exp3 : ExtraspecialType::exp9);
    return extraspecial(p, as_int(params[1]), type);
  }
  if (name == "agl1") {
    arity(1);
    return agl1(as_int(params[0]));
  }
  if (name == "psl2") {
    arity(1);
    return psl2(as_int(params[0]));
  }
  if (name == "pgl2") {
    arity(1);
    return pgl2(as_int(params[0]));
  }
  if (name == "pgammal2_8") {
    arity(0);
    return pgammal2_8();
  }
  if (name == "psl3_7") {
    arity(0);
    return psl3_7();
  }
  if (name == "elementary_abelian") {
    arity(2);
    return elementary_abelian(as_int(params[0]), as_int(params[1]));
  }
  if (name == "vector_semidirect_cyclic") {
    if (params.size() < 3)
      throw std::invalid_argument(
          "vector_semidirect_cyclic takes p, k, m, then k*k matrix entries");
    const int p = as_int(params[0]), k = as_int(params[1]), m = as_int(params[2]);
    if (static_cast<int>(params.size()) != 3 + k * k)
      throw std::invalid_argument(
          "vector_semidirect_cyclic takes p, k, m, then k*k matrix entries");
    std::vector<std::vector<int>> mat(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) mat[i][j] = as_int(params[3 + i * k + j]);
    return vector_semidirect_cyclic(p, k, mat, m);
  }
  if (name == "g75") {
    arity(0);
    return g75();
  }
  if (name == "psl37_sylow3_normalizer") {
    if (params.size() > 1)
      throw std::invalid_argument("psl37_sylow3_normalizer takes an optional seed");
    return psl37_sylow3_normalizer(params.empty() ? 42 : static_cast<std::uint64_t>(params[0]));
  }
  throw std::invalid_argument("unknown constructor: " + name);
}

CorpusEntry realize_constructed(const ManifestEntry& entry) {
  if (entry.name == "file")
    throw std::invalid_argument("file entries are realized by the io layer");
  CorpusEntry out;
  out.group = construct_by_name(entry.name, entry.params);
  std::ostringstream prov;
  prov << entry.name << "(";
  for (std::size_t i = 0; i < entry.params.size(); ++i) {
    if (i > 0) prov << ",";
    prov << entry.params[i];
  }
  prov << ")";
  out.provenance = prov.str();
  out.expected_order = entry.expected_order;
  out.expected_anz = entry.expected_anz;
  out.expected_acd = entry.expected_acd;
  return out;
}

std::vector<ManifestEntry> builtin_manifest() {
  std::vector<ManifestEntry> m;
  auto add = [&m](std::string name, std::vector<long long> params,
                  std::optional<long long> order = std::nullopt,
                  std::optional<Rational> anz = std::nullopt,
                  std::optional<Rational> acd = std::nullopt) {
    ManifestEntry e;
    e.name = std::move(name);
    e.params = std::move(params);
    e.expected_order = order;
    e.expected_anz = anz;
    e.expected_acd = acd;
    m.push_back(std::move(e));
  };

  add("trivial", {}, 1, Rational(0), Rational(1));
  for (long long n = 2; n <= 12; ++n) add("cyclic", {n}, n, Rational(0), Rational(1));
  add("elementary_abelian", {5, 2}, 25, Rational(0), Rational(1));
  add("dihedral", {4}, 8, Rational(3, 5), Rational(6, 5));
  add("dihedral", {5}, 10, Rational(1, 2), Rational(3, 2));
  add("dihedral", {6}, 12, Rational(2, 3), Rational(4, 3));
  add("symmetric", {3}, 6, Rational(1, 3), Rational(4, 3));
  add("symmetric", {4}, 24, Rational(4, 5), Rational(2));
  add("symmetric", {5}, 120, Rational(10, 7), Rational(26, 7));
  add("alternating", {4}, 12, Rational(1, 2), Rational(3, 2));
  add("alternating", {5}, 60, Rational(1), Rational(16, 5));
  for (long long k = 1; k <= 3; ++k) {
    const long long fourk = 1LL << (2 * k), twok = 1LL << k;
    const Rational anz(fourk - 1, fourk + 1);
    const Rational acd(fourk + twok, fourk + 1);
    add("extraspecial", {2, k, 0}, 2 * fourk, anz, acd);
    add("extraspecial", {2, k, 1}, 2 * fourk, anz, acd);
  }
  add("extraspecial", {3, 1, 0}, 27, Rational(16, 11), Rational(15, 11));
  add("extraspecial", {3, 1, 1}, 27, Rational(16, 11), Rational(15, 11));
  for (long long q : {4, 5, 7, 8, 9, 11, 13})
    add("agl1", {q}, q * (q - 1), Rational(q - 2, q), Rational(2 * (q - 1), q));
  for (long long q : {5, 7, 9, 11}) {
    const long long pgl_order = q * (q - 1) * (q + 1);
    add("psl2", {q}, pgl_order / 2);
    add("pgl2", {q}, pgl_order);
  }
  add("pgammal2_8", {}, 1512);
  add("g75", {}, 75, Rational(16, 11), Rational(27, 11));
  add("psl37_sylow3_normalizer", {}, std::nullopt, Rational(7, 6), std::nullopt);
  return m;
}

}  // namespace charzero
