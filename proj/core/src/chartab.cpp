#include "charzero/chartab.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "charzero/errors.hpp"
#include "charzero/rng.hpp"

namespace charzero {

namespace {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;

long long mulmod(long long a, long long b, long long p) {
  return static_cast<long long>(static_cast<__int128>(a) * b % p);
}

long long powmod(long long b, long long e, long long p) {
  long long r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

long long invmod(long long a, long long p) { return powmod(a, p - 2, p); }

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long smallest_primitive_root(long long p) {
  if (p == 2) return 1;
  std::vector<long long> qs;
  long long m = p - 1;
  for (long long q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    qs.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) qs.push_back(m);
  for (long long g = 2;; ++g) {
    bool ok = true;
    for (long long q : qs)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.  Rows past the rank are zeroed but not removed.
std::vector<int> rref(Mat& m, long long p) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    const long long inv = invmod(m[r][c], p);
    for (int j = c; j < cols; ++j) m[r][j] = mulmod(m[r][j], inv, p);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const long long f = m[i][c];
      for (int j = c; j < cols; ++j) {
        m[i][j] = (m[i][j] - mulmod(f, m[r][j], p)) % p;
        if (m[i][j] < 0) m[i][j] += p;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Kernel of a square matrix, as RREF basis rows.
Mat kernel_basis(Mat a, long long p) {
  const int n = static_cast<int>(a.size());
  const auto pivots = rref(a, p);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  Mat out;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec v(n, 0);
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - a[r][c]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

/// An invariant subspace of F_p^k kept as an RREF basis so that coordinates
/// with respect to the basis can be read off at the pivot columns.
struct Subspace {
  Mat rows;
  std::vector<int> pivots;
  int dim() const { return static_cast<int>(rows.size()); }
};

/// Matrix of the restriction of M to V in V's basis: column r holds the
/// coordinates of M * b_r.
Mat restricted_action(const Subspace& v, const Mat& m, long long p) {
  const int d = v.dim();
  const int k = static_cast<int>(m.size());
  Mat a(d, Vec(d, 0));
  for (int r = 0; r < d; ++r) {
    Vec w(k, 0);
    for (int j = 0; j < k; ++j) {
      __int128 acc = 0;
      for (int c = 0; c < k; ++c)
        if (m[j][c] != 0 && v.rows[r][c] != 0)
          acc += static_cast<__int128>(m[j][c]) * v.rows[r][c];
      w[j] = static_cast<long long>(acc % p);
    }
    for (int s = 0; s < d; ++s) a[s][r] = w[v.pivots[s]];
  }
  return a;
}

/// Splits V into the eigenspaces of M restricted to V.  The class matrices
/// span a commutative algebra that is diagonalizable over F_p (the exponent
/// divides p - 1), so the eigenspace dimensions always add up to dim V.
std::vector<Subspace> split_with(const Subspace& v, const Mat& m, long long p) {
  const int d = v.dim();
  const int k = static_cast<int>(v.rows[0].size());
  const Mat a = restricted_action(v, m, p);
  std::vector<Subspace> parts;
  int found = 0;
  for (long long lam = 0; lam < p && found < d; ++lam) {
    Mat b = a;
    for (int i = 0; i < d; ++i) b[i][i] = (b[i][i] - lam + p) % p;
    Mat ker = kernel_basis(std::move(b), p);
    if (ker.empty()) continue;
    Mat amb;
    for (const auto& kv : ker) {
      Vec row(k, 0);
      for (int c = 0; c < d; ++c) {
        if (kv[c] == 0) continue;
        for (int j = 0; j < k; ++j)
          row[j] = static_cast<long long>(
              (row[j] + static_cast<__int128>(kv[c]) * v.rows[c][j]) % p);
      }
      amb.push_back(std::move(row));
    }
    auto piv = rref(amb, p);
    amb.resize(piv.size());
    found += static_cast<int>(amb.size());
    parts.push_back({std::move(amb), std::move(piv)});
  }
  if (found != d) throw InternalError("eigenspace split lost dimensions");
  return parts;
}

Mat slice_mod_p(const Classes& cls, int i, long long p) {
  const auto& slice = cls.constants_slice(i);
  const int k = cls.count();
  Mat m(k, Vec(k, 0));
  for (int j = 0; j < k; ++j)
    for (int kk = 0; kk < k; ++kk) m[j][kk] = slice[j][kk] % p;
  return m;
}

/// Simultaneous eigenvectors of all class matrices, normalized so the
/// identity-class coordinate is 1, sorted lexicographically.  Row j of the
/// result is the central character i -> |C_i| chi(g_i) / chi(1) mod p of one
/// irreducible.
std::vector<Vec> dixon_eigenvectors(const Classes& cls, long long p,
                                    const ChartabOptions& opts) {
  const int k = cls.count();
  std::vector<Subspace> spaces;
  {
    Mat id(k, Vec(k, 0));
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) {
      id[i][i] = 1;
      piv[i] = i;
    }
    spaces.push_back({std::move(id), std::move(piv)});
  }

  auto all_split = [&spaces] {
    for (const auto& s : spaces)
      if (s.dim() > 1) return false;
    return true;
  };
  auto apply_operator = [&spaces, p](const Mat& m) {
    std::vector<Subspace> next;
    next.reserve(spaces.size());
    for (auto& v : spaces) {
      if (v.dim() == 1) {
        next.push_back(std::move(v));
        continue;
      }
      for (auto& part : split_with(v, m, p)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  };

  if (!opts.force_random_split) {
    for (int i = 1; i < k && !all_split(); ++i) apply_operator(slice_mod_p(cls, i, p));
  }
  if (!all_split()) {
    // Random combinations of the class matrices.  Reached only on request:
    // the sequential pass always separates all central characters (two
    // distinct ones differ on some class).  Kept as a guarded fallback.
    Rng rng(opts.seed);
    std::vector<Mat> slices;
    for (int i = 1; i < k; ++i) slices.push_back(slice_mod_p(cls, i, p));
    for (int attempt = 0; attempt < 64 && !all_split(); ++attempt) {
      Mat m(k, Vec(k, 0));
      for (const auto& s : slices) {
        const long long c =
            static_cast<long long>(rng.below(static_cast<unsigned long long>(p)));
        if (c == 0) continue;
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b)
            m[a][b] = static_cast<long long>(
                (m[a][b] + static_cast<__int128>(c) * s[a][b]) % p);
      }
      apply_operator(m);
    }
    if (!all_split())
      throw InternalError("class-matrix eigenspace splitting did not terminate");
  }

  std::vector<Vec> out;
  out.reserve(spaces.size());
  for (const auto& v : spaces) {
    Vec w = v.rows[0];
    if (w[0] == 0)
      throw InternalError("central character with zero identity-class coordinate");
    const long long inv = invmod(w[0], p);
    for (auto& x : w) x = mulmod(x, inv, p);
    out.push_back(std::move(w));
  }
  if (static_cast<int>(out.size()) != k)
    throw InternalError("wrong number of central characters");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

long long choose_dixon_prime(long long order, long long exponent) {
  if (order < 1 || exponent < 1)
    throw std::invalid_argument("choose_dixon_prime: arguments must be positive");
  for (long long p = exponent + 1;; p += exponent) {
    if (static_cast<__int128>(p) * p <= static_cast<__int128>(4) * order) continue;
    if (is_prime(p)) return p;
  }
}

CharacterTable character_table(const Group& g, const ChartabOptions& opts) {
  if (g.order() > opts.order_cap) {
    std::ostringstream msg;
    msg << "character table: group order " << g.order() << " exceeds cap "
        << opts.order_cap;
    throw CapExceededError(msg.str());
  }
  return character_table(conjugacy_classes(g, opts.class_options), opts);
}

CharacterTable character_table(const Classes& cls, const ChartabOptions& opts) {
  const long long n = cls.group().order();
  if (n > opts.order_cap) {
    std::ostringstream msg;
    msg << "character table: group order " << n << " exceeds cap " << opts.order_cap;
    throw CapExceededError(msg.str());
  }
  const int k = cls.count();
  if (k > opts.class_cap) {
    std::ostringstream msg;
    msg << "character table: " << k << " conjugacy classes exceed cap "
        << opts.class_cap;
    throw CapExceededError(msg.str());
  }

  const long long e = cls.exponent();
  const long long p = choose_dixon_prime(n, e);
  const auto vecs = dixon_eigenvectors(cls, p, opts);

  std::vector<long long> csize_inv(k);
  for (int i = 0; i < k; ++i) csize_inv[i] = invmod(cls.size(i) % p, p);

  // chi(1)^2 = |G| / sum_i w_i w_{i*} / |C_i|, and the true degree is the
  // unique d in [1, sqrt(|G|)] with that square mod p (p > 2 sqrt(|G|)).
  std::vector<long long> degrees(k);
  std::vector<Vec> rows_mod(k, Vec(k));
  for (int i = 0; i < k; ++i) {
    const Vec& w = vecs[i];
    long long t = 0;
    for (int j = 0; j < k; ++j)
      t = (t + mulmod(mulmod(w[j], w[cls.inverse_class(j)], p), csize_inv[j], p)) % p;
    if (t == 0) throw InternalError("degenerate norm for central character");
    const long long dsq = mulmod(n % p, invmod(t, p), p);
    long long d = 0;
    for (long long c = 1; c * c <= n; ++c)
      if (mulmod(c, c, p) == dsq) {
        d = c;
        break;
      }
    if (d == 0) throw InternalError("no degree matches central character norm");
    degrees[i] = d;
    for (int j = 0; j < k; ++j)
      rows_mod[i][j] = mulmod(mulmod(d % p, w[j], p), csize_inv[j], p);
  }

  // Power map and the order-e subgroup of F_p^* used for lifting.
  std::vector<std::vector<int>> pmap(static_cast<std::size_t>(e),
                                     std::vector<int>(k));
  {
    std::vector<Permutation> pw;
    pw.reserve(k);
    for (int j = 0; j < k; ++j)
      pw.push_back(Permutation::identity(cls.group().degree()));
    for (long long s = 0; s < e; ++s) {
      for (int j = 0; j < k; ++j) {
        pmap[static_cast<std::size_t>(s)][j] = cls.class_of(pw[j]);
        pw[j] = compose(pw[j], cls.rep(j));
      }
    }
  }
  const long long z = powmod(smallest_primitive_root(p), (p - 1) / e, p);
  std::vector<long long> zpow(static_cast<std::size_t>(e));
  zpow[0] = 1;
  for (long long u = 1; u < e; ++u)
    zpow[static_cast<std::size_t>(u)] = mulmod(zpow[static_cast<std::size_t>(u - 1)], z, p);
  const long long inv_e = invmod(e % p, p);

  // Lift each modular value to Z[zeta_e]: m_t counts the eigenvalues
  // zeta_e^t of the representing matrix, recovered by a discrete Fourier
  // sum over the power map, and must total the degree.
  struct Row {
    long long degree;
    std::vector<Cyclotomic> vals;
  };
  std::vector<Row> rows(k);
  Vec f(static_cast<std::size_t>(e));
  for (int i = 0; i < k; ++i) {
    rows[i].degree = degrees[i];
    rows[i].vals.reserve(k);
    for (int j = 0; j < k; ++j) {
      for (long long s = 0; s < e; ++s)
        f[static_cast<std::size_t>(s)] =
            rows_mod[i][pmap[static_cast<std::size_t>(s)][j]];
      std::vector<long long> mult(static_cast<std::size_t>(e), 0);
      long long msum = 0;
      for (long long t = 0; t < e; ++t) {
        long long acc = 0;
        for (long long s = 0; s < e; ++s) {
          const long long u = (e - (t * s) % e) % e;
          acc = (acc + static_cast<__int128>(f[static_cast<std::size_t>(s)]) *
                           zpow[static_cast<std::size_t>(u)]) %
                p;
        }
        const long long m = mulmod(acc, inv_e, p);
        if (m > degrees[i])
          throw InternalError("lifted root-of-unity multiplicity exceeds degree");
        mult[static_cast<std::size_t>(t)] = m;
        msum += m;
      }
      if (msum != degrees[i])
        throw InternalError("root-of-unity multiplicities do not sum to degree");
      rows[i].vals.push_back(Cyclotomic::from_coeffs(e, mult));
    }
  }

  std::sort(rows.begin(), rows.end(), [k](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (int j = 0; j < k; ++j)
      if (a.vals[j].coeffs() != b.vals[j].coeffs())
        return a.vals[j].coeffs() < b.vals[j].coeffs();
    return false;
  });

  CharacterTable table;
  table.classes = cls;
  table.exponent = e;
  table.prime = p;
  table.degrees.reserve(k);
  table.values.reserve(k);
  for (auto& r : rows) {
    table.degrees.push_back(r.degree);
    table.values.push_back(std::move(r.vals));
  }

  const auto report = verify_orthogonality(table);
  if (!report.ok())
    throw InternalError("character table failed verification: " + report.detail);
  return table;
}

OrthogonalityReport verify_orthogonality(const CharacterTable& table) {
  OrthogonalityReport rep;
  rep.degree_equation = true;
  rep.row_orthogonality = true;
  rep.column_orthogonality = true;
  const int k = table.k();
  const long long n = table.order();
  const long long e = table.exponent;

  long long dsum = 0;
  for (long long d : table.degrees) dsum += d * d;
  if (dsum != n) {
    rep.degree_equation = false;
    std::ostringstream msg;
    msg << "squared degrees sum to " << dsum << ", group order is " << n;
    rep.detail = msg.str();
  }

  std::vector<std::vector<Cyclotomic>> conj(k, std::vector<Cyclotomic>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) conj[i][j] = table.values[i][j].conjugated();

  for (int i = 0; i < k && rep.row_orthogonality; ++i) {
    for (int i2 = i; i2 < k && rep.row_orthogonality; ++i2) {
      Cyclotomic acc = Cyclotomic::integer(0, e);
      for (int j = 0; j < k; ++j)
        acc = acc + table.values[i][j] * conj[i2][j] * table.classes.size(j);
      const long long expected = i == i2 ? n : 0;
      if (!(acc == Cyclotomic::integer(expected, e))) {
        rep.row_orthogonality = false;
        std::ostringstream msg;
        msg << "row inner product (" << i << "," << i2 << ") = " << acc.str()
            << ", expected " << expected;
        if (rep.detail.empty()) rep.detail = msg.str();
      }
    }
  }

  for (int j = 0; j < k && rep.column_orthogonality; ++j) {
    for (int j2 = j; j2 < k && rep.column_orthogonality; ++j2) {
      Cyclotomic acc = Cyclotomic::integer(0, e);
      for (int i = 0; i < k; ++i) acc = acc + table.values[i][j] * conj[i][j2];
      const long long expected = j == j2 ? n / table.classes.size(j) : 0;
      if (!(acc == Cyclotomic::integer(expected, e))) {
        rep.column_orthogonality = false;
        std::ostringstream msg;
        msg << "column inner product (" << j << "," << j2 << ") = " << acc.str()
            << ", expected " << expected;
        if (rep.detail.empty()) rep.detail = msg.str();
      }
    }
  }
  return rep;
}

}  // namespace charzero
