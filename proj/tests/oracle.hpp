#pragma once

// Reference computations used only by the tests. They share no code with
// the library beyond the gmpxx number types.

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using Q = mpq_class;

/// (t+1)^alpha for integer alpha.
inline Q dirichlet_weight(long alpha, std::int64_t t) {
  mpz_class base = t + 1;
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(std::labs(alpha)));
  return alpha < 0 ? Q(mpz_class(1), p) : Q(p);
}

/// Gauss-Jordan elimination on an augmented n x (n+m) matrix. Returns false
/// when singular.
inline bool solve(std::vector<std::vector<Q>> a, std::vector<std::vector<Q>> rhs, std::vector<std::vector<Q>>& x) {
  const std::size_t n = a.size();
  const std::size_t m = rhs.empty() ? 0 : rhs[0].size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Q f = a[r][col] / a[col][col];
      for (std::size_t c = 0; c < n; ++c) a[r][c] -= f * a[col][c];
      for (std::size_t c = 0; c < m; ++c) rhs[r][c] -= f * rhs[col][c];
    }
  }
  x.assign(n, std::vector<Q>(m));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) x[r][c] = rhs[r][c] / a[r][r];
  return true;
}

/// Determinant by elimination.
inline Q det(std::vector<std::vector<Q>> a) {
  const std::size_t n = a.size();
  Q d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      d = -d;
    }
    d *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      Q f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return d;
}

struct Reduction {
  std::array<std::array<Q, 4>, 3> n;  // n[s-1][i] = w(s k + gamma_i)
  Q det_n1;
  std::array<Q, 3> e, g;
};

inline Reduction reduce(long alpha, int k, const std::array<std::int64_t, 4>& gamma) {
  Reduction out;
  for (int s = 1; s <= 3; ++s)
    for (std::size_t i = 0; i < 4; ++i) out.n[s - 1][i] = dirichlet_weight(alpha, s * k + gamma[i]);
  std::vector<std::vector<Q>> n1(3, std::vector<Q>(3)), rhs(3, std::vector<Q>(2));
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) n1[r][c] = out.n[r][c + 1];
    rhs[r][0] = -out.n[r][0];
    rhs[r][1] = r == 0 ? 1 : 0;
  }
  out.det_n1 = det(n1);
  std::vector<std::vector<Q>> x;
  solve(n1, rhs, x);
  for (std::size_t i = 0; i < 3; ++i) {
    out.e[i] = x[i][0];
    out.g[i] = x[i][1];
  }
  return out;
}

struct Constants {
  Q c1, c2, c3, c4, c5;
};

inline Constants constants(const Reduction& r, const std::array<Q, 4>& d) {
  Constants c;
  c.c1 = d[0] * r.n[0][0];
  c.c2 = r.n[1][0] / d[0];
  c.c3 = 0;
  c.c4 = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    const Q& e = r.e[i - 1];
    Q dd = -r.g[i - 1] / e;
    c.c1 += d[i] * r.n[0][i];
    c.c2 += e * e * r.n[1][i] / d[i];
    c.c3 += 2 * dd * d[i] * r.n[0][i];
    c.c4 += dd * dd * d[i] * r.n[0][i];
  }
  c.c5 = c.c1 * c.c4 - c.c3 * c.c3 / 4;
  return c;
}

inline Q b1(const Constants& c) { return 4 * c.c2 * c.c5 / c.c1; }
inline Q b2(const Constants& c) { return 4 * c.c2 * c.c4; }

/// Polynomials as degree -> complex coefficient, weighted by w(t).
using Poly = std::map<std::int64_t, std::complex<long double>>;

template <class W>
std::complex<long double> inner(const Poly& f, const Poly& g, W w) {
  std::complex<long double> s = 0;
  for (const auto& [t, c] : f) {
    auto it = g.find(t);
    if (it != g.end()) s += c * std::conj(it->second) * w(t);
  }
  return s;
}

inline Poly shift(const Poly& f, std::int64_t by) {
  Poly out;
  for (const auto& [t, c] : f) out[t + by] = c;
  return out;
}

}  // namespace oracle
