#include "twistchar/quadform.hpp"

#include <stdexcept>

namespace twistchar {

namespace {

void check_symmetric_square(const RationalMatrix& m, const char* where) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::domain_error(std::string(where) + ": matrix not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m[i][j] != m[j][i]) throw std::domain_error(std::string(where) + ": matrix not symmetric");
}

}  // namespace

RationalMatrix matrix_inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::domain_error("matrix_inverse: matrix not square");
  RationalMatrix a = m;
  RationalMatrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("matrix_inverse: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

LdltResult ldlt(const RationalMatrix& m) {
  check_symmetric_square(m, "ldlt");
  const std::size_t n = m.size();
  LdltResult r;
  r.lower.assign(n, std::vector<Rational>(n, 0));
  r.diag.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) r.lower[i][i] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    Rational d = m[j][j];
    for (std::size_t s = 0; s < j; ++s) d -= r.lower[j][s] * r.lower[j][s] * r.diag[s];
    if (d <= 0) throw std::domain_error("ldlt: matrix is not positive definite");
    r.diag[j] = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational v = m[i][j];
      for (std::size_t s = 0; s < j; ++s) v -= r.lower[i][s] * r.lower[j][s] * r.diag[s];
      r.lower[i][j] = v / d;
    }
  }
  return r;
}

bool is_positive_definite(const RationalMatrix& m) {
  try {
    ldlt(m);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

Rational AffineQuadratic::value(const std::vector<long>& x) const {
  const std::size_t n = m.size();
  if (x.size() != n) throw std::domain_error("AffineQuadratic::value: dimension mismatch");
  Rational acc = c;
  for (std::size_t i = 0; i < n; ++i) {
    if (!b.empty()) acc += b[i] * Rational(x[i]);
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) row += m[i][j] * Rational(x[j]);
    acc += Rational(x[i]) * row;
  }
  return acc;
}

mpz_class floor_sqrt_shift(const Rational& t, const Rational& a) {
  if (t < 0) throw std::domain_error("floor_sqrt_shift: negative radicand");
  // floor(sqrt(p/q)) = floor(floor(sqrt(p*q)) / q).
  mpz_class pq = t.get_num() * t.get_den();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), pq.get_mpz_t());
  mpz_class approx_sqrt;
  mpz_fdiv_q(approx_sqrt.get_mpz_t(), root.get_mpz_t(), t.get_den().get_mpz_t());
  mpz_class cand = floor_int(a) + approx_sqrt;
  // cand is within a couple of the true floor; adjust upward exactly.
  auto fits = [&](const mpz_class& n) {
    Rational diff = Rational(n) - a;
    return diff <= 0 || diff * diff <= t;
  };
  while (fits(cand + 1)) ++cand;
  while (!fits(cand)) --cand;
  return cand;
}

void enumerate_quadratic_points(
    const AffineQuadratic& q, const Rational& bound,
    const std::vector<std::optional<long>>& lower,
    const std::vector<std::optional<long>>& upper,
    const std::function<void(const std::vector<long>&)>& visit,
    long long node_budget) {
  check_symmetric_square(q.m, "enumerate_quadratic_points");
  const int n = q.dim();
  if (n == 0) {
    if (q.c <= bound) visit({});
    return;
  }
  if (!lower.empty() && lower.size() != static_cast<std::size_t>(n))
    throw std::domain_error("enumerate_quadratic_points: lower bound size mismatch");
  if (!upper.empty() && upper.size() != static_cast<std::size_t>(n))
    throw std::domain_error("enumerate_quadratic_points: upper bound size mismatch");

  // Complete the square: q(x) = (x+s)^T m (x+s) + c0 with s = m^{-1} b / 2.
  std::vector<Rational> s(n, 0);
  if (!q.b.empty()) {
    RationalMatrix inv = matrix_inverse(q.m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s[i] += inv[i][j] * q.b[j] / 2;
  }
  Rational c0 = q.c;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c0 -= s[i] * q.m[i][j] * s[j];

  // With m = L D L^T, (x+s)^T m (x+s) = sum_d D_d (z_d + u_d)^2 where
  // z = x + s and u_d = sum_{j>d} L_{jd} z_j; coordinates are scanned from
  // the last to the first inside the exact root interval at each level.
  LdltResult f = ldlt(q.m);
  Rational budget0 = bound - c0;

  std::vector<long> x(n, 0);
  long long nodes = 0;
  std::function<void(int, const Rational&)> rec = [&](int d, const Rational& budget) {
    if (++nodes > node_budget)
      throw std::runtime_error("enumerate_quadratic_points: node budget exceeded");
    if (d < 0) {
      visit(x);
      return;
    }
    if (budget < 0) return;
    Rational u = 0;
    for (int j = d + 1; j < n; ++j) u += f.lower[j][d] * (Rational(x[j]) + s[j]);
    // D_d (x_d + s_d + u)^2 <= budget.
    Rational radicand = budget / f.diag[d];
    Rational center = -s[d] - u;
    mpz_class hi_z = floor_sqrt_shift(radicand, center);
    mpz_class lo_z = -floor_sqrt_shift(radicand, -center);
    if (!lower.empty() && lower[d]) {
      mpz_class lb(*lower[d]);
      if (lo_z < lb) lo_z = lb;
    }
    if (!upper.empty() && upper[d]) {
      mpz_class ub(*upper[d]);
      if (hi_z > ub) hi_z = ub;
    }
    if (!lo_z.fits_slong_p() || !hi_z.fits_slong_p())
      throw std::overflow_error("enumerate_quadratic_points: coordinate out of range");
    for (long v = lo_z.get_si(); v <= hi_z.get_si(); ++v) {
      x[d] = v;
      Rational w = Rational(v) + s[d] + u;
      rec(d - 1, budget - f.diag[d] * w * w);
    }
    x[d] = 0;
  };
  rec(n - 1, budget0);
}

void enumerate_nonneg_points(const AffineQuadratic& q, const Rational& bound,
                             const std::function<void(const std::vector<long>&)>& visit) {
  std::vector<std::optional<long>> lower(q.dim(), 0L);
  enumerate_quadratic_points(q, bound, lower, {}, visit);
}

void enumerate_integer_points(const AffineQuadratic& q, const Rational& bound,
                              const std::function<void(const std::vector<long>&)>& visit) {
  enumerate_quadratic_points(q, bound, {}, {}, visit);
}

}  // namespace twistchar
