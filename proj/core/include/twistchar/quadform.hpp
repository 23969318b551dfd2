#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "twistchar/rational.hpp"

namespace twistchar {

using RationalMatrix = std::vector<std::vector<Rational>>;

/** @brief Exact inverse by Gauss-Jordan elimination; throws if singular. */
RationalMatrix matrix_inverse(const RationalMatrix& m);

/**
 * @brief Exact LDL^T factorization of a symmetric matrix: m = L D L^T with
 *        L unit lower triangular.  Throws std::domain_error when a pivot
 *        <= 0 appears, i.e. when m is not positive definite.
 */
struct LdltResult {
  RationalMatrix lower;        ///< unit lower triangular factor
  std::vector<Rational> diag;  ///< positive pivots
};
LdltResult ldlt(const RationalMatrix& m);

/** @brief True iff the symmetric matrix is positive definite (all LDL^T pivots > 0). */
bool is_positive_definite(const RationalMatrix& m);

/**
 * @brief Affine-quadratic function x^T m x + b . x + c on integer vectors.
 */
struct AffineQuadratic {
  RationalMatrix m;         ///< symmetric quadratic part
  std::vector<Rational> b;  ///< linear part (empty means zero)
  Rational c = 0;           ///< constant part

  int dim() const { return static_cast<int>(m.size()); }
  Rational value(const std::vector<long>& x) const;
};

/**
 * @brief Enumerate every integer point x with q.value(x) <= bound, subject
 *        to optional per-coordinate bounds lower[i] <= x[i] <= upper[i].
 *
 * The quadratic part must be positive definite (verified via LDL^T; throws
 * std::domain_error otherwise), which makes the solution set finite.  The
 * search is exact: the linear term is absorbed by completing the square and
 * coordinates are scanned inside exactly computed root intervals of the
 * triangular form, so no point is missed and no inexact arithmetic is used.
 *
 * A node budget guards against runaway searches; exceeding it throws
 * std::runtime_error.
 */
void enumerate_quadratic_points(
    const AffineQuadratic& q, const Rational& bound,
    const std::vector<std::optional<long>>& lower,
    const std::vector<std::optional<long>>& upper,
    const std::function<void(const std::vector<long>&)>& visit,
    long long node_budget = 50'000'000);

/** @brief Convenience wrapper: integer points >= 0 with q.value(x) <= bound. */
void enumerate_nonneg_points(const AffineQuadratic& q, const Rational& bound,
                             const std::function<void(const std::vector<long>&)>& visit);

/** @brief Convenience wrapper: all integer points with q.value(x) <= bound. */
void enumerate_integer_points(const AffineQuadratic& q, const Rational& bound,
                              const std::function<void(const std::vector<long>&)>& visit);

/**
 * @brief Largest integer <= a + sqrt(t) for rationals t >= 0, a; exact.
 */
mpz_class floor_sqrt_shift(const Rational& t, const Rational& a);

}  // namespace twistchar
