#pragma once

#include "twistchar/lattice.hpp"
#include "twistchar/series.hpp"

namespace twistchar {

/**
 * @brief Brute-force reference characters.
 *
 * Each oracle enumerates basis/spanning elements one by one and counts
 * them into a series, sharing no quadratic-form assembly or generating
 * function shortcuts with the char_* formulas; agreement of the two paths
 * coefficient-by-coefficient is the core correctness argument of this
 * library.
 */

/** @brief Principal-subspace character by explicit monomial enumeration (charges <= k). */
MultiSeries oracle_principal(const ModelParams& params);

/** @brief Parafermionic-space character by explicit monomial enumeration (charges <= k-1). */
MultiSeries oracle_parafermionic(const ModelParams& params);

/**
 * @brief Vacuum-module character by explicit enumeration of spanning
 *        elements e_mu h b: lattice points mu walked inside an exactly
 *        bounded shifted ellipsoid, free-boson monomials h and monomials b
 *        walked by brute force, each element weighted by its bidegree.
 */
MultiSeries oracle_standard(const ModelParams& params);

/** @brief Same enumeration restricted to trivial Heisenberg part (used for the factorization check). */
MultiSeries oracle_standard_vacuum_slice(const ModelParams& params);

/**
 * @brief Closed-form character of the level-1 vacuum module:
 *        (q^{1/2})_inf^{-l} * Theta(q, y).  Only defined for k = 1.
 */
MultiSeries oracle_basic_module(const ModelParams& params);

}  // namespace twistchar
