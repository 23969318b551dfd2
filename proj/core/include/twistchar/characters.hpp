#pragma once

#include <string>
#include <vector>

#include "twistchar/lattice.hpp"
#include "twistchar/quadform.hpp"
#include "twistchar/series.hpp"

namespace twistchar {

/**
 * @brief Quadratic form matrix of the fermionic sums, indexed by pairs
 *        (color i, charge s) flattened as (i-1)*cap + (s-1):
 *        entry = A_{ij} * K(s,t) / 2 with A the folded Gram matrix and
 *        K(s,t) = min(s,t) (principal, cap = k) or
 *        K(s,t) = min(s,t) - st/k (parafermionic, cap = k-1).
 */
RationalMatrix fermionic_form_matrix(const ModelParams& params, int cap, bool subtract_st_over_k);

/**
 * @brief Fermionic character of the principal subspace:
 *        sum over charge profiles p_i^{(s)} >= 0 (s <= k) of
 *        q^{form(p)} * prod 1/(q^{1/2})_{p_i^{(s)}} * prod y_i^{sum_s s p_i^{(s)}},
 *        truncated at params.trunc.
 */
MultiSeries char_principal(const ModelParams& params);

/**
 * @brief Fermionic character of the parafermionic space: identical shape
 *        with charges capped at k-1 and kernel min(s,t) - st/k.  Equals 1
 *        when k = 1.
 */
MultiSeries char_parafermionic(const ModelParams& params);

/**
 * @brief Character of the level-k vacuum module:
 *        (q^{1/2})_inf^{-l} * sum over classes c mod k of
 *        Theta_c(q, y) * PF_c(q), where Theta_c collects lattice vectors
 *        congruent to c and PF_c the parafermionic profiles of class c.
 */
MultiSeries char_standard(const ModelParams& params);

/**
 * @brief Verifies, for the given charge lists, that the quadratic form
 *        value of the profile equals the constructive minimal energy
 *        (sum of mode upper bounds).  Used as a structural invariant test
 *        linking the two derivations.
 */
bool quadratic_form_identity_check(const std::vector<std::vector<long>>& charges,
                                   const ModelParams& params, std::string* why = nullptr);

}  // namespace twistchar
