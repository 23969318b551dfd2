#pragma once

#include <map>
#include <vector>

#include "twistchar/quadform.hpp"
#include "twistchar/series.hpp"

namespace twistchar {

/**
 * @brief Generalized Cartan matrix of the twisted affine algebra underlying
 *        the construction, in the quarter-integer realization with node 0
 *        short: for l = 1 the matrix is [[2,-4],[-1,2]]; for l >= 2 the
 *        chain has a_{01} = -2, a_{10} = -1, a simply laced middle, and
 *        a_{l-1,l} = -2, a_{l,l-1} = -1.  Symmetrizers d (with d_i a_ij
 *        symmetric) are (1/4, 1/2, ..., 1/2, 1).
 */
struct GCM {
  int l = 1;
  std::vector<std::vector<long>> a;
  std::vector<Rational> d;
};

/** @brief Build the GCM and its symmetrizers for rank parameter l. */
GCM build_gcm(int l);

/** @brief Primitive positive kernel vector of the GCM (marks of the null root), (2,...,2,1). */
std::vector<long> null_marks(const GCM& g);

/** @brief Symmetrized bilinear form B_ij = d_i a_ij on simple-root coordinates. */
RationalMatrix gcm_bilinear(const GCM& g);

/**
 * @brief Root and weight multiplicity tables of the level-k vacuum
 *        highest-weight module, computed by the Peterson and Freudenthal
 *        recursions down to depth c0max in the node-0 coordinate.
 *
 * Roots: positive roots beta (simple-root coordinates, length l+1) with
 * their multiplicities, found by Peterson's recursion over the exactly
 * enumerated candidate set {beta >= 0 : <beta,beta> <= 2, beta_0 <= c0max}.
 * Weights: multiplicities of Lambda - beta via Freudenthal's recursion over
 * {beta >= 0 : 2<beta, Lambda+rho> - <beta,beta> > 0, beta_0 <= c0max}.
 * All arithmetic is exact; integrality and nonnegativity of every computed
 * multiplicity are asserted.
 */
class KacMoodyTable {
 public:
  KacMoodyTable(int l, int k, long c0max);

  long long root_mult(const std::vector<long>& beta) const;
  long long weight_mult(const std::vector<long>& beta) const;

  const std::map<std::vector<long>, long long>& root_table() const { return roots_; }
  const std::map<std::vector<long>, long long>& weight_table() const { return weights_; }
  const GCM& gcm() const { return gcm_; }
  int level() const { return k_; }
  long depth() const { return c0max_; }

 private:
  GCM gcm_;
  int k_;
  long c0max_;
  std::map<std::vector<long>, long long> roots_;    // positive roots with mult > 0
  std::map<std::vector<long>, long long> weights_;  // beta -> mult(Lambda - beta), nonzero

  void compute_roots();
  void compute_weights();
};

/**
 * @brief Affine-to-graded dictionary: a weight Lambda - sum c_i alpha_i is
 *        mapped to q-degree c_0 * t0 and y-weight
 *        -(c_0 * u0 + sum_{i=1..l-1} c_i e_i + c_l * 2 e_l).
 *
 * The images of the finite nodes are fixed by the folded-coordinate
 * normalization; t0 and u0 are calibrated against a reference character by
 * matching the first two c_0-shells exactly and demanding a unique match.
 */
struct Dictionary {
  Rational t0;
  std::vector<long> u0;
};

/** @brief y-image of the weight Lambda - beta under the dictionary. */
std::vector<long> dictionary_y(const Dictionary& dict, const std::vector<long>& beta, int l);

/**
 * @brief Calibrate t0 (from the two lowest positive q-degrees of the
 *        reference) and u0 (from shell matching at c_0 = 1 and 2).  Throws
 *        std::runtime_error unless exactly one candidate pair survives.
 */
Dictionary calibrate_dictionary(const KacMoodyTable& table, const MultiSeries& reference,
                                const ModelParams& params);

/**
 * @brief Character of the table's module under the dictionary, truncated
 *        at qcut.  Requires table depth >= qcut / t0 for completeness.
 */
MultiSeries freudenthal_character(const KacMoodyTable& table, const Dictionary& dict,
                                  const ModelParams& params, const Rational& qcut);

}  // namespace twistchar
