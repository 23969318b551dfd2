#pragma once

#include <vector>

#include "twistchar/rational.hpp"

namespace twistchar {

/**
 * @brief Global parameters of a computation.
 *
 * l     rank parameter: the underlying root lattice is of type A_{2l}
 *       (rank 2l), folded by its order-2 diagram involution.
 * k     positive integral level of the vacuum module.
 * trunc inclusive truncation degree for q-expansions: series retain the
 *       terms q^d with 0 <= d <= trunc.
 */
struct ModelParams {
  int l = 1;
  int k = 1;
  Rational trunc = 0;

  /** @brief Throws std::domain_error unless l >= 1, k >= 1, trunc >= 0. */
  void validate() const;
};

/**
 * @brief Element of the rank-2l root lattice in simple-root coordinates.
 *
 * Entry i-1 (0-based) is the coefficient of the simple root alpha_i of
 * A_{2l}, 1 <= i <= 2l.
 */
using LatticeVector = std::vector<long>;

/**
 * @brief Element of the folded (involution-fixed) weight space.
 *
 * Coordinates are taken with respect to the projected simple roots
 * (alpha_i)_0 for i = 1..l, where x_0 denotes the image of x under the
 * projection (1 + nu)/2.  Lattice vectors always fold to integer
 * coordinates, so entries are integers.
 */
struct FoldedVector {
  std::vector<long> f;

  bool operator==(const FoldedVector& o) const { return f == o.f; }
};

/**
 * @brief A root of A_{2l} written as a signed interval of simple roots.
 *
 * The positive roots of A_{2l} are exactly the consecutive sums
 * alpha_start + alpha_{start+1} + ... + alpha_{start+len-1}; sign = -1
 * selects the negative of that sum.
 */
struct RootInterval {
  int start = 1;  ///< first simple-root index, 1-based
  int len = 1;    ///< number of consecutive simple roots, >= 1
  int sign = 1;   ///< +1 or -1

  bool operator==(const RootInterval& o) const {
    return start == o.start && len == o.len && sign == o.sign;
  }
};

/**
 * @brief Symmetric bilinear form on the A_{2l} root lattice, normalized so
 *        that <alpha_i, alpha_i> = 2 and adjacent simple roots pair to -1.
 */
long gram(const LatticeVector& a, const LatticeVector& b, int l);

/** @brief Diagram involution nu: alpha_i -> alpha_{2l+1-i} (coordinate reversal). */
LatticeVector nu(const LatticeVector& a, int l);

/** @brief Involution nu on roots: nu(alpha_i^{(j)}) = alpha_{2l-i-j+2}^{(j)}, preserving sign. */
RootInterval nu_root(const RootInterval& r, int l);

/** @brief Expand a signed root interval into simple-root coordinates. */
LatticeVector root_vector(const RootInterval& r, int l);

/**
 * @brief Projection onto the nu-fixed subspace, P0 = (1 + nu)/2, in folded
 *        coordinates: the coefficient of (alpha_i)_0 is a_i + a_{2l+1-i}.
 */
FoldedVector project0(const LatticeVector& a, int l);

/**
 * @brief Projection onto the nu-anti-fixed subspace, P2 = (1 - nu)/2.
 *
 * Returned coordinates are with respect to (alpha_i - alpha_{2l+1-i})/2 for
 * i = 1..l; the coefficient is a_i - a_{2l+1-i}.  Together with project0
 * this gives an exact direct-sum decomposition (property-tested).
 */
std::vector<long> project2(const LatticeVector& a, int l);

/**
 * @brief Gram matrix of the projected simple roots (alpha_i)_0, i = 1..l.
 *
 * Diagonal entries are 1 except the last, which is 1/2; adjacent entries
 * are -1/2.  Positive definite for every l.
 */
std::vector<std::vector<Rational>> folded_gram(int l);

/** @brief Bilinear form on folded coordinates, u^T A v with A = folded_gram(l). */
Rational folded_pair(const FoldedVector& u, const FoldedVector& v, int l);

/** @brief Half the squared length of (alpha_i)_0: 1/2 for i < l, 1/4 for i = l. 1-based i. */
Rational rho_norm(int i, int l);

/**
 * @brief All roots of A_{2l} as signed intervals: 2l(2l+1) in total,
 *        positive roots first (sorted by start then length), then negatives.
 */
std::vector<RootInterval> enumerate_roots(int l);

/**
 * @brief How many of the two middle simple roots alpha_l, alpha_{l+1} the
 *        interval of r covers (0, 1 or 2).  Controls the order of the
 *        twisting phase attached to r.
 */
int contains_middle(const RootInterval& r, int l);

/**
 * @brief Class of a folded vector modulo k times the folded root lattice,
 *        as coordinates reduced to the range [0, k).
 */
std::vector<long> coset_class(const FoldedVector& u, int k);

}  // namespace twistchar
