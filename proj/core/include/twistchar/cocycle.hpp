#pragma once

#include <string>

#include "twistchar/lattice.hpp"

namespace twistchar {

/**
 * @brief A fourth root of unity zeta^e, where zeta = exp(pi*i/2) = i.
 *
 * All cocycle values and twisting phases in the construction lie in the
 * cyclic group {1, i, -1, -i}; arithmetic is exact on exponents mod 4.
 */
struct FourthRoot {
  int e = 0;  ///< exponent mod 4, normalized to [0, 4)

  static FourthRoot from_exponent(long exponent) {
    long r = exponent % 4;
    if (r < 0) r += 4;
    return FourthRoot{static_cast<int>(r)};
  }
  static FourthRoot one() { return FourthRoot{0}; }
  static FourthRoot i() { return FourthRoot{1}; }
  static FourthRoot minus_one() { return FourthRoot{2}; }

  FourthRoot operator*(const FourthRoot& o) const { return from_exponent(e + o.e); }
  FourthRoot operator/(const FourthRoot& o) const { return from_exponent(e - o.e); }
  FourthRoot pow(long n) const { return from_exponent(e * n); }
  bool operator==(const FourthRoot& o) const { return e == o.e; }
  bool operator!=(const FourthRoot& o) const { return e != o.e; }

  /** @brief "1", "i", "-1" or "-i". */
  std::string str() const {
    static const char* names[4] = {"1", "i", "-1", "-i"};
    return names[e];
  }
};

/**
 * @brief Order-2 commutator map C0(a, b) = (-1)^{<a,b>} of the untwisted
 *        lattice vertex operator construction.
 */
FourthRoot commutator_c0(const LatticeVector& a, const LatticeVector& b, int l);

/**
 * @brief Order-4 twisted commutator map
 *        C(a, b) = prod_{j mod 4} (-zeta^j)^{<nu^j a, b>}.
 *
 * Because nu is an involution the product collapses and C coincides with C0
 * on the lattice; the identity is property-tested rather than assumed.
 */
FourthRoot commutator_c(const LatticeVector& a, const LatticeVector& b, int l);

/**
 * @brief Bilinear 2-cocycle eps_0 with commutator C0.
 *
 * Determined on simple roots by eps_0(alpha_i, alpha_j) = 1 for i <= j and
 * (-1)^{<alpha_i, alpha_j>} for i > j, extended biadditively.  Values are
 * +-1.  Satisfies eps_0(a,b) eps_0(a+b,c) = eps_0(b,c) eps_0(a,b+c) and
 * eps_0(a,b) / eps_0(b,a) = C0(a,b).
 *
 * Note eps_0 itself is not nu-invariant; instead it obeys the transpose
 * rule eps_0(nu a, nu b) = eps_0(b, a) (property-tested), while the
 * commutator maps C0 and C are genuinely nu-invariant.
 */
FourthRoot eps_c0(const LatticeVector& a, const LatticeVector& b, int l);

/**
 * @brief 2-cocycle eps with commutator C, related to eps_0 by
 *        eps_0(a,b) = (-zeta)^{<nu a, b>} eps(a,b).
 *
 * Satisfies the same 2-cocycle law and eps(a,b) / eps(b,a) = C(a,b).
 */
FourthRoot eps_c(const LatticeVector& a, const LatticeVector& b, int l);

/**
 * @brief Phase phi(j, r) by which the j-th power of the lifted involution
 *        acts on the root-subspace operator attached to the signed root r:
 *        the lift sends e_r -> phi(1, r) e_{nu r}, and in general
 *        phi(j1 + j2, r) = phi(j2, r) phi(j1, nu^{j2} r).
 *
 * The value depends on how many of the two middle simple roots the
 * interval covers: none -> (-1)^j; both -> 1; exactly one -> (sign zeta)^j.
 */
FourthRoot nu_hat_phase(long j, const RootInterval& r, int l);

}  // namespace twistchar
