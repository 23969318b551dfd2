#include "twistchar/cocycle.hpp"

namespace twistchar {

FourthRoot commutator_c0(const LatticeVector& a, const LatticeVector& b, int l) {
  return FourthRoot::from_exponent(2 * gram(a, b, l));
}

FourthRoot commutator_c(const LatticeVector& a, const LatticeVector& b, int l) {
  // prod_{j=0}^{3} (-zeta^j)^{<nu^j a, b>}; -zeta^j = zeta^{2+j}.
  long exp = 0;
  LatticeVector aj = a;
  for (int j = 0; j < 4; ++j) {
    exp += (2 + j) * gram(aj, b, l);
    aj = nu(aj, l);
  }
  return FourthRoot::from_exponent(exp);
}

FourthRoot eps_c0(const LatticeVector& a, const LatticeVector& b, int l) {
  // Biadditive extension of the normalized section: on simple roots,
  // eps_0(alpha_i, alpha_j) = (-1)^{<alpha_i, alpha_j>} when i > j, else 1.
  // Only adjacent indices pair nontrivially, so the exponent reduces to
  // 2 * sum_j a_{j+1} b_j mod 4.
  const int n = 2 * l;
  if (a.size() != static_cast<std::size_t>(n) || b.size() != static_cast<std::size_t>(n))
    throw std::domain_error("eps_c0: vectors must have 2l entries");
  long exp = 0;
  for (int j = 0; j + 1 < n; ++j) exp += a[j + 1] * b[j];
  return FourthRoot::from_exponent(2 * exp);
}

FourthRoot eps_c(const LatticeVector& a, const LatticeVector& b, int l) {
  // eps_0(a,b) = (-zeta)^{<nu a, b>} eps(a,b)  with  (-zeta)^m = zeta^{3m},
  // so the exponent of eps is exp(eps_0) + <nu a, b> mod 4.
  long m = gram(nu(a, l), b, l);
  return FourthRoot::from_exponent(eps_c0(a, b, l).e + m);
}

FourthRoot nu_hat_phase(long j, const RootInterval& r, int l) {
  switch (contains_middle(r, l)) {
    case 0:
      return FourthRoot::from_exponent(2 * j);  // (-1)^j
    case 2:
      return FourthRoot::one();
    default:
      // exactly one middle root covered: (sign * zeta)^j
      return (r.sign > 0) ? FourthRoot::from_exponent(j)
                          : FourthRoot::from_exponent(3 * j);
  }
}

}  // namespace twistchar
