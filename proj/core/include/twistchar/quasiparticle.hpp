#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "twistchar/lattice.hpp"
#include "twistchar/rational.hpp"

namespace twistchar {

/**
 * @brief Quasi-particle monomial acting on the vacuum.
 *
 * For each color i = 1..l (index i-1) the monomial carries a weakly
 * decreasing list of positive integer charges n_{1,i} >= n_{2,i} >= ... and
 * a parallel list of rational modes m_{p,i}; the particle with p = 1 has
 * the largest charge.  The admissible monomials are cut out by three
 * difference conditions (see check_conditions); the energy contributed by
 * a particle of mode m is -m, so admissible monomials have total energy
 * -sum m >= 0 with equality only for the empty monomial.
 */
struct QPMonomial {
  std::vector<std::vector<long>> charges;
  std::vector<std::vector<Rational>> modes;

  bool operator==(const QPMonomial& o) const {
    return charges == o.charges && modes == o.modes;
  }
};

/**
 * @brief Free-boson (Heisenberg) monomial: for each color a strictly
 *        decreasing list of positive half-integer modes with positive
 *        multiplicities.  Energy is the multiplicity-weighted mode sum.
 */
struct HeisenbergMonomial {
  std::vector<std::vector<std::pair<Rational, long>>> parts;
};

/**
 * @brief Spanning-set element e_mu * h * b of the level-k vacuum module.
 *
 * The lattice part mu lies in the rank-l sublattice generated by the first
 * l simple roots, recorded directly by its folded coordinates mu0 (the
 * correspondence is bijective).
 */
struct StandardBasisElement {
  FoldedVector mu0;
  HeisenbergMonomial h;
  QPMonomial qp;
};

/** @brief Conjugate partition: out[s-1] = #{p : parts[p] >= s}. Input weakly decreasing. */
std::vector<long> transpose_partition(const std::vector<long>& parts);

/**
 * @brief Charge profile p[i][s-1] = number of particles of charge s in
 *        color i+1, for 1 <= s <= cap.  Throws if some charge exceeds cap.
 */
std::vector<std::vector<long>> charge_profile(const QPMonomial& b, int l, int cap);

/** @brief Dual profile r[i][s-1] = number of particles of color i+1 with charge >= s. */
std::vector<std::vector<long>> dual_charge_profile(const QPMonomial& b, int l, int cap);

/**
 * @brief Largest admissible mode for particle p (1-based) of color i
 *        (1-based) given all charge lists:
 *        U_{p,i} = -(2p-1) rho_i n_{p,i}
 *                  + (1/2) sum_q min(n_{p,i}, n_{q,i-1}).
 */
Rational mode_upper_bound(const std::vector<std::vector<long>>& charges, int i, int p,
                          const ModelParams& params);

/**
 * @brief The three difference conditions for admissibility at charge cap
 *        `cap` (cap = k for the principal space, k-1 for the module
 *        spanning set):
 *
 *  shape: per color, charges weakly decreasing in 1..cap, modes parallel;
 *  (C1) congruence: m_{p,i} lies in rho_i n_{p,i} + (1/2) Z;
 *  (C2) boundary bound: m_{p,i} <= U_{p,i} (see mode_upper_bound);
 *  (C3) spacing within equal charges: if n_{p+1,i} = n_{p,i} then
 *       m_{p+1,i} <= m_{p,i} - 2 rho_i n_{p,i}.
 *
 * No ordering is imposed between modes of particles with different
 * charges.  On failure, *why (when given) receives a short reason.
 */
bool check_conditions(const QPMonomial& b, const ModelParams& params, int cap,
                      std::string* why = nullptr);

/**
 * @brief Deterministic total order on monomials used in spanning
 *        arguments: compares charge lists color by color
 *        (lexicographically, missing entries as 0), then total energy,
 *        then mode lists color by color.  Returns -1, 0 or +1.
 */
int compare_monomials(const QPMonomial& a, const QPMonomial& b);

/** @brief Total energy -sum of modes. */
Rational qp_energy(const QPMonomial& b);

/**
 * @brief Minimal total energy over all admissible mode assignments for the
 *        given charge lists: sum of -U_{p,i}, which is attained by taking
 *        every mode at its upper bound (the spacing condition holds with
 *        equality along runs of equal charges).
 */
Rational tight_energy_bound(const std::vector<std::vector<long>>& charges,
                            const ModelParams& params);

/** @brief Folded charge content: coordinate i is the total charge in color i+1. */
FoldedVector color_weight(const QPMonomial& b, int l);

/** @brief Parafermionic energy qp_energy(b) - <c0(b), c0(b)> / (2k), always >= 0 on admissible b. */
Rational parafermion_energy(const QPMonomial& b, const ModelParams& params);

/** @brief Multiplicity-weighted mode sum of a Heisenberg monomial. */
Rational heisenberg_energy(const HeisenbergMonomial& h);

/**
 * @brief Bidegree of a spanning-set element e_mu h b in the level-k vacuum
 *        module: q-degree
 *        en(h) + qp_energy(b) + <mu0, c0(b)> + (k/2) <mu0, mu0>
 *        and y-weight k mu0 + c0(b) (folded coordinates).
 */
std::pair<Rational, std::vector<long>> standard_degree(const StandardBasisElement& e,
                                                       const ModelParams& params);

/**
 * @brief Visit every admissible quasi-particle monomial with charges
 *        bounded by `cap` and qp_energy <= bound.  Brute force: charge
 *        configurations are walked level-by-level through dual profiles
 *        (pruned by exact partial sums of positive-definite forms) and
 *        modes through the slack substitution s_p = 2(U_p - m_p); every
 *        emitted monomial is re-validated with check_conditions.
 */
void enumerate_quasiparticle_basis(const ModelParams& params, int cap, const Rational& bound,
                                   const std::function<void(const QPMonomial&)>& visit);

/**
 * @brief Visit every admissible monomial at cap k-1 with
 *        parafermion_energy <= bound (the monomial part of the module
 *        spanning set).  Completeness uses
 *        paraE >= (1/2k) sum_s ||r^{(s)}||_A^2 for caps <= k-1.
 */
void enumerate_parafermion_basis(const ModelParams& params, const Rational& bound,
                                 const std::function<void(const QPMonomial&)>& visit);

/** @brief Visit every Heisenberg monomial (l colors) with energy <= bound. */
void enumerate_heisenberg_basis(const ModelParams& params, const Rational& bound,
                                const std::function<void(const HeisenbergMonomial&)>& visit);

}  // namespace twistchar
