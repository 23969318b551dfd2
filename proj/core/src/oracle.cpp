#include "twistchar/oracle.hpp"

#include <functional>

#include "twistchar/quasiparticle.hpp"

namespace twistchar {

namespace {

/** Exact floor(sqrt(t)) for rational t >= 0 (independent of the generic enumerator). */
long isqrt_floor(const Rational& t) {
  if (t < 0) throw std::domain_error("isqrt_floor: negative radicand");
  mpz_class pq = t.get_num() * t.get_den();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), pq.get_mpz_t());
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), root.get_mpz_t(), t.get_den().get_mpz_t());
  if (!out.fits_slong_p()) throw std::overflow_error("isqrt_floor: out of range");
  return out.get_si();
}

/**
 * Walk all mu in Z^l with (k/2) ||mu + center||_A^2 <= budget, where A is
 * the folded Gram form.  Coordinate ranges come from the identity
 * z^T A z = (1/2)[z_1^2 + sum_{i<l} (z_i - z_{i+1})^2] applied to
 * z = mu + center: each prefix term is nonnegative, so scanning integer
 * windows per coordinate and filtering the full value exactly is complete.
 */
void walk_shifted_lattice(const ModelParams& params, const std::vector<Rational>& center,
                          const Rational& budget,
                          const std::function<void(const FoldedVector&)>& visit) {
  const int l = params.l;
  if (budget < 0) return;
  // (k/2) * (1/2) * [...] <= budget  =>  [...] <= 4*budget/k.
  Rational total = budget * 4 / params.k;
  std::vector<long> mu(l, 0);
  std::function<void(int, const Rational&)> rec = [&](int j, const Rational& used) {
    if (j == l) {
      FoldedVector v{mu};
      // Exact final check of the quadratic value.
      Rational val = 0;
      std::vector<Rational> z(l);
      for (int i = 0; i < l; ++i) z[i] = Rational(mu[i]) + center[i];
      val += z[0] * z[0];
      for (int i = 0; i + 1 < l; ++i) val += (z[i] - z[i + 1]) * (z[i] - z[i + 1]);
      if (val <= total) visit(v);
      return;
    }
    Rational rem = total - used;
    if (rem < 0) return;
    // j == 0: z_1^2 <= rem; j > 0: (z_j - z_{j+1})^2 <= rem.
    Rational anchor = (j == 0) ? Rational(0) : Rational(mu[j - 1]) + center[j - 1];
    long spread = isqrt_floor(rem);
    // |mu_j + center_j - anchor| <= sqrt(rem): window with one extra step of
    // slack on each side to absorb the fractional parts exactly.
    Rational mid = anchor - center[j];
    long lo = floor_long(mid) - spread - 1;
    long hi = floor_long(mid) + spread + 1;
    for (long v = lo; v <= hi; ++v) {
      Rational diff = Rational(v) + center[j] - anchor;
      Rational step = diff * diff;
      if (step > rem) continue;
      mu[j] = v;
      rec(j + 1, used + step);
    }
    mu[j] = 0;
  };
  rec(0, 0);
}

}  // namespace

MultiSeries oracle_principal(const ModelParams& params) {
  params.validate();
  MultiSeries out(params.trunc, params.l);
  enumerate_quasiparticle_basis(params, params.k, params.trunc, [&](const QPMonomial& b) {
    out.add_term(qp_energy(b), color_weight(b, params.l).f, 1);
  });
  return out;
}

MultiSeries oracle_parafermionic(const ModelParams& params) {
  params.validate();
  MultiSeries out(params.trunc, params.l);
  enumerate_parafermion_basis(params, params.trunc, [&](const QPMonomial& b) {
    out.add_term(parafermion_energy(b, params), color_weight(b, params.l).f, 1);
  });
  return out;
}

namespace {

MultiSeries oracle_standard_impl(const ModelParams& params, bool heisenberg) {
  params.validate();
  const int l = params.l;
  const int k = params.k;
  MultiSeries out(params.trunc, l);

  enumerate_parafermion_basis(params, params.trunc, [&](const QPMonomial& b) {
    Rational para = parafermion_energy(b, params);
    FoldedVector c0 = color_weight(b, l);
    std::vector<Rational> center(l);
    for (int i = 0; i < l; ++i) center[i] = rat(c0.f[i], k);

    auto per_heisenberg = [&](const HeisenbergMonomial& h) {
      Rational base = para + heisenberg_energy(h);
      if (base > params.trunc) return;
      walk_shifted_lattice(params, center, params.trunc - base, [&](const FoldedVector& mu0) {
        StandardBasisElement e{mu0, h, b};
        auto [q, y] = standard_degree(e, params);
        out.add_term(q, y, 1);
      });
    };

    if (heisenberg) {
      enumerate_heisenberg_basis(params, params.trunc - para, per_heisenberg);
    } else {
      HeisenbergMonomial empty;
      empty.parts.assign(l, {});
      per_heisenberg(empty);
    }
  });
  return out;
}

}  // namespace

MultiSeries oracle_standard(const ModelParams& params) { return oracle_standard_impl(params, true); }

MultiSeries oracle_standard_vacuum_slice(const ModelParams& params) {
  return oracle_standard_impl(params, false);
}

MultiSeries oracle_basic_module(const ModelParams& params) {
  params.validate();
  if (params.k != 1)
    throw std::domain_error("oracle_basic_module: closed form only covers level k = 1");
  MultiSeries out = theta_sum(params);
  MultiSeries boson = pochhammer_inf_inv(params.trunc, params.l);
  for (int i = 0; i < params.l; ++i) out = out * boson;
  return out;
}

}  // namespace twistchar
