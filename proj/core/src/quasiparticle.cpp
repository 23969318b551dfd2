#include "twistchar/quasiparticle.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistchar {

namespace {

/** Exact floor(sqrt(t)) for rational t >= 0 (local to the oracle substrate). */
mpz_class isqrt_rat_floor(const Rational& t) {
  if (t < 0) throw std::domain_error("isqrt_rat_floor: negative radicand");
  mpz_class pq = t.get_num() * t.get_den();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), pq.get_mpz_t());
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), root.get_mpz_t(), t.get_den().get_mpz_t());
  return out;
}

long isqrt_rat_floor_long(const Rational& t) {
  mpz_class v = isqrt_rat_floor(t);
  if (!v.fits_slong_p()) throw std::overflow_error("isqrt_rat_floor_long: out of range");
  return v.get_si();
}

void check_monomial_shape(const QPMonomial& b, int l, const char* where) {
  if (b.charges.size() != static_cast<std::size_t>(l) ||
      b.modes.size() != static_cast<std::size_t>(l))
    throw std::domain_error(std::string(where) + ": monomial must have l colors");
  for (int i = 0; i < l; ++i)
    if (b.charges[i].size() != b.modes[i].size())
      throw std::domain_error(std::string(where) + ": charges/modes length mismatch");
}

}  // namespace

std::vector<long> transpose_partition(const std::vector<long>& parts) {
  long prev = -1;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 0) throw std::domain_error("transpose_partition: negative part");
    if (p > 0 && parts[p] > prev)
      throw std::domain_error("transpose_partition: parts must be weakly decreasing");
    prev = parts[p];
  }
  std::vector<long> out(parts.empty() ? 0 : static_cast<std::size_t>(parts[0]), 0);
  for (long n : parts)
    for (long s = 1; s <= n; ++s) ++out[s - 1];
  return out;
}

std::vector<std::vector<long>> charge_profile(const QPMonomial& b, int l, int cap) {
  if (cap < 0) throw std::domain_error("charge_profile: cap must be >= 0");
  if (b.charges.size() != static_cast<std::size_t>(l))
    throw std::domain_error("charge_profile: monomial must have l colors");
  std::vector<std::vector<long>> p(l, std::vector<long>(cap, 0));
  for (int i = 0; i < l; ++i)
    for (long n : b.charges[i]) {
      if (n < 1 || n > cap) throw std::domain_error("charge_profile: charge out of range");
      ++p[i][n - 1];
    }
  return p;
}

std::vector<std::vector<long>> dual_charge_profile(const QPMonomial& b, int l, int cap) {
  std::vector<std::vector<long>> p = charge_profile(b, l, cap);
  std::vector<std::vector<long>> r(l, std::vector<long>(cap, 0));
  for (int i = 0; i < l; ++i) {
    long acc = 0;
    for (int s = cap; s >= 1; --s) {
      acc += p[i][s - 1];
      r[i][s - 1] = acc;
    }
  }
  return r;
}

Rational mode_upper_bound(const std::vector<std::vector<long>>& charges, int i, int p,
                          const ModelParams& params) {
  const int l = params.l;
  if (i < 1 || i > l) throw std::domain_error("mode_upper_bound: color out of range");
  if (p < 1 || p > static_cast<int>(charges[i - 1].size()))
    throw std::domain_error("mode_upper_bound: particle index out of range");
  long n = charges[i - 1][p - 1];
  Rational u = -Rational(2 * p - 1) * rho_norm(i, l) * n;
  if (i >= 2)
    for (long nq : charges[i - 2]) u += rat(std::min(n, nq), 2);
  return u;
}

bool check_conditions(const QPMonomial& b, const ModelParams& params, int cap, std::string* why) {
  params.validate();
  const int l = params.l;
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (b.charges.size() != static_cast<std::size_t>(l) ||
      b.modes.size() != static_cast<std::size_t>(l))
    return fail("monomial must have exactly l colors");
  for (int i = 1; i <= l; ++i) {
    const auto& ns = b.charges[i - 1];
    const auto& ms = b.modes[i - 1];
    if (ns.size() != ms.size()) return fail("charges/modes length mismatch");
    for (std::size_t p = 0; p < ns.size(); ++p) {
      if (ns[p] < 1 || ns[p] > cap) return fail("charge out of range 1..cap");
      if (p > 0 && ns[p] > ns[p - 1]) return fail("charges must be weakly decreasing");
    }
    Rational rho = rho_norm(i, l);
    for (std::size_t p = 0; p < ns.size(); ++p) {
      Rational frac = 2 * (ms[p] - rho * ns[p]);
      if (!is_integer(frac)) return fail("mode congruence (C1) violated");
      Rational u = mode_upper_bound(b.charges, i, static_cast<int>(p) + 1, params);
      if (ms[p] > u) return fail("mode upper bound (C2) violated");
      if (p > 0 && ns[p] == ns[p - 1] && ms[p] > ms[p - 1] - 2 * rho * ns[p])
        return fail("equal-charge spacing (C3) violated");
    }
  }
  return true;
}

int compare_monomials(const QPMonomial& a, const QPMonomial& b) {
  const std::size_t colors = std::max(a.charges.size(), b.charges.size());
  auto at = [](const std::vector<std::vector<long>>& v, std::size_t i, std::size_t p) -> long {
    if (i >= v.size() || p >= v[i].size()) return 0;
    return v[i][p];
  };
  for (std::size_t i = 0; i < colors; ++i) {
    std::size_t len = std::max(i < a.charges.size() ? a.charges[i].size() : 0,
                               i < b.charges.size() ? b.charges[i].size() : 0);
    for (std::size_t p = 0; p < len; ++p) {
      long x = at(a.charges, i, p), y = at(b.charges, i, p);
      if (x != y) return x < y ? -1 : 1;
    }
  }
  Rational ea = qp_energy(a), eb = qp_energy(b);
  if (ea != eb) return ea < eb ? -1 : 1;
  for (std::size_t i = 0; i < colors; ++i) {
    std::size_t len = std::max(i < a.modes.size() ? a.modes[i].size() : 0,
                               i < b.modes.size() ? b.modes[i].size() : 0);
    for (std::size_t p = 0; p < len; ++p) {
      Rational x = (i < a.modes.size() && p < a.modes[i].size()) ? a.modes[i][p] : Rational(0);
      Rational y = (i < b.modes.size() && p < b.modes[i].size()) ? b.modes[i][p] : Rational(0);
      if (x != y) return x < y ? -1 : 1;
    }
  }
  return 0;
}

Rational qp_energy(const QPMonomial& b) {
  Rational e = 0;
  for (const auto& ms : b.modes)
    for (const auto& m : ms) e -= m;
  return e;
}

Rational tight_energy_bound(const std::vector<std::vector<long>>& charges,
                            const ModelParams& params) {
  if (charges.size() != static_cast<std::size_t>(params.l))
    throw std::domain_error("tight_energy_bound: charges must have l colors");
  Rational e = 0;
  for (int i = 1; i <= params.l; ++i)
    for (std::size_t p = 0; p < charges[i - 1].size(); ++p)
      e -= mode_upper_bound(charges, i, static_cast<int>(p) + 1, params);
  return e;
}

FoldedVector color_weight(const QPMonomial& b, int l) {
  if (b.charges.size() != static_cast<std::size_t>(l))
    throw std::domain_error("color_weight: monomial must have l colors");
  FoldedVector w;
  w.f.assign(l, 0);
  for (int i = 0; i < l; ++i)
    for (long n : b.charges[i]) w.f[i] += n;
  return w;
}

Rational parafermion_energy(const QPMonomial& b, const ModelParams& params) {
  params.validate();
  FoldedVector c = color_weight(b, params.l);
  return qp_energy(b) - folded_pair(c, c, params.l) / (2 * params.k);
}

Rational heisenberg_energy(const HeisenbergMonomial& h) {
  Rational e = 0;
  for (const auto& color : h.parts)
    for (const auto& [mode, mult] : color) {
      if (mode <= 0 || mult <= 0)
        throw std::domain_error("heisenberg_energy: modes and multiplicities must be positive");
      e += mode * mult;
    }
  return e;
}

std::pair<Rational, std::vector<long>> standard_degree(const StandardBasisElement& e,
                                                       const ModelParams& params) {
  params.validate();
  const int l = params.l;
  if (e.mu0.f.size() != static_cast<std::size_t>(l))
    throw std::domain_error("standard_degree: mu0 must have l coordinates");
  if (e.h.parts.size() != static_cast<std::size_t>(l))
    throw std::domain_error("standard_degree: Heisenberg part must have l colors");
  check_monomial_shape(e.qp, l, "standard_degree");
  FoldedVector c0 = color_weight(e.qp, l);
  Rational q = heisenberg_energy(e.h) + qp_energy(e.qp) + folded_pair(e.mu0, c0, l) +
               Rational(params.k) * folded_pair(e.mu0, e.mu0, l) / 2;
  std::vector<long> y(l);
  for (int i = 0; i < l; ++i) y[i] = params.k * e.mu0.f[i] + c0.f[i];
  return {q, y};
}

namespace {

/**
 * Charge-configuration walk shared by the two monomial enumerators.
 *
 * Dual profiles r^{(1)} >= r^{(2)} >= ... >= r^{(cap)} (componentwise) are
 * chosen level by level.  Each level contributes weight * r^T A r to a
 * lower bound for the target energy, where A is the folded Gram matrix;
 * for the quasi-particle energy weight = 1/2 (this is exactly the minimal
 * energy), for the parafermionic energy weight = 1/(2k) (Cauchy-Schwarz in
 * the A-inner product over at most k-1 levels).  Since every level adds a
 * nonnegative amount, partial sums prune the walk soundly.  Coordinate
 * ranges inside a level come from the explicit identity
 *   r^T A r = (1/2) [ r_1^2 + sum_{i<l} (r_i - r_{i+1})^2 ].
 */
void walk_charge_configs(const ModelParams& params, int cap, const Rational& bound,
                         const Rational& level_weight,
                         const std::function<void(const std::vector<std::vector<long>>&)>& emit) {
  const int l = params.l;
  if (cap == 0 || bound < 0) {
    if (bound >= 0) emit(std::vector<std::vector<long>>(l));
    return;
  }
  std::vector<std::vector<long>> levels(cap, std::vector<long>(l, 0));

  // Assemble weakly decreasing charge lists from the dual profiles.
  auto finalize = [&](int top) {
    std::vector<std::vector<long>> charges(l);
    for (int i = 0; i < l; ++i)
      for (int s = (top > cap ? cap : top); s >= 1; --s) {
        long count = levels[s - 1][i] - (s < top && s < cap ? levels[s][i] : 0);
        // s runs downward, so charges come out weakly decreasing.
        charges[i].insert(charges[i].end(), count, s);
      }
    emit(charges);
  };

  std::function<void(int, const Rational&)> level_rec = [&](int s, const Rational& used) {
    if (s > cap) {
      finalize(s);
      return;
    }
    static const std::vector<long> kUnconstrained;
    const std::vector<long>& prev = (s == 1) ? kUnconstrained : levels[s - 2];
    std::vector<long>& cur = levels[s - 1];

    // Choose cur[0..l-1] with the running prefix of the level form.
    std::function<void(int, const Rational&)> coord_rec = [&](int j, const Rational& prefix) {
      if (j == l) {
        FoldedVector r{cur};
        Rational form = level_weight * folded_pair(r, r, l);
        if (used + form > bound) return;
        bool zero = std::all_of(cur.begin(), cur.end(), [](long v) { return v == 0; });
        if (zero) {
          finalize(s);  // all deeper levels are forced to zero
        } else {
          level_rec(s + 1, used + form);
        }
        return;
      }
      // (cur_j - cur_{j-1})^2 <= remaining / (level_weight / 2); cur_0 plays
      // against 0 via the leading r_1^2 term.
      Rational rem = (bound - used - prefix) / level_weight * 2;
      if (rem < 0) return;
      long base = (j == 0) ? 0 : cur[j - 1];
      long spread = isqrt_rat_floor_long(rem);
      long lo = std::max(0L, base - spread);
      long hi = base + spread;
      if (!prev.empty()) hi = std::min(hi, prev[j]);
      for (long v = lo; v <= hi; ++v) {
        cur[j] = v;
        Rational step = Rational(v - base) * (v - base) / 2 * level_weight;
        coord_rec(j + 1, prefix + step);
      }
      cur[j] = 0;
    };
    coord_rec(0, 0);
  };
  level_rec(1, 0);
}

/** Enumerate slack tuples over runs of equal charges and emit monomials. */
void emit_with_slacks(const ModelParams& params, int cap,
                      const std::vector<std::vector<long>>& charges, const Rational& min_energy,
                      const Rational& bound,
                      const std::function<void(const QPMonomial&)>& visit) {
  const int l = params.l;
  Rational budget2 = (bound - min_energy) * 2;
  if (budget2 < 0) return;
  long total_slack_cap = floor_long(budget2);

  QPMonomial b;
  b.charges = charges;
  b.modes.assign(l, {});
  for (int i = 0; i < l; ++i) b.modes[i].assign(charges[i].size(), 0);

  // Runs of equal charges: slacks weakly increase within a run.
  struct Run {
    int color;   // 0-based
    int start;   // 0-based particle index
    int length;
  };
  std::vector<Run> runs;
  for (int i = 0; i < l; ++i) {
    std::size_t p = 0;
    while (p < charges[i].size()) {
      std::size_t q = p;
      while (q < charges[i].size() && charges[i][q] == charges[i][p]) ++q;
      runs.push_back(Run{i, static_cast<int>(p), static_cast<int>(q - p)});
      p = q;
    }
  }

  std::string reason;
  std::function<void(std::size_t, long)> run_rec = [&](std::size_t ri, long rem) {
    if (ri == runs.size()) {
      if (!check_conditions(b, params, cap, &reason))
        throw std::logic_error("enumerate_quasiparticle_basis: generated monomial fails conditions: " +
                               reason);
      visit(b);
      return;
    }
    const Run& run = runs[ri];
    std::vector<long> slack(run.length, 0);
    std::function<void(int, long, long)> pos_rec = [&](int p, long minval, long left) {
      if (p == run.length) {
        for (int t = 0; t < run.length; ++t) {
          int idx = run.start + t;
          Rational u = mode_upper_bound(b.charges, run.color + 1, idx + 1, params);
          b.modes[run.color][idx] = u - rat(slack[t], 2);
        }
        run_rec(ri + 1, left);
        return;
      }
      for (long s = minval; s <= left; ++s) {
        slack[p] = s;
        pos_rec(p + 1, s, left - s);
      }
    };
    pos_rec(0, 0, rem);
  };
  run_rec(0, total_slack_cap);
}

}  // namespace

void enumerate_quasiparticle_basis(const ModelParams& params, int cap, const Rational& bound,
                                   const std::function<void(const QPMonomial&)>& visit) {
  params.validate();
  if (cap < 0) throw std::domain_error("enumerate_quasiparticle_basis: cap must be >= 0");
  walk_charge_configs(params, cap, bound, rat(1, 2),
                      [&](const std::vector<std::vector<long>>& charges) {
                        Rational tight = tight_energy_bound(charges, params);
                        if (tight > bound) return;
                        emit_with_slacks(params, cap, charges, tight, bound, visit);
                      });
}

void enumerate_parafermion_basis(const ModelParams& params, const Rational& bound,
                                 const std::function<void(const QPMonomial&)>& visit) {
  params.validate();
  const int cap = params.k - 1;
  walk_charge_configs(params, cap, bound, rat(1, 2 * params.k),
                      [&](const std::vector<std::vector<long>>& charges) {
                        QPMonomial probe;
                        probe.charges = charges;
                        probe.modes.assign(params.l, {});
                        for (int i = 0; i < params.l; ++i)
                          probe.modes[i].assign(charges[i].size(), 0);
                        FoldedVector c = color_weight(probe, params.l);
                        Rational para_min = tight_energy_bound(charges, params) -
                                            folded_pair(c, c, params.l) / (2 * params.k);
                        if (para_min > bound) return;
                        emit_with_slacks(params, cap, charges, para_min, bound, visit);
                      });
}

void enumerate_heisenberg_basis(const ModelParams& params, const Rational& bound,
                                const std::function<void(const HeisenbergMonomial&)>& visit) {
  params.validate();
  if (bound < 0) return;
  const int l = params.l;
  long total_units = floor_long(bound * 2);

  HeisenbergMonomial h;
  h.parts.assign(l, {});

  std::function<void(int, long)> color_rec = [&](int color, long units_left) {
    if (color == l) {
      visit(h);
      return;
    }
    // Partitions of at most units_left half-units in this color, largest
    // mode first; mode u half-units with multiplicity c consumes u*c.
    std::function<void(long, long)> part_rec = [&](long max_unit, long rem) {
      color_rec(color + 1, rem);  // stop adding parts in this color
      for (long u = std::min(max_unit, rem); u >= 1; --u) {
        for (long c = 1; u * c <= rem; ++c) {
          h.parts[color].emplace_back(rat(u, 2), c);
          part_rec(u - 1, rem - u * c);
          h.parts[color].pop_back();
        }
      }
    };
    part_rec(units_left, units_left);
  };
  color_rec(0, total_units);
}

}  // namespace twistchar
