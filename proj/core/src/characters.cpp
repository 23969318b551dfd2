#include "twistchar/characters.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "twistchar/quasiparticle.hpp"

namespace twistchar {

namespace {

/** Charge lists (per color, weakly decreasing) from a flattened profile point. */
std::vector<std::vector<long>> charges_from_profile(const std::vector<long>& p, int l, int cap) {
  std::vector<std::vector<long>> charges(l);
  for (int i = 0; i < l; ++i)
    for (int s = cap; s >= 1; --s)
      charges[i].insert(charges[i].end(), p[i * cap + (s - 1)], s);
  return charges;
}

/** Per-color total charge of a flattened profile point. */
std::vector<long> profile_charge_vector(const std::vector<long>& p, int l, int cap) {
  std::vector<long> y(l, 0);
  for (int i = 0; i < l; ++i)
    for (int s = 1; s <= cap; ++s) y[i] += s * p[i * cap + (s - 1)];
  return y;
}

/** Cached inverse Pochhammer factors 1/(q^{1/2})_n. */
class PochhammerCache {
 public:
  PochhammerCache(const Rational& trunc, int yrank) : trunc_(trunc), yrank_(yrank) {}
  const MultiSeries& get(long n) {
    auto it = cache_.find(n);
    if (it == cache_.end())
      it = cache_.emplace(n, pochhammer_inv(n, trunc_, yrank_)).first;
    return it->second;
  }

 private:
  Rational trunc_;
  int yrank_;
  std::map<long, MultiSeries> cache_;
};

/**
 * Shared fermionic-sum assembly: enumerate profiles with form value within
 * the truncation window and hand each term series to the sink.
 */
void fermionic_sum(const ModelParams& params, int cap, bool subtract_st_over_k,
                   const std::function<void(const std::vector<long>& profile, MultiSeries term)>&
                       sink) {
  params.validate();
  const int l = params.l;
  if (cap == 0) {
    MultiSeries term = MultiSeries::one(params.trunc, l);
    sink(std::vector<long>{}, std::move(term));
    return;
  }
  RationalMatrix m = fermionic_form_matrix(params, cap, subtract_st_over_k);
  AffineQuadratic q{m, {}, 0};
  PochhammerCache cache(params.trunc, l);
  enumerate_nonneg_points(q, params.trunc, [&](const std::vector<long>& p) {
    MultiSeries term(params.trunc, l);
    term.add_term(q.value(p), profile_charge_vector(p, l, cap), 1);
    for (long count : p)
      if (count > 0) term = term * cache.get(count);
    sink(p, std::move(term));
  });
}

}  // namespace

RationalMatrix fermionic_form_matrix(const ModelParams& params, int cap, bool subtract_st_over_k) {
  params.validate();
  if (cap < 1) throw std::domain_error("fermionic_form_matrix: cap must be >= 1");
  const int l = params.l;
  RationalMatrix a = folded_gram(l);
  const int n = l * cap;
  RationalMatrix m(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < l; ++i)
    for (int s = 1; s <= cap; ++s)
      for (int j = 0; j < l; ++j)
        for (int t = 1; t <= cap; ++t) {
          Rational kernel = std::min(s, t);
          if (subtract_st_over_k) kernel -= rat(static_cast<long>(s) * t, params.k);
          m[i * cap + (s - 1)][j * cap + (t - 1)] = a[i][j] * kernel / 2;
        }
  return m;
}

MultiSeries char_principal(const ModelParams& params) {
  params.validate();
  MultiSeries out(params.trunc, params.l);
  fermionic_sum(params, params.k, false,
                [&](const std::vector<long>&, MultiSeries term) { out += term; });
  return out;
}

MultiSeries char_parafermionic(const ModelParams& params) {
  params.validate();
  MultiSeries out(params.trunc, params.l);
  fermionic_sum(params, params.k - 1, true,
                [&](const std::vector<long>&, MultiSeries term) { out += term; });
  return out;
}

MultiSeries char_standard(const ModelParams& params) {
  params.validate();
  const int l = params.l;
  const int k = params.k;
  const int cap = k - 1;

  // Parafermionic generating functions bucketed by charge class mod k.
  // The profiles carry no y-dependence inside a class: strip y to zero.
  std::map<std::vector<long>, MultiSeries> pf;
  fermionic_sum(params, cap, true, [&](const std::vector<long>& p, MultiSeries term) {
    std::vector<long> charge =
        cap == 0 ? std::vector<long>(l, 0) : profile_charge_vector(p, l, cap);
    FoldedVector w{charge};
    std::vector<long> cls = coset_class(w, k);
    auto it = pf.find(cls);
    if (it == pf.end()) it = pf.emplace(cls, MultiSeries(params.trunc, l)).first;
    for (const auto& [key, c] : term.terms()) {
      it->second.add_term(key.first, std::vector<long>(l, 0), c);
    }
  });

  // Lattice theta terms bucketed the same way, then paired with PF.
  MultiSeries theta = theta_sum(params);
  MultiSeries coset_sum(params.trunc, l);
  std::vector<long> y(l);
  for (const auto& [key, c] : theta.terms()) {
    FoldedVector eta{key.second};
    std::vector<long> cls = coset_class(eta, k);
    auto it = pf.find(cls);
    if (it == pf.end()) continue;
    for (const auto& [pkey, pc] : it->second.terms()) {
      Rational d = key.first + pkey.first;
      if (d > params.trunc) break;
      for (int i = 0; i < l; ++i) y[i] = key.second[i];
      coset_sum.add_term(d, y, checked_mul(c, pc));
    }
  }

  // Multiply by the free-boson factor (q^{1/2})_inf^{-l}.
  MultiSeries boson = pochhammer_inf_inv(params.trunc, l);
  MultiSeries out = coset_sum;
  for (int i = 0; i < l; ++i) out = out * boson;
  return out;
}

bool quadratic_form_identity_check(const std::vector<std::vector<long>>& charges,
                                   const ModelParams& params, std::string* why) {
  params.validate();
  const int l = params.l;
  if (charges.size() != static_cast<std::size_t>(l)) {
    if (why) *why = "charges must have l colors";
    return false;
  }
  long cap = 1;
  for (const auto& c : charges)
    for (long n : c) cap = std::max(cap, n);
  // Quadratic-form value of the profile.
  std::vector<long> p(static_cast<std::size_t>(l) * cap, 0);
  for (int i = 0; i < l; ++i)
    for (long n : charges[i]) {
      if (n < 1) {
        if (why) *why = "charges must be positive";
        return false;
      }
      ++p[i * cap + (n - 1)];
    }
  // The min(s,t) kernel does not involve k, so any charge cap is fine here.
  RationalMatrix m = fermionic_form_matrix(params, static_cast<int>(cap), false);
  AffineQuadratic q{m, {}, 0};
  Rational form_value = q.value(p);
  Rational constructive = tight_energy_bound(charges, params);
  if (form_value != constructive) {
    if (why) {
      std::ostringstream os;
      os << "form value " << rational_str(form_value) << " != constructive minimum "
         << rational_str(constructive);
      *why = os.str();
    }
    return false;
  }
  return true;
}

}  // namespace twistchar
