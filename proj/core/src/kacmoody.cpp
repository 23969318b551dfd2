#include "twistchar/kacmoody.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twistchar {

namespace {

long height(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

bool componentwise_le(const std::vector<long>& a, const std::vector<long>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Rational pair_with(const RationalMatrix& b, const std::vector<long>& x,
                   const std::vector<long>& y) {
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) row += b[i][j] * y[j];
    acc += Rational(x[i]) * row;
  }
  return acc;
}

/** Exact long long from a rational that must be a nonnegative integer. */
long long require_nonneg_integer(const Rational& r, const char* where) {
  if (!is_integer(r) || r < 0)
    throw std::logic_error(std::string(where) + ": expected a nonnegative integer, got " +
                           rational_str(r));
  if (!r.get_num().fits_slong_p())
    throw std::overflow_error(std::string(where) + ": multiplicity out of range");
  return r.get_num().get_si();
}

}  // namespace

GCM build_gcm(int l) {
  if (l < 1) throw std::domain_error("build_gcm: l must be >= 1");
  const int n = l + 1;
  GCM g;
  g.l = l;
  g.a.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) g.a[i][i] = 2;
  if (l == 1) {
    g.a[0][1] = -4;
    g.a[1][0] = -1;
  } else {
    g.a[0][1] = -2;
    g.a[1][0] = -1;
    for (int i = 1; i + 1 < l; ++i) {
      g.a[i][i + 1] = -1;
      g.a[i + 1][i] = -1;
    }
    g.a[l - 1][l] = -2;
    g.a[l][l - 1] = -1;
  }
  // Solve d_j a_{ji} = d_i a_{ij} along the chain from the seed d_0 = 1/4
  // (the short node has squared length 1/2).
  g.d.assign(n, 0);
  g.d[0] = rat(1, 4);
  for (int i = 0; i + 1 < n; ++i) g.d[i + 1] = g.d[i] * g.a[i][i + 1] / g.a[i + 1][i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.d[i] * g.a[i][j] != g.d[j] * g.a[j][i])
        throw std::logic_error("build_gcm: symmetrizer failed");
  return g;
}

std::vector<long> null_marks(const GCM& g) {
  const int n = g.l + 1;
  // The kernel of the GCM is one-dimensional; solve A m = 0 over the
  // rationals with m_l = 1, then scale to a primitive integer vector.
  RationalMatrix b(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = g.a[i][j];
  std::vector<Rational> m(n, 0);
  m[n - 1] = 1;
  // Back-substitute using rows 0..n-2 (they are independent for an affine GCM).
  // Gaussian elimination on the first n-1 rows and columns.
  RationalMatrix sub(n - 1, std::vector<Rational>(n - 1, 0));
  std::vector<Rational> rhs(n - 1, 0);
  for (int i = 0; i < n - 1; ++i) {
    for (int j = 0; j < n - 1; ++j) sub[i][j] = b[i][j];
    rhs[i] = -b[i][n - 1];
  }
  RationalMatrix inv = matrix_inverse(sub);
  for (int i = 0; i < n - 1; ++i) {
    Rational acc = 0;
    for (int j = 0; j < n - 1; ++j) acc += inv[i][j] * rhs[j];
    m[i] = acc;
  }
  // Verify the full kernel equation and scale to primitive integers.
  mpz_class lcm_den(1);
  for (int i = 0; i < n; ++i) {
    Rational check = 0;
    for (int j = 0; j < n; ++j) check += Rational(g.a[i][j]) * m[j];
    if (check != 0) throw std::logic_error("null_marks: kernel equation failed");
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), m[i].get_den().get_mpz_t());
  }
  std::vector<long> out(n);
  mpz_class gcd_num(0);
  std::vector<mpz_class> scaled(n);
  for (int i = 0; i < n; ++i) {
    scaled[i] = m[i].get_num() * (lcm_den / m[i].get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled[i].get_mpz_t());
  }
  for (int i = 0; i < n; ++i) {
    mpz_class v = scaled[i] / gcd_num;
    if (v <= 0 || !v.fits_slong_p()) throw std::logic_error("null_marks: marks not positive");
    out[i] = v.get_si();
  }
  return out;
}

RationalMatrix gcm_bilinear(const GCM& g) {
  const int n = g.l + 1;
  RationalMatrix b(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = g.d[i] * g.a[i][j];
  return b;
}

KacMoodyTable::KacMoodyTable(int l, int k, long c0max) : gcm_(build_gcm(l)), k_(k), c0max_(c0max) {
  if (k < 1) throw std::domain_error("KacMoodyTable: k must be >= 1");
  if (c0max < 0) throw std::domain_error("KacMoodyTable: c0max must be >= 0");
  compute_roots();
  compute_weights();
}

long long KacMoodyTable::root_mult(const std::vector<long>& beta) const {
  auto it = roots_.find(beta);
  return it == roots_.end() ? 0 : it->second;
}

long long KacMoodyTable::weight_mult(const std::vector<long>& beta) const {
  auto it = weights_.find(beta);
  return it == weights_.end() ? 0 : it->second;
}

void KacMoodyTable::compute_roots() {
  const int l = gcm_.l;
  const int n = l + 1;
  RationalMatrix b = gcm_bilinear(gcm_);

  // Candidate set: beta >= 0, beta != 0, <beta,beta> <= 2, beta_0 <= c0max,
  // enumerated per c0-slice; the finite-part block of B is positive
  // definite, so each slice is a bounded affine ellipsoid.
  RationalMatrix bsub(l, std::vector<Rational>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) bsub[i][j] = b[i + 1][j + 1];

  std::vector<std::vector<long>> candidates;
  for (long c0 = 0; c0 <= c0max_; ++c0) {
    std::vector<Rational> lin(l);
    for (int i = 0; i < l; ++i) lin[i] = 2 * c0 * b[0][i + 1];
    AffineQuadratic q{bsub, lin, Rational(c0) * c0 * b[0][0]};
    enumerate_nonneg_points(q, 2, [&](const std::vector<long>& rest) {
      std::vector<long> beta(n);
      beta[0] = c0;
      for (int i = 0; i < l; ++i) beta[i + 1] = rest[i];
      if (height(beta) > 0) candidates.push_back(std::move(beta));
    });
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) {
    long hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });

  // Box for divisor bookkeeping: nothing outside the componentwise hull of
  // the candidates can occur as a summand below a candidate.
  std::vector<long> box(n, 0);
  for (const auto& c : candidates)
    for (int i = 0; i < n; ++i) box[i] = std::max(box[i], c[i]);

  // c_x = sum_{m | x} mult(x/m)/m, kept sparse and grown as roots appear.
  std::map<std::vector<long>, Rational> csupport;
  auto add_root_multiples = [&](const std::vector<long>& gamma, long long mult) {
    for (long mfac = 1;; ++mfac) {
      std::vector<long> x(n);
      bool inside = true;
      for (int i = 0; i < n; ++i) {
        x[i] = gamma[i] * mfac;
        if (x[i] > box[i]) inside = false;
      }
      if (!inside) break;
      csupport[x] += rat_ll(mult) / mfac;
    }
  };

  std::vector<Rational> rho_pair(n);  // <rho, alpha_i> = d_i
  for (int i = 0; i < n; ++i) rho_pair[i] = gcm_.d[i];

  for (const auto& beta : candidates) {
    if (height(beta) == 1) {  // simple root
      roots_[beta] = 1;
      add_root_multiples(beta, 1);
      continue;
    }
    Rational denom = pair_with(b, beta, beta);
    for (int i = 0; i < n; ++i) denom -= 2 * Rational(beta[i]) * rho_pair[i];
    // Right-hand side over decompositions beta = x' + x'' with both parts
    // in the support of c.
    Rational rhs = 0;
    for (const auto& [x1, c1] : csupport) {
      if (height(x1) >= height(beta)) continue;
      if (!componentwise_le(x1, beta)) continue;
      std::vector<long> x2(n);
      for (int i = 0; i < n; ++i) x2[i] = beta[i] - x1[i];
      auto it2 = csupport.find(x2);
      if (it2 == csupport.end()) continue;
      rhs += pair_with(b, x1, x2) * c1 * it2->second;
    }
    Rational cbeta;
    if (denom == 0) {
      if (rhs != 0) throw std::logic_error("compute_roots: Peterson pivot vanished");
      cbeta = 0;
    } else {
      cbeta = rhs / denom;
    }
    // mult(beta) = c_beta - sum_{m >= 2, m | beta} mult(beta/m)/m.
    Rational mult = cbeta;
    long g = 0;
    for (int i = 0; i < n; ++i) g = std::gcd(g, beta[i]);
    for (long mfac = 2; mfac <= g; ++mfac) {
      if (g % mfac != 0) continue;
      std::vector<long> div(n);
      for (int i = 0; i < n; ++i) div[i] = beta[i] / mfac;
      auto it = roots_.find(div);
      if (it != roots_.end()) mult -= rat_ll(it->second) / mfac;
    }
    long long m = require_nonneg_integer(mult, "compute_roots");
    if (m > 0) {
      roots_[beta] = m;
      add_root_multiples(beta, m);
    }
  }
}

void KacMoodyTable::compute_weights() {
  const int l = gcm_.l;
  const int n = l + 1;
  RationalMatrix b = gcm_bilinear(gcm_);

  // <x, kLambda0 + rho> in simple-root coordinates.
  std::vector<Rational> lam_rho(n);
  for (int i = 0; i < n; ++i) lam_rho[i] = gcm_.d[i];
  lam_rho[0] += Rational(k_) * gcm_.d[0];

  // Candidate weights: beta >= 0 with num(beta) = 2<beta,Lambda+rho> -
  // <beta,beta> > 0, sliced by c0 (the finite block of B is positive
  // definite, so each slice is finite).
  RationalMatrix bsub(l, std::vector<Rational>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) bsub[i][j] = b[i + 1][j + 1];

  std::vector<std::vector<long>> candidates;
  for (long c0 = 0; c0 <= c0max_; ++c0) {
    std::vector<Rational> lin(l);
    for (int i = 0; i < l; ++i) lin[i] = 2 * c0 * b[0][i + 1] - 2 * lam_rho[i + 1];
    Rational cst = Rational(c0) * c0 * b[0][0] - 2 * c0 * lam_rho[0];
    AffineQuadratic q{bsub, lin, cst};
    enumerate_nonneg_points(q, 0, [&](const std::vector<long>& rest) {
      if (q.value(rest) == 0) return;  // num(beta) = 0 cannot carry weight
      std::vector<long> beta(n);
      beta[0] = c0;
      for (int i = 0; i < l; ++i) beta[i + 1] = rest[i];
      if (height(beta) > 0) candidates.push_back(std::move(beta));
    });
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) {
    long hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });

  // Precompute per-root data for the Freudenthal sum.
  struct RootData {
    std::vector<long> gamma;
    long long mult;
    std::vector<Rational> brow;  // B * gamma
    Rational lam_gamma;          // <Lambda, gamma>
    Rational norm;               // <gamma, gamma>
  };
  std::vector<RootData> roots;
  roots.reserve(roots_.size());
  for (const auto& [gamma, mult] : roots_) {
    RootData rd;
    rd.gamma = gamma;
    rd.mult = mult;
    rd.brow.assign(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rd.brow[i] += b[i][j] * gamma[j];
    rd.lam_gamma = Rational(k_) * gcm_.d[0] * gamma[0];
    rd.norm = pair_with(b, gamma, gamma);
    roots.push_back(std::move(rd));
  }

  weights_[std::vector<long>(n, 0)] = 1;  // highest weight

  std::vector<long> shifted(n);
  for (const auto& beta : candidates) {
    Rational num = 0;
    for (int i = 0; i < n; ++i) num += 2 * Rational(beta[i]) * lam_rho[i];
    num -= pair_with(b, beta, beta);
    if (num <= 0) throw std::logic_error("compute_weights: numerator not positive");

    Rational rhs = 0;
    for (const auto& rd : roots) {
      // <beta, gamma> via the precomputed row.
      Rational beta_gamma = 0;
      for (int i = 0; i < n; ++i)
        if (beta[i] != 0) beta_gamma += Rational(beta[i]) * rd.brow[i];
      for (long j = 1;; ++j) {
        bool inside = true;
        for (int i = 0; i < n; ++i) {
          shifted[i] = beta[i] - j * rd.gamma[i];
          if (shifted[i] < 0) {
            inside = false;
            break;
          }
        }
        if (!inside) break;
        auto it = weights_.find(shifted);
        if (it == weights_.end()) continue;
        // <lambda + j gamma, gamma> with lambda = Lambda - beta.
        Rational pairing = rd.lam_gamma - beta_gamma + j * rd.norm;
        rhs += rat_ll(rd.mult) * rat_ll(it->second) * pairing;
      }
    }
    Rational mult = 2 * rhs / num;
    long long m = require_nonneg_integer(mult, "compute_weights");
    if (m > 0) weights_[beta] = m;
  }
}

std::vector<long> dictionary_y(const Dictionary& dict, const std::vector<long>& beta, int l) {
  if (beta.size() != static_cast<std::size_t>(l + 1))
    throw std::domain_error("dictionary_y: beta must have l+1 coordinates");
  if (dict.u0.size() != static_cast<std::size_t>(l))
    throw std::domain_error("dictionary_y: u0 must have l coordinates");
  std::vector<long> y(l);
  for (int i = 1; i <= l; ++i) {
    long img = (i == l) ? 2 : 1;  // alpha_i -> e_i for i < l, alpha_l -> 2 e_l
    y[i - 1] = -(beta[0] * dict.u0[i - 1] + beta[i] * img);
  }
  return y;
}

namespace {

/** Multiset y -> coefficient of the reference terms with q-degree exactly d. */
std::map<std::vector<long>, long long> reference_shell(const MultiSeries& ref, const Rational& d) {
  std::map<std::vector<long>, long long> shell;
  for (const auto& [key, c] : ref.terms()) {
    if (key.first == d) shell[key.second] = c;
    if (key.first > d) break;
  }
  return shell;
}

/** Multiset y -> total multiplicity of table weights with beta_0 == c0 under the dictionary. */
std::map<std::vector<long>, long long> table_shell(const KacMoodyTable& table,
                                                   const Dictionary& dict, int l, long c0) {
  std::map<std::vector<long>, long long> shell;
  for (const auto& [beta, mult] : table.weight_table()) {
    if (beta[0] != c0) continue;
    std::vector<long> y = dictionary_y(dict, beta, l);
    shell[y] = checked_add(shell[y], mult);
  }
  return shell;
}

}  // namespace

Dictionary calibrate_dictionary(const KacMoodyTable& table, const MultiSeries& reference,
                                const ModelParams& params) {
  params.validate();
  const int l = params.l;
  if (table.depth() < 2)
    throw std::domain_error("calibrate_dictionary: table depth must be at least 2");

  // Candidate t0: the two lowest distinct positive q-degrees of the
  // reference (terms are iterated in increasing q-degree).
  std::vector<Rational> cands;
  for (const auto& [key, c] : reference.terms()) {
    (void)c;
    if (key.first <= 0) continue;
    if (cands.empty() || key.first != cands.back()) cands.push_back(key.first);
    if (cands.size() == 2) break;
  }
  if (cands.empty())
    throw std::runtime_error("calibrate_dictionary: reference has no positive terms");

  std::vector<Dictionary> survivors;
  for (const Rational& t0 : cands) {
    if (2 * t0 > reference.trunc())
      throw std::domain_error(
          "calibrate_dictionary: reference truncation too small for shell matching");
    auto ref1 = reference_shell(reference, t0);
    auto ref2 = reference_shell(reference, 2 * t0);
    // u0 candidates: the weight with beta = (1,0,...,0) has multiplicity 1
    // and maps to -u0, so -u0 must be one of the shell-1 y-weights.
    for (const auto& [ystar, coeff] : ref1) {
      (void)coeff;
      Dictionary dict;
      dict.t0 = t0;
      dict.u0.assign(l, 0);
      for (int i = 0; i < l; ++i) dict.u0[i] = -ystar[i];
      if (table_shell(table, dict, l, 1) == ref1 && table_shell(table, dict, l, 2) == ref2)
        survivors.push_back(dict);
    }
  }
  if (survivors.size() != 1) {
    std::ostringstream os;
    os << "calibrate_dictionary: expected exactly one surviving dictionary, found "
       << survivors.size();
    throw std::runtime_error(os.str());
  }
  return survivors.front();
}

MultiSeries freudenthal_character(const KacMoodyTable& table, const Dictionary& dict,
                                  const ModelParams& params, const Rational& qcut) {
  params.validate();
  const int l = params.l;
  if (Rational(table.depth()) * dict.t0 < qcut)
    throw std::domain_error("freudenthal_character: table depth insufficient for qcut");
  MultiSeries out(qcut, l);
  for (const auto& [beta, mult] : table.weight_table()) {
    Rational q = Rational(beta[0]) * dict.t0;
    if (q > qcut) continue;
    out.add_term(q, dictionary_y(dict, beta, l), mult);
  }
  return out;
}

}  // namespace twistchar
