#include "twistchar/lattice.hpp"

#include <stdexcept>

namespace twistchar {

void ModelParams::validate() const {
  if (l < 1) throw std::domain_error("ModelParams::validate: l must be >= 1");
  if (k < 1) throw std::domain_error("ModelParams::validate: k must be >= 1");
  if (trunc < 0) throw std::domain_error("ModelParams::validate: trunc must be >= 0");
}

namespace {

void check_dim(const LatticeVector& a, int l, const char* where) {
  if (l < 1) throw std::domain_error(std::string(where) + ": l must be >= 1");
  if (a.size() != static_cast<std::size_t>(2 * l))
    throw std::domain_error(std::string(where) + ": vector must have 2l entries");
}

void check_root(const RootInterval& r, int l, const char* where) {
  if (l < 1) throw std::domain_error(std::string(where) + ": l must be >= 1");
  if (r.start < 1 || r.len < 1 || r.start + r.len - 1 > 2 * l)
    throw std::domain_error(std::string(where) + ": interval out of range");
  if (r.sign != 1 && r.sign != -1)
    throw std::domain_error(std::string(where) + ": sign must be +1 or -1");
}

}  // namespace

long gram(const LatticeVector& a, const LatticeVector& b, int l) {
  check_dim(a, l, "gram");
  check_dim(b, l, "gram");
  const int n = 2 * l;
  long acc = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    long row = 2 * b[i];
    if (i > 0) row -= b[i - 1];
    if (i + 1 < n) row -= b[i + 1];
    acc += a[i] * row;
  }
  return acc;
}

LatticeVector nu(const LatticeVector& a, int l) {
  check_dim(a, l, "nu");
  return LatticeVector(a.rbegin(), a.rend());
}

RootInterval nu_root(const RootInterval& r, int l) {
  check_root(r, l, "nu_root");
  return RootInterval{2 * l - r.start - r.len + 2, r.len, r.sign};
}

LatticeVector root_vector(const RootInterval& r, int l) {
  check_root(r, l, "root_vector");
  LatticeVector v(2 * l, 0);
  for (int i = r.start; i < r.start + r.len; ++i) v[i - 1] = r.sign;
  return v;
}

FoldedVector project0(const LatticeVector& a, int l) {
  check_dim(a, l, "project0");
  FoldedVector u;
  u.f.resize(l);
  for (int i = 0; i < l; ++i) u.f[i] = a[i] + a[2 * l - 1 - i];
  return u;
}

std::vector<long> project2(const LatticeVector& a, int l) {
  check_dim(a, l, "project2");
  std::vector<long> g(l);
  for (int i = 0; i < l; ++i) g[i] = a[i] - a[2 * l - 1 - i];
  return g;
}

std::vector<std::vector<Rational>> folded_gram(int l) {
  if (l < 1) throw std::domain_error("folded_gram: l must be >= 1");
  std::vector<std::vector<Rational>> a(l, std::vector<Rational>(l, 0));
  for (int i = 0; i < l; ++i) {
    a[i][i] = (i == l - 1) ? rat(1, 2) : rat(1);
    if (i + 1 < l) {
      a[i][i + 1] = rat(-1, 2);
      a[i + 1][i] = rat(-1, 2);
    }
  }
  return a;
}

Rational folded_pair(const FoldedVector& u, const FoldedVector& v, int l) {
  if (u.f.size() != static_cast<std::size_t>(l) || v.f.size() != static_cast<std::size_t>(l))
    throw std::domain_error("folded_pair: vectors must have l entries");
  Rational acc = 0;
  for (int i = 0; i < l; ++i) {
    if (u.f[i] == 0) continue;
    // Row i of the folded Gram matrix applied to v.
    Rational row = (i == l - 1) ? Rational(v.f[i]) / 2 : Rational(v.f[i]);
    if (i > 0) row -= Rational(v.f[i - 1]) / 2;
    if (i + 1 < l) row -= Rational(v.f[i + 1]) / 2;
    acc += Rational(u.f[i]) * row;
  }
  return acc;
}

Rational rho_norm(int i, int l) {
  if (i < 1 || i > l) throw std::domain_error("rho_norm: index out of range");
  return (i == l) ? rat(1, 4) : rat(1, 2);
}

std::vector<RootInterval> enumerate_roots(int l) {
  if (l < 1) throw std::domain_error("enumerate_roots: l must be >= 1");
  std::vector<RootInterval> out;
  out.reserve(static_cast<std::size_t>(2 * l) * (2 * l + 1));
  for (int sign : {1, -1})
    for (int start = 1; start <= 2 * l; ++start)
      for (int len = 1; start + len - 1 <= 2 * l; ++len)
        out.push_back(RootInterval{start, len, sign});
  return out;
}

int contains_middle(const RootInterval& r, int l) {
  check_root(r, l, "contains_middle");
  int count = 0;
  if (r.start <= l && l <= r.start + r.len - 1) ++count;
  if (r.start <= l + 1 && l + 1 <= r.start + r.len - 1) ++count;
  return count;
}

std::vector<long> coset_class(const FoldedVector& u, int k) {
  if (k < 1) throw std::domain_error("coset_class: k must be >= 1");
  std::vector<long> c(u.f.size());
  for (std::size_t i = 0; i < u.f.size(); ++i) {
    long r = u.f[i] % k;
    if (r < 0) r += k;
    c[i] = r;
  }
  return c;
}

}  // namespace twistchar
