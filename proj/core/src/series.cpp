#include "twistchar/series.hpp"

#include <sstream>
#include <stdexcept>

#include "twistchar/quadform.hpp"

namespace twistchar {

MultiSeries::MultiSeries(Rational trunc, int yrank) : trunc_(std::move(trunc)), yrank_(yrank) {
  if (trunc_ < 0) throw std::domain_error("MultiSeries: trunc must be >= 0");
  if (yrank_ < 0) throw std::domain_error("MultiSeries: yrank must be >= 0");
}

MultiSeries MultiSeries::one(Rational trunc, int yrank) {
  MultiSeries s(std::move(trunc), yrank);
  s.add_term(0, std::vector<long>(yrank, 0), 1);
  return s;
}

void MultiSeries::add_term(const Rational& d, const std::vector<long>& m, long long c) {
  if (d < 0) throw std::domain_error("MultiSeries::add_term: negative q-degree");
  if (m.size() != static_cast<std::size_t>(yrank_))
    throw std::domain_error("MultiSeries::add_term: y-rank mismatch");
  if (c == 0 || d > trunc_) return;
  Key key{d, m};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

long long MultiSeries::coeff(const Rational& d, const std::vector<long>& m) const {
  auto it = terms_.find(Key{d, m});
  return it == terms_.end() ? 0 : it->second;
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
  if (yrank_ != o.yrank_ || trunc_ != o.trunc_)
    throw std::domain_error("MultiSeries::operator+=: incompatible series");
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

MultiSeries MultiSeries::operator+(const MultiSeries& o) const {
  MultiSeries r = *this;
  r += o;
  return r;
}

MultiSeries MultiSeries::operator*(const MultiSeries& o) const {
  if (yrank_ != o.yrank_ || trunc_ != o.trunc_)
    throw std::domain_error("MultiSeries::operator*: incompatible series");
  MultiSeries r(trunc_, yrank_);
  std::vector<long> m(yrank_);
  for (const auto& [k1, c1] : terms_) {
    for (const auto& [k2, c2] : o.terms_) {
      Rational d = k1.first + k2.first;
      if (d > trunc_) break;  // keys are sorted by q-degree first
      for (int i = 0; i < yrank_; ++i) m[i] = k1.second[i] + k2.second[i];
      r.add_term(d, m, checked_mul(c1, c2));
    }
  }
  return r;
}

bool MultiSeries::operator==(const MultiSeries& o) const {
  return yrank_ == o.yrank_ && trunc_ == o.trunc_ && terms_ == o.terms_;
}

MultiSeries MultiSeries::truncated(const Rational& new_trunc) const {
  if (new_trunc > trunc_)
    throw std::domain_error("MultiSeries::truncated: cannot extend truncation");
  MultiSeries r(new_trunc, yrank_);
  for (const auto& [key, c] : terms_) {
    if (key.first > new_trunc) break;
    r.add_term(key.first, key.second, c);
  }
  return r;
}

std::optional<std::tuple<MultiSeries::Key, long long, long long>> MultiSeries::first_mismatch(
    const MultiSeries& o) const {
  if (yrank_ != o.yrank_)
    throw std::domain_error("MultiSeries::first_mismatch: y-rank mismatch");
  auto it1 = terms_.begin();
  auto it2 = o.terms_.begin();
  KeyLess less;
  while (it1 != terms_.end() || it2 != o.terms_.end()) {
    if (it2 == o.terms_.end() || (it1 != terms_.end() && less(it1->first, it2->first))) {
      return std::tuple{it1->first, it1->second, 0LL};
    }
    if (it1 == terms_.end() || less(it2->first, it1->first)) {
      return std::tuple{it2->first, 0LL, it2->second};
    }
    if (it1->second != it2->second) return std::tuple{it1->first, it1->second, it2->second};
    ++it1;
    ++it2;
  }
  return std::nullopt;
}

std::string MultiSeries::str() const {
  std::ostringstream os;
  for (const auto& [key, c] : terms_) {
    os << "q=" << rational_str(key.first) << " y=(";
    for (std::size_t i = 0; i < key.second.size(); ++i) {
      if (i) os << ",";
      os << key.second[i];
    }
    os << ") c=" << c << "\n";
  }
  return os.str();
}

MultiSeries pochhammer_inv(long n, const Rational& trunc, int yrank) {
  if (n < 0) throw std::domain_error("pochhammer_inv: n must be >= 0");
  MultiSeries r = MultiSeries::one(trunc, yrank);
  std::vector<long> zero(yrank, 0);
  for (long i = 1; i <= n; ++i) {
    Rational step = rat(i, 2);
    if (step > trunc) break;  // higher factors are 1 within the window
    MultiSeries geom(trunc, yrank);
    for (Rational d = 0; d <= trunc; d += step) geom.add_term(d, zero, 1);
    r = r * geom;
  }
  return r;
}

MultiSeries pochhammer_inf_inv(const Rational& trunc, int yrank) {
  // Within the truncation window the infinite product equals the finite one
  // with n = floor(2*trunc) factors.
  return pochhammer_inv(floor_long(trunc * 2), trunc, yrank);
}

long long partition_count(long max_parts, long j) {
  if (j < 0 || max_parts < 0) return 0;
  if (j == 0) return 1;
  if (max_parts == 0) return 0;
  // Partitions of j into at most max_parts parts = partitions of j with
  // parts of size <= max_parts (conjugation).
  std::vector<long long> dp(static_cast<std::size_t>(j) + 1, 0);
  dp[0] = 1;
  for (long s = 1; s <= max_parts && s <= j; ++s)
    for (long x = s; x <= j; ++x) dp[x] = checked_add(dp[x], dp[x - s]);
  return dp[j];
}

MultiSeries theta_sum(const ModelParams& params) {
  params.validate();
  const int l = params.l;
  MultiSeries r(params.trunc, l);
  RationalMatrix a = folded_gram(l);
  // Quadratic degree <eta, eta> / (2k): scale the folded Gram matrix.
  for (auto& row : a)
    for (auto& v : row) v /= 2 * params.k;
  AffineQuadratic q{a, {}, 0};
  enumerate_integer_points(q, params.trunc,
                           [&](const std::vector<long>& eta) { r.add_term(q.value(eta), eta, 1); });
  return r;
}

}  // namespace twistchar
