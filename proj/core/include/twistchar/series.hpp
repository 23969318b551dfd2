#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "twistchar/lattice.hpp"
#include "twistchar/rational.hpp"

namespace twistchar {

/** @brief Add with overflow detection; throws std::overflow_error. */
inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in add");
  return r;
}

/** @brief Multiply with overflow detection; throws std::overflow_error. */
inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in mul");
  return r;
}

/**
 * @brief Truncated formal series in q^(1/N) and Laurent variables y_1..y_r.
 *
 * A term is q^d * y^m with d a nonnegative rational, m an integer vector of
 * fixed rank, and an integer coefficient.  Terms with d > trunc are dropped
 * on insertion, so ring operations agree with exact arithmetic up to and
 * including degree trunc.  Terms are kept sorted by (d, m lexicographic),
 * which makes iteration order, equality and serialization deterministic.
 */
class MultiSeries {
 public:
  using Key = std::pair<Rational, std::vector<long>>;

  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      int c = cmp(a.first, b.first);
      if (c != 0) return c < 0;
      return a.second < b.second;
    }
  };

  using TermMap = std::map<Key, long long, KeyLess>;

  MultiSeries(Rational trunc, int yrank);

  /** @brief The multiplicative unit 1 = q^0 y^0. */
  static MultiSeries one(Rational trunc, int yrank);

  /**
   * @brief Add c * q^d * y^m.  Terms beyond the truncation degree are
   *        silently dropped; negative d throws (all gradings here are
   *        nonnegative); exactly cancelled terms are erased.
   */
  void add_term(const Rational& d, const std::vector<long>& m, long long c);

  /** @brief Coefficient of q^d y^m (0 when absent). */
  long long coeff(const Rational& d, const std::vector<long>& m) const;

  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries operator+(const MultiSeries& o) const;
  MultiSeries operator*(const MultiSeries& o) const;
  bool operator==(const MultiSeries& o) const;
  bool operator!=(const MultiSeries& o) const { return !(*this == o); }

  /** @brief Copy truncated to a smaller degree. */
  MultiSeries truncated(const Rational& new_trunc) const;

  /**
   * @brief First differing term against another series, in (d, m) order:
   *        (key, this_coeff, other_coeff).  Empty when equal.
   */
  std::optional<std::tuple<Key, long long, long long>> first_mismatch(const MultiSeries& o) const;

  const TermMap& terms() const { return terms_; }
  const Rational& trunc() const { return trunc_; }
  int yrank() const { return yrank_; }
  std::size_t size() const { return terms_.size(); }

  /** @brief Human-readable multi-line rendering, one term per line. */
  std::string str() const;

 private:
  Rational trunc_;
  int yrank_;
  TermMap terms_;
};

/**
 * @brief Inverse of the finite half-integer Pochhammer product:
 *        1 / prod_{i=1}^{n} (1 - q^{i/2}), expanded to the truncation degree.
 *
 * The coefficient of q^{j/2} equals the number of partitions of j into at
 * most n parts (property-tested against partition_count).
 */
MultiSeries pochhammer_inv(long n, const Rational& trunc, int yrank);

/**
 * @brief Inverse of the infinite product prod_{i>=1} (1 - q^{i/2}),
 *        the character of one free boson in half-integer modes.
 */
MultiSeries pochhammer_inf_inv(const Rational& trunc, int yrank);

/** @brief Number of partitions of j into at most max_parts parts. */
long long partition_count(long max_parts, long j);

/**
 * @brief Lattice theta function of the folded form at level k:
 *        sum over integer vectors eta of q^{<eta,eta>/(2k)} y^eta,
 *        truncated at params.trunc.
 */
MultiSeries theta_sum(const ModelParams& params);

}  // namespace twistchar
