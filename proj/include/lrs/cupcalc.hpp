#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "lrs/bkring.hpp"
#include "lrs/weyl.hpp"

namespace lrs {

/// Polynomial with rational coefficients in the fundamental weights
/// omega_1..omega_r, viewed as elements of Sym(h*).  Monomials are packed
/// eight bits per exponent, so degrees stay below 256 and rank below 9.
class CoinvariantPoly {
 public:
  using Monomial = std::uint64_t;

  CoinvariantPoly() = default;
  explicit CoinvariantPoly(int nvars) : nvars_(nvars) {}
  static CoinvariantPoly constant(int nvars, const mpq_class& c);
  /// The linear form with the given fundamental-weight coordinates.
  static CoinvariantPoly linear(const Weight& coords);

  int nvars() const { return nvars_; }
  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree of a homogeneous polynomial; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  mpq_class constant_term() const;

  static int exponent(Monomial m, int var) { return static_cast<int>((m >> (8 * var)) & 0xff); }
  static int total_degree(Monomial m);

  void add_term(Monomial m, const mpq_class& c);
  CoinvariantPoly& operator+=(const CoinvariantPoly& o);
  CoinvariantPoly& operator-=(const CoinvariantPoly& o);
  CoinvariantPoly& operator*=(const mpq_class& c);
  friend CoinvariantPoly operator*(const CoinvariantPoly& a, const CoinvariantPoly& b);
  friend CoinvariantPoly operator+(CoinvariantPoly a, const CoinvariantPoly& b) { return a += b; }
  friend CoinvariantPoly operator-(CoinvariantPoly a, const CoinvariantPoly& b) { return a -= b; }
  friend bool operator==(const CoinvariantPoly& a, const CoinvariantPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  int nvars_ = 0;
  std::map<Monomial, mpq_class> terms_;
};

/// s_i acting on Sym(h*) through its action on the weights.
CoinvariantPoly reflect(const RootSystem& rs, int i, const CoinvariantPoly& p);
/// BGG operator (p - s_i p) / alpha_i.  The division is exact.
CoinvariantPoly divided_difference(const RootSystem& rs, int i, const CoinvariantPoly& p);

/// Cup-product oracle on H*(G/B) via divided differences.  sigma_e (the
/// point class) is represented by prod_{alpha>0} alpha / |W|, and
/// sigma_{w s_i} = d_i sigma_w whenever l(w s_i) > l(w).  Integration is
/// d_{w0} followed by taking the constant term.
///
/// Representatives and monomial integrals are memoised behind a mutex.
class CupOracle {
 public:
  /// Rejects groups with l(w0) above `max_top_degree` with GroupTooLarge.
  explicit CupOracle(WeylGroupPtr group, int max_top_degree = 24);

  const WeylGroupPtr& group() const { return group_; }

  const CoinvariantPoly& schubert_representative(std::size_t w) const;
  CoinvariantPoly schubert_representative(const WeylElement& w) const;
  /// Representative built along an arbitrary reduced word for w, starting
  /// from the point class.  Used to check braid independence.
  CoinvariantPoly representative_along(const Word& reduced_word) const;

  /// Integral over G/B of a polynomial: constant term of d_{w0} p.
  mpq_class integrate(const CoinvariantPoly& p) const;

  /// Intersection number of sigma_u, sigma_v, sigma_w (0 unless
  /// l(u) + l(v) + l(w) = 2 l(w0)).  Throws Internal if the result is not a
  /// nonnegative integer.
  std::int64_t cup_coefficient(std::size_t u, std::size_t v, std::size_t w) const;
  std::int64_t cup_coefficient(const WeylElement& u, const WeylElement& v, const WeylElement& w) const;
  /// Same for any number of factors.
  std::int64_t cup_integral(std::span<const std::size_t> ws) const;

  /// sigma_u . sigma_v = sum_w c_{uvw} sigma_{w0 w}.
  CohomClass cup_product(std::size_t u, std::size_t v) const;

 private:
  WeylGroupPtr group_;
  std::vector<std::size_t> simple_index_;
  std::vector<int> w0_word_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<CoinvariantPoly>> reps_;
  mutable std::map<CoinvariantPoly::Monomial, mpq_class> monomial_integrals_;
};

}  // namespace lrs
