#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "lrs/weyl.hpp"

namespace lrs {

/// Integer combination of Schubert classes sigma_w of H*(G/B), keyed by the
/// index of w in its WeylGroup.  sigma_w is the class of the closure of
/// BwB/B, so it has complex dimension l(w).  Zero coefficients are never
/// stored.
class CohomClass {
 public:
  explicit CohomClass(WeylGroupPtr group) : group_(std::move(group)) {}
  static CohomClass schubert(WeylGroupPtr group, std::size_t w, std::int64_t coeff = 1);

  const WeylGroupPtr& group() const { return group_; }
  const std::map<std::size_t, std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t coeff(std::size_t w) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add(std::size_t w, std::int64_t c);
  CohomClass& operator+=(const CohomClass& other);

  friend bool operator==(const CohomClass& a, const CohomClass& b) {
    return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
  }

 private:
  WeylGroupPtr group_;
  std::map<std::size_t, std::int64_t> coeffs_;
};

/// Levi-movability on G/B: the complements of the inversion sets partition
/// the positive roots.
bool is_levi_movable(std::span<const WeylElement> ws);
bool is_levi_movable(const WeylGroup& g, std::span<const std::size_t> ws);

/// Structure constant of the Belkale-Kumar product: 1 when (u, v, w) is
/// Levi-movable, else 0.  No cup product is computed.
int bk_coefficient(const WeylElement& u, const WeylElement& v, const WeylElement& w);
int bk_coefficient(const WeylGroup& g, std::size_t u, std::size_t v, std::size_t w);

/// sigma_u (.)_0 sigma_v = sum_w c(u,v,w) sigma_{w0 w}.
CohomClass bk_product(const WeylGroupPtr& g, const WeylElement& u, const WeylElement& v);
CohomClass bk_product(const WeylGroupPtr& g, std::size_t u, std::size_t v);
/// Bilinear extension.
CohomClass bk_product(const CohomClass& a, const CohomClass& b);

/// w0 * w; sigma_{w0 w} is the Poincare dual of sigma_w.
WeylElement poincare_dual(const WeylElement& w);

/// Default and hard cap on the number of factors accepted by the tuple
/// enumerators.
inline constexpr int kMaxFactors = 6;

/// Every ordered s-tuple (w_1, ..., w_s) of group indices whose inversion
/// sets partition the positive roots, in lexicographic order of indices.
std::vector<std::vector<std::size_t>> enumerate_partition_tuples(const WeylGroup& g, int s);

/// Every ordered Levi-movable s-tuple, i.e. tuples whose inversion-set
/// complements partition the positive roots.  Same order convention.
std::vector<std::vector<std::size_t>> enumerate_levi_movable_tuples(const WeylGroup& g, int s);

}  // namespace lrs
