#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "lrs/rootsys.hpp"

namespace lrs {

/// Size limits for the brute-force oracle.  Exceeding either one raises
/// OracleOverflow; the oracle never approximates.
struct OracleBudget {
  std::uint64_t max_dim = 100'000;       // Weyl dimension of any single factor
  std::size_t max_support = 200'000;     // distinct weights held for one module
};

/// V_lam (x) V_mu as a list of (highest weight, multiplicity), sorted
/// lexicographically by weight coordinates.
struct Decomposition {
  std::vector<std::pair<Weight, std::int64_t>> terms;

  std::int64_t multiplicity(const Weight& w) const;
};

struct ProbeResult {
  std::vector<std::pair<int, std::int64_t>> dims;  // (k, dim of invariants at k*weights)
  bool overflow = false;                           // stopped early on budget
};

/// Exact representation-theoretic oracle: Weyl dimension, Freudenthal weight
/// multiplicities, Klimyk tensor decomposition and invariant dimensions.
/// Freudenthal results are memoised per highest weight; the cache is guarded
/// so one oracle can be shared across threads.
class TensorOracle {
 public:
  explicit TensorOracle(RootSystemPtr rs, OracleBudget budget = {});

  const RootSystem& rs() const { return *rs_; }
  const OracleBudget& budget() const { return budget_; }

  mpz_class weyl_dim(const Weight& lam) const;

  /// Every weight of V_lam with its multiplicity.
  std::map<Weight, std::int64_t> weight_multiplicities(const Weight& lam) const;
  /// Multiplicities of the dominant weights of V_lam only.
  std::map<Weight, std::int64_t> dominant_multiplicities(const Weight& lam) const;

  Decomposition decompose(const Weight& lam, const Weight& mu) const;

  /// dim (V_1 (x) ... (x) V_s)^G.
  std::int64_t invariant_dim(std::span<const Weight> weights) const;

  /// [(k, invariant_dim(k * weights)) for k = 1..K]; stops at the first
  /// budget overflow and flags it.
  ProbeResult stable_mult_probe(std::span<const Weight> weights, int K) const;

 private:
  struct WeightSystem {
    std::map<Weight, std::int64_t> dominant;
    std::vector<std::pair<Weight, std::int64_t>> all;
  };
  std::shared_ptr<const WeightSystem> weight_system(const Weight& lam) const;
  std::shared_ptr<const WeightSystem> compute_weight_system(const Weight& lam) const;
  void require_dominant(const Weight& lam) const;
  void require_budget(const Weight& lam) const;

  RootSystemPtr rs_;
  OracleBudget budget_;
  mutable std::mutex mutex_;
  mutable std::map<Weight, std::shared_ptr<const WeightSystem>> cache_;
};

}  // namespace lrs
