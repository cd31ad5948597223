#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "lrs/cupcalc.hpp"
#include "lrs/tensoracle.hpp"
#include "lrs/weyl.hpp"

namespace lrs {

/// Tuple of Weyl group elements given by their indices in a WeylGroup.
using ElementTuple = std::vector<std::size_t>;

enum class StableStatus { ProvenTrue, RefutedAtK, UnknownUpTo };

/// Three-valued verdict on "dim (V_{k l1} (x) ... )^G = 1 for all k >= 1".
/// ProvenTrue comes from the cohomological criterion, never from probing.
struct StableMultOne {
  StableStatus status = StableStatus::UnknownUpTo;
  int k = 0;               // refuting k, or probe depth reached
  std::int64_t dim = 0;    // invariant dimension at the refuting k

  friend bool operator==(const StableMultOne&, const StableMultOne&) = default;
};

struct TripleClassification {
  std::vector<Weight> weights;
  bool prv = false;
  std::vector<ElementTuple> prv_witnesses;
  bool cohomological = false;
  std::vector<ElementTuple> coh_witnesses;
  bool regularly_extremal = false;
  std::vector<ElementTuple> rex_witnesses;
  StableMultOne stable_mult_one;
  std::vector<std::pair<int, std::int64_t>> oracle_mults;
  bool oracle_overflow = false;
  /// More than three factors: the statements are the s-fold analogues.
  bool extended = false;
  /// Set when the cup oracle re-checked sigma_u sigma_v sigma_w = [pt] for
  /// every regularly-extremal witness.
  std::optional<bool> cup_verified;
};

struct FaceSample {
  std::vector<std::vector<Weight>> tuples;
  int lattice_rank = 0;
};

struct ClassifyOptions {
  /// Upper bound on |W|^(s-1) for the PRV search.
  std::uint64_t prv_search_cap = 50'000'000;
  /// Re-verify the cup-product condition of regularly-extremal witnesses.
  bool verify_cup = false;
};

/// Decides PRV, cohomological and regularly-extremal status of dominant
/// weight tuples.  Witness lists are exhaustive and sorted by total length,
/// then componentwise by element index (itself ordered by length and
/// lexicographic reduced word).
class Classifier {
 public:
  Classifier(WeylGroupPtr group, std::shared_ptr<const TensorOracle> oracle, ClassifyOptions options = {});

  const WeylGroupPtr& group() const { return group_; }
  const TensorOracle& oracle() const { return *oracle_; }

  /// Tuples with sum u_i lam_i = 0.  The first s-1 components range over all
  /// of W; the last is the minimal-length element sending lam_s to the
  /// required weight.
  std::vector<ElementTuple> prv_witnesses(std::span<const Weight> weights) const;

  /// Tuples with Phi+ = disjoint union of Phi_{u_i} and
  /// sum u_i^{-1} lam_i = 0.
  std::vector<ElementTuple> cohomological_witnesses(std::span<const Weight> weights) const;

  /// Tuples with Phi+ = disjoint union of the complements Phi_{u_i}^c and
  /// sum u_i^{-1} lam_i = 0.
  std::vector<ElementTuple> regularly_extremal_witnesses(std::span<const Weight> weights) const;

  TripleClassification classify(std::span<const Weight> weights, int K) const;

  /// Points of the face attached to a witness of the partition condition:
  /// all tuples with the first s-1 weights dominant and bounded by `bound`
  /// and the last one forced by sum u_i^{-1} lam_i = 0 and dominant.
  FaceSample face_sample(const ElementTuple& witness, int bound) const;

  /// Cached enumerations shared by the witness searches.
  const std::vector<ElementTuple>& partition_tuples(int s) const;
  const std::vector<ElementTuple>& levi_movable_tuples(int s) const;

 private:
  void validate(std::span<const Weight> weights) const;
  bool balanced_inverse(const ElementTuple& t, std::span<const Weight> weights) const;

  WeylGroupPtr group_;
  std::shared_ptr<const TensorOracle> oracle_;
  ClassifyOptions options_;
  std::unique_ptr<CupOracle> cup_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::vector<ElementTuple>> partitions_;
  mutable std::map<int, std::vector<ElementTuple>> levi_;
};

/// Rank over Q of a list of integer vectors.
int lattice_rank(const std::vector<std::vector<std::int64_t>>& rows);

}  // namespace lrs
