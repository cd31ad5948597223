#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lrs {

/// Cartan type of a simple or semisimple group, identified by series letter
/// and rank.  Only single-series (simple) types are supported.
struct GroupType {
  char series = 'A';
  int rank = 1;

  /// Validates the rank against the series and rejects E7/E8.
  static GroupType make(char series, int rank);
  /// Parses "A2", "B3", "G2", ... (case-insensitive series letter).
  static GroupType parse(std::string_view text);

  std::string name() const;
  friend bool operator==(const GroupType&, const GroupType&) = default;
};

/// Integral weight in fundamental-weight coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, 0) {}
  explicit Weight(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  std::size_t rank() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  std::span<const std::int64_t> coords() const { return coords_; }

  bool is_dominant() const;
  bool is_strictly_dominant() const;
  bool is_zero() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(std::int64_t k, Weight a);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

/// Immutable root-system tables for one group type.
///
/// Conventions: Bourbaki numbering; `cartan(i, j)` is <alpha_i, alpha_j^vee>,
/// so the fundamental-weight coordinates of alpha_i are row i of the Cartan
/// matrix.  Positive roots are indexed by (height, lexicographic simple-root
/// coordinates); the first `rank()` entries are the simple roots.
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> build(GroupType type);

  GroupType type() const { return type_; }
  int rank() const { return type_.rank; }
  int n_pos() const { return static_cast<int>(roots_.size()); }

  std::int64_t cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank() + j)]; }

  /// Positive root in simple-root coordinates.
  std::span<const std::int64_t> root(int index) const;
  /// Positive root in fundamental-weight coordinates.
  const Weight& root_fw(int index) const;
  /// Coefficients of the coroot of root `index` in the simple-coroot basis.
  std::span<const std::int64_t> coroot(int index) const;
  int height(int index) const;

  const Weight& rho() const { return rho_; }
  Weight zero() const { return Weight(static_cast<std::size_t>(rank())); }

  /// <lam, beta^vee> for the positive root with the given index.
  std::int64_t pairing(const Weight& lam, int coroot_index) const;

  /// 2(lam, beta) in the invariant form normalised so that short roots of
  /// simply-laced components have (alpha, alpha) = 2.  Always an integer.
  std::int64_t form2(const Weight& lam, int root_index) const;
  /// 2(lam, beta) where beta is given in simple-root coordinates.
  std::int64_t form2_root(const Weight& lam, std::span<const std::int64_t> beta) const;

  /// (alpha_i, alpha_i) for simple root i.
  std::int64_t simple_norm(int i) const { return norms_[static_cast<std::size_t>(i)]; }

  /// Looks up a root given in fundamental-weight coordinates.  Returns the
  /// positive-root index and +1/-1 for positive/negative roots.
  struct SignedRoot {
    int index;
    int sign;
  };
  std::optional<SignedRoot> find_root_fw(const Weight& v) const;

  /// Converts simple-root coordinates to fundamental-weight coordinates.
  Weight to_fw(std::span<const std::int64_t> simple_coords) const;

  bool validate_weight(const Weight& lam) const { return lam.rank() == static_cast<std::size_t>(rank()); }

 private:
  RootSystem() = default;

  GroupType type_;
  std::vector<std::int64_t> cartan_;
  std::vector<std::int64_t> norms_;
  std::vector<std::vector<std::int64_t>> roots_;
  std::vector<std::vector<std::int64_t>> coroots_;
  std::vector<Weight> roots_fw_;
  std::vector<int> heights_;
  Weight rho_;
  std::unordered_map<Weight, SignedRoot, WeightHash> lookup_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

}  // namespace lrs
