#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lrs/rootsys.hpp"

namespace lrs {

/// A subset of the positive roots of a fixed root system, one bit per root
/// index.  Root systems in scope have at most 36 positive roots.
class RootSubset {
 public:
  constexpr RootSubset() = default;
  constexpr explicit RootSubset(std::uint64_t bits) : bits_(bits) {}

  static constexpr RootSubset all(int n_pos) {
    return RootSubset(n_pos >= 64 ? ~0ull : ((1ull << n_pos) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr void insert(int i) { bits_ |= (1ull << i); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool disjoint(RootSubset o) const { return (bits_ & o.bits_) == 0; }
  constexpr RootSubset complement(int n_pos) const { return RootSubset(all(n_pos).bits_ & ~bits_); }

  std::vector<int> indices() const;

  friend constexpr RootSubset operator|(RootSubset a, RootSubset b) { return RootSubset(a.bits_ | b.bits_); }
  friend constexpr RootSubset operator&(RootSubset a, RootSubset b) { return RootSubset(a.bits_ & b.bits_); }
  friend constexpr bool operator==(RootSubset, RootSubset) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// True iff S and its complement in the positive roots are both closed under
/// root addition.  These are exactly the inversion sets.
bool is_biconvex(const RootSystem& rs, RootSubset s);

/// Square integer matrix acting on fundamental-weight coordinates.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n * n), 0) {}
  static IntMatrix identity(int n);

  int size() const { return n_; }
  std::int64_t operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * n_ + j)]; }
  std::int64_t& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * n_ + j)]; }

  Weight apply(const Weight& v) const;
  std::int64_t determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::size_t hash() const noexcept;

 private:
  int n_ = 0;
  std::vector<std::int64_t> data_;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept { return m.hash(); }
};

/// Reduced word: 0-based simple-reflection indices, read left to right as a
/// product s_{a1} s_{a2} ... s_{ak}.
using Word = std::vector<int>;

/// Text form used everywhere outside the library: "e" for the identity,
/// otherwise dot-separated 1-based indices, e.g. "1.2.1".
std::string format_word(const Word& word);
Word parse_word(std::string_view text, int rank);

/// An element of the Weyl group.  Identity is the action matrix; the word,
/// length and inversion set are caches recomputed whenever an element is
/// formed.  The stored word is the lexicographically minimal reduced word.
class WeylElement {
 public:
  static WeylElement identity(RootSystemPtr rs);
  /// Simple reflection s_i, i 0-based.
  static WeylElement simple(RootSystemPtr rs, int i);
  /// Product of the given (not necessarily reduced) word.
  static WeylElement from_word(RootSystemPtr rs, const Word& word);
  static WeylElement from_matrix(RootSystemPtr rs, IntMatrix action);

  const RootSystemPtr& root_system() const { return rs_; }
  const IntMatrix& action() const { return action_; }
  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  RootSubset inversions() const { return inversions_; }
  std::string to_string() const { return format_word(word_); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.rs_ == b.rs_ && a.action_ == b.action_;
  }

 private:
  friend class WeylGroup;
  WeylElement(RootSystemPtr rs, IntMatrix action, Word word, RootSubset inv)
      : rs_(std::move(rs)), action_(std::move(action)), word_(std::move(word)), inversions_(inv) {}

  RootSystemPtr rs_;
  IntMatrix action_;
  Word word_;
  RootSubset inversions_;
};

/// Matrix of the simple reflection s_i on fundamental-weight coordinates.
IntMatrix simple_reflection_matrix(const RootSystem& rs, int i);

/// Positive roots beta with w(beta) negative.
RootSubset inversion_set(const RootSystem& rs, const IntMatrix& action);
inline RootSubset inversion_set(const WeylElement& w) { return w.inversions(); }

WeylElement longest_element(RootSystemPtr rs);
WeylElement multiply(const WeylElement& u, const WeylElement& v);
WeylElement inverse(const WeylElement& w);

Weight act(const WeylElement& w, const Weight& lam);
/// w . lam = w(lam + rho) - rho.
Weight dot(const WeylElement& w, const Weight& lam);
/// lam* = -w0 lam.
Weight weight_star(const RootSystem& rs, const Weight& lam);

/// Unique dominant weight in the W-orbit of `lam`.
struct DominantRep {
  Weight weight;
  Word word;
};

/// Sorts `lam` into the dominant chamber with simple reflections.  The
/// returned word w satisfies lam = w(weight) and is reduced.
DominantRep dominant_representative(const RootSystem& rs, Weight lam);

/// Result of Borel-Weil-Bott regularisation: chi = w . lambda with lambda
/// dominant and q = l(w).
struct BwbResult {
  int q;
  Weight lambda;
  Word word;  // a reduced word for w
};

/// std::nullopt when chi + rho is singular.
std::optional<BwbResult> borel_weil_bott(const RootSystem& rs, const Weight& chi);

/// The full Weyl group, enumerated once and read-only thereafter.  Elements
/// are sorted by (length, lexicographic reduced word); index 0 is the
/// identity.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  static std::shared_ptr<const WeylGroup> build(RootSystemPtr rs, std::size_t cap = kDefaultCap);

  const RootSystemPtr& root_system() const { return rs_; }
  const RootSystem& rs() const { return *rs_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<WeylElement>& elements() const { return elements_; }

  std::size_t identity_index() const { return 0; }
  std::size_t longest_index() const { return elements_.size() - 1; }
  const WeylElement& longest() const { return elements_.back(); }
  int max_length() const { return elements_.back().length(); }

  /// Throws MixedRootSystems for elements of another root system.
  std::size_t index_of(const WeylElement& w) const;
  std::optional<std::size_t> index_of_inversion_set(RootSubset s) const;
  std::optional<WeylElement> from_inversion_set(RootSubset s) const;

  std::size_t inverse_index(std::size_t i) const { return inverse_[i]; }
  /// Index of w0 * w.
  std::size_t w0_left(std::size_t i) const { return w0_left_[i]; }
  /// Index of w * w0.
  std::size_t w0_right(std::size_t i) const { return w0_right_[i]; }
  std::size_t multiply(std::size_t i, std::size_t j) const;

  /// Indices of all elements of the given length, contiguous in index order.
  std::span<const std::size_t> of_length(int l) const;

  /// Permutation of positive-root indices induced by -w0.
  int neg_w0_root(int root_index) const { return neg_w0_perm_[static_cast<std::size_t>(root_index)]; }
  RootSubset apply_neg_w0(RootSubset s) const;

  Weight act(std::size_t i, const Weight& lam) const { return elements_[i].action().apply(lam); }

 private:
  WeylGroup() = default;

  RootSystemPtr rs_;
  std::vector<WeylElement> elements_;
  std::unordered_map<IntMatrix, std::size_t, IntMatrixHash> by_matrix_;
  std::unordered_map<std::uint64_t, std::size_t> by_inversions_;
  std::vector<std::size_t> inverse_, w0_left_, w0_right_;
  std::vector<std::size_t> length_order_;
  std::vector<std::size_t> length_offsets_;
  std::vector<int> neg_w0_perm_;
};

using WeylGroupPtr = std::shared_ptr<const WeylGroup>;

}  // namespace lrs
