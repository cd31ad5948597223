#include "lrs/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "lrs/error.hpp"

namespace lrs {

std::vector<int> RootSubset::indices() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

bool is_biconvex(const RootSystem& rs, RootSubset s) {
  const int n = rs.n_pos();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto sum = rs.root_fw(i) + rs.root_fw(j);
      auto hit = rs.find_root_fw(sum);
      if (!hit) continue;
      // sum of two positive roots is positive
      bool in_i = s.contains(i), in_j = s.contains(j), in_sum = s.contains(hit->index);
      if (in_i && in_j && !in_sum) return false;
      if (!in_i && !in_j && in_sum) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Weight IntMatrix::apply(const Weight& v) const {
  if (static_cast<int>(v.rank()) != n_) throw Error(ErrorKind::RankMismatch, "weight rank differs from group rank");
  Weight out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

std::int64_t IntMatrix::determinant() const {
  // Bareiss fraction-free elimination; entries stay integral.
  std::vector<std::int64_t> a = data_;
  auto at = [&](int i, int j) -> std::int64_t& { return a[static_cast<std::size_t>(i * n_ + j)]; };
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k < n_; ++k) {
    if (at(k, k) == 0) {
      int p = k + 1;
      while (p < n_ && at(p, k) == 0) ++p;
      if (p == n_) return 0;
      for (int j = 0; j < n_; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i)
      for (int j = k + 1; j < n_; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      auto aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::size_t IntMatrix::hash() const noexcept {
  std::size_t h = 14695981039346656037ull;
  for (auto x : data_) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------- words

std::string format_word(const Word& word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += '.';
    out += std::to_string(word[k] + 1);
  }
  return out;
}

Word parse_word(std::string_view text, int rank) {
  if (text == "e") return {};
  if (text.empty()) throw Error(ErrorKind::Parse, "empty Weyl word");
  Word word;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('.', pos);
    if (end == std::string_view::npos) end = text.size();
    auto tok = text.substr(pos, end - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorKind::Parse, "bad Weyl word '" + std::string(text) + "'");
    if (v < 1 || v > rank)
      throw Error(ErrorKind::Parse, "simple reflection index " + std::to_string(v) + " out of range");
    word.push_back(v - 1);
    pos = end + 1;
  }
  return word;
}

// ---------------------------------------------------------------- elements

IntMatrix simple_reflection_matrix(const RootSystem& rs, int i) {
  const int r = rs.rank();
  if (i < 0 || i >= r) throw Error(ErrorKind::IndexOutOfRange, "simple reflection " + std::to_string(i));
  // s_i(lam) = lam - lam_i alpha_i
  IntMatrix m = IntMatrix::identity(r);
  for (int j = 0; j < r; ++j) m(j, i) -= rs.cartan(i, j);
  return m;
}

RootSubset inversion_set(const RootSystem& rs, const IntMatrix& action) {
  RootSubset s;
  for (int k = 0; k < rs.n_pos(); ++k) {
    auto hit = rs.find_root_fw(action.apply(rs.root_fw(k)));
    if (!hit) throw Error(ErrorKind::Internal, "matrix does not permute the roots");
    if (hit->sign < 0) s.insert(k);
  }
  return s;
}

namespace {

bool sends_negative(const RootSystem& rs, const IntMatrix& m, int root_index) {
  auto hit = rs.find_root_fw(m.apply(rs.root_fw(root_index)));
  if (!hit) throw Error(ErrorKind::Internal, "matrix does not permute the roots");
  return hit->sign < 0;
}

/// Lexicographically minimal reduced word of the element with matrix m.
Word lexmin_word(const RootSystem& rs, const IntMatrix& m) {
  const int r = rs.rank();
  // First strip right descents to get m^{-1} as a product of reflections.
  IntMatrix cur = m;
  IntMatrix inv = IntMatrix::identity(r);
  for (bool progress = true; progress;) {
    progress = false;
    for (int i = 0; i < r; ++i) {
      if (sends_negative(rs, cur, i)) {
        auto s = simple_reflection_matrix(rs, i);
        cur = cur * s;
        inv = inv * s;
        progress = true;
        break;
      }
    }
  }
  if (!(cur == IntMatrix::identity(r))) throw Error(ErrorKind::Internal, "matrix is not a Weyl group element");
  // Left descents of m are right descents of m^{-1}; peel the smallest each time.
  Word word;
  for (bool progress = true; progress;) {
    progress = false;
    for (int i = 0; i < r; ++i) {
      if (sends_negative(rs, inv, i)) {
        word.push_back(i);
        inv = inv * simple_reflection_matrix(rs, i);
        progress = true;
        break;
      }
    }
  }
  return word;
}

}  // namespace

WeylElement WeylElement::identity(RootSystemPtr rs) {
  const int r = rs->rank();
  return WeylElement(std::move(rs), IntMatrix::identity(r), {}, RootSubset());
}

WeylElement WeylElement::simple(RootSystemPtr rs, int i) {
  auto m = simple_reflection_matrix(*rs, i);
  RootSubset inv;
  inv.insert(i);
  return WeylElement(std::move(rs), std::move(m), Word{i}, inv);
}

WeylElement WeylElement::from_word(RootSystemPtr rs, const Word& word) {
  IntMatrix m = IntMatrix::identity(rs->rank());
  for (int i : word) m = m * simple_reflection_matrix(*rs, i);
  return from_matrix(std::move(rs), std::move(m));
}

WeylElement WeylElement::from_matrix(RootSystemPtr rs, IntMatrix action) {
  if (action.size() != rs->rank()) throw Error(ErrorKind::RankMismatch, "action matrix has wrong size");
  auto inv = inversion_set(*rs, action);
  auto word = lexmin_word(*rs, action);
  return WeylElement(std::move(rs), std::move(action), std::move(word), inv);
}

WeylElement longest_element(RootSystemPtr rs) {
  const int r = rs->rank();
  IntMatrix m = IntMatrix::identity(r);
  for (bool progress = true; progress;) {
    progress = false;
    for (int i = 0; i < r; ++i) {
      if (!sends_negative(*rs, m, i)) {
        m = m * simple_reflection_matrix(*rs, i);
        progress = true;
        break;
      }
    }
  }
  return WeylElement::from_matrix(std::move(rs), std::move(m));
}

WeylElement multiply(const WeylElement& u, const WeylElement& v) {
  if (u.root_system() != v.root_system())
    throw Error(ErrorKind::MixedRootSystems, "cannot multiply elements of different Weyl groups");
  return WeylElement::from_matrix(u.root_system(), u.action() * v.action());
}

WeylElement inverse(const WeylElement& w) {
  Word rev(w.word().rbegin(), w.word().rend());
  return WeylElement::from_word(w.root_system(), rev);
}

Weight act(const WeylElement& w, const Weight& lam) { return w.action().apply(lam); }

Weight dot(const WeylElement& w, const Weight& lam) {
  const auto& rho = w.root_system()->rho();
  if (lam.rank() != rho.rank()) throw Error(ErrorKind::RankMismatch, "weight rank differs from group rank");
  return w.action().apply(lam + rho) - rho;
}

Weight weight_star(const RootSystem& rs, const Weight& lam) {
  if (!rs.validate_weight(lam)) throw Error(ErrorKind::RankMismatch, "weight rank differs from group rank");
  // -w0 lam is the dominant representative of -lam when lam is dominant; in
  // general apply w0 explicitly.
  auto rep = dominant_representative(rs, -lam);
  if (lam.is_dominant()) return rep.weight;
  IntMatrix m = IntMatrix::identity(rs.rank());
  for (bool progress = true; progress;) {
    progress = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (!sends_negative(rs, m, i)) {
        m = m * simple_reflection_matrix(rs, i);
        progress = true;
        break;
      }
    }
  }
  return -m.apply(lam);
}

DominantRep dominant_representative(const RootSystem& rs, Weight lam) {
  if (!rs.validate_weight(lam)) throw Error(ErrorKind::RankMismatch, "weight rank differs from group rank");
  Word word;
  const int r = rs.rank();
  for (;;) {
    int i = 0;
    while (i < r && lam[static_cast<std::size_t>(i)] >= 0) ++i;
    if (i == r) break;
    auto li = lam[static_cast<std::size_t>(i)];
    for (int j = 0; j < r; ++j) lam[static_cast<std::size_t>(j)] -= li * rs.cartan(i, j);
    word.push_back(i);
  }
  return {std::move(lam), std::move(word)};
}

std::optional<BwbResult> borel_weil_bott(const RootSystem& rs, const Weight& chi) {
  if (!rs.validate_weight(chi)) throw Error(ErrorKind::RankMismatch, "weight rank differs from group rank");
  Weight x = chi + rs.rho();
  auto has_zero = [&] { return std::any_of(x.coords().begin(), x.coords().end(), [](auto c) { return c == 0; }); };
  if (has_zero()) return std::nullopt;
  auto rep = dominant_representative(rs, x);
  // The orbit of a regular weight never meets a wall, so a zero coordinate in
  // the dominant representative means chi + rho was singular.
  x = rep.weight;
  if (has_zero()) return std::nullopt;
  return BwbResult{static_cast<int>(rep.word.size()), x - rs.rho(), std::move(rep.word)};
}

// ---------------------------------------------------------------- WeylGroup

std::shared_ptr<const WeylGroup> WeylGroup::build(RootSystemPtr rs, std::size_t cap) {
  std::shared_ptr<WeylGroup> g(new WeylGroup());
  g->rs_ = rs;
  const int r = rs->rank();
  std::vector<IntMatrix> simple;
  for (int i = 0; i < r; ++i) simple.push_back(simple_reflection_matrix(*rs, i));

  // Breadth-first by length.  Parents are visited in lexicographic order of
  // their minimal words and children by increasing generator, so the first
  // visit of an element carries its lexicographically minimal reduced word
  // and each layer comes out sorted.
  struct Node {
    IntMatrix m;
    Word word;
    RootSubset inv;
  };
  std::vector<Node> layer{{IntMatrix::identity(r), {}, RootSubset()}};
  std::vector<Node> all;
  while (!layer.empty()) {
    std::vector<Node> next;
    std::unordered_map<IntMatrix, bool, IntMatrixHash> seen;
    for (const auto& node : layer) {
      for (int i = 0; i < r; ++i) {
        if (sends_negative(*rs, node.m, i)) continue;  // w s_i would be shorter
        IntMatrix m = node.m * simple[static_cast<std::size_t>(i)];
        if (!seen.emplace(m, true).second) continue;
        Word w = node.word;
        w.push_back(i);
        next.push_back({std::move(m), std::move(w), RootSubset()});
      }
    }
    for (auto& node : layer) all.push_back(std::move(node));
    if (all.size() + next.size() > cap)
      throw Error(ErrorKind::GroupTooLarge, "Weyl group of " + rs->type().name() + " exceeds the cap of " +
                                                std::to_string(cap) + " elements");
    layer = std::move(next);
  }

  g->elements_.reserve(all.size());
  for (auto& node : all) {
    auto inv = inversion_set(*rs, node.m);
    if (inv.size() != static_cast<int>(node.word.size()))
      throw Error(ErrorKind::Internal, "length/inversion mismatch during enumeration");
    g->elements_.push_back(WeylElement(rs, std::move(node.m), std::move(node.word), inv));
  }
  const std::size_t n = g->elements_.size();
  for (std::size_t k = 0; k < n; ++k) {
    g->by_matrix_.emplace(g->elements_[k].action(), k);
    g->by_inversions_.emplace(g->elements_[k].inversions().bits(), k);
  }

  const auto& w0 = g->elements_.back().action();
  g->inverse_.resize(n);
  g->w0_left_.resize(n);
  g->w0_right_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& m = g->elements_[k].action();
    IntMatrix inv = IntMatrix::identity(r);
    for (auto it = g->elements_[k].word().rbegin(); it != g->elements_[k].word().rend(); ++it)
      inv = inv * simple[static_cast<std::size_t>(*it)];
    g->inverse_[k] = g->by_matrix_.at(inv);
    g->w0_left_[k] = g->by_matrix_.at(w0 * m);
    g->w0_right_[k] = g->by_matrix_.at(m * w0);
  }

  int maxlen = g->elements_.back().length();
  g->length_offsets_.assign(static_cast<std::size_t>(maxlen) + 2, 0);
  for (const auto& e : g->elements_) g->length_offsets_[static_cast<std::size_t>(e.length()) + 1]++;
  for (std::size_t l = 1; l < g->length_offsets_.size(); ++l) g->length_offsets_[l] += g->length_offsets_[l - 1];
  g->length_order_.resize(n);
  for (std::size_t k = 0; k < n; ++k) g->length_order_[k] = k;

  g->neg_w0_perm_.resize(static_cast<std::size_t>(rs->n_pos()));
  for (int k = 0; k < rs->n_pos(); ++k) {
    auto hit = rs->find_root_fw(-w0.apply(rs->root_fw(k)));
    g->neg_w0_perm_[static_cast<std::size_t>(k)] = hit->index;
  }
  return g;
}

std::size_t WeylGroup::index_of(const WeylElement& w) const {
  if (w.root_system() != rs_) throw Error(ErrorKind::MixedRootSystems, "element belongs to another Weyl group");
  return by_matrix_.at(w.action());
}

std::optional<std::size_t> WeylGroup::index_of_inversion_set(RootSubset s) const {
  auto it = by_inversions_.find(s.bits());
  if (it == by_inversions_.end()) return std::nullopt;
  return it->second;
}

std::optional<WeylElement> WeylGroup::from_inversion_set(RootSubset s) const {
  auto idx = index_of_inversion_set(s);
  if (!idx) return std::nullopt;
  return elements_[*idx];
}

std::size_t WeylGroup::multiply(std::size_t i, std::size_t j) const {
  return by_matrix_.at(elements_[i].action() * elements_[j].action());
}

std::span<const std::size_t> WeylGroup::of_length(int l) const {
  if (l < 0 || l > max_length()) return {};
  auto b = length_offsets_[static_cast<std::size_t>(l)], e = length_offsets_[static_cast<std::size_t>(l) + 1];
  return std::span<const std::size_t>(length_order_).subspan(b, e - b);
}

RootSubset WeylGroup::apply_neg_w0(RootSubset s) const {
  RootSubset out;
  for (int k : s.indices()) out.insert(neg_w0_perm_[static_cast<std::size_t>(k)]);
  return out;
}

}  // namespace lrs
