#include "lrs/classify.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "lrs/bkring.hpp"
#include "lrs/error.hpp"

namespace lrs {

namespace {

void sort_tuples(const WeylGroup& g, std::vector<ElementTuple>& tuples) {
  auto total = [&](const ElementTuple& t) {
    int s = 0;
    for (auto k : t) s += g.element(k).length();
    return s;
  };
  std::stable_sort(tuples.begin(), tuples.end(), [&](const ElementTuple& a, const ElementTuple& b) {
    auto ta = total(a), tb = total(b);
    return ta != tb ? ta < tb : a < b;
  });
}

}  // namespace

Classifier::Classifier(WeylGroupPtr group, std::shared_ptr<const TensorOracle> oracle, ClassifyOptions options)
    : group_(std::move(group)), oracle_(std::move(oracle)), options_(options) {
  if (options_.verify_cup) cup_ = std::make_unique<CupOracle>(group_);
}

void Classifier::validate(std::span<const Weight> weights) const {
  if (weights.size() < 2 || weights.size() > static_cast<std::size_t>(kMaxFactors))
    throw Error(ErrorKind::InvalidWitness,
                "number of weights must lie in [2, " + std::to_string(kMaxFactors) + "]");
  for (const auto& w : weights) {
    if (!group_->rs().validate_weight(w)) throw Error(ErrorKind::RankMismatch, "weight rank differs from group rank");
    if (!w.is_dominant()) {
      std::ostringstream os;
      os << "weight " << w << " is not dominant";
      throw Error(ErrorKind::NonDominantInput, os.str());
    }
  }
}

const std::vector<ElementTuple>& Classifier::partition_tuples(int s) const {
  std::lock_guard lock(mutex_);
  auto it = partitions_.find(s);
  if (it == partitions_.end()) it = partitions_.emplace(s, enumerate_partition_tuples(*group_, s)).first;
  return it->second;
}

const std::vector<ElementTuple>& Classifier::levi_movable_tuples(int s) const {
  std::lock_guard lock(mutex_);
  auto it = levi_.find(s);
  if (it == levi_.end()) it = levi_.emplace(s, enumerate_levi_movable_tuples(*group_, s)).first;
  return it->second;
}

bool Classifier::balanced_inverse(const ElementTuple& t, std::span<const Weight> weights) const {
  Weight sum = group_->rs().zero();
  for (std::size_t i = 0; i < t.size(); ++i) sum += group_->act(group_->inverse_index(t[i]), weights[i]);
  return sum.is_zero();
}

std::vector<ElementTuple> Classifier::prv_witnesses(std::span<const Weight> weights) const {
  validate(weights);
  const auto& g = *group_;
  const std::size_t s = weights.size();
  const std::size_t n = g.size();

  long double work = 1;
  for (std::size_t i = 0; i + 1 < s; ++i) work *= static_cast<long double>(n);
  if (work > static_cast<long double>(options_.prv_search_cap))
    throw Error(ErrorKind::GroupTooLarge, "PRV search over |W|^" + std::to_string(s - 1) + " exceeds the cap");

  // images[i][u] = u lam_i
  std::vector<std::vector<Weight>> images(s - 1);
  for (std::size_t i = 0; i + 1 < s; ++i) {
    images[i].reserve(n);
    for (std::size_t u = 0; u < n; ++u) images[i].push_back(g.act(u, weights[i]));
  }
  std::vector<std::size_t> simple;
  for (int i = 0; i < g.rs().rank(); ++i) simple.push_back(g.index_of(WeylElement::simple(g.root_system(), i)));

  const Weight& last = weights[s - 1];
  std::vector<ElementTuple> out;
  ElementTuple t(s);
  std::function<void(std::size_t, const Weight&)> rec = [&](std::size_t slot, const Weight& partial) {
    if (slot + 1 == s) {
      Weight target = -partial;
      auto rep = dominant_representative(g.rs(), target);
      if (rep.weight != last) return;
      std::size_t us = g.identity_index();
      for (int a : rep.word) us = g.multiply(us, simple[static_cast<std::size_t>(a)]);
      t[slot] = us;
      out.push_back(t);
      return;
    }
    for (std::size_t u = 0; u < n; ++u) {
      t[slot] = u;
      rec(slot + 1, partial + images[slot][u]);
    }
  };
  rec(0, g.rs().zero());
  sort_tuples(g, out);
  return out;
}

std::vector<ElementTuple> Classifier::cohomological_witnesses(std::span<const Weight> weights) const {
  validate(weights);
  std::vector<ElementTuple> out;
  for (const auto& t : partition_tuples(static_cast<int>(weights.size())))
    if (balanced_inverse(t, weights)) out.push_back(t);
  sort_tuples(*group_, out);
  return out;
}

std::vector<ElementTuple> Classifier::regularly_extremal_witnesses(std::span<const Weight> weights) const {
  validate(weights);
  std::vector<ElementTuple> out;
  for (const auto& t : levi_movable_tuples(static_cast<int>(weights.size())))
    if (balanced_inverse(t, weights)) out.push_back(t);
  sort_tuples(*group_, out);
  return out;
}

TripleClassification Classifier::classify(std::span<const Weight> weights, int K) const {
  validate(weights);
  if (K < 1) throw Error(ErrorKind::InvalidWitness, "scaling depth must be at least 1");
  TripleClassification c;
  c.weights.assign(weights.begin(), weights.end());
  c.extended = weights.size() > 3;

  c.prv_witnesses = prv_witnesses(weights);
  c.prv = !c.prv_witnesses.empty();
  c.coh_witnesses = cohomological_witnesses(weights);
  c.cohomological = !c.coh_witnesses.empty();
  c.rex_witnesses = regularly_extremal_witnesses(weights);
  c.regularly_extremal = !c.rex_witnesses.empty();

  if (cup_) {
    bool ok = true;
    for (const auto& t : c.rex_witnesses) ok = ok && cup_->cup_integral(t) == 1;
    c.cup_verified = ok;
  }

  auto probe = oracle_->stable_mult_probe(weights, K);
  c.oracle_overflow = probe.overflow;
  if (!probe.overflow) c.oracle_mults = probe.dims;

  if (c.cohomological) {
    c.stable_mult_one = {StableStatus::ProvenTrue, 0, 1};
  } else {
    c.stable_mult_one = {StableStatus::UnknownUpTo, static_cast<int>(c.oracle_mults.size()), 0};
    for (auto [k, d] : c.oracle_mults) {
      if (d != 1) {
        c.stable_mult_one = {StableStatus::RefutedAtK, k, d};
        break;
      }
    }
  }
  return c;
}

FaceSample Classifier::face_sample(const ElementTuple& witness, int bound) const {
  const auto& g = *group_;
  if (witness.size() < 2 || witness.size() > static_cast<std::size_t>(kMaxFactors))
    throw Error(ErrorKind::InvalidWitness, "witness must have between 2 and " + std::to_string(kMaxFactors) + " entries");
  RootSubset covered;
  for (auto k : witness) {
    auto inv = g.element(k).inversions();
    if (!inv.disjoint(covered)) throw Error(ErrorKind::InvalidWitness, "witness inversion sets overlap");
    covered = covered | inv;
  }
  if (!(covered == RootSubset::all(g.rs().n_pos())))
    throw Error(ErrorKind::InvalidWitness, "witness inversion sets do not cover the positive roots");
  if (bound < 0) throw Error(ErrorKind::InvalidWitness, "bound must be nonnegative");

  const int r = g.rs().rank();
  const std::size_t s = witness.size();
  const std::size_t free_coords = (s - 1) * static_cast<std::size_t>(r);
  FaceSample out;
  std::vector<std::int64_t> coords(free_coords, 0);
  std::vector<std::vector<std::int64_t>> rows;
  for (;;) {
    std::vector<Weight> tuple;
    Weight sum = g.rs().zero();
    for (std::size_t i = 0; i + 1 < s; ++i) {
      Weight w(std::vector<std::int64_t>(coords.begin() + static_cast<long>(i) * r,
                                         coords.begin() + static_cast<long>(i + 1) * r));
      sum += g.act(g.inverse_index(witness[i]), w);
      tuple.push_back(std::move(w));
    }
    Weight last = -g.act(witness[s - 1], sum);
    if (last.is_dominant()) {
      tuple.push_back(last);
      std::vector<std::int64_t> row;
      for (const auto& w : tuple) row.insert(row.end(), w.coords().begin(), w.coords().end());
      rows.push_back(std::move(row));
      out.tuples.push_back(std::move(tuple));
    }
    std::size_t pos = 0;
    while (pos < free_coords && coords[pos] == bound) coords[pos++] = 0;
    if (pos == free_coords) break;
    ++coords[pos];
  }
  std::sort(out.tuples.begin(), out.tuples.end());
  out.lattice_rank = lattice_rank(rows);
  return out;
}

int lattice_rank(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<mpq_class>> m;
  for (const auto& r : rows) {
    std::vector<mpq_class> row;
    for (auto x : r) row.emplace_back(static_cast<long>(x));
    m.push_back(std::move(row));
  }
  int rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < m.size(); ++c) {
    std::size_t p = pivot_row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[pivot_row]);
    for (std::size_t i = pivot_row + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[pivot_row][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[pivot_row][j];
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

}  // namespace lrs
