#include "lrs/tensoracle.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "lrs/error.hpp"
#include "lrs/weyl.hpp"

namespace lrs {

std::int64_t Decomposition::multiplicity(const Weight& w) const {
  for (const auto& [hw, m] : terms)
    if (hw == w) return m;
  return 0;
}

TensorOracle::TensorOracle(RootSystemPtr rs, OracleBudget budget) : rs_(std::move(rs)), budget_(budget) {}

void TensorOracle::require_dominant(const Weight& lam) const {
  if (!rs_->validate_weight(lam)) throw Error(ErrorKind::RankMismatch, "weight rank differs from group rank");
  if (!lam.is_dominant()) {
    std::ostringstream os;
    os << "weight " << lam << " is not dominant";
    throw Error(ErrorKind::NonDominantInput, os.str());
  }
}

void TensorOracle::require_budget(const Weight& lam) const {
  auto d = weyl_dim(lam);
  if (d > mpz_class(std::to_string(budget_.max_dim))) {
    std::ostringstream os;
    os << "dim V" << lam << " = " << d.get_str() << " exceeds the oracle budget of " << budget_.max_dim;
    throw Error(ErrorKind::OracleOverflow, os.str());
  }
}

mpz_class TensorOracle::weyl_dim(const Weight& lam) const {
  require_dominant(lam);
  mpz_class num = 1, den = 1;
  const Weight shifted = lam + rs_->rho();
  for (int k = 0; k < rs_->n_pos(); ++k) {
    num *= static_cast<long>(rs_->pairing(shifted, k));
    den *= static_cast<long>(rs_->pairing(rs_->rho(), k));
  }
  mpz_class q = num / den;
  if (q * den != num) throw Error(ErrorKind::Internal, "Weyl dimension formula did not divide exactly");
  return q;
}

std::shared_ptr<const TensorOracle::WeightSystem> TensorOracle::weight_system(const Weight& lam) const {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(lam);
    if (it != cache_.end()) return it->second;
  }
  auto ws = compute_weight_system(lam);
  std::lock_guard lock(mutex_);
  return cache_.emplace(lam, std::move(ws)).first->second;
}

std::shared_ptr<const TensorOracle::WeightSystem> TensorOracle::compute_weight_system(const Weight& lam) const {
  require_dominant(lam);
  require_budget(lam);
  const auto& rs = *rs_;
  const int r = rs.rank();
  const int npos = rs.n_pos();

  // Dominant weights of V_lam: close {lam} under subtracting positive roots,
  // keeping dominant results.  Track lam - mu in simple-root coordinates.
  std::unordered_map<Weight, std::vector<std::int64_t>, WeightHash> depth;
  std::deque<Weight> queue{lam};
  depth.emplace(lam, std::vector<std::int64_t>(static_cast<std::size_t>(r), 0));
  while (!queue.empty()) {
    Weight mu = queue.front();
    queue.pop_front();
    const auto base = depth.at(mu);
    for (int k = 0; k < npos; ++k) {
      Weight nu = mu - rs.root_fw(k);
      if (!nu.is_dominant() || depth.count(nu)) continue;
      auto d = base;
      auto beta = rs.root(k);
      for (int j = 0; j < r; ++j) d[static_cast<std::size_t>(j)] += beta[static_cast<std::size_t>(j)];
      depth.emplace(nu, std::move(d));
      queue.push_back(std::move(nu));
      if (depth.size() > budget_.max_support)
        throw Error(ErrorKind::OracleOverflow, "dominant weight support exceeds the oracle budget");
    }
  }

  std::vector<Weight> order;
  order.reserve(depth.size());
  for (const auto& [mu, d] : depth) order.push_back(mu);
  auto height = [&](const Weight& mu) {
    std::int64_t h = 0;
    for (auto x : depth.at(mu)) h += x;
    return h;
  };
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    auto ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });

  // Freudenthal recursion over dominant weights by increasing depth.
  auto ws = std::make_shared<WeightSystem>();
  const Weight lam_rho2 = lam + 2 * rs.rho();
  for (const auto& mu : order) {
    if (mu == lam) {
      ws->dominant.emplace(mu, 1);
      continue;
    }
    std::int64_t numer = 0;
    for (int k = 0; k < npos; ++k) {
      const auto& alpha = rs.root_fw(k);
      Weight nu = mu + alpha;
      for (;;) {
        auto rep = dominant_representative(rs, nu).weight;
        auto it = ws->dominant.find(rep);
        if (it == ws->dominant.end()) break;
        numer += 2 * rs.form2(nu, k) * it->second;
        nu += alpha;
      }
    }
    // 2((lam+rho)^2 - (mu+rho)^2) = 2(lam - mu, lam + mu + 2 rho)
    std::int64_t denom = rs.form2_root(lam_rho2 + mu, depth.at(mu));
    if (denom <= 0 || numer % denom != 0)
      throw Error(ErrorKind::Internal, "Freudenthal recursion produced a non-integer multiplicity");
    if (numer != 0) ws->dominant.emplace(mu, numer / denom);
  }

  // Expand W-orbits.
  for (const auto& [mu, m] : ws->dominant) {
    std::unordered_set<Weight, WeightHash> orbit{mu};
    std::vector<Weight> stack{mu};
    while (!stack.empty()) {
      Weight x = stack.back();
      stack.pop_back();
      for (int i = 0; i < r; ++i) {
        auto xi = x[static_cast<std::size_t>(i)];
        if (xi == 0) continue;
        Weight y = x;
        for (int j = 0; j < r; ++j) y[static_cast<std::size_t>(j)] -= xi * rs.cartan(i, j);
        if (orbit.insert(y).second) stack.push_back(std::move(y));
      }
    }
    for (const auto& x : orbit) ws->all.emplace_back(x, m);
    if (ws->all.size() > budget_.max_support)
      throw Error(ErrorKind::OracleOverflow, "weight support exceeds the oracle budget");
  }
  std::sort(ws->all.begin(), ws->all.end());
  return ws;
}

std::map<Weight, std::int64_t> TensorOracle::weight_multiplicities(const Weight& lam) const {
  auto ws = weight_system(lam);
  return {ws->all.begin(), ws->all.end()};
}

std::map<Weight, std::int64_t> TensorOracle::dominant_multiplicities(const Weight& lam) const {
  return weight_system(lam)->dominant;
}

Decomposition TensorOracle::decompose(const Weight& lam, const Weight& mu) const {
  require_dominant(lam);
  require_dominant(mu);
  require_budget(lam);
  require_budget(mu);
  // Klimyk: iterate the weights of the smaller factor.
  const bool swap = weyl_dim(mu) > weyl_dim(lam);
  const Weight& big = swap ? mu : lam;
  const Weight& small = swap ? lam : mu;
  auto ws = weight_system(small);

  std::map<Weight, std::int64_t> acc;
  for (const auto& [nu, m] : ws->all) {
    auto reg = borel_weil_bott(*rs_, big + nu);
    if (!reg) continue;
    acc[reg->lambda] += (reg->q % 2 == 0) ? m : -m;
  }
  Decomposition out;
  for (auto& [hw, m] : acc) {
    if (m < 0) throw Error(ErrorKind::Internal, "Klimyk cancellation left a negative multiplicity");
    if (m > 0) out.terms.emplace_back(hw, m);
  }
  return out;
}

std::int64_t TensorOracle::invariant_dim(std::span<const Weight> weights) const {
  if (weights.empty()) return 1;
  for (const auto& w : weights) require_dominant(w);
  if (weights.size() == 1) return weights[0].is_zero() ? 1 : 0;

  std::map<Weight, std::int64_t> current{{weights[0], 1}};
  for (std::size_t i = 1; i + 1 < weights.size(); ++i) {
    std::map<Weight, std::int64_t> next;
    for (const auto& [kappa, c] : current)
      for (const auto& [hw, m] : decompose(kappa, weights[i]).terms) next[hw] += c * m;
    current = std::move(next);
  }
  auto target = weight_star(*rs_, weights.back());
  auto it = current.find(target);
  return it == current.end() ? 0 : it->second;
}

ProbeResult TensorOracle::stable_mult_probe(std::span<const Weight> weights, int K) const {
  if (K < 1) throw Error(ErrorKind::InvalidWitness, "scaling depth must be at least 1");
  for (const auto& w : weights) require_dominant(w);
  ProbeResult out;
  for (int k = 1; k <= K; ++k) {
    std::vector<Weight> scaled;
    for (const auto& w : weights) scaled.push_back(k * w);
    try {
      out.dims.emplace_back(k, invariant_dim(scaled));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OracleOverflow) throw;
      out.overflow = true;
      break;
    }
  }
  return out;
}

}  // namespace lrs
