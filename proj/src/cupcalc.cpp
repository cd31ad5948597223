#include "lrs/cupcalc.hpp"

#include <algorithm>

#include "lrs/error.hpp"

namespace lrs {

namespace {

constexpr CoinvariantPoly::Monomial unit(int var) { return CoinvariantPoly::Monomial{1} << (8 * var); }

}  // namespace

// ---------------------------------------------------------------- polynomial

CoinvariantPoly CoinvariantPoly::constant(int nvars, const mpq_class& c) {
  CoinvariantPoly p(nvars);
  p.add_term(0, c);
  return p;
}

CoinvariantPoly CoinvariantPoly::linear(const Weight& coords) {
  CoinvariantPoly p(static_cast<int>(coords.rank()));
  for (std::size_t j = 0; j < coords.rank(); ++j)
    if (coords[j] != 0) p.add_term(unit(static_cast<int>(j)), mpq_class(static_cast<long>(coords[j])));
  return p;
}

int CoinvariantPoly::total_degree(Monomial m) {
  int d = 0;
  for (; m; m >>= 8) d += static_cast<int>(m & 0xff);
  return d;
}

int CoinvariantPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

bool CoinvariantPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int e = total_degree(m);
    if (d >= 0 && e != d) return false;
    d = e;
  }
  return true;
}

mpq_class CoinvariantPoly::constant_term() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void CoinvariantPoly::add_term(Monomial m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

CoinvariantPoly& CoinvariantPoly::operator+=(const CoinvariantPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CoinvariantPoly& CoinvariantPoly::operator-=(const CoinvariantPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CoinvariantPoly& CoinvariantPoly::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

CoinvariantPoly operator*(const CoinvariantPoly& a, const CoinvariantPoly& b) {
  CoinvariantPoly out(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  return out;
}

// ---------------------------------------------------------------- operators

CoinvariantPoly reflect(const RootSystem& rs, int i, const CoinvariantPoly& p) {
  const int r = rs.rank();
  // s_i(omega_i) = omega_i - alpha_i; other fundamental weights are fixed.
  Weight image(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) image[static_cast<std::size_t>(j)] = -rs.cartan(i, j);
  image[static_cast<std::size_t>(i)] += 1;
  const auto lin = CoinvariantPoly::linear(image);

  std::vector<CoinvariantPoly> powers{CoinvariantPoly::constant(r, 1)};
  CoinvariantPoly out(r);
  for (const auto& [m, c] : p.terms()) {
    int e = CoinvariantPoly::exponent(m, i);
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * lin);
    const auto rest = m - static_cast<CoinvariantPoly::Monomial>(e) * unit(i);
    for (const auto& [pm, pc] : powers[static_cast<std::size_t>(e)].terms()) out.add_term(rest + pm, c * pc);
  }
  return out;
}

CoinvariantPoly divided_difference(const RootSystem& rs, int i, const CoinvariantPoly& p) {
  const int r = rs.rank();
  if (i < 0 || i >= r) throw Error(ErrorKind::IndexOutOfRange, "simple index " + std::to_string(i));
  CoinvariantPoly rem = p - reflect(rs, i, p);
  const auto alpha = CoinvariantPoly::linear(rs.root_fw(i));
  const mpq_class lead = alpha.terms().at(unit(i));  // coefficient of omega_i in alpha_i, i.e. 2

  // Long division by alpha_i, eliminating the highest power of omega_i first.
  CoinvariantPoly quot(r);
  while (!rem.is_zero()) {
    CoinvariantPoly::Monomial best = 0;
    int best_e = -1;
    for (const auto& [m, c] : rem.terms()) {
      int e = CoinvariantPoly::exponent(m, i);
      if (e > best_e) {
        best_e = e;
        best = m;
      }
    }
    if (best_e <= 0) throw Error(ErrorKind::Internal, "divided difference: inexact division");
    CoinvariantPoly t(r);
    t.add_term(best - unit(i), rem.terms().at(best) / lead);
    quot += t;
    rem -= t * alpha;
  }
  return quot;
}

// ---------------------------------------------------------------- oracle

CupOracle::CupOracle(WeylGroupPtr group, int max_top_degree) : group_(std::move(group)) {
  const auto& rs = group_->rs();
  if (group_->max_length() > max_top_degree)
    throw Error(ErrorKind::GroupTooLarge, "cup oracle is capped at l(w0) <= " + std::to_string(max_top_degree));
  for (int i = 0; i < rs.rank(); ++i)
    simple_index_.push_back(group_->index_of(WeylElement::simple(group_->root_system(), i)));
  w0_word_ = group_->longest().word();
  reps_.resize(group_->size());

  CoinvariantPoly top = CoinvariantPoly::constant(rs.rank(), 1);
  for (int k = 0; k < rs.n_pos(); ++k) top = top * CoinvariantPoly::linear(rs.root_fw(k));
  top *= mpq_class(1, static_cast<unsigned long>(group_->size()));
  reps_[group_->identity_index()] = std::make_unique<CoinvariantPoly>(std::move(top));
}

const CoinvariantPoly& CupOracle::schubert_representative(std::size_t w) const {
  std::lock_guard lock(mutex_);
  // Walk up the minimal word; every prefix is again minimal, so each parent
  // is reached before its child.
  const auto& word = group_->element(w).word();
  std::size_t cur = group_->identity_index();
  for (int a : word) {
    std::size_t next = group_->multiply(cur, simple_index_[static_cast<std::size_t>(a)]);
    if (!reps_[next])
      reps_[next] = std::make_unique<CoinvariantPoly>(divided_difference(group_->rs(), a, *reps_[cur]));
    cur = next;
  }
  return *reps_[w];
}

CoinvariantPoly CupOracle::schubert_representative(const WeylElement& w) const {
  return schubert_representative(group_->index_of(w));
}

CoinvariantPoly CupOracle::representative_along(const Word& reduced_word) const {
  CoinvariantPoly p = schubert_representative(group_->identity_index());
  for (int a : reduced_word) p = divided_difference(group_->rs(), a, p);
  return p;
}

mpq_class CupOracle::integrate(const CoinvariantPoly& p) const {
  const int top = group_->max_length();
  mpq_class total = 0;
  for (const auto& [m, c] : p.terms()) {
    if (CoinvariantPoly::total_degree(m) != top) continue;
    mpq_class value;
    {
      std::lock_guard lock(mutex_);
      auto it = monomial_integrals_.find(m);
      if (it != monomial_integrals_.end()) value = it->second;
      else {
        CoinvariantPoly q(p.nvars());
        q.add_term(m, 1);
        // d_{w0} = d_{a1} ... d_{ak} for w0 = s_{a1} ... s_{ak}: apply the
        // rightmost operator first.
        for (auto it2 = w0_word_.rbegin(); it2 != w0_word_.rend(); ++it2) q = divided_difference(group_->rs(), *it2, q);
        value = q.constant_term();
        monomial_integrals_.emplace(m, value);
      }
    }
    total += c * value;
  }
  return total;
}

std::int64_t CupOracle::cup_integral(std::span<const std::size_t> ws) const {
  const int top = group_->max_length();
  int codim = 0;
  for (auto w : ws) codim += top - group_->element(w).length();
  if (codim != top) return 0;
  CoinvariantPoly p = CoinvariantPoly::constant(group_->rs().rank(), 1);
  for (auto w : ws) p = p * schubert_representative(w);
  mpq_class v = integrate(p);
  if (v.get_den() != 1 || v < 0)
    throw Error(ErrorKind::Internal, "cup oracle produced a non-integral or negative intersection number " +
                                         v.get_str());
  return v.get_num().get_si();
}

std::int64_t CupOracle::cup_coefficient(std::size_t u, std::size_t v, std::size_t w) const {
  const std::size_t t[] = {u, v, w};
  return cup_integral(t);
}

std::int64_t CupOracle::cup_coefficient(const WeylElement& u, const WeylElement& v, const WeylElement& w) const {
  return cup_coefficient(group_->index_of(u), group_->index_of(v), group_->index_of(w));
}

CohomClass CupOracle::cup_product(std::size_t u, std::size_t v) const {
  CohomClass out(group_);
  const int top = group_->max_length();
  const int target = 2 * top - group_->element(u).length() - group_->element(v).length();
  for (auto w : group_->of_length(target)) out.add(group_->w0_left(w), cup_coefficient(u, v, w));
  return out;
}

}  // namespace lrs
