#include "lrs/bkring.hpp"

#include <functional>

#include "lrs/error.hpp"

namespace lrs {

CohomClass CohomClass::schubert(WeylGroupPtr group, std::size_t w, std::int64_t coeff) {
  CohomClass c(std::move(group));
  c.add(w, coeff);
  return c;
}

std::int64_t CohomClass::coeff(std::size_t w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? 0 : it->second;
}

void CohomClass::add(std::size_t w, std::int64_t c) {
  if (c == 0) return;
  auto& slot = coeffs_[w];
  slot += c;
  if (slot == 0) coeffs_.erase(w);
}

CohomClass& CohomClass::operator+=(const CohomClass& other) {
  if (other.group_ != group_) throw Error(ErrorKind::MixedRootSystems, "classes live in different rings");
  for (auto [w, c] : other.coeffs_) add(w, c);
  return *this;
}

bool is_levi_movable(std::span<const WeylElement> ws) {
  if (ws.size() < 2) throw Error(ErrorKind::InvalidWitness, "Levi-movability needs at least two factors");
  const auto& rs = ws.front().root_system();
  const int n = rs->n_pos();
  RootSubset seen;
  for (const auto& w : ws) {
    if (w.root_system() != rs) throw Error(ErrorKind::MixedRootSystems, "tuple mixes Weyl groups");
    auto c = w.inversions().complement(n);
    if (!c.disjoint(seen)) return false;
    seen = seen | c;
  }
  return seen == RootSubset::all(n);
}

bool is_levi_movable(const WeylGroup& g, std::span<const std::size_t> ws) {
  const int n = g.rs().n_pos();
  RootSubset seen;
  for (auto w : ws) {
    auto c = g.element(w).inversions().complement(n);
    if (!c.disjoint(seen)) return false;
    seen = seen | c;
  }
  return seen == RootSubset::all(n);
}

int bk_coefficient(const WeylElement& u, const WeylElement& v, const WeylElement& w) {
  const WeylElement t[] = {u, v, w};
  return is_levi_movable(t) ? 1 : 0;
}

int bk_coefficient(const WeylGroup& g, std::size_t u, std::size_t v, std::size_t w) {
  const std::size_t t[] = {u, v, w};
  return is_levi_movable(g, t) ? 1 : 0;
}

CohomClass bk_product(const WeylGroupPtr& g, std::size_t u, std::size_t v) {
  CohomClass out(g);
  const int n = g->rs().n_pos();
  auto cu = g->element(u).inversions().complement(n);
  auto cv = g->element(v).inversions().complement(n);
  if (!cu.disjoint(cv)) return out;
  // The third complement is forced: Phi_w^c = Phi+ minus (cu | cv), i.e.
  // Phi_w = cu | cv.
  if (auto w = g->index_of_inversion_set(cu | cv)) out.add(g->w0_left(*w), 1);
  return out;
}

CohomClass bk_product(const WeylGroupPtr& g, const WeylElement& u, const WeylElement& v) {
  return bk_product(g, g->index_of(u), g->index_of(v));
}

CohomClass bk_product(const CohomClass& a, const CohomClass& b) {
  if (a.group() != b.group()) throw Error(ErrorKind::MixedRootSystems, "classes live in different rings");
  CohomClass out(a.group());
  for (auto [u, cu] : a.coeffs())
    for (auto [v, cv] : b.coeffs()) {
      const auto p = bk_product(a.group(), u, v);
      for (auto [w, cw] : p.coeffs()) out.add(w, cu * cv * cw);
    }
  return out;
}

WeylElement poincare_dual(const WeylElement& w) { return multiply(longest_element(w.root_system()), w); }

namespace {

/// Shared backtracking core: picks, slot by slot, elements whose `part(w)`
/// is disjoint from what is already covered; the last slot is forced to the
/// element whose part is the remaining roots.
std::vector<std::vector<std::size_t>> enumerate_tuples(const WeylGroup& g, int s, bool complements) {
  if (s < 2 || s > kMaxFactors)
    throw Error(ErrorKind::GroupTooLarge, "number of factors must lie in [2, " + std::to_string(kMaxFactors) + "]");
  const int n = g.rs().n_pos();
  std::vector<RootSubset> part(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    auto inv = g.element(k).inversions();
    part[k] = complements ? inv.complement(n) : inv;
  }
  // Lookup from a part to the element that owns it.
  auto owner = [&](RootSubset p) -> std::optional<std::size_t> {
    return g.index_of_inversion_set(complements ? p.complement(n) : p);
  };

  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> tuple(static_cast<std::size_t>(s));
  std::function<void(int, RootSubset)> rec = [&](int slot, RootSubset covered) {
    if (slot == s - 1) {
      if (auto last = owner(covered.complement(n))) {
        tuple[static_cast<std::size_t>(slot)] = *last;
        out.push_back(tuple);
      }
      return;
    }
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (!part[k].disjoint(covered)) continue;
      tuple[static_cast<std::size_t>(slot)] = k;
      rec(slot + 1, covered | part[k]);
    }
  };
  rec(0, RootSubset());
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> enumerate_partition_tuples(const WeylGroup& g, int s) {
  return enumerate_tuples(g, s, false);
}

std::vector<std::vector<std::size_t>> enumerate_levi_movable_tuples(const WeylGroup& g, int s) {
  return enumerate_tuples(g, s, true);
}

}  // namespace lrs
