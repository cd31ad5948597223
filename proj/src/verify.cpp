#include "lrs/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "lrs/bkring.hpp"
#include "lrs/cupcalc.hpp"
#include "lrs/error.hpp"
#include "lrs/format.hpp"

namespace lrs {

using nlohmann::json;

namespace {

json tuple_json(const WeylGroup& g, std::initializer_list<std::size_t> t) {
  json out = json::array();
  for (auto k : t) out.push_back(g.element(k).to_string());
  return out;
}

json tuple_json(const WeylGroup& g, const ElementTuple& t) {
  json out = json::array();
  for (auto k : t) out.push_back(g.element(k).to_string());
  return out;
}

json coords_json(const Weight& w) { return json(std::vector<std::int64_t>(w.coords().begin(), w.coords().end())); }

json weights_json(const std::vector<Weight>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(coords_json(w));
  return out;
}

json class_json(const CohomClass& c) {
  json out = json::object();
  for (auto [w, k] : c.coeffs()) out[c.group()->element(w).to_string()] = k;
  return out;
}

void fail(SuiteReport& r, json cx) {
  if (r.passed) r.counterexample = std::move(cx);
  r.passed = false;
}

// ------------------------------------------------------------------ suites

SuiteReport suite_theorem3(const VerifyContext& ctx) {
  const auto& g = *ctx.group;
  const std::size_t n = g.size();
  CupOracle cup(ctx.group);
  SuiteReport r;
  r.name = "theorem3";
  std::uint64_t levi = 0, levi_one = 0, other = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        const std::size_t t[] = {u, v, w};
        ++r.checked;
        if (is_levi_movable(g, t)) {
          ++levi;
          // Levi-movable triples always have codimensions summing to l(w0).
          auto c = cup.cup_integral(t);
          auto b = bk_coefficient(g, u, v, w);
          if (c == 1 && b == 1) ++levi_one;
          else fail(r, {{"reason", "Levi-movable triple without coefficient 1"}, {"triple", tuple_json(g, {u, v, w})},
                        {"cup", c}, {"bk", b}});
        } else {
          ++other;
          if (auto b = bk_coefficient(g, u, v, w); b != 0)
            fail(r, {{"reason", "non-Levi-movable triple with nonzero coefficient"},
                     {"triple", tuple_json(g, {u, v, w})}, {"bk", b}});
        }
      }
  std::ostringstream os;
  os << levi_one << "/" << levi << " Levi-movable triples with cup coefficient 1; " << other
     << " other triples with coefficient 0";
  r.summary = os.str();
  return r;
}

SuiteReport suite_ring_axioms(const VerifyContext& ctx) {
  const auto& gp = ctx.group;
  const auto& g = *gp;
  const std::size_t n = g.size();
  SuiteReport r;
  r.name = "ring-axioms";

  std::vector<CohomClass> basis;
  for (std::size_t u = 0; u < n; ++u) basis.push_back(CohomClass::schubert(gp, u));
  std::vector<std::vector<CohomClass>> prod(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) prod[u].push_back(bk_product(gp, u, v));

  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      ++r.checked;
      if (!(prod[u][v] == prod[v][u]))
        fail(r, {{"reason", "commutativity"}, {"pair", tuple_json(g, {u, v})}, {"uv", class_json(prod[u][v])},
                 {"vu", class_json(prod[v][u])}});
    }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        ++r.checked;
        auto left = bk_product(prod[u][v], basis[w]);
        auto right = bk_product(basis[u], prod[v][w]);
        if (!(left == right))
          fail(r, {{"reason", "associativity"}, {"triple", tuple_json(g, {u, v, w})}, {"left", class_json(left)},
                   {"right", class_json(right)}});
      }
  const std::size_t w0 = g.longest_index();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      ++r.checked;
      bool one = bk_coefficient(g, u, v, w0) == 1;
      bool dual = v == g.w0_left(u);
      if (one != dual)
        fail(r, {{"reason", "Poincare duality"}, {"pair", tuple_json(g, {u, v})}, {"coefficient_one", one},
                 {"is_dual", dual}});
    }
  std::ostringstream os;
  os << "commutativity, associativity and duality over " << n << "^3 triples";
  r.summary = os.str();
  return r;
}

SuiteReport suite_counting(const VerifyContext& ctx) {
  const auto& g = *ctx.group;
  const std::size_t n = g.size();
  const auto full = RootSubset::all(g.rs().n_pos());
  SuiteReport r;
  r.name = "counting";
  std::set<ElementTuple> brute;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        ++r.checked;
        auto a = g.element(u).inversions(), b = g.element(v).inversions(), c = g.element(w).inversions();
        if (a.disjoint(b) && a.disjoint(c) && b.disjoint(c) && (a | b | c) == full) brute.insert({u, v, w});
      }
  auto listed = enumerate_partition_tuples(g, 3);
  std::set<ElementTuple> got(listed.begin(), listed.end());
  if (got.size() != listed.size()) fail(r, {{"reason", "duplicate tuples in enumeration"}});
  if (got != brute) {
    std::vector<ElementTuple> diff;
    std::set_symmetric_difference(got.begin(), got.end(), brute.begin(), brute.end(), std::back_inserter(diff));
    fail(r, {{"reason", "enumeration differs from brute force"},
             {"enumerated", got.size()},
             {"brute_force", brute.size()},
             {"first_difference", tuple_json(g, diff.front())}});
  }
  r.summary = std::to_string(got.size()) + " ordered 3-partitions (brute force " + std::to_string(brute.size()) + ")";
  return r;
}

struct SweepCounts {
  std::uint64_t triples = 0, coh = 0, prv = 0, overflow = 0;
};

SuiteReport suite_theorem1(const VerifyContext& ctx) {
  const auto& g = *ctx.group;
  Classifier cls(ctx.group, ctx.oracle);
  const int K = ctx.config.scaling_depth;
  auto box = dominant_box(g.rs().rank(), ctx.config.weight_bound);
  SuiteReport r;
  r.name = "theorem1";
  SweepCounts n;
  for (const auto& a : box)
    for (const auto& b : box)
      for (const auto& c : box) {
        const std::vector<Weight> ws{a, b, c};
        auto cl = cls.classify(ws, K);
        ++r.checked;
        ++n.triples;
        n.coh += cl.cohomological;
        n.prv += cl.prv;
        if (cl.oracle_overflow) {
          ++n.overflow;
          continue;
        }
        bool all_one = static_cast<int>(cl.oracle_mults.size()) == K;
        for (auto [k, d] : cl.oracle_mults) all_one = all_one && d == 1;
        if (cl.cohomological != (cl.prv && all_one))
          fail(r, {{"reason", "cohomological differs from prv and stable multiplicity one"},
                   {"weights", weights_json(ws)},
                   {"cohomological", cl.cohomological},
                   {"prv", cl.prv},
                   {"oracle_mults", cl.oracle_mults}});
        if (cl.cohomological != cl.regularly_extremal)
          fail(r, {{"reason", "cohomological differs from regularly extremal"}, {"weights", weights_json(ws)}});
      }
  std::ostringstream os;
  os << n.triples << " triples (bound " << ctx.config.weight_bound << ", K=" << K << "): " << n.coh
     << " cohomological, " << n.prv << " prv";
  if (n.overflow) os << ", " << n.overflow << " skipped on oracle budget";
  r.summary = os.str();
  return r;
}

SuiteReport suite_prv_bound(const VerifyContext& ctx) {
  const auto& g = *ctx.group;
  Classifier cls(ctx.group, ctx.oracle);
  auto box = dominant_box(g.rs().rank(), ctx.config.weight_bound);
  SuiteReport r;
  r.name = "prv-bound";
  std::uint64_t prv = 0;
  for (const auto& a : box)
    for (const auto& b : box)
      for (const auto& c : box) {
        const std::vector<Weight> ws{a, b, c};
        ++r.checked;
        if (cls.prv_witnesses(ws).empty()) continue;
        ++prv;
        auto d = ctx.oracle->invariant_dim(ws);
        if (d < 1) fail(r, {{"reason", "PRV triple without invariants"}, {"weights", weights_json(ws)}, {"dim", d}});
      }
  r.summary = std::to_string(prv) + " PRV triples of " + std::to_string(r.checked) + " have invariants";
  return r;
}

SuiteReport suite_oracle_consistency(const VerifyContext& ctx) {
  const auto& rs = ctx.group->rs();
  const auto& oracle = *ctx.oracle;
  SuiteReport r;
  r.name = "oracle-consistency";
  std::mt19937_64 rng(ctx.config.verify.seed);
  std::uniform_int_distribution<std::int64_t> coord(0, ctx.config.verify.sample_bound);
  auto random_weight = [&] {
    Weight w(static_cast<std::size_t>(rs.rank()));
    for (std::size_t j = 0; j < w.rank(); ++j) w[j] = coord(rng);
    return w;
  };
  for (int s = 0; s < ctx.config.verify.samples; ++s) {
    Weight lam = random_weight(), mu = random_weight();
    ++r.checked;
    auto d = oracle.decompose(lam, mu);
    mpz_class total = 0;
    for (const auto& [nu, m] : d.terms) total += oracle.weyl_dim(nu) * static_cast<long>(m);
    if (total != oracle.weyl_dim(lam) * oracle.weyl_dim(mu))
      fail(r, {{"reason", "dimension identity"}, {"lambda", coords_json(lam)}, {"mu", coords_json(mu)}});
    auto e = oracle.decompose(mu, lam);
    if (d.terms != e.terms) fail(r, {{"reason", "decompose symmetry"}, {"lambda", coords_json(lam)}, {"mu", coords_json(mu)}});
    // The multiplicity of nu in lam (x) mu is the invariant dimension of
    // (lam, mu, nu*), in every order.
    const auto& [nu, m] = d.terms[static_cast<std::size_t>(s) % d.terms.size()];
    std::vector<Weight> t{lam, mu, weight_star(rs, nu)};
    std::sort(t.begin(), t.end());
    do {
      if (auto v = oracle.invariant_dim(t); v != m)
        fail(r, {{"reason", "invariant_dim permutation symmetry"}, {"weights", weights_json(t)}, {"dim", v},
                 {"expected", m}});
    } while (std::next_permutation(t.begin(), t.end()));
  }
  std::ostringstream os;
  os << r.checked << " random pairs (coords <= " << ctx.config.verify.sample_bound << ", seed "
     << ctx.config.verify.seed << ")";
  r.summary = os.str();
  return r;
}

SuiteReport suite_inversion_sets(const VerifyContext& ctx) {
  const auto& g = *ctx.group;
  const auto& rs = g.rs();
  const int np = rs.n_pos();
  SuiteReport r;
  r.name = "inversion-sets";
  for (std::size_t i = 0; i < g.size(); ++i) {
    ++r.checked;
    const auto& w = g.element(i);
    auto inv = w.inversions();
    std::int64_t sign = w.length() % 2 ? -1 : 1;
    if (inv.size() != w.length() || w.action().determinant() != sign)
      fail(r, {{"reason", "length or determinant"}, {"element", w.to_string()}});
    if (!(g.element(g.w0_left(i)).inversions() == inv.complement(np)))
      fail(r, {{"reason", "inversions of w0 w"}, {"element", w.to_string()}});
    if (!(g.element(g.w0_right(i)).inversions() == g.apply_neg_w0(inv.complement(np))))
      fail(r, {{"reason", "inversions of w w0"}, {"element", w.to_string()}});
    if (!is_biconvex(rs, inv)) fail(r, {{"reason", "inversion set not biconvex"}, {"element", w.to_string()}});
  }
  std::uint64_t biconvex = 0;
  if (np <= 16) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << np); ++bits) {
      RootSubset s = RootSubset(bits);
      if (!is_biconvex(rs, s)) continue;
      ++biconvex;
      if (!g.index_of_inversion_set(s))
        fail(r, {{"reason", "biconvex set is not an inversion set"}, {"bits", bits}});
    }
    if (biconvex != g.size())
      fail(r, {{"reason", "biconvex count differs from |W|"}, {"biconvex", biconvex}, {"order", g.size()}});
  }
  r.summary = std::to_string(g.size()) + " elements" +
              (np <= 16 ? ", " + std::to_string(biconvex) + " biconvex subsets" : std::string());
  return r;
}

using SuiteFn = SuiteReport (*)(const VerifyContext&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"counting", suite_counting},
      {"inversion-sets", suite_inversion_sets},
      {"ring-axioms", suite_ring_axioms},
      {"theorem3", suite_theorem3},
      {"theorem1", suite_theorem1},
      {"prv-bound", suite_prv_bound},
      {"oracle-consistency", suite_oracle_consistency},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

VerifyContext VerifyContext::make(const RunConfig& config) {
  auto rs = RootSystem::build(GroupType::parse(config.group));
  return {WeylGroup::build(rs), std::make_shared<TensorOracle>(rs, config.budget), config};
}

SuiteReport run_suite(const std::string& name, const VerifyContext& ctx) {
  for (const auto& [n, f] : registry())
    if (n == name) return f(ctx);
  throw Error(ErrorKind::Parse, "unknown suite '" + name + "'");
}

std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const VerifyContext& ctx) {
  std::vector<std::string> expanded;
  for (const auto& n : names) {
    if (n == "all") expanded.insert(expanded.end(), suite_names().begin(), suite_names().end());
    else expanded.push_back(n);
  }
  for (const auto& n : expanded)
    if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
      throw Error(ErrorKind::Parse, "unknown suite '" + n + "'");
  std::vector<SuiteReport> out;
  for (const auto& n : expanded) out.push_back(run_suite(n, ctx));
  return out;
}

std::vector<Weight> dominant_box(int rank, int bound) {
  std::vector<Weight> out;
  Weight w(static_cast<std::size_t>(rank));
  for (;;) {
    out.push_back(w);
    std::size_t pos = 0;
    while (pos < w.rank() && w[pos] == bound) w[pos++] = 0;
    if (pos == w.rank()) break;
    ++w[pos];
  }
  return out;
}

}  // namespace lrs
