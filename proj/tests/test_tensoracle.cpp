#include <doctest.h>

#include <algorithm>
#include <random>

#include "lrs/error.hpp"
#include "lrs/tensoracle.hpp"
#include "lrs/weyl.hpp"
#include "support.hpp"

using namespace lrs;
using lrs::test::roots;

namespace {

Weight random_dominant(std::mt19937_64& rng, int rank, int bound) {
  std::uniform_int_distribution<std::int64_t> d(0, bound);
  Weight w(static_cast<std::size_t>(rank));
  for (std::size_t j = 0; j < w.rank(); ++j) w[j] = d(rng);
  return w;
}

}  // namespace

TEST_CASE("Weyl dimension") {
  TensorOracle a2(roots("A2"));
  CHECK(a2.weyl_dim(Weight{0, 0}) == 1);
  CHECK(a2.weyl_dim(Weight{1, 0}) == 3);
  CHECK(a2.weyl_dim(Weight{1, 1}) == 8);
  CHECK(a2.weyl_dim(Weight{2, 2}) == 27);
  CHECK(TensorOracle(roots("G2")).weyl_dim(Weight{1, 0}) == 7);
  CHECK(TensorOracle(roots("G2")).weyl_dim(Weight{0, 1}) == 14);
  CHECK(TensorOracle(roots("B3")).weyl_dim(Weight{0, 0, 1}) == 8);
  CHECK(TensorOracle(roots("F4")).weyl_dim(Weight{0, 0, 0, 1}) == 26);
  CHECK(TensorOracle(roots("E6")).weyl_dim(Weight{1, 0, 0, 0, 0, 0}) == 27);
  CHECK(TensorOracle(roots("E6")).weyl_dim(Weight{0, 1, 0, 0, 0, 0}) == 78);
}

TEST_CASE("weight multiplicities") {
  TensorOracle o(roots("A2"));
  auto triv = o.weight_multiplicities(Weight{0, 0});
  CHECK(triv.size() == 1);
  CHECK(triv.at(Weight{0, 0}) == 1);

  auto std3 = o.weight_multiplicities(Weight{1, 0});
  CHECK(std3.size() == 3);
  for (auto [w, m] : std3) CHECK(m == 1);

  auto adj = o.weight_multiplicities(Weight{1, 1});
  CHECK(adj.size() == 7);
  CHECK(adj.at(Weight{0, 0}) == 2);
  for (auto [w, m] : adj)
    if (!w.is_zero()) CHECK(m == 1);
}

TEST_CASE("weight multiplicities are W-invariant and add up to the dimension") {
  for (const char* name : {"B2", "G2", "A3", "C3"}) {
    CAPTURE(name);
    auto rs = roots(name);
    auto g = WeylGroup::build(rs);
    TensorOracle o(rs);
    Weight lam(static_cast<std::size_t>(rs->rank()));
    for (std::size_t j = 0; j < lam.rank(); ++j) lam[j] = static_cast<std::int64_t>((j + 1) % 3);
    auto mults = o.weight_multiplicities(lam);
    mpz_class total = 0;
    for (auto [w, m] : mults) {
      total += static_cast<long>(m);
      for (std::size_t i = 0; i < g->size(); ++i) CHECK(mults.at(g->act(i, w)) == m);
    }
    CHECK(total == o.weyl_dim(lam));
  }
}

TEST_CASE("decompose") {
  TensorOracle o(roots("A2"));
  auto d = o.decompose(Weight{2, 1}, Weight{0, 0});
  REQUIRE(d.terms.size() == 1);
  CHECK(d.terms[0] == std::pair<Weight, std::int64_t>{Weight{2, 1}, 1});

  d = o.decompose(Weight{1, 0}, Weight{0, 1});
  REQUIRE(d.terms.size() == 2);
  CHECK(d.multiplicity(Weight{0, 0}) == 1);
  CHECK(d.multiplicity(Weight{1, 1}) == 1);

  d = o.decompose(Weight{1, 1}, Weight{1, 1});
  CHECK(d.terms.size() == 5);
  CHECK(d.multiplicity(Weight{0, 0}) == 1);
  CHECK(d.multiplicity(Weight{1, 1}) == 2);
  CHECK(d.multiplicity(Weight{3, 0}) == 1);
  CHECK(d.multiplicity(Weight{0, 3}) == 1);
  CHECK(d.multiplicity(Weight{2, 2}) == 1);
  CHECK(d.multiplicity(Weight{1, 0}) == 0);
}

TEST_CASE("invariant dimensions") {
  auto rs = roots("A2");
  TensorOracle o(rs);
  const Weight rho{1, 1};
  const std::vector<Weight> a{Weight{1, 0}, Weight{0, 1}, Weight{0, 0}};
  CHECK(o.invariant_dim(a) == 1);
  const std::vector<Weight> b{rho, rho, rho};
  CHECK(o.invariant_dim(b) == 2);
  for (const Weight& lam : {Weight{0, 0}, Weight{3, 1}, Weight{2, 2}}) {
    const std::vector<Weight> t{lam, weight_star(*rs, lam), Weight{0, 0}};
    CHECK(o.invariant_dim(t) == 1);
  }
  const std::vector<Weight> four{rho, rho, rho, rho};
  // 8 (x) 8 = 1 + 8 + 8 + 10 + 10* + 27, so the invariants of 8^(x)4 are
  // sum of squared multiplicities: 1 + 4 + 1 + 1 + 1 = 8.
  CHECK(o.invariant_dim(four) == 8);
}

TEST_CASE("stable multiplicity probe") {
  TensorOracle o(roots("A2"));
  const std::vector<Weight> cartan{Weight{1, 0}, Weight{0, 1}, Weight{1, 1}};
  auto p = o.stable_mult_probe(cartan, 3);
  CHECK_FALSE(p.overflow);
  CHECK(p.dims == std::vector<std::pair<int, std::int64_t>>{{1, 1}, {2, 1}, {3, 1}});

  const std::vector<Weight> rho{Weight{1, 1}, Weight{1, 1}, Weight{1, 1}};
  CHECK(o.stable_mult_probe(rho, 1).dims == std::vector<std::pair<int, std::int64_t>>{{1, 2}});

  const std::vector<Weight> zero{Weight{0, 0}, Weight{0, 0}, Weight{0, 0}};
  CHECK(o.stable_mult_probe(zero, 2).dims == std::vector<std::pair<int, std::int64_t>>{{1, 1}, {2, 1}});
}

TEST_CASE("errors") {
  TensorOracle o(roots("A2"));
  try {
    o.decompose(Weight{-1, 0}, Weight{0, 0});
    FAIL("non-dominant accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonDominantInput);
  }
  TensorOracle tight(roots("A2"), OracleBudget{10, 100});
  try {
    tight.decompose(Weight{2, 2}, Weight{1, 0});
    FAIL("budget ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OracleOverflow);
  }
  const std::vector<Weight> big{Weight{1, 1}, Weight{1, 1}, Weight{1, 1}};
  auto p = tight.stable_mult_probe(big, 3);
  CHECK(p.overflow);
  CHECK(p.dims.size() == 1);
}

TEST_CASE("Klimyk dimension identity and symmetry on random pairs") {
  std::mt19937_64 rng(7);
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    CAPTURE(name);
    auto rs = roots(name);
    TensorOracle o(rs);
    for (int s = 0; s < 25; ++s) {
      auto lam = random_dominant(rng, rs->rank(), 3);
      auto mu = random_dominant(rng, rs->rank(), 3);
      auto d = o.decompose(lam, mu);
      mpz_class total = 0;
      for (const auto& [nu, m] : d.terms) {
        CHECK(nu.is_dominant());
        CHECK(m > 0);
        total += o.weyl_dim(nu) * static_cast<long>(m);
      }
      CHECK(total == o.weyl_dim(lam) * o.weyl_dim(mu));
      CHECK(o.decompose(mu, lam).terms == d.terms);
      // the top component always appears once
      CHECK(d.multiplicity(lam + mu) == 1);
    }
  }
}
