#include <doctest.h>

#include "lrs/error.hpp"
#include "support.hpp"

using namespace lrs;
using lrs::test::at;
using lrs::test::elem;
using lrs::test::group;
using lrs::test::roots;
using lrs::test::subset;

TEST_CASE("group orders") {
  const std::pair<const char*, std::size_t> cases[] = {{"A1", 2},  {"A2", 6},  {"B2", 8},    {"G2", 12},
                                                       {"A3", 24}, {"B3", 48}, {"C3", 48},   {"D4", 192},
                                                       {"F4", 1152}, {"E6", 51840}};
  for (auto [name, n] : cases) {
    CAPTURE(name);
    auto g = group(name);
    CHECK(g->size() == n);
    CHECK(g->element(g->identity_index()).length() == 0);
    CHECK(g->max_length() == g->rs().n_pos());
  }
}

TEST_CASE("A1 elements are e and s1") {
  auto g = group("A1");
  CHECK(g->element(0).to_string() == "e");
  CHECK(g->element(1).to_string() == "1");
}

TEST_CASE("size cap") {
  try {
    WeylGroup::build(roots("B3"), 10);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GroupTooLarge);
  }
}

TEST_CASE("inversion sets in A2") {
  auto rs = roots("A2");
  CHECK(WeylElement::identity(rs).inversions().empty());
  CHECK(longest_element(rs).inversions() == RootSubset::all(3));
  // roots are ordered alpha_1, alpha_2, alpha_1 + alpha_2
  CHECK(elem(rs, "1.2").inversions() == subset({1, 2}));
}

TEST_CASE("products, inverses and words") {
  auto rs = roots("A2");
  auto w0 = longest_element(rs);
  CHECK(multiply(w0, w0) == WeylElement::identity(rs));
  auto p = multiply(WeylElement::simple(rs, 0), WeylElement::simple(rs, 1));
  CHECK(p.length() == 2);
  CHECK(p.inversions() == subset({1, 2}));
  CHECK(inverse(elem(rs, "1.2")) == elem(rs, "2.1"));
  CHECK(w0.to_string() == "1.2.1");
  CHECK(elem(rs, "2.1.2") == w0);
  CHECK(elem(rs, "2.1.2").to_string() == "1.2.1");
  CHECK(elem(rs, "1.1").to_string() == "e");
  CHECK_THROWS_AS(multiply(w0, longest_element(roots("B2"))), Error);
}

TEST_CASE("word parsing") {
  CHECK(parse_word("e", 2).empty());
  CHECK(parse_word("1.2.1", 2) == Word{0, 1, 0});
  CHECK(format_word({0, 1, 0}) == "1.2.1");
  CHECK_THROWS_AS(parse_word("1.3", 2), Error);
  CHECK_THROWS_AS(parse_word("1..2", 2), Error);
  CHECK_THROWS_AS(parse_word("", 2), Error);
  CHECK_THROWS_AS(parse_word("x", 2), Error);
}

TEST_CASE("action on weights") {
  auto rs = roots("A2");
  CHECK(act(WeylElement::identity(rs), Weight{3, 1}) == Weight{3, 1});
  CHECK(act(WeylElement::simple(rs, 0), Weight{1, 0}) == Weight{-1, 1});
  CHECK(act(longest_element(rs), Weight{1, 0}) == Weight{0, -1});
}

TEST_CASE("dot action") {
  auto rs = roots("A2");
  CHECK(dot(WeylElement::identity(rs), Weight{2, 5}) == Weight{2, 5});
  CHECK(dot(WeylElement::simple(rs, 0), Weight{1, 0}) == Weight{-3, 2});
  CHECK(dot(longest_element(rs), Weight{0, 0}) == Weight{-2, -2});
}

TEST_CASE("dot action composes") {
  for (const char* name : {"A2", "B2", "G2"}) {
    auto g = group(name);
    const Weight lam{2, -1};
    for (const auto& u : g->elements())
      for (const auto& v : g->elements()) CHECK(dot(multiply(u, v), lam) == dot(u, dot(v, lam)));
  }
}

TEST_CASE("weight star") {
  CHECK(weight_star(*roots("A2"), Weight{1, 0}) == Weight{0, 1});
  CHECK(weight_star(*roots("B2"), Weight{3, 2}) == Weight{3, 2});
  CHECK(weight_star(*roots("A2"), Weight{0, 0}) == Weight{0, 0});
  for (const char* name : {"A3", "D4", "E6", "G2"}) {
    auto rs = roots(name);
    Weight lam(static_cast<std::size_t>(rs->rank()));
    for (std::size_t j = 0; j < lam.rank(); ++j) lam[j] = static_cast<std::int64_t>(j + 1);
    auto s = weight_star(*rs, lam);
    CHECK(s.is_dominant());
    CHECK(weight_star(*rs, s) == lam);
  }
}

TEST_CASE("lookup by inversion set") {
  auto g = group("A2");
  CHECK(*g->from_inversion_set(RootSubset{}) == WeylElement::identity(g->root_system()));
  CHECK(*g->from_inversion_set(subset({1, 2})) == elem(g->root_system(), "1.2"));
  CHECK_FALSE(g->from_inversion_set(subset({2})));
}

TEST_CASE("Borel-Weil-Bott") {
  auto rs = roots("A2");
  auto r = borel_weil_bott(*rs, Weight{4, 1});
  REQUIRE(r);
  CHECK(r->q == 0);
  CHECK(r->lambda == Weight{4, 1});
  r = borel_weil_bott(*rs, Weight{-3, 2});
  REQUIRE(r);
  CHECK(r->q == 1);
  CHECK(r->lambda == Weight{1, 0});
  CHECK_FALSE(borel_weil_bott(*rs, Weight{-1, 1}));
}

TEST_CASE("Borel-Weil-Bott inverts the dot action on regular weights") {
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    auto g = group(name);
    const auto& rs = g->rs();
    Weight lam(static_cast<std::size_t>(rs.rank()));
    for (std::size_t j = 0; j < lam.rank(); ++j) lam[j] = static_cast<std::int64_t>(j % 3);
    for (const auto& w : g->elements()) {
      auto r = borel_weil_bott(rs, dot(w, lam));
      REQUIRE(r);
      CHECK(r->q == w.length());
      CHECK(r->lambda == lam);
      CHECK(WeylElement::from_word(g->root_system(), r->word) == w);
    }
  }
}

TEST_CASE("dominant representative") {
  auto g = group("B3");
  const auto& rs = g->rs();
  const Weight lam{1, 0, 2};
  for (const auto& w : g->elements()) {
    auto rep = dominant_representative(rs, act(w, lam));
    CHECK(rep.weight == lam);
    auto u = WeylElement::from_word(g->root_system(), rep.word);
    CHECK(act(u, rep.weight) == act(w, lam));
    CHECK(u.length() == static_cast<int>(rep.word.size()));
  }
}

TEST_CASE("inversion-set identities") {
  for (const char* name : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
    CAPTURE(name);
    auto g = group(name);
    const int n = g->rs().n_pos();
    const auto w0 = g->longest();
    for (std::size_t i = 0; i < g->size(); ++i) {
      const auto& w = g->element(i);
      CHECK(w.inversions().size() == w.length());
      CHECK(w.action().determinant() == (w.length() % 2 ? -1 : 1));
      CHECK(g->element(g->w0_left(i)) == multiply(w0, w));
      CHECK(g->element(g->w0_right(i)) == multiply(w, w0));
      CHECK(g->element(g->w0_left(i)).inversions() == w.inversions().complement(n));
      CHECK(g->element(g->w0_right(i)).inversions() == g->apply_neg_w0(w.inversions().complement(n)));
      CHECK(g->element(g->inverse_index(i)) == inverse(w));
      CHECK(g->index_of_inversion_set(w.inversions()) == i);
    }
  }
}

TEST_CASE("inversion-set cocycle") {
  // Phi_{uv} = Phi_v symmetric-difference v^{-1} Phi_u, checked through sizes:
  // l(uv) = l(u) + l(v) exactly when Phi_v is contained in Phi_{uv}.
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    auto g = group(name);
    for (std::size_t u = 0; u < g->size(); ++u)
      for (std::size_t v = 0; v < g->size(); ++v) {
        const auto& eu = g->element(u);
        const auto& ev = g->element(v);
        const auto& uv = g->element(g->multiply(u, v));
        const bool additive = uv.length() == eu.length() + ev.length();
        CHECK(additive == ((ev.inversions() & uv.inversions()) == ev.inversions()));
        CHECK((uv.length() - eu.length() - ev.length()) % 2 == 0);
      }
  }
}

TEST_CASE("biconvex subsets are exactly the inversion sets") {
  for (const char* name : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
    CAPTURE(name);
    auto g = group(name);
    const int n = g->rs().n_pos();
    std::size_t count = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      RootSubset s(bits);
      bool b = is_biconvex(g->rs(), s);
      CHECK(b == g->index_of_inversion_set(s).has_value());
      count += b;
    }
    CHECK(count == g->size());
  }
}

TEST_CASE("elements are ordered by length then word") {
  auto g = group("B3");
  for (std::size_t i = 1; i < g->size(); ++i) {
    const auto& a = g->element(i - 1);
    const auto& b = g->element(i);
    CHECK((a.length() < b.length() || (a.length() == b.length() && a.word() < b.word())));
  }
  for (int l = 0; l <= g->max_length(); ++l)
    for (auto i : g->of_length(l)) CHECK(g->element(i).length() == l);
}
