#include <doctest.h>

#include "lrs/error.hpp"
#include "support.hpp"

using namespace lrs;
using lrs::test::roots;

TEST_CASE("positive root counts") {
  const std::pair<const char*, int> cases[] = {{"A1", 1}, {"A2", 3},  {"A3", 6},  {"A4", 10}, {"B2", 4},
                                               {"B3", 9}, {"C3", 9},  {"C4", 16}, {"D4", 12}, {"D5", 20},
                                               {"G2", 6}, {"F4", 24}, {"E6", 36}};
  for (auto [name, n] : cases) {
    CAPTURE(name);
    CHECK(roots(name)->n_pos() == n);
  }
}

TEST_CASE("A2 roots in both coordinate systems") {
  auto rs = roots("A2");
  REQUIRE(rs->n_pos() == 3);
  CHECK(rs->root_fw(0) == Weight{2, -1});
  CHECK(rs->root_fw(1) == Weight{-1, 2});
  CHECK(rs->root_fw(2) == Weight{1, 1});
  auto top = rs->root(2);
  CHECK(top[0] == 1);
  CHECK(top[1] == 1);
  CHECK(rs->height(2) == 2);
}

TEST_CASE("A1 has the single root alpha_1") {
  auto rs = roots("A1");
  CHECK(rs->n_pos() == 1);
  CHECK(rs->root_fw(0) == Weight{2});
}

TEST_CASE("pairing") {
  auto rs = roots("A2");
  CHECK(rs->pairing(rs->rho(), 0) == 1);
  CHECK(rs->pairing(Weight{1, 0}, 2) == 1);
  for (int b = 0; b < rs->n_pos(); ++b) CHECK(rs->pairing(rs->zero(), b) == 0);
}

TEST_CASE("rho pairs to 1 with every simple coroot and to the height with every coroot in simply-laced types") {
  for (const char* name : {"A3", "D4", "E6", "B3", "C3", "G2", "F4"}) {
    auto rs = roots(name);
    for (int i = 0; i < rs->rank(); ++i) CHECK(rs->pairing(rs->rho(), i) == 1);
    for (int b = 0; b < rs->n_pos(); ++b) {
      CHECK(rs->pairing(rs->rho(), b) >= 1);
      if (rs->type().series == 'A' || rs->type().series == 'D' || rs->type().series == 'E')
        CHECK(rs->pairing(rs->rho(), b) == rs->height(b));
    }
  }
}

TEST_CASE("simple-root to fundamental-weight coordinates round trip through the root table") {
  for (const char* name : {"B3", "C3", "G2", "F4"}) {
    auto rs = roots(name);
    for (int b = 0; b < rs->n_pos(); ++b) {
      CHECK(rs->to_fw(rs->root(b)) == rs->root_fw(b));
      auto hit = rs->find_root_fw(rs->root_fw(b));
      REQUIRE(hit);
      CHECK(hit->index == b);
      CHECK(hit->sign == 1);
      auto neg = rs->find_root_fw(-rs->root_fw(b));
      REQUIRE(neg);
      CHECK(neg->sign == -1);
    }
    CHECK_FALSE(rs->find_root_fw(rs->zero()));
  }
}

TEST_CASE("form2 is symmetric on roots and agrees with pairings") {
  for (const char* name : {"B2", "C3", "G2", "F4"}) {
    auto rs = roots(name);
    for (int a = 0; a < rs->n_pos(); ++a)
      for (int b = 0; b < rs->n_pos(); ++b) {
        CHECK(rs->form2(rs->root_fw(a), b) == rs->form2(rs->root_fw(b), a));
        // <beta, alpha^vee> (alpha, alpha) = 2 (beta, alpha)
        CHECK(rs->pairing(rs->root_fw(b), a) * rs->form2(rs->root_fw(a), a) == 2 * rs->form2(rs->root_fw(b), a));
      }
  }
}

TEST_CASE("group type parsing and rejection") {
  CHECK(GroupType::parse("B3").name() == "B3");
  CHECK_THROWS_AS(GroupType::parse("Q2"), Error);
  CHECK_THROWS_AS(GroupType::parse("A"), Error);
  try {
    roots("E7");
    FAIL("E7 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedType);
  }
  CHECK_THROWS_AS(roots("G3"), Error);
  CHECK_THROWS_AS(roots("B1"), Error);
}

TEST_CASE("weight dominance and arithmetic") {
  Weight a{1, 0}, b{0, 2};
  CHECK(a.is_dominant());
  CHECK_FALSE((a - b).is_dominant());
  CHECK((a + b) == Weight{1, 2});
  CHECK((3 * a) == Weight{3, 0});
  CHECK(Weight{0, 0}.is_zero());
}
