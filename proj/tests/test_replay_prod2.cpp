#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "g2/group.hpp"
#include "g2/mat.hpp"
#include "g2/replay.hpp"
#include "g2/ring.hpp"
#include "g2/rootsys.hpp"

using namespace g2;

namespace {

TorusUnipotentParams trivial_params(const RingPtr& R) {
  TorusUnipotentParams p;
  p.lam = R->one();
  p.s1 = R->one();
  p.s2 = R->one();
  for (int i = 0; i < 6; ++i) p.t[i] = R->zero();
  for (int i = 0; i < 6; ++i) p.u[i] = R->zero();
  return p;
}

}  // namespace

TEST_CASE("designated positions are listed in reading order") {
  const std::vector<std::pair<int, int>> expected = {
      {12, 12}, {12, 10}, {12, 8}, {12, 6}, {12, 4},
      {12, 14}, {10, 12}, {10, 10}, {10, 8}, {14, 12},
      {4, 12},  {4, 6},   {8, 8},  {14, 6}, {14, 8}};
  CHECK(prod2_positions() == expected);
}

TEST_CASE("assembled entries agree with hand-computed values") {
  // Over Q with s1 = s2 = 1 the torus part is trivial, so the product is
  // lam x_{a2}(3) x_{-a2}(5) and the low rows can be multiplied out by hand.
  RingPtr R = make_rationals();
  TorusUnipotentParams p = trivial_params(R);
  p.lam = R->from_int(2);
  p.t[1] = R->from_int(3);
  p.u[1] = R->from_int(5);
  Mat X = prod2_assemble(R, p);
  CHECK(R->eq(X.at(11, 11), R->from_int(2)));    // (12,12) = lam
  CHECK(R->eq(X.at(11, 9), R->from_int(10)));    // (12,10) = lam u2
  CHECK(R->eq(X.at(9, 11), R->from_int(6)));     // (10,12) = lam t2
  CHECK(R->eq(X.at(9, 9), R->from_int(32)));     // (10,10) = lam (1 + t2 u2)
  CHECK(R->is_zero(X.at(13, 11)));               // (14,12): no t5, t3 t4, t6
  CHECK(R->eq(X.at(7, 7), R->from_int(2)));      // (8,8) = lam, u3 = 0

  // A plain long-root element: only the u3 slot reacts.
  TorusUnipotentParams q = trivial_params(R);
  q.u[2] = R->from_int(7);
  Mat Y = prod2_assemble(R, q);
  CHECK(R->eq(Y.at(11, 7), R->from_int(-7)));    // (12,8) = -u3
  CHECK(prod2_assemble(R, trivial_params(R)).eq(Mat::identity(R, 14)));
}

TEST_CASE("extraction inverts assembly for random parameters") {
  std::mt19937_64 rng(20260816);
  for (const RingPtr& R : {make_zmod(5, 2), make_zmod(5, 3), make_trunc(6, 3)}) {
    for (int trial = 0; trial < 5; ++trial) {
      TorusUnipotentParams p;
      p.lam = R->random_unit(rng);
      p.s1 = R->add(R->one(), R->random_radical(rng));
      p.s2 = R->add(R->one(), R->random_radical(rng));
      for (int i = 0; i < 6; ++i) p.t[i] = R->random_radical(rng);
      for (int i = 0; i < 6; ++i) p.u[i] = R->random_radical(rng);
      Mat X = prod2_assemble(R, p);
      TorusUnipotentParams got = prod2_extract(R, X);
      INFO(R->name(), " trial ", trial);
      CHECK(R->eq(got.lam, p.lam));
      CHECK(R->eq(got.s1, p.s1));
      CHECK(R->eq(got.s2, p.s2));
      for (int i = 0; i < 6; ++i) {
        CHECK(R->eq(got.t[i], p.t[i]));
        CHECK(R->eq(got.u[i], p.u[i]));
      }
    }
  }
}

TEST_CASE("extraction rejects matrices outside the normal form") {
  RingPtr R = make_zmod(5, 2);
  // A Weyl element has a non-unit in the anchor slot.
  Mat w = weyl_element(R, root_by_index(1), R->one()).mat;
  CHECK_THROWS_AS(prod2_extract(R, w), RingError);

  // Unit anchors but a perturbed far-away entry: the reassembly check trips.
  TorusUnipotentParams p = trivial_params(R);
  p.t[0] = R->from_int(5);
  Mat Y = prod2_assemble(R, p);
  Y.at(0, 1) = R->add(Y.at(0, 1), R->from_int(5));
  CHECK_THROWS_AS(prod2_extract(R, Y), RingError);
}

TEST_CASE("decomposition suite verifies formulas and roundtrips") {
  Report rep = verify_prod2(20260816, 25);
  INFO(rep.to_text(true));
  REQUIRE(rep.pass());
  CHECK(rep.checks.size() == 7);
  CHECK(rep.checks[0].name ==
        "the fifteen designated entries match their closed forms");
  CHECK(rep.checks[1].name == "each system entry pins a distinct variable");
  int roundtrips = 0;
  for (const auto& c : rep.checks)
    if (c.name.rfind("roundtrip over ", 0) == 0) {
      ++roundtrips;
      CHECK(c.witness == "25 trials");
    }
  CHECK(roundtrips == 3);
}
