#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "g2/chevalley.hpp"
#include "g2/group.hpp"
#include "g2/replay.hpp"
#include "g2/ring.hpp"
#include "g2/rootsys.hpp"

using namespace g2;

namespace {

std::vector<RingPtr> sample_rings() {
  return {make_zmod(5, 2), make_zmod(7, 2), make_trunc(3, 3)};
}

}  // namespace

// The relation the deduction chain replays is an actual identity on torus
// elements: conjugating h_{a1}(t) by w1 w2 equals (w2 h_{a1}(t) w2^-1) times
// h_{a1}(t) itself.
TEST_CASE("defining relation holds for genuine torus elements") {
  Root a1 = root_by_index(1), a2 = root_by_index(2);
  for (const auto& ring : sample_rings()) {
    INFO("ring ", ring->name());
    std::mt19937_64 rng(20260816);
    GroupElement w1 = weyl_element(ring, a1, ring->one());
    GroupElement w2 = weyl_element(ring, a2, ring->one());
    GroupElement w12 = multiply(w1, w2);
    for (int trial = 0; trial < 20; ++trial) {
      GroupElement h = torus_element(ring, a1, ring->random_unit(rng));
      GroupElement lhs = conjugate(h, w12);
      GroupElement rhs = multiply(conjugate(h, w2), h);
      CHECK(lhs.mat.eq(rhs.mat));
    }
  }
}

// ... and the product of the two conjugated torus images commutes with the
// short simple root unipotent, which is what pins d5 = d9^3.
TEST_CASE("conjugated torus product commutes with x_a1(1)") {
  Root a3 = root(1, 1), a4 = root(2, 1);
  for (const auto& ring : sample_rings()) {
    INFO("ring ", ring->name());
    std::mt19937_64 rng(20260816);
    GroupElement x1 = root_element(ring, root_by_index(1), ring->one());
    for (int trial = 0; trial < 20; ++trial) {
      Value t = ring->random_unit(rng);
      GroupElement p =
          multiply(torus_element(ring, a3, t), torus_element(ring, a4, t));
      CHECK(multiply(p, x1).mat.eq(multiply(x1, p).mat));
    }
  }
}

// Independent endpoint check: the deduced parameter values, instantiated at
// a concrete unit t (d9 = 1/t), evaluate the template to h_{a1}(t).
TEST_CASE("deduced parameter values reproduce concrete torus elements") {
  Root a1 = root_by_index(1);
  for (const auto& ring : sample_rings()) {
    INFO("ring ", ring->name());
    std::mt19937_64 rng(20260816);
    for (int trial = 0; trial < 20; ++trial) {
      Value t = ring->random_unit(rng);
      Value ti = ring->inv(t);
      std::vector<Value> d(14, ring->zero());
      d[0] = ring->mul(t, t);            // d1 = t^2
      d[3] = ring->mul(ti, ti);          // d4 = t^-2
      d[4] = ring->pow(ti, 3);           // d5 = t^-3
      d[6] = ring->pow(t, 3);            // d7 = t^3
      d[8] = ti;                         // d9 = 1/t
      d[10] = t;                         // d11 = t
      d[12] = ring->one();               // d13 = 1
      d[13] = ring->one();               // d14 = 1
      Mat ht = template_torus().evaluate(ring, d);
      CHECK(ht.eq(torus_element(ring, a1, t).mat));
    }
  }
}

TEST_CASE("torus image suite passes with forced entries recorded") {
  Report rep = verify_torus_image();
  INFO(rep.to_text());
  CHECK(rep.pass());
  CHECK(rep.checks.size() == 16);
  int deductions = 0;
  for (const auto& c : rep.checks)
    if (c.name.rfind("deduction ", 0) == 0) {
      ++deductions;
      CHECK(c.witness.rfind("entry (", 0) == 0);
    }
  CHECK(deductions == 13);
  CHECK(rep.checks.back().name == "image equals the a1 torus element at 1/d9");
}
