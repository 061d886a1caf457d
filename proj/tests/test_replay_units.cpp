#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "g2/group.hpp"
#include "g2/mat.hpp"
#include "g2/replay.hpp"
#include "g2/ring.hpp"
#include "g2/rootsys.hpp"

using namespace g2;

namespace {

Mat cell_matrix(const RingPtr& R, int k, int l) {
  Mat m(R, 14, 14);
  m.at(k - 1, l - 1) = R->one();
  return m;
}

}  // namespace

TEST_CASE("seed and anchor identities hold by direct computation") {
  RingPtr R = make_rationals();
  Mat E = Mat::identity(R, 14);
  Mat x1 = root_element(R, root_by_index(1), R->one()).mat;
  Mat x2 = root_element(R, root_by_index(2), R->one()).mat;
  Value half = R->inv(R->from_int(2));

  Mat d2 = x2 - E;
  CHECK((d2 * d2).scaled(half).eq(cell_matrix(R, 3, 4).scaled(R->from_int(-1))));

  // e(14,4) = (x_{a2}(1) - E) e(4,4) + e(3,4)
  CHECK((d2 * cell_matrix(R, 4, 4) + cell_matrix(R, 3, 4))
            .eq(cell_matrix(R, 14, 4)));

  // e(13,13) = 1/4 (h1 + E)(h2 + E) - e(14,14)
  Mat h1 = torus_element(R, root_by_index(1), R->from_int(-1)).mat;
  Mat h2 = torus_element(R, root_by_index(2), R->from_int(-1)).mat;
  Mat q = ((h1 + E) * (h2 + E)).scaled(R->mul(half, half)) -
          cell_matrix(R, 14, 14);
  CHECK(q.eq(cell_matrix(R, 13, 13)));

  // e(1,13) = -1/2 (x_{a1}(1) - E) e(13,13)
  CHECK(((x1 - E) * cell_matrix(R, 13, 13)).scaled(R->neg(half))
            .eq(cell_matrix(R, 1, 13)));
}

TEST_CASE("all 196 cells are generated exactly once and verify") {
  RingPtr R = make_zmod(5, 2);
  std::vector<MatrixUnit> units = generate_matrix_units(R);
  REQUIRE(units.size() == 196);
  std::set<std::pair<int, int>> seen;
  for (const MatrixUnit& mu : units) {
    INFO("unit (", mu.k, ",", mu.l, ") = ", mu.expr);
    CHECK(mu.value.eq(cell_matrix(R, mu.k, mu.l)));
    CHECK(!mu.expr.empty());
    seen.insert({mu.k, mu.l});
  }
  CHECK(seen.size() == 196);
}

TEST_CASE("generated units multiply like matrix units") {
  RingPtr R = make_zmod(7, 2);
  std::vector<MatrixUnit> units = generate_matrix_units(R);
  std::map<std::pair<int, int>, const Mat*> at;
  for (const MatrixUnit& mu : units) at[{mu.k, mu.l}] = &mu.value;
  std::mt19937_64 rng(20260816);
  std::uniform_int_distribution<int> pick(1, 14);
  for (int trial = 0; trial < 20; ++trial) {
    int k = pick(rng), l = pick(rng), m = pick(rng), m2 = pick(rng);
    INFO("triple ", k, " ", l, " ", m);
    CHECK((*at[{k, l}] * *at[{l, m}]).eq(*at[{k, m}]));
    if (l != m)  // orthogonality: e(k,l) e(m,m2) = 0 when l != m
      CHECK((*at[{k, l}] * *at[{m, m2}]).is_zero());
  }
}

TEST_CASE("only the short-to-long wall divides by 3, and needs to") {
  const std::set<int> low = {1, 2, 5, 6, 7, 8, 13};
  const std::set<int> high = {3, 4, 9, 10, 11, 12, 14};
  RingPtr R = make_zmod(5, 2);
  int flagged = 0;
  for (const MatrixUnit& mu : generate_matrix_units(R)) {
    bool wall = low.count(mu.k) && high.count(mu.l);
    INFO("unit (", mu.k, ",", mu.l, ")");
    CHECK(mu.used_third == wall);
    if (mu.used_third) ++flagged;
  }
  CHECK(flagged == 49);

  // Z/9 has 1/2 but no 1/3: generation must fail at the wall.
  CHECK_THROWS_AS(generate_matrix_units(make_zmod(3, 2)), RingError);
}

TEST_CASE("unit generation suite passes") {
  Report rep = verify_matrix_units(20260816);
  INFO(rep.to_text(true));
  REQUIRE(rep.pass());
  CHECK(rep.checks.size() == 8);
  CHECK(rep.checks[0].name ==
        "half the squared unipotent difference is minus e(3,4)");
  CHECK(rep.checks.back().name ==
        "every generator vanishes mod 3 on the short-to-long block");
}
