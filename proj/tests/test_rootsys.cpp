#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "g2/rootsys.hpp"

using namespace g2;

namespace {

// Independent Euclidean oracle for inner products: the realization in R^3
// with a1 = e1-e2 and a2 = -2e1+e2+e3, written out per root.
std::array<int, 3> oracle_euclid(int n1, int n2) {
  return {n1 * 1 + n2 * (-2), n1 * (-1) + n2 * 1, n2 * 1};
}

int oracle_cartan(const Root& a, const Root& b) {
  auto ea = oracle_euclid(a.n1, a.n2);
  auto eb = oracle_euclid(b.n1, b.n2);
  int dot = 0, bb = 0;
  for (int i = 0; i < 3; ++i) {
    dot += ea[i] * eb[i];
    bb += eb[i] * eb[i];
  }
  REQUIRE((2 * dot) % bb == 0);
  return 2 * dot / bb;
}

}  // namespace

TEST_CASE("exactly twelve roots with the expected coordinates") {
  std::set<std::pair<int, int>> expect;
  for (auto [n1, n2] : std::initializer_list<std::pair<int, int>>{
           {1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}) {
    expect.insert({n1, n2});
    expect.insert({-n1, -n2});
  }
  std::set<std::pair<int, int>> got;
  for (auto& r : all_roots()) got.insert({r.n1, r.n2});
  CHECK(got == expect);
  CHECK(all_roots().size() == 12);
}

TEST_CASE("list order pairs each root with its negative") {
  auto& roots = all_roots();
  for (int i = 1; i <= 6; ++i) {
    const Root& plus = roots[2 * i - 2];
    const Root& minus = roots[2 * i - 1];
    CHECK(plus.index == i);
    CHECK(minus.index == -i);
    CHECK(minus.n1 == -plus.n1);
    CHECK(minus.n2 == -plus.n2);
    CHECK(position_of(plus) == 2 * i - 1);
    CHECK(position_of(minus) == 2 * i);
  }
}

TEST_CASE("length classes split 1,3,4 short and 2,5,6 long") {
  for (auto& r : all_roots()) {
    int abs_i = r.index < 0 ? -r.index : r.index;
    bool expect_long = abs_i == 2 || abs_i == 5 || abs_i == 6;
    CHECK(length2(r) == (expect_long ? 6 : 2));
    CHECK(is_long(r) == expect_long);
  }
}

TEST_CASE("root sums") {
  Root a1 = root_by_index(1), a2 = root_by_index(2);
  auto s = sum(a1, a2);
  REQUIRE(s.has_value());
  CHECK(s->index == 3);
  CHECK_FALSE(sum(a1, a1).has_value());
  Root a5 = root_by_index(5);
  CHECK_FALSE(sum(a5, -a5).has_value());
}

TEST_CASE("cartan integers match the euclidean oracle") {
  for (auto& a : all_roots())
    for (auto& b : all_roots()) CHECK(cartan_int(a, b) == oracle_cartan(a, b));
  Root a1 = root_by_index(1), a2 = root_by_index(2);
  CHECK(cartan_int(a1, a1) == 2);
  CHECK(cartan_int(a2, a1) == -3);
  CHECK(cartan_int(a1, a2) == -1);
}

TEST_CASE("reflections") {
  Root a1 = root_by_index(1), a2 = root_by_index(2), a6 = root_by_index(6);
  CHECK(reflect(a1, a1).index == -1);
  CHECK(reflect(a2, a1).index == 5);
  CHECK(reflect(a6, a1).index == 6);
}

TEST_CASE("each reflection is an involutive permutation of the roots") {
  for (auto& b : all_roots()) {
    std::set<int> image;
    for (auto& a : all_roots()) {
      Root ra = reflect(a, b);
      image.insert(position_of(ra));
      CHECK(reflect(ra, b) == a);
    }
    CHECK(image.size() == 12);
  }
}

TEST_CASE("equal-length roots form single reflection orbits") {
  for (auto& seed : {root_by_index(1), root_by_index(2)}) {
    std::set<int> orbit{position_of(seed)};
    bool grew = true;
    while (grew) {
      grew = false;
      for (int pos : std::set<int>(orbit))
        for (auto& b : all_roots()) {
          int q = position_of(reflect(root_at_position(pos), b));
          if (orbit.insert(q).second) grew = true;
        }
    }
    std::set<int> expect;
    for (auto& r : all_roots())
      if (is_long(r) == is_long(seed)) expect.insert(position_of(r));
    CHECK(orbit == expect);
  }
}

TEST_CASE("cartan product bound for non-proportional roots") {
  for (auto& a : all_roots())
    for (auto& b : all_roots()) {
      if (a == b || a == -b) continue;
      int p = cartan_int(a, b) * cartan_int(b, a);
      CHECK(p >= 0);
      CHECK(p <= 3);
    }
}

TEST_CASE("root names parse and print") {
  for (auto& r : all_roots()) {
    auto p = parse_root(root_name(r));
    REQUIRE(p.has_value());
    CHECK(*p == r);
  }
  CHECK_FALSE(parse_root("a7").has_value());
  CHECK_FALSE(parse_root("b1").has_value());
}
