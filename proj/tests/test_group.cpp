#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "g2/group.hpp"

using namespace g2;

namespace {

std::vector<RingPtr> property_rings() {
  return {make_rationals(), make_zmod(5, 2), make_zmod(7, 2), make_trunc(4, 3)};
}

}  // namespace

TEST_CASE("root, Weyl, and torus elements reproduce the pinned matrices") {
  auto q = make_rationals();
  const ChevalleyData& d = chevalley();
  CHECK(root_element(q, root(1, 0), q->from_int(0)).mat.eq(Mat::identity(q, 14)));
  CHECK(root_element(q, root(1, 0), q->from_int(1)).mat.eq(Mat::from_int(q, d.x1_one)));
  CHECK(root_element(q, root(0, 1), q->from_int(1)).mat.eq(Mat::from_int(q, d.x2_one)));
  auto w1 = weyl_element(q, root(1, 0), q->from_int(1));
  auto w2 = weyl_element(q, root(0, 1), q->from_int(1));
  CHECK(w1.mat.eq(Mat::from_int(q, d.w1)));
  CHECK(w2.mat.eq(Mat::from_int(q, d.w2)));
  CHECK((w1.mat * w1.mat).eq(Mat::from_int(q, d.h1_minus)));
  CHECK((w2.mat * w2.mat).eq(Mat::from_int(q, d.h2_minus)));
  CHECK(torus_element(q, root(1, 0), q->from_int(1)).mat.eq(Mat::identity(q, 14)));
  CHECK(torus_element(q, root(1, 0), q->from_int(-1)).mat.eq(Mat::from_int(q, d.h1_minus)));
  CHECK(torus_element(q, root(0, 1), q->from_int(-1)).mat.eq(Mat::from_int(q, d.h2_minus)));
}

TEST_CASE("additivity of root elements over each ring") {
  std::mt19937_64 rng(20260816);
  for (const auto& ring : property_rings()) {
    INFO("ring ", ring->name());
    for (int trial = 0; trial < 500; ++trial) {
      Root alpha = root_at_position(1 + (int)(rng() % 12));
      Value s = ring->random_value(rng), t = ring->random_value(rng);
      Mat lhs = root_element(ring, alpha, s).mat * root_element(ring, alpha, t).mat;
      Mat rhs = root_element(ring, alpha, ring->add(s, t)).mat;
      REQUIRE(lhs.eq(rhs));
    }
  }
}

TEST_CASE("Weyl conjugation sends x_alpha(t) to x_{-alpha}(-t)") {
  std::mt19937_64 rng(7);
  for (const auto& ring : property_rings()) {
    for (int ia = 0; ia < 12; ++ia) {
      Root alpha = root_at_position(ia + 1);
      auto w = weyl_element(ring, alpha, ring->from_int(1));
      Mat winv = w.mat.inverse();
      for (int trial = 0; trial < 25; ++trial) {
        Value t = ring->random_value(rng);
        Mat lhs = w.mat * root_element(ring, alpha, t).mat * winv;
        Mat rhs = root_element(ring, -alpha, ring->neg(t)).mat;
        REQUIRE(lhs.eq(rhs));
      }
    }
  }
}

TEST_CASE("torus action rescales root elements by the Cartan power") {
  std::mt19937_64 rng(11);
  for (const auto& ring : {make_zmod(5, 2), make_trunc(2, 3)}) {
    for (int ia = 0; ia < 12; ++ia) {
      Root alpha = root_at_position(ia + 1);
      Value u = ring->random_unit(rng);
      auto h = torus_element(ring, alpha, u);
      Mat hinv = h.mat.inverse();
      for (int ib = 0; ib < 12; ++ib) {
        Root beta = root_at_position(ib + 1);
        Value t = ring->random_value(rng);
        Mat lhs = h.mat * root_element(ring, beta, t).mat * hinv;
        Value scale = ring->pow(u, cartan_int(beta, alpha));
        Mat rhs = root_element(ring, beta, ring->mul(scale, t)).mat;
        INFO("alpha ", root_name(alpha), " beta ", root_name(beta));
        REQUIRE(lhs.eq(rhs));
      }
    }
  }
}

TEST_CASE("torus elements are multiplicative and diagonal") {
  std::mt19937_64 rng(13);
  for (const auto& ring : property_rings()) {
    for (int ia = 0; ia < 12; ++ia) {
      Root alpha = root_at_position(ia + 1);
      Value s = ring->random_unit(rng), t = ring->random_unit(rng);
      Mat lhs = torus_element(ring, alpha, s).mat * torus_element(ring, alpha, t).mat;
      Mat rhs = torus_element(ring, alpha, ring->mul(s, t)).mat;
      REQUIRE(lhs.eq(rhs));
      Mat h = torus_element(ring, alpha, s).mat;
      for (int i = 0; i < 14; ++i)
        for (int j = 0; j < 14; ++j)
          if (i != j) REQUIRE(ring->is_zero(h.at(i, j)));
    }
  }
}

TEST_CASE("root elements have determinant one") {
  std::mt19937_64 rng(17);
  for (const auto& ring : property_rings()) {
    for (int ia = 0; ia < 12; ++ia) {
      Value t = ring->random_value(rng);
      Value det = root_element(ring, root_at_position(ia + 1), t).mat.det();
      REQUIRE(ring->is_zero(ring->sub(det, ring->from_int(1))));
    }
  }
}

TEST_CASE("inverse works by matrix and by word") {
  auto ring = make_trunc(2, 3);
  std::map<std::string, Value> params{{"t", ring->parse("e1")}};
  auto word = parse_word(ring, "x(a1,t) w(a2,1) h(a1,1+e2) x(-a3,2/3)", params);
  auto g = evaluate_word(ring, word);
  auto gi = inverse(g);
  CHECK((g.mat * gi.mat).eq(Mat::identity(ring, 14)));
  REQUIRE(gi.word.has_value());
  CHECK(evaluate_word(ring, *gi.word).mat.eq(gi.mat));
  // x(t)^-1 = x(-t) for the one-parameter subgroup.
  auto x = root_element(ring, root(1, 1), ring->parse("1/2+e1"));
  CHECK(inverse(x).mat.eq(root_element(ring, root(1, 1), ring->parse("-1/2-e1")).mat));
}

TEST_CASE("conjugation by w2 carries x_a1 to x_a3") {
  auto q = make_rationals();
  auto x = root_element(q, root(1, 0), q->from_int(1));
  auto w2 = weyl_element(q, root(0, 1), q->from_int(1));
  CHECK(conjugate(x, w2).mat.eq(root_element(q, root(1, 1), q->from_int(1)).mat));
  auto g = weyl_element(q, root(1, 0), q->from_int(1));
  CHECK(commutator(g, identity_element(q)).mat.eq(Mat::identity(q, 14)));
}

TEST_CASE("word evaluation matches the examples") {
  auto z = make_zmod(5, 2);
  CHECK(evaluate_word(z, {}).mat.eq(Mat::identity(z, 14)));
  auto w = parse_word(z, "h(a1,2) h(a1,7)");
  CHECK(evaluate_word(z, w).mat.eq(torus_element(z, root(1, 0), z->from_int(14)).mat));
  // x_a2 commutes with x_{a1+a2}: their sum is not a root.
  auto ab = evaluate_word(z, parse_word(z, "x(a2,1) x(a3,1)"));
  auto ba = evaluate_word(z, parse_word(z, "x(a3,1) x(a2,1)"));
  CHECK(ab.mat.eq(ba.mat));
  // The evaluated element carries its word and the word reproduces it.
  REQUIRE(ab.word.has_value());
  CHECK(ab.word->size() == 2);
  CHECK(evaluate_word(z, *ab.word).mat.eq(ab.mat));
  // Trailing ^-1 inverts a single atom.
  auto winv = evaluate_word(z, parse_word(z, "w(a2,1)^-1"));
  CHECK(winv.mat.eq(weyl_element(z, root(0, 1), z->from_int(1)).mat.inverse()));
}

TEST_CASE("errors carry atom indexes and reject bad input") {
  auto tr = make_trunc(1, 2);
  CHECK_THROWS_WITH_AS(evaluate_word(tr, parse_word(tr, "x(a1,1) w(a1,e1)")),
                       doctest::Contains("atom 2"), RingError);
  CHECK_THROWS_AS(parse_word(tr, "q(a1,1)"), RingError);
  CHECK_THROWS_AS(parse_word(tr, "x(a7,1)"), RingError);
  CHECK_THROWS_AS(parse_word(tr, "x(a1,unbound)"), RingError);
  CHECK_THROWS_AS(parse_word(tr, "x(a1)"), RingError);
  CHECK_THROWS_AS(weyl_element(tr, root(1, 0), tr->parse("e1")), RingError);
  CHECK_THROWS_AS(torus_element(tr, root(1, 0), tr->parse("e1")), RingError);
  auto q = make_rationals();
  CHECK_THROWS_AS(multiply(identity_element(q), identity_element(tr)), RingError);
}

TEST_CASE("group element matrices roundtrip through the interchange JSON") {
  auto tr = make_trunc(2, 3);
  auto g = evaluate_word(tr, parse_word(tr, "x(a1,1/2) x(-a5,e1) h(a2,1+e2)"));
  auto j = g.mat.to_json();
  CHECK(j.at("ring").get<std::string>() == tr->name());
  Mat back = Mat::from_json(j);
  CHECK(back.eq(g.mat));
}
