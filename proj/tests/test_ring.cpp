#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2/ring.hpp"

using namespace g2;

TEST_CASE("truncated ring drops high-degree products") {
  auto R = make_trunc(1, 2);
  Value a = R->parse("1+e1");
  Value b = R->parse("1-e1");
  CHECK(R->eq(R->mul(a, b), R->one()));
}

TEST_CASE("modular arithmetic in Z/25") {
  auto R = make_zmod(5, 2);
  CHECK(R->eq(R->mul(R->from_int(13), R->from_int(2)), R->one()));
  CHECK(R->eq(R->inv(R->from_int(2)), R->from_int(13)));
  CHECK_THROWS_AS(R->inv(R->from_int(5)), RingError);
}

TEST_CASE("rational arithmetic") {
  auto R = make_rationals();
  Value half = R->from_mpq(mpq_class(1, 2));
  Value third = R->from_mpq(mpq_class(1, 3));
  CHECK(R->to_string(R->add(half, third)) == "5/6");
}

TEST_CASE("truncated geometric series inverse") {
  auto R = make_trunc(1, 3);
  Value v = R->parse("1+e1");
  CHECK(R->eq(R->inv(v), R->parse("1-e1+e1^2")));
  CHECK(R->eq(R->mul(v, R->inv(v)), R->one()));
}

TEST_CASE("radical membership") {
  auto R2 = make_trunc(1, 2);
  CHECK(R2->in_radical(R2->var(0)));
  auto R49 = make_zmod(7, 2);
  CHECK(R49->is_unit(R49->from_int(3)));
}

TEST_CASE("residue map of Z/25 hits Z/5") {
  auto R = make_zmod(5, 2);
  auto k = R->residue_ring();
  CHECK(k->name() == "zmod:5^1");
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Value a = R->random_value(rng);
    Value x = R->add(R->one(), R->mul(R->from_int(5), a));
    CHECK(k->eq(R->residue(x), k->one()));
  }
}

TEST_CASE("local rings split into units and radical") {
  std::mt19937_64 rng(7);
  for (auto R : {make_zmod(5, 2), make_zmod(7, 2), make_trunc(3, 3)}) {
    for (int i = 0; i < 1000; ++i) {
      Value x = R->random_value(rng);
      CHECK(R->is_unit(x) != R->in_radical(x));
    }
  }
}

TEST_CASE("inverse is exact on random units") {
  std::mt19937_64 rng(13);
  for (auto R : {make_rationals(), make_zmod(5, 3), make_trunc(2, 3)}) {
    for (int i = 0; i < 1000; ++i) {
      Value u = R->random_unit(rng);
      CHECK(R->eq(R->mul(u, R->inv(u)), R->one()));
    }
  }
}

TEST_CASE("radical elements are nilpotent of order d") {
  std::mt19937_64 rng(17);
  auto R = make_trunc(3, 3);
  for (int i = 0; i < 200; ++i) {
    Value x = R->random_radical(rng);
    CHECK(R->in_radical(x));
    CHECK(R->is_zero(R->pow(x, 3)));
  }
}

TEST_CASE("residue commutes with ring operations") {
  std::mt19937_64 rng(19);
  for (auto R : {make_zmod(5, 2), make_trunc(2, 2)}) {
    auto k = R->residue_ring();
    for (int i = 0; i < 1000; ++i) {
      Value a = R->random_value(rng), b = R->random_value(rng);
      CHECK(k->eq(R->residue(R->add(a, b)), k->add(R->residue(a), R->residue(b))));
      CHECK(k->eq(R->residue(R->mul(a, b)), k->mul(R->residue(a), R->residue(b))));
    }
  }
}

TEST_CASE("ring selectors parse") {
  CHECK(parse_ring("q")->name() == "q");
  CHECK(parse_ring("zmod:5^2")->name() == "zmod:5^2");
  CHECK(parse_ring("zmod:11")->name() == "zmod:11^1");
  CHECK(parse_ring("trunc:100,2")->name() == "trunc:100,2");
  CHECK(parse_ring("trunc:4")->name() == "trunc:4,2");
  CHECK_THROWS_AS(parse_ring("zmod:4^2"), RingError);
  CHECK_THROWS_AS(parse_ring("zmod:3^2"), RingError);
  CHECK_THROWS_AS(parse_ring("frac:1"), RingError);
}

TEST_CASE("value serialization roundtrips") {
  std::mt19937_64 rng(23);
  for (auto R : {make_rationals(), make_zmod(5, 2), make_trunc(3, 3)}) {
    for (int i = 0; i < 100; ++i) {
      Value v = R->random_value(rng);
      CHECK(R->eq(v, R->from_json(R->to_json(v))));
    }
  }
}

TEST_CASE("expression parser handles polynomials") {
  auto R = make_trunc(2, 3);
  Value v = R->parse("(1 + 2*e1)*(1 - e2) - 1");
  Value w = R->add(R->mul(R->from_int(2), R->var(0)), R->neg(R->var(1)));
  w = R->sub(w, R->mul(R->mul(R->from_int(2), R->var(0)), R->var(1)));
  CHECK(R->eq(v, w));
  CHECK(R->to_string(R->parse("3/2*e1^2")) == "3/2*e1^2");
  CHECK_THROWS_AS(R->parse("nope"), RingError);
}

TEST_CASE("laurent units invert exactly") {
  auto R = make_laurent(2, {"d1", "d2"});
  Value m = R->parse("3*d1^2*d2^-1");
  CHECK(R->is_unit(m));
  CHECK(R->eq(R->mul(m, R->inv(m)), R->one()));
  CHECK_FALSE(R->is_unit(R->parse("1+d1")));
  CHECK_THROWS_AS(R->inv(R->parse("1+d1")), RingError);
  CHECK_FALSE(R->is_local());
}
