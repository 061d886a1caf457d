#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "g2/chevalley.hpp"
#include "g2/rootsys.hpp"

using namespace g2;

namespace {

using Dense = std::array<std::array<long long, 14>, 14>;

IMat from_dense(const Dense& d) {
  IMat r(14, 14);
  for (int i = 0; i < 14; ++i)
    for (int j = 0; j < 14; ++j) r.at(i, j) = d[i][j];
  return r;
}

// Expected generator matrices, transcribed independently of the source
// tables (dense rows here, sparse triples there) so a slip in either
// transcription fails the comparison.
const Dense kW1 = {{{0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                    {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 3},
                    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}}};

const Dense kW2 = {{{0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                    {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                    {0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1}}};

const Dense kX1One = {{{1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 3},
                       {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                       {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                       {0, 0, 0, 1, 0, -1, 0, -1, 0, -1, 0, 0, 0, 0},
                       {0, 0, 3, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                       {0, 0, 0, 0, 0, 1, 0, 2, 0, 3, 0, 0, 0, 0},
                       {0, 0, -3, 0, -2, 0, 1, 0, 0, 0, 0, 0, 0, 0},
                       {0, 0, 0, 0, 0, 0, 0, 1, 0, 3, 0, 0, 0, 0},
                       {0, 0, 1, 0, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0},
                       {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                       {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
                       {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
                       {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
                       {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}}};

const Dense kX2One = {{{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                       {0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
                       {0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2},
                       {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                       {-1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                       {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
                       {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
                       {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
                       {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
                       {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0},
                       {0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0},
                       {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
                       {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
                       {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}}};

IMat bracket(const IMat& a, const IMat& b) { return a * b - b * a; }

// Independent Cartan-integer oracle via the Euclidean realization.
int oracle_cartan(const Root& a, const Root& b) {
  auto ea = euclid(a), eb = euclid(b);
  int dot = 0, bb = 0;
  for (int k = 0; k < 3; ++k) {
    dot += ea[k] * eb[k];
    bb += eb[k] * eb[k];
  }
  REQUIRE((2 * dot) % bb == 0);
  return 2 * dot / bb;
}

}  // namespace

TEST_CASE("pinned generator matrices match an independent transcription") {
  const ChevalleyData& d = chevalley();
  CHECK(d.w1 == from_dense(kW1));
  CHECK(d.w2 == from_dense(kW2));
  CHECK(d.x1_one == from_dense(kX1One));
  CHECK(d.x2_one == from_dense(kX2One));
}

TEST_CASE("all six structural property checks pass") {
  auto report = verify_chevalley_properties();
  REQUIRE(report.size() == 6);
  for (const auto& pc : report) {
    INFO(pc.name, ": ", pc.detail);
    CHECK(pc.pass);
  }
}

TEST_CASE("divided powers reassemble the unipotent generators at t = 1") {
  const ChevalleyData& d = chevalley();
  auto at_one = [&d](int idx) {
    return d.divpow[idx][0] + d.divpow[idx][1] + d.divpow[idx][2] + d.divpow[idx][3];
  };
  CHECK(at_one(0) == d.x1_one);
  CHECK(at_one(2) == d.x2_one);
}

TEST_CASE("divided powers vanish exactly at the order set by root length") {
  const ChevalleyData& d = chevalley();
  for (int idx = 0; idx < 12; ++idx) {
    Root r = root_at_position(idx + 1);
    INFO("root ", root_name(r));
    CHECK_FALSE(d.divpow[idx][2].is_zero());
    CHECK(d.divpow[idx][3].is_zero() == is_long(r));
    CHECK((d.divpow[idx][3] * d.gen[idx]).is_zero());
  }
}

TEST_CASE("Weyl elements have order four and permute root spaces up to sign") {
  const ChevalleyData& d = chevalley();
  IMat e = IMat::identity(14);
  CHECK(d.weyl_one[0] == d.w1);
  CHECK(d.weyl_one[2] == d.w2);
  for (int ia = 0; ia < 12; ++ia) {
    const IMat& w = d.weyl_one[ia];
    IMat w2 = w * w;
    CHECK((w2 * w2) == e);
    IMat winv = w2 * w;
    Root alpha = root_at_position(ia + 1);
    for (int ib = 0; ib < 12; ++ib) {
      Root beta = root_at_position(ib + 1);
      Root image = reflect(beta, alpha);
      IMat got = w * d.gen[ib] * winv;
      const IMat& target = d.gen[position_of(image) - 1];
      INFO("w_", root_name(alpha), " on X_", root_name(beta));
      CHECK((got == target || got == -target));
    }
  }
}

TEST_CASE("Cartan generators are diagonal with the Cartan-integer spectrum") {
  const ChevalleyData& d = chevalley();
  const std::array<Root, 2> simple = {root(1, 0), root(0, 1)};
  for (int i = 0; i < 2; ++i) {
    for (int r = 0; r < 14; ++r)
      for (int c = 0; c < 14; ++c)
        if (r != c) CHECK(d.cartan[i].at(r, c) == 0);
    for (int idx = 0; idx < 12; ++idx) {
      Root beta = root_at_position(idx + 1);
      CHECK(d.cartan[i].at(idx, idx) == oracle_cartan(beta, simple[i]));
      CHECK(d.cartan_action[i][idx] == oracle_cartan(beta, simple[i]));
    }
    CHECK(d.cartan[i].at(12, 12) == 0);
    CHECK(d.cartan[i].at(13, 13) == 0);
  }
}

TEST_CASE("coroot brackets follow the length-ratio rule") {
  const ChevalleyData& d = chevalley();
  for (int idx = 0; idx < 12; ++idx) {
    Root alpha = root_at_position(idx + 1);
    int len2 = length2(alpha);
    REQUIRE((2 * alpha.n1) % len2 == 0);
    REQUIRE((6 * alpha.n2) % len2 == 0);
    int m1 = 2 * alpha.n1 / len2, m2 = 6 * alpha.n2 / len2;
    CHECK(d.coroot[idx] == std::make_pair(m1, m2));
    IMat want = d.cartan[0].scaled(m1) + d.cartan[1].scaled(m2);
    CHECK(bracket(d.gen[idx], d.gen[idx ^ 1]) == want);
  }
}

TEST_CASE("structure constants are antisymmetric with chain-length magnitude") {
  const ChevalleyData& d = chevalley();
  int defined = 0;
  for (int ia = 0; ia < 12; ++ia)
    for (int ib = 0; ib < 12; ++ib) {
      Root a = root_at_position(ia + 1), b = root_at_position(ib + 1);
      auto s = sum(a, b);
      if (!s) {
        CHECK(d.nconst[ia][ib] == ChevalleyData::kNoRoot);
        continue;
      }
      ++defined;
      int n = d.nconst[ia][ib];
      REQUIRE(n != ChevalleyData::kNoRoot);
      CHECK(n == -d.nconst[ib][ia]);
      // |N_{a,b}| = p + 1 where p is the largest k with b - k*a a root.
      int p = 0;
      while (is_root(b.n1 - (p + 1) * a.n1, b.n2 - (p + 1) * a.n2)) ++p;
      INFO("pair ", root_name(a), ",", root_name(b));
      CHECK(std::abs(n) == p + 1);
      // Bracket identity restated from the table.
      IMat want = d.gen[position_of(*s) - 1].scaled(n);
      CHECK(bracket(d.gen[ia], d.gen[ib]) == want);
    }
  // Of the 12*11 ordered pairs of distinct-sum roots, exactly 60 sum to a
  // root: 6 decompositions per short root and 4 per long root.
  CHECK(defined == 60);
}

TEST_CASE("generator accessors agree with the table") {
  const ChevalleyData& d = chevalley();
  for (int idx = 0; idx < 12; ++idx) {
    Root r = root_at_position(idx + 1);
    CHECK(generator(r) == d.gen[idx]);
    CHECK(divided_power(r, 2) == d.divpow[idx][2]);
    CHECK(weyl_one(r) == d.weyl_one[idx]);
  }
  CHECK_THROWS(divided_power(root(1, 0), 4));
}
