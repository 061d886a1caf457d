#include <array>
#include <string>
#include <utility>
#include <vector>

#include "g2/group.hpp"
#include "g2/mat.hpp"
#include "g2/replay.hpp"
#include "g2/ring.hpp"
#include "g2/rootsys.hpp"
#include "replay_internal.hpp"

namespace g2 {

namespace {

// t1(s) = h_{a1}(s^2) h_{a2}(s^3) and t2(s) = h_{a1}(s) h_{a2}(s^2): the
// one-parameter subgroups dual to the fundamental weights, so that the
// diagonal picks up s1^3 s2^2 on the lowest long root vector.
GroupElement coweight_torus(const RingPtr& ring, int which, const Value& s) {
  Root a1 = root_by_index(1), a2 = root_by_index(2);
  if (which == 1)
    return multiply(torus_element(ring, a1, ring->mul(s, s)),
                    torus_element(ring, a2, ring->pow(s, 3)));
  return multiply(torus_element(ring, a1, s),
                  torus_element(ring, a2, ring->mul(s, s)));
}

}  // namespace

Mat prod2_assemble(RingPtr ring, const TorusUnipotentParams& p) {
  GroupElement x = multiply(coweight_torus(ring, 1, p.s1),
                            coweight_torus(ring, 2, p.s2));
  for (int i = 1; i <= 6; ++i)
    x = multiply(x, root_element(ring, root_by_index(i), p.t[i - 1]));
  for (int i = 1; i <= 6; ++i)
    x = multiply(x, root_element(ring, root_by_index(-i), p.u[i - 1]));
  return x.mat.scaled(p.lam);
}

const std::vector<std::pair<int, int>>& prod2_positions() {
  static const std::vector<std::pair<int, int>> kPositions = {
      {12, 12}, {12, 10}, {12, 8}, {12, 6}, {12, 4},
      {12, 14}, {10, 12}, {10, 10}, {10, 8}, {14, 12},
      {4, 12},  {4, 6},   {8, 8},  {14, 6}, {14, 8}};
  return kPositions;
}

TorusUnipotentParams prod2_extract(RingPtr ring, const Mat& X) {
  auto fail = [] {
    throw RingError("input not in the asserted normal form");
  };
  auto at = [&](int r, int c) -> const Value& {
    return X.at(r - 1, c - 1);
  };
  const RingPtr& R = ring;

  // The bottom long-root row carries every u up to the common unit
  // A = lam / (s1^3 s2^2) sitting at (12,12).
  Value A = at(12, 12);
  if (!R->is_unit(A)) fail();
  Value Ai = R->inv(A);
  TorusUnipotentParams p;
  p.u[1] = R->mul(Ai, at(12, 10));
  p.u[2] = R->neg(R->mul(Ai, at(12, 8)));
  p.u[3] = R->neg(R->mul(Ai, at(12, 6)));
  p.u[4] = R->mul(Ai, at(12, 4));
  p.u[5] = R->sub(R->mul(Ai, at(12, 14)), R->mul(p.u[1], p.u[4]));

  // Row 10: (10,10) = B (1 + t2 u2) and (10,12) = B t2 with B = lam/(s1^3 s2),
  // so B, t2, s2 = B/A and then u1 follow.
  Value B = R->sub(at(10, 10), R->mul(at(10, 12), p.u[1]));
  if (!R->is_unit(B)) fail();
  Value Bi = R->inv(B);
  p.t[1] = R->mul(Bi, at(10, 12));
  p.s2 = R->mul(B, Ai);
  p.u[0] = R->add(R->mul(Bi, at(10, 8)), R->mul(p.t[1], p.u[2]));

  // Six remaining unknowns s1, t1, t3, t4, t5, t6: each designated entry is
  // linear in exactly one of them with a unit coefficient, all correction
  // terms lie deeper in the radical, so iteration converges.
  p.s1 = R->one();
  p.t[0] = R->zero();
  p.t[2] = R->zero();
  p.t[3] = R->zero();
  p.t[4] = R->zero();
  p.t[5] = R->zero();
  Value lam = R->one();
  auto mul3 = [&](const Value& a, const Value& b, const Value& c) {
    return R->mul(a, R->mul(b, c));
  };
  for (int pass = 0; pass < 24; ++pass) {
    Value s2sq = R->mul(p.s2, p.s2);
    lam = mul3(A, R->pow(p.s1, 3), s2sq);
    Value li = R->inv(lam);
    const Value &t1 = p.t[0], &t2 = p.t[1], &t3 = p.t[2], &t4 = p.t[3],
                &t5 = p.t[4];
    const Value &u1 = p.u[0], &u3 = p.u[2], &u4 = p.u[3];
    // (14,12) = lam (t2 t5 + 3 t3 t4 + 2 t6)
    Value t6n = R->mul(
        R->inv(R->from_int(2)),
        R->sub(R->mul(li, at(14, 12)),
               R->add(R->mul(t2, t5), mul3(R->from_int(3), t3, t4))));
    // (4,12) s2 = lam (t5 + 3 t1 t4 + 3 t1^2 t3 - t1^3 t2)
    Value t1sq = R->mul(t1, t1), t1cu = mul3(t1, t1, t1);
    Value t5n = R->add(
        R->sub(R->sub(mul3(at(4, 12), p.s2, li),
                      mul3(R->from_int(3), t1, t4)),
               mul3(R->from_int(3), t1sq, t3)),
        R->mul(t1cu, t2));
    // (4,6) s2 = lam (-t1 - 2 t1^2 u1 - t1^3 u1^2
    //                 - u4 (t5 + 3 t1 t4 + 3 t1^2 t3 - t1^3 t2))
    Value bracket = R->add(R->sub(R->add(t5, mul3(R->from_int(3), t1, t4)),
                                  R->mul(t1cu, t2)),
                           mul3(R->from_int(3), t1sq, t3));
    Value t1n = R->neg(R->add(
        R->add(mul3(at(4, 6), p.s2, li),
               R->add(mul3(R->from_int(2), t1sq, u1),
                      mul3(t1cu, u1, u1))),
        R->mul(u4, bracket)));
    // (8,8) = A s1 s2 (1 + 3 t1 u1 + 3 t3 u3 - 3 t1 t2 u3)
    Value corr = R->add(R->sub(R->add(R->one(), mul3(R->from_int(3), t1, u1)),
                               R->mul(R->from_int(3), mul3(t1, t2, u3))),
                        mul3(R->from_int(3), t3, u3));
    Value s1n = R->mul(at(8, 8), R->inv(mul3(A, p.s2, corr)));
    // (14,6) = lam (-t3 + 2 t4 u1 - t5 u1^2
    //               - u4 (t2 t5 + 3 t3 t4 + 2 t6))
    Value sys1 = R->add(R->mul(t2, t5),
                        R->add(mul3(R->from_int(3), t3, t4),
                               R->mul(R->from_int(2), p.t[5])));
    Value t3n = R->sub(R->sub(mul3(R->from_int(2), t4, u1),
                              R->add(R->mul(li, at(14, 6)),
                                     mul3(t5, u1, u1))),
                       R->mul(u4, sys1));
    // (14,8) = lam (t4 - t5 u1 - u3 (t2 t5 + 3 t3 t4 + 2 t6))
    Value t4n = R->add(R->mul(li, at(14, 8)),
                       R->add(R->mul(t5, u1), R->mul(u3, sys1)));
    bool stable = R->eq(t6n, p.t[5]) && R->eq(t5n, p.t[4]) &&
                  R->eq(t1n, p.t[0]) && R->eq(s1n, p.s1) &&
                  R->eq(t3n, p.t[2]) && R->eq(t4n, p.t[3]);
    p.t[5] = t6n;
    p.t[4] = t5n;
    p.t[0] = t1n;
    p.s1 = s1n;
    p.t[2] = t3n;
    p.t[3] = t4n;
    if (stable) break;
  }
  if (!R->is_unit(p.s1)) fail();
  p.lam = mul3(A, R->pow(p.s1, 3), R->mul(p.s2, p.s2));

  if (!prod2_assemble(ring, p).eq(X)) fail();
  return p;
}

Report verify_prod2(std::uint64_t seed, int trials) {
  Report rep;
  rep.suite = "torus-unipotent decomposition";

  // Closed forms of the fifteen designated entries, checked as exact
  // polynomial identities with every parameter an invertible symbol.
  {
    detail::Stopwatch sw;
    std::vector<std::string> names = {"L",  "s1", "s2", "t1", "t2",
                                      "t3", "t4", "t5", "t6", "u1",
                                      "u2", "u3", "u4", "u5", "u6"};
    RingPtr R = make_laurent(15, names);
    TorusUnipotentParams sym;
    sym.lam = R->var(0);
    sym.s1 = R->var(1);
    sym.s2 = R->var(2);
    for (int i = 0; i < 6; ++i) sym.t[i] = R->var(3 + i);
    for (int i = 0; i < 6; ++i) sym.u[i] = R->var(9 + i);
    Mat X = prod2_assemble(R, sym);
    const Value &L = sym.lam, &s1 = sym.s1, &s2 = sym.s2;
    const Value &t1 = sym.t[0], &t2 = sym.t[1], &t3 = sym.t[2],
                &t4 = sym.t[3], &t5 = sym.t[4], &t6 = sym.t[5];
    const Value &u1 = sym.u[0], &u2 = sym.u[1], &u3 = sym.u[2],
                &u4 = sym.u[3], &u5 = sym.u[4], &u6 = sym.u[5];
    Value A = R->mul(L, R->inv(R->mul(R->pow(s1, 3), R->mul(s2, s2))));
    Value B = R->mul(A, s2);
    auto m = [&](std::initializer_list<Value> vs) {
      Value r = R->one();
      for (const Value& v : vs) r = R->mul(r, v);
      return r;
    };
    auto sum = [&](std::initializer_list<Value> vs) {
      Value r = R->zero();
      for (const Value& v : vs) r = R->add(r, v);
      return r;
    };
    Value three = R->from_int(3), two = R->from_int(2);
    std::vector<std::pair<std::pair<int, int>, Value>> forms = {
        {{12, 12}, A},
        {{12, 10}, m({A, u2})},
        {{12, 8}, R->neg(m({A, u3}))},
        {{12, 6}, R->neg(m({A, u4}))},
        {{12, 4}, m({A, u5})},
        {{12, 14}, m({A, sum({u6, m({u2, u5})})})},
        {{10, 12}, m({B, t2})},
        {{10, 10}, m({B, sum({R->one(), m({t2, u2})})})},
        {{10, 8}, m({B, R->sub(u1, m({t2, u3}))})},
        {{14, 12}, m({L, sum({m({t2, t5}), m({three, t3, t4}), m({two, t6})})})},
        {{4, 12},
         m({L, R->inv(s2),
            sum({t5, m({three, t1, t4}), m({three, t1, t1, t3}),
                 R->neg(m({t1, t1, t1, t2}))})})},
        {{4, 6},
         m({L, R->inv(s2),
            R->neg(sum({t1, m({two, t1, t1, u1}), m({t1, t1, t1, u1, u1}),
                        m({u4, sum({t5, m({three, t1, t4}),
                                    m({three, t1, t1, t3}),
                                    R->neg(m({t1, t1, t1, t2}))})})}))})},
        {{8, 8},
         m({L, R->inv(m({s1, s1, s2})),
            sum({R->one(), m({three, t1, u1}), m({three, t3, u3}),
                 R->neg(m({three, t1, t2, u3}))})})},
        {{14, 6},
         m({L, sum({R->neg(t3), m({two, t4, u1}), R->neg(m({t5, u1, u1})),
                    R->neg(m({u4, sum({m({t2, t5}), m({three, t3, t4}),
                                       m({two, t6})})}))})})},
        {{14, 8},
         m({L, sum({t4, R->neg(m({t5, u1})),
                    R->neg(m({u3, sum({m({t2, t5}), m({three, t3, t4}),
                                       m({two, t6})})}))})})},
    };
    bool ok = forms.size() == prod2_positions().size();
    for (size_t i = 0; i < forms.size(); ++i)
      ok = ok && forms[i].first == prod2_positions()[i];
    for (const auto& [pos, rhs] : forms)
      ok = ok && R->eq(X.at(pos.first - 1, pos.second - 1), rhs);
    rep.add("the fifteen designated entries match their closed forms", ok,
            "all parameters invertible symbols", sw.ms());

    // The six remaining designated entries each pin exactly one of
    // s1, t1, t3, t4, t5, t6.  The five t entries are linear in their
    // variable with a coefficient that survives setting every t, u to zero,
    // while the other candidates' coefficients die there; the s1 entry is a
    // unit multiple of s1^-2.
    detail::Stopwatch sw2;
    auto at0 = [&](const Value& v) {
      Value r = v;
      for (int i = 3; i < 15; ++i) r = R->subst(r, i, R->zero());
      for (int i = 0; i < 3; ++i) r = R->subst(r, i, R->one());
      return r;
    };
    const std::array<std::pair<std::pair<int, int>, int>, 6> pins = {{
        {{14, 12}, 8},  // t6
        {{4, 12}, 7},   // t5
        {{4, 6}, 3},    // t1
        {{8, 8}, 1},    // s1
        {{14, 6}, 5},   // t3
        {{14, 8}, 6},   // t4
    }};
    bool pin_ok = true;
    std::string pairs;
    for (const auto& [pos, var] : pins) {
      const Value& e = X.at(pos.first - 1, pos.second - 1);
      if (var == 1) {
        Value c = R->coeff_of(e, 1, -2);
        pin_ok = pin_ok && R->eq(e, R->mul(c, R->pow(s1, -2))) &&
                 !R->is_zero(at0(c));
      } else {
        pin_ok = pin_ok && R->eq(R->subst(e, 1, R->one()), e) &&
                 !R->is_zero(at0(R->coeff_of(e, var, 1)));
      }
      for (const auto& [opos, other] : pins) {
        (void)opos;
        if (other == var || other == 1) continue;
        pin_ok = pin_ok && R->is_zero(at0(R->coeff_of(e, other, 1)));
      }
      if (!pairs.empty()) pairs += ", ";
      pairs += "(" + std::to_string(pos.first) + "," +
               std::to_string(pos.second) + ")->" + names[var];
    }
    rep.add("each system entry pins a distinct variable", pin_ok, pairs,
            sw2.ms());
  }

  {
    detail::Stopwatch sw;
    RingPtr R = make_zmod(5, 2);
    TorusUnipotentParams p;
    p.lam = R->one();
    p.s1 = R->one();
    p.s2 = R->one();
    for (int i = 0; i < 6; ++i) p.t[i] = R->zero();
    for (int i = 0; i < 6; ++i) p.u[i] = R->zero();
    bool ok = prod2_assemble(R, p).eq(Mat::identity(R, 14));
    TorusUnipotentParams q = prod2_extract(R, Mat::identity(R, 14));
    ok = ok && R->eq(q.lam, R->one()) && R->eq(q.s1, R->one()) &&
         R->eq(q.s2, R->one());
    for (int i = 0; i < 6; ++i)
      ok = ok && R->is_zero(q.t[i]) && R->is_zero(q.u[i]);
    rep.add("identity matrix decomposes trivially", ok, "", sw.ms());

    detail::Stopwatch sw2;
    p.u[1] = R->from_int(5);
    Mat X = prod2_assemble(R, p);
    bool ok2 = R->eq(X.at(11, 9), R->from_int(5));
    TorusUnipotentParams q2 = prod2_extract(R, X);
    ok2 = ok2 && R->eq(q2.u[1], R->from_int(5));
    rep.add("a radical u2 sits in entry (12,10) and is recovered", ok2,
            "u2 = 5 over z/25", sw2.ms());
  }

  const std::vector<RingPtr> rings = {make_zmod(5, 2), make_zmod(5, 3),
                                      make_trunc(14, 3)};
  for (const RingPtr& R : rings) {
    detail::Stopwatch sw;
    std::mt19937_64 rng(seed);
    bool ok = true;
    int done = 0;
    for (int trial = 0; trial < trials && ok; ++trial) {
      TorusUnipotentParams p;
      p.lam = R->random_unit(rng);
      p.s1 = R->add(R->one(), R->random_radical(rng));
      p.s2 = R->add(R->one(), R->random_radical(rng));
      for (int i = 0; i < 6; ++i) p.t[i] = R->random_radical(rng);
      for (int i = 0; i < 6; ++i) p.u[i] = R->random_radical(rng);
      Mat X = prod2_assemble(R, p);
      TorusUnipotentParams q = prod2_extract(R, X);
      ok = ok && R->eq(q.lam, p.lam) && R->eq(q.s1, p.s1) &&
           R->eq(q.s2, p.s2);
      for (int i = 0; i < 6; ++i)
        ok = ok && R->eq(q.t[i], p.t[i]) && R->eq(q.u[i], p.u[i]);
      if (ok) ++done;
    }
    rep.add("roundtrip over " + R->name(), ok,
            std::to_string(done) + " trials", sw.ms());
  }
  return rep;
}

}  // namespace g2
