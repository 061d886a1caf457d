#include <sstream>
#include <stdexcept>

#include "g2/rootsys.hpp"
#include "replay_internal.hpp"

namespace g2 {

namespace {

using detail::kLongPositions;
using detail::kShortPositions;

// --- small LinForm algebra used to write the templates down readably ---

LinForm Z() { return LinForm{}; }

LinForm V(int one_based_var) {
  LinForm f;
  f.coef[one_based_var - 1] = 1;
  return f;
}

LinForm operator*(const mpq_class& c, const LinForm& f) {
  LinForm g;
  g.c0 = c * f.c0;
  for (const auto& [k, v] : f.coef) {
    mpq_class cv = c * v;
    if (cv != 0) g.coef[k] = cv;
  }
  return g;
}

LinForm operator+(const LinForm& a, const LinForm& b) {
  LinForm g = a;
  g.c0 += b.c0;
  for (const auto& [k, v] : b.coef) {
    mpq_class cv = g.coef.count(k) ? g.coef[k] + v : v;
    if (cv == 0)
      g.coef.erase(k);
    else
      g.coef[k] = cv;
  }
  return g;
}

LinForm operator-(const LinForm& f) { return mpq_class(-1) * f; }

void put_block(TemplateMatrix& T, const std::vector<int>& pos,
               const std::vector<std::vector<LinForm>>& rows) {
  for (size_t i = 0; i < pos.size(); ++i)
    for (size_t j = 0; j < pos.size(); ++j)
      T.entry[pos[i] - 1][pos[j] - 1] = rows[i][j];
}

void name_params(TemplateMatrix& T, const char* prefix, int count) {
  T.names.resize(count);
  T.residues.assign(count, 0);
  for (int i = 0; i < count; ++i)
    T.names[i] = prefix + std::to_string(i + 1);
}

}  // namespace

Mat TemplateMatrix::evaluate(RingPtr ring,
                             const std::vector<Value>& vals) const {
  if (static_cast<int>(vals.size()) != params())
    throw std::invalid_argument("template " + label + " expects " +
                                std::to_string(params()) + " values");
  Mat M(ring, 14, 14);
  for (int i = 0; i < 14; ++i)
    for (int j = 0; j < 14; ++j) {
      const LinForm& f = entry[i][j];
      Value acc = ring->from_mpq(f.c0);
      for (const auto& [k, c] : f.coef)
        acc = ring->add(acc, ring->mul(ring->from_mpq(c), vals[k]));
      M.at(i, j) = acc;
    }
  return M;
}

Mat TemplateMatrix::at_residues(RingPtr ring) const {
  std::vector<Value> vals(residues.size());
  for (size_t i = 0; i < residues.size(); ++i)
    vals[i] = ring->from_int(static_cast<long>(residues[i]));
  return evaluate(ring, vals);
}

const TemplateMatrix& template_x1() {
  static const TemplateMatrix T = [] {
    TemplateMatrix t;
    t.label = "x1-shape";
    name_params(t, "y", 52);
    for (int n : {1, 6, 11, 16, 18, 20, 21, 30, 34, 36, 39, 48})
      t.residues[n - 1] = 1;
    t.residues[2 - 1] = -1;
    t.residues[32 - 1] = -1;
    t.residues[4 - 1] = -2;
    t.residues[50 - 1] = -2;
    t.residues[37 - 1] = 3;
    t.residues[52 - 1] = -3;

    const mpq_class h32(3, 2);
    put_block(
        t, {1, 2, 11, 12, 13, 14},
        {{V(1), V(2), V(3), -V(3), V(4), -(h32 * V(4))},
         {V(5), V(6), V(7), -V(7), V(8), -(h32 * V(8))},
         {V(9), V(10), V(11), V(12), V(13), V(14)},
         {-V(9), -V(10), V(12), V(11), -V(13), mpq_class(3) * V(13) + V(14)},
         {V(15), V(16), V(17), mpq_class(3) * V(19) + -V(17), V(18),
          h32 * (V(20) + -V(18))},
         {Z(), Z(), V(19), V(19), Z(), V(20)}});
    put_block(t, {3, 4, 5, 6, 7, 8, 9, 10},
              {{V(21), V(22), V(23), V(24), -V(25), -V(26), -V(27), -V(28)},
               {V(29), V(30), V(31), V(32), -V(33), -V(34), -V(35), -V(36)},
               {V(37), V(38), V(39), V(40), -V(41), -V(42), -V(43), -V(44)},
               {V(45), V(46), V(47), V(48), -V(49), -V(50), -V(51), -V(52)},
               {V(52), V(51), V(50), V(49), V(48), V(47), V(46), V(45)},
               {V(44), V(43), V(42), V(41), V(40), V(39), V(38), V(37)},
               {V(36), V(35), V(34), V(33), V(32), V(31), V(30), V(29)},
               {V(28), V(27), V(26), V(25), V(24), V(23), V(22), V(21)}});
    return t;
  }();
  return T;
}

const TemplateMatrix& template_x2() {
  static const TemplateMatrix T = [] {
    TemplateMatrix t;
    t.label = "x2-shape";
    name_params(t, "z", 52);
    for (int n : {1, 10, 12, 21, 30, 32, 33, 36, 38, 43, 50, 52})
      t.residues[n - 1] = 1;
    t.residues[34 - 1] = -1;

    put_block(t, {1, 2, 5, 6, 9, 10, 11, 12},
              {{V(1), V(2), V(3), V(4), V(5), V(6), V(7), V(8)},
               {V(9), V(10), V(11), V(12), V(13), V(14), V(15), V(16)},
               {-V(12), -V(11), V(10), V(9), -V(16), -V(15), V(14), V(13)},
               {-V(4), -V(3), V(2), V(1), -V(8), -V(7), V(6), V(5)},
               {V(17), V(18), V(19), V(20), V(21), V(22), V(23), V(24)},
               {V(25), V(26), V(27), V(28), V(29), V(30), V(31), V(32)},
               {-V(28), -V(27), V(26), V(25), -V(32), -V(31), V(30), V(29)},
               {-V(20), -V(19), V(18), V(17), -V(24), -V(23), V(22), V(21)}});
    put_block(t, {3, 4, 7, 8, 13, 14},
              {{V(33), V(34), -V(35), V(35), V(36), mpq_class(-2) * V(36)},
               {V(37), V(38), -V(39), V(39), V(40), mpq_class(-2) * V(40)},
               {V(41), V(42), V(43), V(44), V(45), V(46)},
               {-V(41), -V(42), V(44), V(43), V(45) + V(46), -V(46)},
               {Z(), Z(), V(47) + V(48), V(47) + V(48),
                mpq_class(2) * V(49) + V(50), Z()},
               {V(51), V(52), V(47), V(48), V(49), V(50)}});
    return t;
  }();
  return T;
}

const TemplateMatrix& template_torus() {
  static const TemplateMatrix T = [] {
    TemplateMatrix t;
    t.label = "torus-shape";
    name_params(t, "d", 14);
    for (int n : {1, 4, 5, 7, 9, 11, 13, 14}) t.residues[n - 1] = 1;

    auto E = [&t](int i, int j) -> LinForm& { return t.entry[i - 1][j - 1]; };
    E(1, 1) = V(1);
    E(1, 2) = V(2);
    E(2, 1) = V(3);
    E(2, 2) = V(4);
    E(3, 3) = V(5);
    E(10, 10) = V(5);
    E(4, 4) = V(7);
    E(9, 9) = V(7);
    E(5, 5) = V(9);
    E(8, 8) = V(9);
    E(6, 6) = V(11);
    E(7, 7) = V(11);
    E(11, 11) = V(13);
    E(12, 12) = V(13);
    E(14, 14) = V(13);
    E(13, 13) = V(14);
    E(13, 14) = mpq_class(3, 2) * (V(13) + -V(14));
    E(7, 3) = V(12);
    E(6, 10) = -V(12);
    E(8, 4) = V(10);
    E(5, 9) = -V(10);
    E(9, 5) = V(8);
    E(4, 8) = -V(8);
    E(10, 6) = V(6);
    E(3, 7) = -V(6);
    return t;
  }();
  return T;
}

std::pair<int, int> involution_split(const GroupElement& a) {
  RingPtr ring = a.mat.ring();
  Mat E = Mat::identity(ring, 14);
  if (!(a.mat * a.mat).eq(E)) throw RingError("involution_split: a*a != E");
  Value half = ring->inv(ring->from_int(2));
  Mat e = (a.mat + E).scaled(half);
  if (!(e * e).eq(e)) throw RingError("involution_split: idempotent failure");
  int fixed = rank_field(e.residue());
  return {fixed, 14 - fixed};
}

IMat weyl_hblock(const Root& alpha) {
  bool simple = (alpha.n1 == 1 && alpha.n2 == 0) ||
                (alpha.n1 == 0 && alpha.n2 == 1);
  if (!simple)
    throw std::invalid_argument("weyl_hblock: simple roots only");
  const IMat& w = weyl_one(alpha);
  IMat b(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) b.at(i, j) = w.at(12 + i, 12 + j);
  return b;
}

namespace {

// First entry where two matrices differ, rendered 1-based; "" when equal.
std::string first_diff(const Mat& A, const Mat& B) {
  RingPtr ring = A.ring();
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      if (!ring->eq(A.at(i, j), B.at(i, j)))
        return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  return "";
}

// Exact dimension of the joint commutant of a set of integer matrices
// inside the full 14x14 matrix algebra.
int commutant_dimension(const std::vector<IMat>& constraints) {
  std::vector<std::vector<mpz_class>> rows;
  for (const IMat& C : constraints)
    for (int i = 0; i < 14; ++i)
      for (int j = 0; j < 14; ++j) {
        std::vector<mpz_class> row(196, mpz_class(0));
        for (int p = 0; p < 14; ++p)
          row[i * 14 + p] += static_cast<long>(C.at(p, j));
        for (int q = 0; q < 14; ++q)
          row[q * 14 + j] -= static_cast<long>(C.at(i, q));
        rows.push_back(std::move(row));
      }
  return 196 - rank_bareiss(rows);
}

// The matrix of template coefficients, one column per parameter.
int template_rank(const TemplateMatrix& T) {
  std::vector<std::vector<mpq_class>> rows;
  for (int i = 0; i < 14; ++i)
    for (int j = 0; j < 14; ++j) {
      std::vector<mpq_class> row(T.params(), mpq_class(0));
      for (const auto& [k, c] : T.entry[i][j].coef) row[k] = c;
      rows.push_back(std::move(row));
    }
  return rank_rational(rows);
}

std::vector<Mat> template_directions(const TemplateMatrix& T, RingPtr ring) {
  std::vector<Mat> dirs;
  for (int k = 0; k < T.params(); ++k) {
    std::vector<Value> vals(T.params(), ring->zero());
    vals[k] = ring->one();
    dirs.push_back(T.evaluate(ring, vals));
  }
  return dirs;
}

bool directions_commute(const TemplateMatrix& T,
                        const std::vector<IMat>& constraints, RingPtr ring,
                        std::string* witness) {
  auto dirs = template_directions(T, ring);
  for (size_t ci = 0; ci < constraints.size(); ++ci) {
    Mat C = Mat::from_int(ring, constraints[ci]);
    for (int k = 0; k < T.params(); ++k)
      if (!(dirs[k] * C).eq(C * dirs[k])) {
        *witness = T.names[k] + " vs constraint " + std::to_string(ci + 1);
        return false;
      }
  }
  return true;
}

// Reads the would-be d-parameters off a diagonal-plus-Cartan matrix and asks
// the torus template to reproduce it.
bool fits_torus_shape(RingPtr ring, const Mat& M) {
  std::vector<Value> vals = {M.at(0, 0),   M.at(0, 1), M.at(1, 0), M.at(1, 1),
                             M.at(2, 2),   M.at(9, 5), M.at(3, 3), M.at(8, 4),
                             M.at(4, 4),   M.at(7, 3), M.at(5, 5), M.at(6, 2),
                             M.at(10, 10), M.at(12, 12)};
  return template_torus().evaluate(ring, vals).eq(M);
}

void add_shape_checks(Report& rep, const char* tag, const TemplateMatrix& T,
                      const std::vector<IMat>& constraints, int expected_dim,
                      const IMat* residue_target, RingPtr ring) {
  {
    detail::Stopwatch sw;
    std::string w;
    bool ok = directions_commute(T, constraints, ring, &w);
    rep.add(std::string(tag) + ": parameter directions commute with the constraints",
            ok, ok ? "" : w, sw.ms());
  }
  {
    detail::Stopwatch sw;
    int r = template_rank(T);
    rep.add(std::string(tag) + ": independent parameter directions", r == T.params(),
            "rank " + std::to_string(r) + " of " + std::to_string(T.params()),
            sw.ms());
  }
  {
    detail::Stopwatch sw;
    int dim = commutant_dimension(constraints);
    rep.add(std::string(tag) + ": constraint commutant dimension", dim == expected_dim,
            "dim " + std::to_string(dim) + ", expected " +
                std::to_string(expected_dim),
            sw.ms());
  }
  if (residue_target) {
    detail::Stopwatch sw;
    Mat got = T.at_residues(ring);
    Mat want = Mat::from_int(ring, *residue_target);
    std::string diff = first_diff(got, want);
    rep.add(std::string(tag) + ": residues reproduce the generator", diff.empty(),
            diff.empty() ? "" : "first difference at " + diff, sw.ms());
  }
}

}  // namespace

Report verify_block_shapes() {
  Report rep;
  rep.suite = "block-shapes";
  const ChevalleyData& d = chevalley();
  RingPtr q = make_rationals();

  IMat w1i = detail::w_inverse(d.w1, d.h1_minus);
  IMat w2i = detail::w_inverse(d.w2, d.h2_minus);
  // The reflection along the highest root, written as a Weyl word, and its
  // counterpart for the highest short root.
  IMat w_high_long = d.w2 * d.w1 * d.w2 * w1i * w2i;
  IMat w_high_short = d.w1 * d.w2 * d.w1 * w2i * w1i;

  add_shape_checks(rep, "x1 shape", template_x1(), {d.h1_minus, w_high_long},
                   52, &d.x1_one, q);
  add_shape_checks(rep, "x2 shape", template_x2(), {d.h2_minus, w_high_short},
                   52, &d.x2_one, q);

  Root a6 = root(3, 2);
  add_shape_checks(rep, "torus shape", template_torus(),
                   {d.h1_minus, d.h2_minus, weyl_one(a6),
                    detail::unipotent_one(a6)},
                   14, nullptr, q);
  {
    detail::Stopwatch sw;
    bool ok = template_torus().at_residues(q).eq(Mat::identity(q, 14));
    rep.add("torus shape: residues give the identity", ok, "", sw.ms());
  }
  {
    detail::Stopwatch sw;
    // Only h_{a1}(t) instances are asserted to have this shape: they commute
    // with the four constraints since <a6, a1> = 0, while h_{a2}(t) does not.
    Root a1 = root(1, 0);
    Mat h5 = torus_element(q, a1, q->from_int(5)).mat;
    Mat h7 = torus_element(q, a1, q->from_mpq(mpq_class(-1, 7))).mat;
    bool ok = fits_torus_shape(q, h5) && fits_torus_shape(q, h7) &&
              fits_torus_shape(q, h5 * h7);
    rep.add("torus shape: torus elements fit the shape", ok, "", sw.ms());
  }
  {
    detail::Stopwatch sw;
    IMat b1 = weyl_hblock(root(1, 0));
    IMat b2 = weyl_hblock(root(0, 1));
    IMat want1(2, 2), want2(2, 2);
    want1.at(0, 0) = -1;
    want1.at(0, 1) = 3;
    want1.at(1, 1) = 1;
    want2.at(0, 0) = 1;
    want2.at(1, 0) = 1;
    want2.at(1, 1) = -1;
    bool ok = b1 == want1 && b2 == want2 &&
              b1 * b1 == IMat::identity(2) && b2 * b2 == IMat::identity(2);
    rep.add("Cartan blocks of the simple Weyl elements", ok, "", sw.ms());
  }
  {
    detail::Stopwatch sw;
    auto s0 = involution_split(identity_element(q));
    auto s1 = involution_split(from_int_element(q, d.h1_minus));
    auto s2 = involution_split(from_int_element(q, d.h2_minus));
    bool ok = s0 == std::make_pair(14, 0) && s1 == std::make_pair(6, 8) &&
              s2 == std::make_pair(6, 8);
    std::ostringstream os;
    os << "identity (" << s0.first << "," << s0.second << "), h1 ("
       << s1.first << "," << s1.second << "), h2 (" << s2.first << ","
       << s2.second << ")";
    rep.add("involution splits of the identity and the torus involutions", ok,
            os.str(), sw.ms());
  }
  return rep;
}

namespace {

Mat block_mix(RingPtr ring, const Value& c, const std::array<int, 6>& pos) {
  Mat M = Mat::identity(ring, 14);
  for (int idx = 0; idx < 6; idx += 2) {
    int p = pos[idx] - 1, r = pos[idx + 1] - 1;
    M.at(p, r) = c;
    M.at(r, p) = c;
  }
  return M;
}

Mat diag_scale(RingPtr ring, const Value& a, const std::array<int, 6>& pos) {
  Mat M = Mat::identity(ring, 14);
  for (int p : pos) M.at(p - 1, p - 1) = a;
  return M;
}

}  // namespace

Report basis_change_commute() {
  Report rep;
  rep.suite = "basis-change";
  const ChevalleyData& d = chevalley();
  RingPtr R = make_laurent(4, {"c1", "c2", "a", "b"});
  Mat W1 = Mat::from_int(R, d.w1), W2 = Mat::from_int(R, d.w2);

  std::array<Mat, 4> C = {block_mix(R, R->var(0), kLongPositions),
                          block_mix(R, R->var(1), kShortPositions),
                          diag_scale(R, R->var(2), kLongPositions),
                          diag_scale(R, R->var(3), kShortPositions)};
  const char* names[4] = {"C1 (long-block mix)", "C2 (short-block mix)",
                          "C3 (long rescale)", "C4 (short rescale)"};

  for (int i = 0; i < 4; ++i) {
    detail::Stopwatch sw;
    bool ok = (C[i] * W1).eq(W1 * C[i]) && (C[i] * W2).eq(W2 * C[i]);
    rep.add(std::string(names[i]) + " commutes with w1 and w2", ok, "",
            sw.ms());
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      detail::Stopwatch sw;
      bool ok = (C[i] * C[j]).eq(C[j] * C[i]);
      rep.add(std::string(names[i]) + " commutes with " + names[j], ok, "",
              sw.ms());
    }
  {
    detail::Stopwatch sw;
    bool ok = block_mix(R, R->zero(), kLongPositions)
                  .eq(Mat::identity(R, 14));
    rep.add("C1 at parameter 0 is the identity", ok, "", sw.ms());
  }
  return rep;
}

Report verify_relations(RingPtr ring, std::uint64_t seed, int trials) {
  Report rep;
  rep.suite = "relations(" + ring->name() + ")";
  std::mt19937_64 rng(seed);

  {
    detail::Stopwatch sw;
    bool ok = true;
    std::string w;
    for (int n = 0; n < trials && ok; ++n) {
      Root alpha = root_at_position(1 + static_cast<int>(rng() % 12));
      Value s = ring->random_value(rng), t = ring->random_value(rng);
      Mat lhs =
          root_element(ring, alpha, s).mat * root_element(ring, alpha, t).mat;
      Mat rhs = root_element(ring, alpha, ring->add(s, t)).mat;
      if (!lhs.eq(rhs)) {
        ok = false;
        w = "trial " + std::to_string(n) + " root " + root_name(alpha);
      }
    }
    rep.add("additivity x_a(s) x_a(t) = x_a(s+t)", ok, w, sw.ms());
  }
  {
    detail::Stopwatch sw;
    bool ok = true;
    std::string w;
    for (int n = 0; n < trials && ok; ++n) {
      Root alpha = root_at_position(1 + static_cast<int>(rng() % 12));
      Value t = ring->random_value(rng);
      auto we = weyl_element(ring, alpha, ring->from_int(1));
      Mat lhs = we.mat * root_element(ring, alpha, t).mat * we.mat.inverse();
      Mat rhs = root_element(ring, -alpha, ring->neg(t)).mat;
      if (!lhs.eq(rhs)) {
        ok = false;
        w = "trial " + std::to_string(n) + " root " + root_name(alpha);
      }
    }
    rep.add("Weyl conjugation w_a(1) x_a(t) w_a(1)^-1 = x_{-a}(-t)", ok, w,
            sw.ms());
  }
  {
    detail::Stopwatch sw;
    bool ok = true;
    std::string w;
    for (int n = 0; n < trials && ok; ++n) {
      Root alpha = root_at_position(1 + static_cast<int>(rng() % 12));
      Root beta = root_at_position(1 + static_cast<int>(rng() % 12));
      Value u = ring->random_unit(rng);
      Value t = ring->random_value(rng);
      auto h = torus_element(ring, alpha, u);
      Mat lhs = h.mat * root_element(ring, beta, t).mat * h.mat.inverse();
      Value scale = ring->pow(u, cartan_int(beta, alpha));
      Mat rhs = root_element(ring, beta, ring->mul(scale, t)).mat;
      if (!lhs.eq(rhs)) {
        ok = false;
        w = "trial " + std::to_string(n) + " " + root_name(alpha) + "," +
            root_name(beta);
      }
    }
    rep.add("torus action h_a(u) x_b(t) h_a(u)^-1 = x_b(u^<b,a> t)", ok, w,
            sw.ms());
  }
  {
    detail::Stopwatch sw;
    bool ok = true;
    std::string w;
    for (int n = 0; n < trials && ok; ++n) {
      Root alpha = root_at_position(1 + static_cast<int>(rng() % 12));
      Value s = ring->random_unit(rng), t = ring->random_unit(rng);
      Mat lhs = torus_element(ring, alpha, s).mat *
                torus_element(ring, alpha, t).mat;
      Mat rhs = torus_element(ring, alpha, ring->mul(s, t)).mat;
      if (!lhs.eq(rhs)) {
        ok = false;
        w = "trial " + std::to_string(n) + " root " + root_name(alpha);
      }
    }
    rep.add("torus multiplicativity h_a(s) h_a(t) = h_a(st)", ok, w, sw.ms());
  }
  return rep;
}

Report verify_relations(std::uint64_t seed, int trials) {
  Report rep;
  rep.suite = "relations";
  for (const auto& ring :
       {make_zmod(5, 2), make_zmod(7, 2), make_trunc(4, 3)})
    rep.merge(verify_relations(ring, seed, trials));
  return rep;
}

Report verify_conditions() {
  Report rep;
  rep.suite = "conditions";
  const ChevalleyData& d = chevalley();
  RingPtr q = make_rationals();
  Mat E = Mat::identity(q, 14);
  Mat X1 = Mat::from_int(q, d.x1_one), X2 = Mat::from_int(q, d.x2_one);
  Mat W1 = Mat::from_int(q, d.w1), W2 = Mat::from_int(q, d.w2);
  Mat H1 = Mat::from_int(q, d.h1_minus), H2 = Mat::from_int(q, d.h2_minus);
  Mat W1i = Mat::from_int(q, detail::w_inverse(d.w1, d.h1_minus));
  Mat W2i = Mat::from_int(q, detail::w_inverse(d.w2, d.h2_minus));

  Mat X3 = W2 * X1 * W2i;   // image root a1+a2
  Mat X4 = W1 * X3 * W1i;   // image root 2a1+a2
  Mat X5 = W1 * X2 * W1i;   // image root 3a1+a2
  Mat X6 = W2 * X5 * W2i;   // image root 3a1+2a2

  auto chk = [&](const char* name, const Mat& lhs, const Mat& rhs) {
    detail::Stopwatch sw;
    std::string diff = first_diff(lhs, rhs);
    rep.add(name, diff.empty(),
            diff.empty() ? "" : "sides differ at " + diff, sw.ms());
  };

  chk("Con1: x2 commutes with the a1+a2 image", X2 * X3, X3 * X2);
  chk("Con2: (h1 x2)^2 = E", H1 * X2 * H1 * X2, E);
  chk("Con3: (h2 x1)^2 = E", H2 * X1 * H2 * X1, E);
  chk("Con4: x2 commutes with the 2a1+a2 image", X2 * X4, X4 * X2);
  chk("Con5: braid of x2 with the 3a1+a2 image", X2 * X5, X6 * X5 * X2);
  chk("Con6: x1 commutes with the 3a1+a2 image", X5 * X1, X1 * X5);
  chk("Con7: braid of x1 with the 2a1+a2 image", X1 * X4,
      X5 * X5 * X5 * X4 * X1);

  Mat rhs8 = X1 * W1 * X1 * W1 * W1 * W1 * X1;
  bool literal = (W1 * W1 * W1).eq(rhs8);
  bool rewritten = W1.eq(rhs8);
  rep.add("Con8: holds in at least one recorded form", literal || rewritten,
          std::string("literal (w1^3 = x1 w1 x1 w1^3 x1): ") +
              (literal ? "holds" : "fails") +
              "; rewritten (w1 = x1 w1 x1 w1^3 x1): " +
              (rewritten ? "holds" : "fails"));
  return rep;
}

}  // namespace g2
