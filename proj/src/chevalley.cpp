#include "g2/chevalley.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace g2 {
namespace {

struct Triple {
  int i, j;
  long long v;
};

IMat from_triples(std::initializer_list<Triple> ts, bool add_identity) {
  IMat r = add_identity ? IMat::identity(14) : IMat(14, 14);
  for (const auto& t : ts) r.at(t.i - 1, t.j - 1) += t.v;
  return r;
}

IMat diag14(std::initializer_list<long long> d) {
  IMat r(14, 14);
  int i = 0;
  for (long long v : d) {
    r.at(i, i) = v;
    ++i;
  }
  if (i != 14) throw std::logic_error("diag14: wrong length");
  return r;
}

[[noreturn]] void fail(const std::string& what) {
  throw std::logic_error("chevalley construction: " + what);
}

// Exact entrywise division; aborts if any entry is not divisible.
IMat int_divide(const IMat& m, long long q, const char* what) {
  IMat r(m.n, m.m);
  for (size_t k = 0; k < m.a.size(); ++k) {
    if (m.a[k] % q != 0) fail(std::string(what) + ": entry not divisible by " + std::to_string(q));
    r.a[k] = m.a[k] / q;
  }
  return r;
}

IMat bracket(const IMat& a, const IMat& b) { return a * b - b * a; }

// log of a unipotent matrix with (M-E)^4 = 0.
IMat nilpotent_log(const IMat& m, const char* what) {
  IMat n = m - IMat::identity(14);
  IMat n2 = n * n, n3 = n2 * n;
  if (!(n3 * n).is_zero()) fail(std::string(what) + ": (M-E)^4 != 0");
  return int_divide(n.scaled(6) - n2.scaled(3) + n3.scaled(2), 6, what);
}

IMat exp_nilpotent(const IMat& x, const char* what) {
  IMat x2 = x * x, x3 = x2 * x;
  if (!(x3 * x).is_zero()) fail(std::string(what) + ": X^4 != 0");
  return int_divide(IMat::identity(14).scaled(6) + x.scaled(6) + x2.scaled(3) + x3, 6, what);
}

IMat int_inverse(const IMat& m) {
  auto q = make_rationals();
  Mat inv = Mat::from_int(q, m).inverse();
  IMat r(m.n, m.m);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.m; ++j) {
      const mpq_class& v = std::get<mpq_class>(inv.at(i, j));
      if (v.get_den() != 1) fail("integer matrix with non-integer inverse");
      r.at(i, j) = v.get_num().get_si();
    }
  return r;
}

IMat conj(const IMat& w, const IMat& winv, const IMat& x) { return w * x * winv; }

bool is_diagonal(const IMat& m) {
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.m; ++j)
      if (i != j && m.at(i, j) != 0) return false;
  return true;
}

// Unique rational coordinates of m in the span of the 14 built basis
// matrices (12 root generators + 2 Cartan generators); nullopt if m is
// outside the span. The basis is verified to have full rank at build time,
// so coordinates are unique.
std::optional<std::array<mpq_class, 14>> decompose_in_basis(const ChevalleyData& d,
                                                            const IMat& m) {
  constexpr int kCols = 14, kRows = 196;
  std::vector<const IMat*> basis;
  for (const auto& g : d.gen) basis.push_back(&g);
  basis.push_back(&d.cartan[0]);
  basis.push_back(&d.cartan[1]);

  std::vector<std::vector<mpq_class>> a(kRows, std::vector<mpq_class>(kCols + 1));
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < kCols; ++c) a[r][c] = static_cast<long>(basis[c]->a[r]);
    a[r][kCols] = static_cast<long>(m.a[r]);
  }
  int row = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < kCols && row < kRows; ++c) {
    int p = -1;
    for (int r = row; r < kRows; ++r)
      if (a[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[row]);
    mpq_class inv = mpq_class(1) / a[row][c];
    for (int j = c; j <= kCols; ++j) a[row][j] *= inv;
    for (int r = 0; r < kRows; ++r) {
      if (r == row || a[r][c] == 0) continue;
      mpq_class f = a[r][c];
      for (int j = c; j <= kCols; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (int r = row; r < kRows; ++r)
    if (a[r][kCols] != 0) return std::nullopt;
  std::array<mpq_class, 14> out{};
  for (int i = 0; i < row; ++i) out[pivot_col[i]] = a[i][kCols];
  return out;
}

std::string pair_name(int ia, int ib) {
  return root_name(root_at_position(ia + 1)) + "," + root_name(root_at_position(ib + 1));
}

// Runs all six structural checks against built data; fills the derived
// tables (cartan_action, coroot, nconst) as it goes.
std::vector<PropertyCheck> run_checks(ChevalleyData& d) {
  std::vector<PropertyCheck> out;
  auto add = [&out](const std::string& name, bool pass, const std::string& detail) {
    out.push_back({name, pass, detail});
  };
  const std::array<Root, 2> simple = {root(1, 0), root(0, 1)};

  // 1. The Cartan generators commute.
  add("cartan_commute", bracket(d.cartan[0], d.cartan[1]).is_zero(), "[H1,H2] = 0");

  // 2. Each root vector is a simultaneous eigenvector of ad H1, ad H2 with
  //    integer eigenvalue <beta, alpha_i^v>.
  {
    bool ok = true;
    std::string detail = "24 eigenvalue identities";
    for (int i = 0; i < 2 && ok; ++i)
      for (int idx = 0; idx < 12; ++idx) {
        Root beta = root_at_position(idx + 1);
        int c = cartan_int(beta, simple[i]);
        d.cartan_action[i][idx] = c;
        if (!(bracket(d.cartan[i], d.gen[idx]) == d.gen[idx].scaled(c))) {
          ok = false;
          detail = "[H" + std::to_string(i + 1) + ",X_" + root_name(beta) + "] != " +
                   std::to_string(c) + "*X_" + root_name(beta);
          break;
        }
      }
    add("cartan_action", ok, detail);
  }

  // 3. [X_alpha, X_-alpha] is the coroot: m_i = n_i * |alpha_i|^2 / |alpha|^2
  //    where alpha = n1*a1 + n2*a2.
  {
    bool ok = true;
    std::string detail = "12 coroot identities";
    for (int idx = 0; idx < 12; ++idx) {
      Root alpha = root_at_position(idx + 1);
      int len2 = length2(alpha);
      if ((2 * alpha.n1) % len2 != 0 || (6 * alpha.n2) % len2 != 0) {
        ok = false;
        detail = "non-integral coroot coefficients for " + root_name(alpha);
        break;
      }
      int m1 = 2 * alpha.n1 / len2, m2 = 6 * alpha.n2 / len2;
      d.coroot[idx] = {m1, m2};
      IMat want = d.cartan[0].scaled(m1) + d.cartan[1].scaled(m2);
      if (!(bracket(d.gen[idx], d.gen[idx ^ 1]) == want)) {
        ok = false;
        detail = "[X_" + root_name(alpha) + ",X_" + root_name(-alpha) + "] != " +
                 std::to_string(m1) + "*H1 + " + std::to_string(m2) + "*H2";
        break;
      }
    }
    add("coroot_bracket", ok, detail);
  }

  // 4. If alpha + beta is not a root (and beta != -alpha), the bracket is 0.
  {
    bool ok = true;
    int count = 0;
    std::string detail;
    for (int ia = 0; ia < 12 && ok; ++ia)
      for (int ib = 0; ib < 12; ++ib) {
        if (ib == (ia ^ 1)) continue;
        Root a = root_at_position(ia + 1), b = root_at_position(ib + 1);
        if (sum(a, b)) continue;
        ++count;
        if (!bracket(d.gen[ia], d.gen[ib]).is_zero()) {
          ok = false;
          detail = "[X_" + pair_name(ia, ib) + "] != 0";
          break;
        }
      }
    if (ok) detail = std::to_string(count) + " vanishing brackets";
    add("nonroot_bracket_vanishes", ok, detail);
  }

  // 5 and 6. When alpha + beta is a root, the bracket is an integer multiple
  //    of X_{alpha+beta} alone: for mixed lengths this includes checking the
  //    X_{alpha+2*beta} coordinate (and every other basis coordinate) is 0.
  for (int mixed = 0; mixed < 2; ++mixed) {
    bool ok = true;
    int count = 0;
    std::string detail;
    for (int ia = 0; ia < 12 && ok; ++ia)
      for (int ib = 0; ib < 12; ++ib) {
        Root a = root_at_position(ia + 1), b = root_at_position(ib + 1);
        if ((length2(a) != length2(b)) != (mixed == 1)) continue;
        auto s = sum(a, b);
        if (!s) continue;
        ++count;
        auto coords = decompose_in_basis(d, bracket(d.gen[ia], d.gen[ib]));
        if (!coords) {
          ok = false;
          detail = "[X_" + pair_name(ia, ib) + "] outside the basis span";
          break;
        }
        int target = position_of(*s) - 1;
        for (int k = 0; k < 14 && ok; ++k) {
          if (k == target) continue;
          if ((*coords)[k] != 0) {
            ok = false;
            detail = "[X_" + pair_name(ia, ib) + "] has a spurious coordinate at slot " +
                     std::to_string(k + 1);
          }
        }
        if (!ok) break;
        const mpq_class& c = (*coords)[target];
        if (c == 0 || c.get_den() != 1 || abs(c.get_num()) > 3) {
          ok = false;
          detail = "[X_" + pair_name(ia, ib) + "] coefficient " + c.get_str() +
                   " is not a nonzero integer of magnitude <= 3";
          break;
        }
        d.nconst[ia][ib] = static_cast<int>(c.get_num().get_si());
      }
    if (ok)
      detail = std::to_string(count) + (mixed ? " mixed-length" : " same-length") +
               " brackets, each a single integer multiple of X_{a+b}";
    add(mixed ? "mixed_length_bracket" : "same_length_bracket", ok, detail);
  }
  return out;
}

struct Built {
  ChevalleyData d;
  std::vector<PropertyCheck> report;
};

Built make_built() {
  Built b;
  ChevalleyData& d = b.d;

  d.w1 = from_triples({{1, 2, -1}, {2, 1, -1}, {3, 9, 1},   {4, 10, 1},  {9, 3, -1},
                       {10, 4, -1}, {5, 7, 1}, {6, 8, 1},   {7, 5, -1},  {8, 6, -1},
                       {11, 11, 1}, {12, 12, 1}, {13, 13, -1}, {14, 14, 1}, {13, 14, 3}},
                      false);
  d.w2 = from_triples({{3, 4, -1}, {4, 3, -1}, {1, 5, 1},   {2, 6, 1},    {5, 1, -1},
                       {6, 2, -1}, {7, 7, 1},  {8, 8, 1},   {9, 11, 1},   {10, 12, 1},
                       {11, 9, -1}, {12, 10, -1}, {13, 13, 1}, {14, 14, -1}, {14, 13, 1}},
                      false);
  d.x1_one = from_triples({{1, 2, -1}, {1, 13, -2}, {1, 14, 3}, {4, 6, -1}, {4, 8, -1},
                           {4, 10, -1}, {5, 3, 3},  {6, 8, 2},  {6, 10, 3}, {7, 3, -3},
                           {7, 5, -2},  {8, 10, 3}, {9, 3, 1},  {9, 5, 1},  {9, 7, -1},
                           {13, 2, 1}},
                          true);
  d.x2_one = from_triples({{2, 6, 1}, {3, 4, -1}, {3, 13, 1}, {3, 14, -2},
                           {5, 1, -1}, {10, 12, 1}, {11, 9, -1}, {14, 4, 1}},
                          true);
  d.h1_minus = diag14({1, 1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1});
  d.h2_minus = diag14({-1, -1, 1, 1, -1, -1, 1, 1, -1, -1, -1, -1, 1, 1});

  IMat w1i = int_inverse(d.w1), w2i = int_inverse(d.w2);

  auto& X = d.gen;
  X[0] = nilpotent_log(d.x1_one, "log x_a1(1)");
  X[2] = nilpotent_log(d.x2_one, "log x_a2(1)");
  X[1] = -conj(d.w1, w1i, X[0]);
  X[3] = -conj(d.w2, w2i, X[2]);
  X[4] = conj(d.w2, w2i, X[0]);
  X[5] = conj(d.w2, w2i, X[1]);
  X[6] = conj(d.w1, w1i, X[4]);
  X[7] = conj(d.w1, w1i, X[5]);
  X[8] = conj(d.w1, w1i, X[2]);
  X[9] = conj(d.w1, w1i, X[3]);
  X[10] = conj(d.w2, w2i, X[8]);
  X[11] = conj(d.w2, w2i, X[9]);

  if (!(exp_nilpotent(X[0], "exp X_a1") == d.x1_one)) fail("exp(log) mismatch for x_a1(1)");
  if (!(exp_nilpotent(X[2], "exp X_a2") == d.x2_one)) fail("exp(log) mismatch for x_a2(1)");

  for (int idx = 0; idx < 12; ++idx) {
    Root r = root_at_position(idx + 1);
    const char* nm = "divided powers";
    IMat x2 = X[idx] * X[idx];
    IMat x3 = x2 * X[idx];
    if (!(x3 * X[idx]).is_zero()) fail("X_" + root_name(r) + "^4 != 0");
    if (is_long(r) && !x3.is_zero()) fail("X_" + root_name(r) + "^3 != 0 for a long root");
    d.divpow[idx][0] = IMat::identity(14);
    d.divpow[idx][1] = X[idx];
    d.divpow[idx][2] = int_divide(x2, 2, nm);
    d.divpow[idx][3] = int_divide(x3, 6, nm);
  }

  // x_alpha(s) for s = +-1, from the divided powers.
  auto eval_one = [&d](int idx, long long s) {
    return d.divpow[idx][0] + d.divpow[idx][2] +
           (d.divpow[idx][1] + d.divpow[idx][3]).scaled(s);
  };
  // w_alpha(1) = x_alpha(s) x_{-alpha}(-s) x_alpha(s) with an orientation
  // s = +-1 per root. The two pinned monomial matrices are authoritative
  // for the simple roots, and they demand opposite orientations (each pin
  // equals the inverse of the other orientation's product); all other roots
  // use s = +1. Orientation only relabels w_alpha(t) as w_alpha(+-t): the
  // torus elements h_alpha(t) and every conjugation action are unchanged.
  d.weyl_sign.fill(1);
  for (int idx = 0; idx < 12; ++idx)
    d.weyl_one[idx] = eval_one(idx, 1) * eval_one(idx ^ 1, -1) * eval_one(idx, 1);
  for (int idx : {0, 2}) {
    const IMat& pin = idx == 0 ? d.w1 : d.w2;
    if (d.weyl_one[idx] == pin) continue;
    d.weyl_sign[idx] = d.weyl_sign[idx ^ 1] = -1;
    d.weyl_one[idx] = eval_one(idx, -1) * eval_one(idx ^ 1, 1) * eval_one(idx, -1);
    d.weyl_one[idx ^ 1] = eval_one(idx ^ 1, -1) * eval_one(idx, 1) * eval_one(idx ^ 1, -1);
    if (!(d.weyl_one[idx] == pin))
      fail(std::string("w_") + root_name(root_at_position(idx + 1)) +
           "(1) does not reproduce the pinned matrix in either orientation");
  }
  if (!(d.weyl_one[0] * d.weyl_one[0] == d.h1_minus)) fail("w1^2 != h_a1(-1)");
  if (!(d.weyl_one[2] * d.weyl_one[2] == d.h2_minus)) fail("w2^2 != h_a2(-1)");

  d.cartan[0] = bracket(X[0], X[1]);
  d.cartan[1] = bracket(X[2], X[3]);
  if (!is_diagonal(d.cartan[0]) || !is_diagonal(d.cartan[1]))
    fail("[X_ai, X_-ai] is not diagonal");

  for (auto& row : d.nconst) row.fill(ChevalleyData::kNoRoot);

  // The 14 built matrices must be linearly independent for coordinate
  // decompositions to be unique.
  {
    std::vector<std::vector<mpq_class>> flat(14, std::vector<mpq_class>(196));
    for (int c = 0; c < 12; ++c)
      for (int k = 0; k < 196; ++k) flat[c][k] = static_cast<long>(d.gen[c].a[k]);
    for (int c = 0; c < 2; ++c)
      for (int k = 0; k < 196; ++k) flat[12 + c][k] = static_cast<long>(d.cartan[c].a[k]);
    if (rank_rational(flat) != 14) fail("basis matrices are linearly dependent");
  }

  b.report = run_checks(d);
  for (const auto& pc : b.report)
    if (!pc.pass) fail("property check failed: " + pc.name + " (" + pc.detail + ")");
  return b;
}

const Built& built() {
  static const Built b = make_built();
  return b;
}

}  // namespace

const ChevalleyData& chevalley() { return built().d; }

const IMat& generator(const Root& r) { return built().d.gen[position_of(r) - 1]; }

const IMat& divided_power(const Root& r, int j) {
  if (j < 0 || j > 3) throw std::out_of_range("divided_power: j must be 0..3");
  return built().d.divpow[position_of(r) - 1][j];
}

const IMat& weyl_one(const Root& r) { return built().d.weyl_one[position_of(r) - 1]; }

std::vector<PropertyCheck> verify_chevalley_properties() { return built().report; }

}  // namespace g2
