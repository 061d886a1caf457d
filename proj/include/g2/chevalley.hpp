#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2/mat.hpp"
#include "g2/rootsys.hpp"

namespace g2 {

// Chevalley basis data for the 14-dimensional adjoint representation.
// Basis ordering: positions 1..12 are the root vectors in list order
// (a1, -a1, a2, -a2, ..., a6, -a6), positions 13 and 14 are the two
// Cartan generators.
//
// The generators for the simple roots are read off two explicitly pinned
// unipotent matrices (nilpotent logarithm at t = 1); all other root
// generators are defined by Weyl conjugation:
//   X_{a1+a2}      = w2 X_{a1} w2^-1
//   X_{2a1+a2}     = w1 X_{a1+a2} w1^-1
//   X_{3a1+a2}     = w1 X_{a2} w1^-1
//   X_{3a1+2a2}    = w2 X_{3a1+a2} w2^-1
//   X_{-a}         = same scheme applied to X_{-a1}, X_{-a2}
// with X_{-ai} = -wi X_{ai} wi^-1 for the simple roots.
struct ChevalleyData {
  // X_alpha per matrix position 1..12 (stored 0-based).
  std::array<IMat, 12> gen;
  // Divided powers X^j / j! for j = 0..3; all integral, X^4 = 0.
  std::array<std::array<IMat, 4>, 12> divpow;
  // H_i = [X_{ai}, X_{-ai}] for the two simple roots; diagonal.
  std::array<IMat, 2> cartan;
  // w_alpha(1) = x_alpha(s) x_{-alpha}(-s) x_alpha(s) at s = weyl_sign;
  // integral. The simple-root orientations are fixed by the pinned monomial
  // matrices; all others are +1.
  std::array<IMat, 12> weyl_one;
  std::array<int, 12> weyl_sign;

  // Pinned explicit matrices (the construction's ground truth).
  IMat w1, w2, x1_one, x2_one, h1_minus, h2_minus;

  // [H_i, X_beta] = cartan_action[i][pos-1] * X_beta.
  std::array<std::array<int, 12>, 2> cartan_action;
  // [X_alpha, X_-alpha] = m1 H1 + m2 H2.
  std::array<std::pair<int, int>, 12> coroot;
  // [X_alpha, X_beta] = nconst[a][b] X_{alpha+beta} when alpha+beta is a
  // root; sentinel 999 otherwise.
  static constexpr int kNoRoot = 999;
  std::array<std::array<int, 12>, 12> nconst;
};

// Built once on first use; throws std::logic_error naming the violated
// identity if the construction is inconsistent.
const ChevalleyData& chevalley();

const IMat& generator(const Root& r);
const IMat& divided_power(const Root& r, int j);
const IMat& weyl_one(const Root& r);

struct PropertyCheck {
  std::string name;
  bool pass;
  std::string detail;
};

// The six Chevalley-basis properties, each verified over all applicable
// index pairs of the built generators.
std::vector<PropertyCheck> verify_chevalley_properties();

}  // namespace g2
