#include "g2/group.hpp"

#include <sstream>
#include <stdexcept>

namespace g2 {
namespace {

void check_same_ring(const GroupElement& a, const GroupElement& b) {
  if (a.mat.ring()->name() != b.mat.ring()->name())
    throw RingError("ring descriptor mismatch: " + a.mat.ring()->name() + " vs " +
                    b.mat.ring()->name());
}

Mat root_matrix(const RingPtr& ring, int idx, const Value& t) {
  const auto& dp = chevalley().divpow[idx];
  Value t2 = ring->mul(t, t);
  Value t3 = ring->mul(t2, t);
  return Mat::from_int(ring, dp[0]) + Mat::from_int(ring, dp[1]).scaled(t) +
         Mat::from_int(ring, dp[2]).scaled(t2) + Mat::from_int(ring, dp[3]).scaled(t3);
}

Mat weyl_matrix(const RingPtr& ring, int idx, const Value& t) {
  const ChevalleyData& d = chevalley();
  Value st = d.weyl_sign[idx] > 0 ? t : ring->neg(t);
  Value minus_inv = ring->neg(ring->inv(st));
  return root_matrix(ring, idx, st) * root_matrix(ring, idx ^ 1, minus_inv) *
         root_matrix(ring, idx, st);
}

// w_alpha(1)^-1 = w_alpha(1)^3 (the representatives have order four).
IMat weyl_one_inverse(int idx) {
  const IMat& w = chevalley().weyl_one[idx];
  return w * w * w;
}

GroupElement atom_element(const RingPtr& ring, const WordAtom& a) {
  switch (a.kind) {
    case 'x':
      return root_element(ring, a.root, a.param);
    case 'w':
      return weyl_element(ring, a.root, a.param);
    case 'h':
      return torus_element(ring, a.root, a.param);
    default:
      throw RingError(std::string("unknown word atom kind '") + a.kind + "'");
  }
}

WordAtom invert_atom(const RingPtr& ring, const WordAtom& a) {
  // x(t)^-1 = x(-t), w(t)^-1 = w(-t), h(t)^-1 = h(t^-1).
  if (a.kind == 'h') return {a.kind, a.root, ring->inv(a.param)};
  return {a.kind, a.root, ring->neg(a.param)};
}

}  // namespace

GroupElement identity_element(RingPtr ring) {
  return {Mat::identity(ring, 14), std::vector<WordAtom>{}};
}

GroupElement root_element(RingPtr ring, const Root& alpha, const Value& t) {
  int idx = position_of(alpha) - 1;
  return {root_matrix(ring, idx, t), std::vector<WordAtom>{{'x', alpha, t}}};
}

GroupElement weyl_element(RingPtr ring, const Root& alpha, const Value& t) {
  if (!ring->is_unit(t))
    throw RingError("weyl_element: parameter " + ring->to_string(t) + " is not a unit");
  int idx = position_of(alpha) - 1;
  return {weyl_matrix(ring, idx, t), std::vector<WordAtom>{{'w', alpha, t}}};
}

GroupElement torus_element(RingPtr ring, const Root& alpha, const Value& t) {
  if (!ring->is_unit(t))
    throw RingError("torus_element: parameter " + ring->to_string(t) + " is not a unit");
  int idx = position_of(alpha) - 1;
  Mat h = weyl_matrix(ring, idx, t) * Mat::from_int(ring, weyl_one_inverse(idx));
  return {std::move(h), std::vector<WordAtom>{{'h', alpha, t}}};
}

GroupElement from_int_element(RingPtr ring, const IMat& m) {
  return {Mat::from_int(ring, m), std::nullopt};
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  check_same_ring(a, b);
  GroupElement r{a.mat * b.mat, std::nullopt};
  if (a.word && b.word) {
    r.word = *a.word;
    r.word->insert(r.word->end(), b.word->begin(), b.word->end());
  }
  return r;
}

GroupElement inverse(const GroupElement& g) {
  GroupElement r{g.mat.inverse(), std::nullopt};
  if (g.word) {
    r.word = std::vector<WordAtom>{};
    for (auto it = g.word->rbegin(); it != g.word->rend(); ++it)
      r.word->push_back(invert_atom(g.mat.ring(), *it));
  }
  return r;
}

GroupElement conjugate(const GroupElement& g, const GroupElement& h) {
  return multiply(multiply(h, g), inverse(h));
}

GroupElement commutator(const GroupElement& g, const GroupElement& h) {
  return multiply(multiply(g, h), multiply(inverse(g), inverse(h)));
}

std::vector<WordAtom> parse_word(RingPtr ring, const std::string& text,
                                 const std::map<std::string, Value>& params) {
  std::vector<WordAtom> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    bool inverted = false;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      inverted = true;
      tok = tok.substr(0, tok.size() - 3);
    }
    size_t open = tok.find('(');
    size_t comma = tok.find(',', open == std::string::npos ? 0 : open);
    if (open == std::string::npos || comma == std::string::npos || tok.back() != ')')
      throw RingError("malformed word atom '" + tok + "' (expected kind(root,param))");
    std::string kind = tok.substr(0, open);
    if (kind != "x" && kind != "w" && kind != "h")
      throw RingError("unknown atom kind '" + kind + "' in '" + tok + "'");
    std::string root_text = tok.substr(open + 1, comma - open - 1);
    auto r = parse_root(root_text);
    if (!r) throw RingError("unknown root '" + root_text + "' in '" + tok + "'");
    std::string param_text = tok.substr(comma + 1, tok.size() - comma - 2);
    Value param;
    if (auto it = params.find(param_text); it != params.end())
      param = it->second;
    else
      param = ring->parse(param_text);
    WordAtom atom{kind[0], *r, param};
    out.push_back(inverted ? invert_atom(ring, atom) : atom);
  }
  return out;
}

GroupElement evaluate_word(RingPtr ring, const std::vector<WordAtom>& word) {
  GroupElement acc = identity_element(ring);
  for (size_t i = 0; i < word.size(); ++i) {
    try {
      acc = multiply(acc, atom_element(ring, word[i]));
    } catch (const RingError& err) {
      throw RingError("atom " + std::to_string(i + 1) + ": " + err.what());
    }
  }
  return acc;
}

std::string word_to_string(RingPtr ring, const std::vector<WordAtom>& word) {
  std::string out;
  for (const auto& a : word) {
    if (!out.empty()) out += ' ';
    out += a.kind;
    out += '(';
    out += root_name(a.root);
    out += ',';
    out += ring->to_string(a.param);
    out += ')';
  }
  return out;
}

}  // namespace g2
