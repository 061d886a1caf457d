#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2/chevalley.hpp"
#include "g2/mat.hpp"
#include "g2/rootsys.hpp"

namespace g2 {

// One factor of a group word: kind 'x' (root element), 'w' (Weyl element),
// or 'h' (torus element), with its root and ring parameter.
struct WordAtom {
  char kind;
  Root root;
  Value param;
};

// A group element: an invertible 14x14 matrix over a ring, optionally
// carrying the word of generators it was assembled from (the word always
// re-evaluates to the matrix).
struct GroupElement {
  Mat mat;
  std::optional<std::vector<WordAtom>> word;
};

GroupElement identity_element(RingPtr ring);

// x_alpha(t) = sum_j t^j X_alpha^j / j!   (no unit requirement on t)
GroupElement root_element(RingPtr ring, const Root& alpha, const Value& t);

// w_alpha(t) = x_alpha(st) x_{-alpha}(-(st)^-1) x_alpha(st), s the built
// per-root orientation; t must be a unit.
GroupElement weyl_element(RingPtr ring, const Root& alpha, const Value& t);

// h_alpha(t) = w_alpha(t) w_alpha(1)^-1; t must be a unit.
GroupElement torus_element(RingPtr ring, const Root& alpha, const Value& t);

// A pinned integer matrix as a (word-free) group element.
GroupElement from_int_element(RingPtr ring, const IMat& m);

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);
// h g h^-1
GroupElement conjugate(const GroupElement& g, const GroupElement& h);
// g h g^-1 h^-1
GroupElement commutator(const GroupElement& g, const GroupElement& h);

// Parses a whitespace-separated word like "x(a1,1) w(a2,1) h(a1,-1) x(-a3,t)".
// A parameter is looked up in `params` first, then parsed as a ring
// expression. An atom may carry a trailing ^-1 marker.
std::vector<WordAtom> parse_word(RingPtr ring, const std::string& text,
                                 const std::map<std::string, Value>& params = {});

// Left-to-right product; unit violations are reported with the 1-based
// atom index.
GroupElement evaluate_word(RingPtr ring, const std::vector<WordAtom>& word);

std::string word_to_string(RingPtr ring, const std::vector<WordAtom>& word);

}  // namespace g2
