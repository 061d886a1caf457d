#pragma once

#include <array>
#include <optional>
#include <string>

namespace g2 {

// A G2 root in simple-root coordinates: root = n1*a1 + n2*a2.
// index is the signed list position: +i for a_i, -i for -a_i, i = 1..6.
struct Root {
  int n1 = 0;
  int n2 = 0;
  int index = 0;

  bool operator==(const Root& o) const { return n1 == o.n1 && n2 == o.n2; }
  Root operator-() const;
};

// The 12 roots in list order a1, -a1, a2, -a2, ..., a6, -a6.
// Matrix position of the root at list slot s (1-based) is s itself:
// +a_i sits at position 2i-1, -a_i at position 2i.
const std::array<Root, 12>& all_roots();

bool is_root(int n1, int n2);
Root root(int n1, int n2);
Root root_by_index(int signed_index);

// 1-based matrix position (1..12) of a root in the weight-vector basis.
int position_of(const Root& r);
Root root_at_position(int pos);

// Euclidean realization in R^3; coordinates are integers.
std::array<int, 3> euclid(const Root& r);
int length2(const Root& r);
bool is_long(const Root& r);

// Root sum; empty when the sum is zero or not a root.
std::optional<Root> sum(const Root& a, const Root& b);

// Cartan integer <a, b> = 2(a,b)/(b,b).
int cartan_int(const Root& a, const Root& b);

// Reflection w_b(a) = a - <a,b> b.
Root reflect(const Root& a, const Root& b);

// Short parse/format for the CLI: "a1".."a6", "-a1".."-a6".
std::string root_name(const Root& r);
std::optional<Root> parse_root(const std::string& name);

}  // namespace g2
