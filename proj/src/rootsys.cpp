#include "g2/rootsys.hpp"

#include <stdexcept>

namespace g2 {

namespace {

constexpr std::array<std::pair<int, int>, 6> kPositive = {{
    {1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2},
}};

std::array<Root, 12> build_roots() {
  std::array<Root, 12> r;
  for (int i = 0; i < 6; ++i) {
    r[2 * i] = Root{kPositive[i].first, kPositive[i].second, i + 1};
    r[2 * i + 1] = Root{-kPositive[i].first, -kPositive[i].second, -(i + 1)};
  }
  return r;
}

}  // namespace

const std::array<Root, 12>& all_roots() {
  static const std::array<Root, 12> roots = build_roots();
  return roots;
}

Root Root::operator-() const { return root(-n1, -n2); }

bool is_root(int n1, int n2) {
  for (auto& r : all_roots())
    if (r.n1 == n1 && r.n2 == n2) return true;
  return false;
}

Root root(int n1, int n2) {
  for (auto& r : all_roots())
    if (r.n1 == n1 && r.n2 == n2) return r;
  throw std::invalid_argument("not a G2 root");
}

Root root_by_index(int signed_index) {
  for (auto& r : all_roots())
    if (r.index == signed_index) return r;
  throw std::invalid_argument("root index out of range");
}

int position_of(const Root& r) {
  int i = r.index;
  return i > 0 ? 2 * i - 1 : -2 * i;
}

Root root_at_position(int pos) {
  if (pos < 1 || pos > 12) throw std::invalid_argument("position out of range");
  return all_roots()[pos - 1];
}

std::array<int, 3> euclid(const Root& r) {
  // a1 = e1 - e2, a2 = -2e1 + e2 + e3
  return {r.n1 - 2 * r.n2, -r.n1 + r.n2, r.n2};
}

int length2(const Root& r) {
  auto e = euclid(r);
  return e[0] * e[0] + e[1] * e[1] + e[2] * e[2];
}

bool is_long(const Root& r) { return length2(r) == 6; }

std::optional<Root> sum(const Root& a, const Root& b) {
  int n1 = a.n1 + b.n1, n2 = a.n2 + b.n2;
  if (!is_root(n1, n2)) return std::nullopt;
  return root(n1, n2);
}

int cartan_int(const Root& a, const Root& b) {
  auto ea = euclid(a), eb = euclid(b);
  int dot = ea[0] * eb[0] + ea[1] * eb[1] + ea[2] * eb[2];
  int bb = length2(b);
  return 2 * dot / bb;
}

Root reflect(const Root& a, const Root& b) {
  int c = cartan_int(a, b);
  return root(a.n1 - c * b.n1, a.n2 - c * b.n2);
}

std::string root_name(const Root& r) {
  int i = r.index;
  return (i < 0 ? "-a" : "a") + std::to_string(i < 0 ? -i : i);
}

std::optional<Root> parse_root(const std::string& name) {
  std::string s = name;
  int sign = 1;
  if (!s.empty() && s[0] == '-') {
    sign = -1;
    s = s.substr(1);
  }
  if (s.size() == 2 && s[0] == 'a' && s[1] >= '1' && s[1] <= '6')
    return root_by_index(sign * (s[1] - '0'));
  return std::nullopt;
}

}  // namespace g2
