#include <cstdio>
#include <sstream>

#include "replay_internal.hpp"

namespace g2 {

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::add(const std::string& name, bool ok, const std::string& witness,
                 double ms) {
  checks.push_back(Check{name, ok, witness, ms});
}

void Report::merge(const Report& sub) {
  for (const auto& c : sub.checks) {
    Check copy = c;
    copy.name = sub.suite + "/" + c.name;
    checks.push_back(std::move(copy));
  }
}

nlohmann::json Report::to_json(bool include_ms) const {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j = {{"name", c.name},
                        {"status", c.pass ? "pass" : "fail"},
                        {"witness", c.witness}};
    if (include_ms) j["ms"] = c.ms;
    items.push_back(std::move(j));
  }
  return {{"suite", suite}, {"pass", pass()}, {"checks", items}};
}

std::string Report::to_text(bool include_ms) const {
  std::ostringstream os;
  os << suite << ": " << (pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : checks) {
    os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.witness.empty()) os << "  [" << c.witness << "]";
    if (include_ms) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "  (%.1f ms)", c.ms);
      os << buf;
    }
    os << "\n";
  }
  return os.str();
}

namespace detail {

IMat w_inverse(const IMat& w, const IMat& h) { return w * h; }

IMat unipotent_one(const Root& r) {
  IMat m = divided_power(r, 0);
  for (int j = 1; j <= 3; ++j) m = m + divided_power(r, j);
  return m;
}

std::string show(const RingPtr& ring, const Value& v) {
  return ring->to_string(v);
}

}  // namespace detail

}  // namespace g2
