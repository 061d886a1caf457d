#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace g2 {

class RingError : public std::runtime_error {
 public:
  explicit RingError(const std::string& msg) : std::runtime_error(msg) {}
};

// Monomial: sparse exponent list, sorted by variable index, exponents nonzero.
struct Mono {
  std::vector<std::pair<int, int>> e;

  long total_degree() const;
  bool operator==(const Mono& o) const { return e == o.e; }
  bool operator<(const Mono& o) const { return e < o.e; }
};

// Sparse polynomial over Q, shared by the truncated and Laurent rings.
// Zero coefficients are never stored.
struct Poly {
  std::map<Mono, mpq_class> terms;

  bool operator==(const Poly& o) const { return terms == o.terms; }
};

using Value = std::variant<mpq_class, std::uint64_t, Poly>;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Commutative coefficient ring with unit, decidable unit test and radical
// membership. Values are plain variants; all arithmetic goes through the
// ring object that created them.
class Ring {
 public:
  virtual ~Ring() = default;

  virtual std::string name() const = 0;
  virtual bool is_local() const = 0;

  Value zero() const { return from_int(0); }
  Value one() const { return from_int(1); }
  virtual Value from_int(long n) const = 0;
  virtual Value from_mpq(const mpq_class& q) const = 0;

  virtual Value add(const Value& a, const Value& b) const = 0;
  virtual Value mul(const Value& a, const Value& b) const = 0;
  virtual Value neg(const Value& a) const = 0;
  Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }

  virtual bool is_zero(const Value& a) const = 0;
  bool eq(const Value& a, const Value& b) const { return is_zero(sub(a, b)); }

  virtual bool is_unit(const Value& a) const = 0;
  virtual bool in_radical(const Value& a) const = 0;
  // Throws RingError("not invertible in this ring") on a non-unit.
  virtual Value inv(const Value& a) const = 0;

  virtual RingPtr residue_ring() const = 0;
  // Ring homomorphism onto the residue field; result lives in residue_ring().
  virtual Value residue(const Value& a) const = 0;

  virtual std::string to_string(const Value& a) const = 0;
  virtual nlohmann::json to_json(const Value& a) const = 0;
  virtual Value from_json(const nlohmann::json& j) const = 0;

  // Arithmetic-expression parser: integer and a/b literals, ring variables
  // by name, + - * ^ and parentheses.
  Value parse(const std::string& text) const;

  // Polynomial-ring surface; plain coefficient rings have no variables.
  virtual int var_count() const { return 0; }
  virtual std::string var_name(int i) const;
  virtual Value var(int i) const;
  virtual Value subst(const Value& v, int var, const Value& repl) const;
  // Coefficient of var^k in v, as a value free of var.
  virtual Value coeff_of(const Value& v, int var, int k) const;

  // Seeded random values for the property suites.
  virtual Value random_value(std::mt19937_64& rng) const = 0;
  virtual Value random_unit(std::mt19937_64& rng) const = 0;
  virtual Value random_radical(std::mt19937_64& rng) const = 0;

  Value pow(const Value& a, long k) const;
};

RingPtr make_rationals();
RingPtr make_zmod(std::uint64_t p, int k);
RingPtr make_trunc(int vars, int degree, std::vector<std::string> names = {});
RingPtr make_laurent(int vars, std::vector<std::string> names = {});

// Parses a CLI ring selector: "q", "zmod:p^k", "trunc:m,d".
RingPtr parse_ring(const std::string& selector);

}  // namespace g2
