#include "g2/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace g2 {

long Mono::total_degree() const {
  long d = 0;
  for (auto& [v, k] : e) d += k;
  return d;
}

std::string Ring::var_name(int) const {
  throw RingError("ring has no variables");
}

Value Ring::var(int) const { throw RingError("ring has no variables"); }

Value Ring::subst(const Value&, int, const Value&) const {
  throw RingError("ring has no variables");
}

Value Ring::coeff_of(const Value&, int, int) const {
  throw RingError("ring has no variables");
}

Value Ring::pow(const Value& a, long k) const {
  if (k < 0) return pow(inv(a), -k);
  Value r = one();
  Value b = a;
  while (k > 0) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

namespace {

std::string mpq_str(const mpq_class& q) { return q.get_str(); }

// ---------------------------------------------------------------- rationals

class QRing final : public Ring, public std::enable_shared_from_this<QRing> {
 public:
  std::string name() const override { return "q"; }
  bool is_local() const override { return true; }

  Value from_int(long n) const override { return mpq_class(n); }
  Value from_mpq(const mpq_class& q) const override { return q; }

  Value add(const Value& a, const Value& b) const override {
    return mpq_class(get(a) + get(b));
  }
  Value mul(const Value& a, const Value& b) const override {
    return mpq_class(get(a) * get(b));
  }
  Value neg(const Value& a) const override { return mpq_class(-get(a)); }

  bool is_zero(const Value& a) const override { return get(a) == 0; }
  bool is_unit(const Value& a) const override { return get(a) != 0; }
  bool in_radical(const Value& a) const override { return get(a) == 0; }

  Value inv(const Value& a) const override {
    if (get(a) == 0) throw RingError("not invertible in this ring");
    return mpq_class(1 / get(a));
  }

  RingPtr residue_ring() const override { return shared_from_this(); }
  Value residue(const Value& a) const override { return a; }

  std::string to_string(const Value& a) const override {
    return mpq_str(get(a));
  }
  nlohmann::json to_json(const Value& a) const override {
    return mpq_str(get(a));
  }
  Value from_json(const nlohmann::json& j) const override {
    return mpq_class(j.get<std::string>());
  }

  Value random_value(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<long> num(-12, 12), den(1, 8);
    return mpq_class(mpq_class(num(rng)) / den(rng));
  }
  Value random_unit(std::mt19937_64& rng) const override {
    for (;;) {
      Value v = random_value(rng);
      if (is_unit(v)) return v;
    }
  }
  Value random_radical(std::mt19937_64&) const override {
    return mpq_class(0);
  }

 private:
  static const mpq_class& get(const Value& v) { return std::get<mpq_class>(v); }
};

// ------------------------------------------------------------------- Z/p^k

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m) {
  // extended Euclid; caller guarantees gcd(a, m) = 1
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(m),
               newr = static_cast<std::int64_t>(a % m);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw RingError("not invertible in this ring");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

class ZModRing final : public Ring,
                       public std::enable_shared_from_this<ZModRing> {
 public:
  ZModRing(std::uint64_t p, int k) : p_(p), k_(k) {
    if (!is_prime_u64(p) || p < 5)
      throw RingError("zmod requires a prime p >= 5");
    if (k < 1) throw RingError("zmod requires exponent k >= 1");
    q_ = 1;
    for (int i = 0; i < k; ++i) {
      if (q_ > UINT64_MAX / 4 / p) throw RingError("zmod modulus too large");
      q_ *= p;
    }
  }

  std::string name() const override {
    return "zmod:" + std::to_string(p_) + "^" + std::to_string(k_);
  }
  bool is_local() const override { return true; }

  Value from_int(long n) const override {
    long r = n % static_cast<long>(q_);
    if (r < 0) r += static_cast<long>(q_);
    return static_cast<std::uint64_t>(r);
  }
  Value from_mpq(const mpq_class& q) const override {
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class m(static_cast<unsigned long>(q_));
    mpz_class nr = num % m;
    if (nr < 0) nr += m;
    mpz_class dr = den % m;
    std::uint64_t n64 = nr.get_ui();
    std::uint64_t d64 = dr.get_ui();
    if (d64 % p_ == 0) throw RingError("denominator not invertible in zmod");
    return mulmod_u64(n64, invmod_u64(d64, q_), q_);
  }

  Value add(const Value& a, const Value& b) const override {
    std::uint64_t s = get(a) + get(b);
    if (s >= q_) s -= q_;
    return s;
  }
  Value mul(const Value& a, const Value& b) const override {
    return mulmod_u64(get(a), get(b), q_);
  }
  Value neg(const Value& a) const override {
    std::uint64_t x = get(a);
    return x == 0 ? x : q_ - x;
  }

  bool is_zero(const Value& a) const override { return get(a) == 0; }
  bool is_unit(const Value& a) const override { return get(a) % p_ != 0; }
  bool in_radical(const Value& a) const override { return get(a) % p_ == 0; }

  Value inv(const Value& a) const override {
    if (!is_unit(a)) throw RingError("not invertible in this ring");
    return invmod_u64(get(a), q_);
  }

  RingPtr residue_ring() const override {
    if (k_ == 1) return shared_from_this();
    return make_zmod(p_, 1);
  }
  Value residue(const Value& a) const override { return get(a) % p_; }

  std::string to_string(const Value& a) const override {
    return std::to_string(get(a));
  }
  nlohmann::json to_json(const Value& a) const override { return get(a); }
  Value from_json(const nlohmann::json& j) const override {
    if (j.is_string()) return from_mpq(mpq_class(j.get<std::string>()));
    return j.get<std::uint64_t>() % q_;
  }

  Value random_value(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<std::uint64_t> d(0, q_ - 1);
    return d(rng);
  }
  Value random_unit(std::mt19937_64& rng) const override {
    for (;;) {
      Value v = random_value(rng);
      if (is_unit(v)) return v;
    }
  }
  Value random_radical(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<std::uint64_t> d(0, q_ / p_ - 1);
    return mulmod_u64(p_, d(rng), q_);
  }

  std::uint64_t modulus() const { return q_; }
  std::uint64_t prime() const { return p_; }

 private:
  static std::uint64_t get(const Value& v) { return std::get<std::uint64_t>(v); }

  std::uint64_t p_, q_;
  int k_;
};

// --------------------------------------------------- polynomial rings

class PolyRingBase : public Ring {
 public:
  PolyRingBase(int vars, std::vector<std::string> names)
      : vars_(vars), names_(std::move(names)) {
    if (vars_ < 0) throw RingError("negative variable count");
    if (names_.empty()) {
      names_.reserve(vars_);
      for (int i = 0; i < vars_; ++i)
        names_.push_back("e" + std::to_string(i + 1));
    }
    if (static_cast<int>(names_.size()) != vars_)
      throw RingError("variable name count mismatch");
  }

  int var_count() const override { return vars_; }
  std::string var_name(int i) const override {
    check_var(i);
    return names_[i];
  }
  Value var(int i) const override {
    check_var(i);
    Poly p;
    p.terms[Mono{{{i, 1}}}] = 1;
    return canon(std::move(p));
  }

  Value from_int(long n) const override { return from_mpq(mpq_class(n)); }
  Value from_mpq(const mpq_class& q) const override {
    Poly p;
    if (q != 0) p.terms[Mono{}] = q;
    return p;
  }

  Value add(const Value& a, const Value& b) const override {
    Poly r = get(a);
    for (auto& [m, c] : get(b).terms) {
      auto it = r.terms.find(m);
      if (it == r.terms.end()) {
        r.terms.emplace(m, c);
      } else {
        it->second += c;
        if (it->second == 0) r.terms.erase(it);
      }
    }
    return canon(std::move(r));
  }

  Value mul(const Value& a, const Value& b) const override {
    Poly r;
    for (auto& [ma, ca] : get(a).terms) {
      for (auto& [mb, cb] : get(b).terms) {
        Mono m = mono_mul(ma, mb);
        if (drop_mono(m)) continue;
        auto it = r.terms.find(m);
        if (it == r.terms.end()) {
          mpq_class c = ca * cb;
          if (c != 0) r.terms.emplace(std::move(m), std::move(c));
        } else {
          it->second += ca * cb;
          if (it->second == 0) r.terms.erase(it);
        }
      }
    }
    return r;
  }

  Value neg(const Value& a) const override {
    Poly r = get(a);
    for (auto& [m, c] : r.terms) c = -c;
    return r;
  }

  bool is_zero(const Value& a) const override { return get(a).terms.empty(); }

  Value subst(const Value& v, int var, const Value& repl) const override {
    check_var(var);
    // Bucket terms by their power of `var` so each replacement power is
    // multiplied in once, and accumulate in place rather than copying the
    // growing result for every term.
    std::map<int, Poly> parts;
    for (auto& [m, c] : get(v).terms) {
      int k = 0;
      Mono stripped;
      for (auto& [vi, ei] : m.e) {
        if (vi == var)
          k = ei;
        else
          stripped.e.push_back({vi, ei});
      }
      parts[k].terms.emplace(std::move(stripped), c);
    }
    const Poly& rp = get(repl);
    Poly out;
    Value rpow = one();
    int cur = 0;
    for (auto& [k, ck] : parts) {
      if (k == 0) {
        add_into(out, ck);
      } else if (k > 0) {
        while (cur < k) {
          rpow = mul(rpow, Value(rp));
          ++cur;
        }
        add_into(out, get(mul(Value(std::move(ck)), rpow)));
      } else {
        add_into(out, get(mul(Value(std::move(ck)), pow_poly(rp, k))));
      }
    }
    return Value(std::move(out));
  }

  Value coeff_of(const Value& v, int var, int k) const override {
    check_var(var);
    Poly r;
    for (auto& [m, c] : get(v).terms) {
      int kk = 0;
      Mono stripped;
      for (auto& [vi, ei] : m.e) {
        if (vi == var)
          kk = ei;
        else
          stripped.e.push_back({vi, ei});
      }
      if (kk == k) r.terms[stripped] = c;
    }
    return r;
  }

  std::string to_string(const Value& a) const override {
    const Poly& p = get(a);
    if (p.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : p.terms) {
      mpq_class cc = c;
      if (first) {
        if (cc < 0) {
          os << "-";
          cc = -cc;
        }
      } else {
        os << (cc < 0 ? " - " : " + ");
        if (cc < 0) cc = -cc;
      }
      first = false;
      bool need_coeff = m.e.empty() || cc != 1;
      if (need_coeff) os << mpq_str(cc);
      bool star = need_coeff;
      for (auto& [vi, ei] : m.e) {
        if (star) os << "*";
        os << names_[vi];
        if (ei != 1) os << "^" << ei;
        star = true;
      }
    }
    return os.str();
  }

  nlohmann::json to_json(const Value& a) const override {
    nlohmann::json out = nlohmann::json::array();
    for (auto& [m, c] : get(a).terms) {
      std::vector<int> exps(vars_, 0);
      for (auto& [vi, ei] : m.e) exps[vi] = ei;
      out.push_back({{"exp", exps}, {"coef", mpq_str(c)}});
    }
    return out;
  }

  Value from_json(const nlohmann::json& j) const override {
    Poly p;
    for (auto& t : j) {
      auto exps = t.at("exp").get<std::vector<int>>();
      if (static_cast<int>(exps.size()) != vars_)
        throw RingError("exponent vector length mismatch");
      Mono m;
      for (int i = 0; i < vars_; ++i)
        if (exps[i] != 0) m.e.push_back({i, exps[i]});
      mpq_class c(t.at("coef").get<std::string>());
      if (c != 0) p.terms[m] = c;
    }
    Value v = canon(std::move(p));
    return v;
  }

 protected:
  // Rings drop monomials they cannot represent (truncation).
  virtual bool drop_mono(const Mono& m) const = 0;

  static const Poly& get(const Value& v) { return std::get<Poly>(v); }

  void check_var(int i) const {
    if (i < 0 || i >= vars_) throw RingError("variable index out of range");
  }

  Value canon(Poly p) const {
    for (auto it = p.terms.begin(); it != p.terms.end();) {
      if (it->second == 0 || drop_mono(it->first))
        it = p.terms.erase(it);
      else
        ++it;
    }
    return p;
  }

  static void add_into(Poly& r, const Poly& b) {
    for (auto& [m, c] : b.terms) {
      auto it = r.terms.find(m);
      if (it == r.terms.end()) {
        r.terms.emplace(m, c);
      } else {
        it->second += c;
        if (it->second == 0) r.terms.erase(it);
      }
    }
  }

  static Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    auto ia = a.e.begin(), ib = b.e.begin();
    while (ia != a.e.end() || ib != b.e.end()) {
      if (ib == b.e.end() || (ia != a.e.end() && ia->first < ib->first)) {
        r.e.push_back(*ia++);
      } else if (ia == a.e.end() || ib->first < ia->first) {
        r.e.push_back(*ib++);
      } else {
        int k = ia->second + ib->second;
        if (k != 0) r.e.push_back({ia->first, k});
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  virtual Value pow_poly(const Poly& base, int k) const {
    if (k < 0) {
      Value iv = inv(Value(base));
      return pow_poly(get(iv), -k);
    }
    Value r = one();
    Value b = base;
    while (k > 0) {
      if (k & 1) r = mul(r, b);
      b = mul(b, b);
      k >>= 1;
    }
    return r;
  }

  int vars_;
  std::vector<std::string> names_;
};

class TruncRing final : public PolyRingBase {
 public:
  TruncRing(int vars, int degree, std::vector<std::string> names)
      : PolyRingBase(vars, std::move(names)), deg_(degree) {
    if (degree < 1) throw RingError("truncation degree must be >= 1");
    q_ = make_rationals();
  }

  std::string name() const override {
    return "trunc:" + std::to_string(vars_) + "," + std::to_string(deg_);
  }
  bool is_local() const override { return true; }

  bool is_unit(const Value& a) const override {
    auto it = get(a).terms.find(Mono{});
    return it != get(a).terms.end() && it->second != 0;
  }
  bool in_radical(const Value& a) const override { return !is_unit(a); }

  // v = c(1 + q) with q nilpotent: 1/v = (1/c) * sum_{j<d} (-q)^j.
  Value inv(const Value& a) const override {
    if (!is_unit(a)) throw RingError("not invertible in this ring");
    mpq_class c = get(a).terms.at(Mono{});
    Value q = mul(a, from_mpq(1 / c));
    q = sub(q, one());
    Value s = one();
    for (int j = 0; j < deg_ - 1; ++j) s = sub(one(), mul(q, s));
    return mul(s, from_mpq(1 / c));
  }

  RingPtr residue_ring() const override { return q_; }
  Value residue(const Value& a) const override {
    auto it = get(a).terms.find(Mono{});
    return it == get(a).terms.end() ? mpq_class(0) : it->second;
  }

  Value random_value(std::mt19937_64& rng) const override {
    Value v = from_mpq(rand_q(rng));
    return add(v, random_radical(rng));
  }
  Value random_unit(std::mt19937_64& rng) const override {
    mpq_class c = rand_q(rng);
    while (c == 0) c = rand_q(rng);
    return add(from_mpq(c), random_radical(rng));
  }
  Value random_radical(std::mt19937_64& rng) const override {
    if (vars_ == 0) return zero();
    std::uniform_int_distribution<int> nterms(0, 2);
    std::uniform_int_distribution<int> pick_var(0, vars_ - 1);
    std::uniform_int_distribution<int> pick_deg(1, std::max(1, deg_ - 1));
    Value v = zero();
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
      Value m = from_mpq(rand_q(rng));
      int d = pick_deg(rng);
      for (int j = 0; j < d; ++j) m = mul(m, var(pick_var(rng)));
      v = add(v, m);
    }
    return v;
  }

  int degree() const { return deg_; }

 protected:
  bool drop_mono(const Mono& m) const override {
    for (auto& [vi, ei] : m.e)
      if (ei < 0) throw RingError("negative exponent in truncated ring");
    return m.total_degree() >= deg_;
  }

 private:
  static mpq_class rand_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    return mpq_class(mpq_class(num(rng)) / den(rng));
  }

  int deg_;
  RingPtr q_;
};

class LaurentRing final : public PolyRingBase {
 public:
  LaurentRing(int vars, std::vector<std::string> names)
      : PolyRingBase(vars, std::move(names)) {}

  std::string name() const override {
    return "laurent:" + std::to_string(vars_);
  }
  bool is_local() const override { return false; }

  // Units are the nonzero single monomials.
  bool is_unit(const Value& a) const override {
    return get(a).terms.size() == 1;
  }
  bool in_radical(const Value&) const override {
    throw RingError("ring is not local");
  }
  Value inv(const Value& a) const override {
    if (!is_unit(a)) throw RingError("not invertible in this ring");
    auto& [m, c] = *get(a).terms.begin();
    Mono im;
    for (auto& [vi, ei] : m.e) im.e.push_back({vi, -ei});
    Poly r;
    r.terms[im] = 1 / c;
    return r;
  }

  RingPtr residue_ring() const override {
    throw RingError("ring is not local");
  }
  Value residue(const Value&) const override {
    throw RingError("ring is not local");
  }

  Value random_value(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> nterms(1, 3);
    Value v = zero();
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) v = add(v, random_unit(rng));
    return v;
  }
  Value random_unit(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<long> num(1, 6);
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<int> ex(-2, 2);
    Poly p;
    Mono m;
    for (int i = 0; i < vars_; ++i) {
      int e = ex(rng);
      if (e != 0) m.e.push_back({i, e});
    }
    mpq_class c(num(rng));
    if (sign(rng)) c = -c;
    p.terms[m] = c;
    return p;
  }
  Value random_radical(std::mt19937_64&) const override {
    throw RingError("ring is not local");
  }

 protected:
  bool drop_mono(const Mono&) const override { return false; }
};

// ------------------------------------------------------------------ parser

struct Parser {
  const Ring& ring;
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  Value parse_expr() {
    Value v = parse_term();
    for (;;) {
      if (eat('+'))
        v = ring.add(v, parse_term());
      else if (eat('-'))
        v = ring.sub(v, parse_term());
      else
        return v;
    }
  }

  Value parse_term() {
    Value v = parse_unary();
    while (eat('*')) v = ring.mul(v, parse_unary());
    return v;
  }

  Value parse_unary() {
    if (eat('-')) return ring.neg(parse_unary());
    return parse_power();
  }

  Value parse_power() {
    Value v = parse_atom();
    if (eat('^')) {
      bool negexp = eat('-');
      long k = parse_uint();
      v = ring.pow(v, negexp ? -k : k);
    }
    return v;
  }

  long parse_uint() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos) throw RingError("expected integer at '" + rest() + "'");
    return std::stol(s.substr(start, pos - start));
  }

  Value parse_atom() {
    skip();
    if (eat('(')) {
      Value v = parse_expr();
      if (!eat(')')) throw RingError("missing ')' in '" + s + "'");
      return v;
    }
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = parse_uint();
      if (eat('/')) {
        long den = parse_uint();
        return ring.from_mpq(mpq_class(num, den));
      }
      return ring.from_int(num);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) ||
              s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      for (int i = 0; i < ring.var_count(); ++i)
        if (ring.var_name(i) == name) return ring.var(i);
      throw RingError("unknown variable '" + name + "'");
    }
    throw RingError("parse error at '" + rest() + "'");
  }

  std::string rest() const { return s.substr(pos); }
};

}  // namespace

Value Ring::parse(const std::string& text) const {
  Parser p{*this, text};
  Value v = p.parse_expr();
  p.skip();
  if (p.pos != text.size())
    throw RingError("trailing input at '" + p.rest() + "'");
  return v;
}

RingPtr make_rationals() { return std::make_shared<QRing>(); }

RingPtr make_zmod(std::uint64_t p, int k) {
  return std::make_shared<ZModRing>(p, k);
}

RingPtr make_trunc(int vars, int degree, std::vector<std::string> names) {
  return std::make_shared<TruncRing>(vars, degree, std::move(names));
}

RingPtr make_laurent(int vars, std::vector<std::string> names) {
  return std::make_shared<LaurentRing>(vars, std::move(names));
}

RingPtr parse_ring(const std::string& selector) {
  if (selector == "q") return make_rationals();
  auto colon = selector.find(':');
  std::string kind = selector.substr(0, colon == std::string::npos ? selector.size() : colon);
  std::string rest = colon == std::string::npos ? "" : selector.substr(colon + 1);
  if (kind == "zmod") {
    auto caret = rest.find('^');
    try {
      std::uint64_t p = std::stoull(rest.substr(0, caret));
      int k = caret == std::string::npos ? 1 : std::stoi(rest.substr(caret + 1));
      return make_zmod(p, k);
    } catch (const std::invalid_argument&) {
      throw RingError("bad zmod selector '" + selector + "'");
    } catch (const std::out_of_range&) {
      throw RingError("bad zmod selector '" + selector + "'");
    }
  }
  if (kind == "trunc") {
    auto comma = rest.find(',');
    try {
      int m = std::stoi(rest.substr(0, comma));
      int d = comma == std::string::npos ? 2 : std::stoi(rest.substr(comma + 1));
      return make_trunc(m, d);
    } catch (const std::invalid_argument&) {
      throw RingError("bad trunc selector '" + selector + "'");
    } catch (const std::out_of_range&) {
      throw RingError("bad trunc selector '" + selector + "'");
    }
  }
  throw RingError("unknown ring selector '" + selector + "'");
}

}  // namespace g2
