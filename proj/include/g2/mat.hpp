#pragma once

#include <cstdint>
#include <vector>

#include "g2/ring.hpp"

namespace g2 {

// Dense integer matrix, used for the frozen generator matrices and all
// integer-exact precomputation. Entries stay far below 64-bit limits.
struct IMat {
  int n = 0, m = 0;
  std::vector<long long> a;

  IMat() = default;
  IMat(int rows, int cols) : n(rows), m(cols), a(static_cast<size_t>(rows) * cols, 0) {}

  static IMat identity(int k);

  long long& at(int i, int j) { return a[static_cast<size_t>(i) * m + j]; }
  long long at(int i, int j) const { return a[static_cast<size_t>(i) * m + j]; }

  IMat operator*(const IMat& o) const;
  IMat operator+(const IMat& o) const;
  IMat operator-(const IMat& o) const;
  IMat operator-() const;
  IMat scaled(long long c) const;
  IMat transpose() const;
  bool operator==(const IMat& o) const { return n == o.n && m == o.m && a == o.a; }
  bool is_zero() const;
};

// Dense matrix over a coefficient ring.
class Mat {
 public:
  Mat(RingPtr ring, int rows, int cols);
  static Mat identity(RingPtr ring, int k);
  static Mat from_int(RingPtr ring, const IMat& im);

  const RingPtr& ring() const { return ring_; }
  int rows() const { return n_; }
  int cols() const { return m_; }

  Value& at(int i, int j) { return a_[static_cast<size_t>(i) * m_ + j]; }
  const Value& at(int i, int j) const { return a_[static_cast<size_t>(i) * m_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Value& c) const;
  Mat transpose() const;
  bool eq(const Mat& o) const;
  bool is_zero() const;

  // Gauss-Jordan with unit pivots; valid over local rings and fields.
  // Throws RingError if no unit pivot exists in some column.
  Mat inverse() const;

  // Bird's division-free determinant, O(n^4) ring multiplications.
  Value det() const;

  // Entrywise residue map into ring()->residue_ring().
  Mat residue() const;

  nlohmann::json to_json() const;
  static Mat from_json(const nlohmann::json& j);
  static Mat from_json(const nlohmann::json& j, RingPtr ring);

 private:
  RingPtr ring_;
  int n_, m_;
  std::vector<Value> a_;
};

// Exact rank of a matrix over a field ring (rationals or Z/p).
int rank_field(const Mat& m);

// Exact rank over Q by rational Gaussian elimination.
int rank_rational(std::vector<std::vector<mpq_class>> m);

// Basis of the right kernel over Q.
std::vector<std::vector<mpq_class>> nullspace_rational(
    const std::vector<std::vector<mpq_class>>& m);

// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
int rank_bareiss(std::vector<std::vector<mpz_class>> m);

// Rank of an integer matrix reduced mod a prime.
int rank_mod_p(const std::vector<std::vector<long long>>& m, std::uint64_t p);

}  // namespace g2
