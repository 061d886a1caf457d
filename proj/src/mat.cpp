#include "g2/mat.hpp"

namespace g2 {

IMat IMat::identity(int k) {
  IMat r(k, k);
  for (int i = 0; i < k; ++i) r.at(i, i) = 1;
  return r;
}

IMat IMat::operator*(const IMat& o) const {
  IMat r(n, o.m);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k) {
      long long v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.m; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

IMat IMat::operator+(const IMat& o) const {
  IMat r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
  return r;
}

IMat IMat::operator-(const IMat& o) const {
  IMat r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
  return r;
}

IMat IMat::operator-() const { return scaled(-1); }

IMat IMat::scaled(long long c) const {
  IMat r = *this;
  for (auto& x : r.a) x *= c;
  return r;
}

IMat IMat::transpose() const {
  IMat r(m, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IMat::is_zero() const {
  for (auto x : a)
    if (x != 0) return false;
  return true;
}

Mat::Mat(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), n_(rows), m_(cols) {
  a_.assign(static_cast<size_t>(n_) * m_, ring_->zero());
}

Mat Mat::identity(RingPtr ring, int k) {
  Mat r(std::move(ring), k, k);
  for (int i = 0; i < k; ++i) r.at(i, i) = r.ring_->one();
  return r;
}

Mat Mat::from_int(RingPtr ring, const IMat& im) {
  Mat r(std::move(ring), im.n, im.m);
  for (int i = 0; i < im.n; ++i)
    for (int j = 0; j < im.m; ++j)
      if (im.at(i, j) != 0) r.at(i, j) = r.ring_->from_int(im.at(i, j));
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (ring_ != o.ring_ && ring_->name() != o.ring_->name())
    throw RingError("ring mismatch in matrix product");
  Mat r(ring_, n_, o.m_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < m_; ++k) {
      const Value& v = at(i, k);
      if (ring_->is_zero(v)) continue;
      for (int j = 0; j < o.m_; ++j) {
        if (ring_->is_zero(o.at(k, j))) continue;
        r.at(i, j) = ring_->add(r.at(i, j), ring_->mul(v, o.at(k, j)));
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_->add(r.a_[i], o.a_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_->sub(r.a_[i], o.a_[i]);
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& x : r.a_) x = ring_->neg(x);
  return r;
}

Mat Mat::scaled(const Value& c) const {
  Mat r = *this;
  for (auto& x : r.a_) x = ring_->mul(x, c);
  return r;
}

Mat Mat::transpose() const {
  Mat r(ring_, m_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < m_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::eq(const Mat& o) const {
  if (n_ != o.n_ || m_ != o.m_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!ring_->eq(a_[i], o.a_[i])) return false;
  return true;
}

bool Mat::is_zero() const {
  for (auto& x : a_)
    if (!ring_->is_zero(x)) return false;
  return true;
}

Mat Mat::inverse() const {
  if (n_ != m_) throw RingError("inverse of non-square matrix");
  Mat w = *this;
  Mat inv = identity(ring_, n_);
  for (int col = 0; col < n_; ++col) {
    int piv = -1;
    for (int i = col; i < n_; ++i)
      if (ring_->is_unit(w.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) throw RingError("matrix not invertible (no unit pivot)");
    if (piv != col)
      for (int j = 0; j < n_; ++j) {
        std::swap(w.at(piv, j), w.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Value d = ring_->inv(w.at(col, col));
    for (int j = 0; j < n_; ++j) {
      w.at(col, j) = ring_->mul(w.at(col, j), d);
      inv.at(col, j) = ring_->mul(inv.at(col, j), d);
    }
    for (int i = 0; i < n_; ++i) {
      if (i == col) continue;
      Value f = w.at(i, col);
      if (ring_->is_zero(f)) continue;
      for (int j = 0; j < n_; ++j) {
        w.at(i, j) = ring_->sub(w.at(i, j), ring_->mul(f, w.at(col, j)));
        inv.at(i, j) = ring_->sub(inv.at(i, j), ring_->mul(f, inv.at(col, j)));
      }
    }
  }
  return inv;
}

// Bird's iteration: X <- mu(X) * A repeated n-1 times; mu replaces the lower
// triangle by zeros and each diagonal entry by minus the sum of the diagonal
// entries below it. det(A) = (-1)^(n-1) * X[0][0].
Value Mat::det() const {
  if (n_ != m_) throw RingError("determinant of non-square matrix");
  if (n_ == 0) return ring_->one();
  Mat x = *this;
  for (int it = 0; it < n_ - 1; ++it) {
    Mat mu(ring_, n_, n_);
    Value tail = ring_->zero();
    for (int i = n_ - 1; i >= 0; --i) {
      mu.at(i, i) = ring_->neg(tail);
      tail = ring_->add(tail, x.at(i, i));
      for (int j = i + 1; j < n_; ++j) mu.at(i, j) = x.at(i, j);
    }
    x = mu * (*this);
  }
  Value d = x.at(0, 0);
  return (n_ % 2 == 0) ? ring_->neg(d) : d;
}

Mat Mat::residue() const {
  RingPtr k = ring_->residue_ring();
  Mat r(k, n_, m_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < m_; ++j) r.at(i, j) = ring_->residue(at(i, j));
  return r;
}

nlohmann::json Mat::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < n_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m_; ++j) row.push_back(ring_->to_json(at(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"ring", ring_->name()}, {"entries", rows}};
}

Mat Mat::from_json(const nlohmann::json& j) {
  return from_json(j, parse_ring(j.at("ring").get<std::string>()));
}

Mat Mat::from_json(const nlohmann::json& j, RingPtr ring) {
  const auto& rows = j.at("entries");
  int n = static_cast<int>(rows.size());
  int m = n > 0 ? static_cast<int>(rows[0].size()) : 0;
  Mat r(ring, n, m);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != m)
      throw RingError("ragged matrix in json input");
    for (int jj = 0; jj < m; ++jj) r.at(i, jj) = ring->from_json(rows[i][jj]);
  }
  return r;
}

int rank_field(const Mat& m) {
  Mat w = m;
  const Ring& R = *m.ring();
  int rank = 0;
  for (int col = 0; col < w.cols() && rank < w.rows(); ++col) {
    int piv = -1;
    for (int i = rank; i < w.rows(); ++i)
      if (!R.is_zero(w.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < w.cols(); ++j) std::swap(w.at(piv, j), w.at(rank, j));
    Value d = R.inv(w.at(rank, col));
    for (int j = col; j < w.cols(); ++j)
      w.at(rank, j) = R.mul(w.at(rank, j), d);
    for (int i = rank + 1; i < w.rows(); ++i) {
      Value f = w.at(i, col);
      if (R.is_zero(f)) continue;
      for (int j = col; j < w.cols(); ++j)
        w.at(i, j) = R.sub(w.at(i, j), R.mul(f, w.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

int rank_rational(std::vector<std::vector<mpq_class>> m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    mpq_class d = 1 / m[rank][col];
    for (int j = col; j < cols; ++j) m[rank][j] *= d;
    for (int i = rank + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      mpq_class f = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<mpq_class>> nullspace_rational(
    const std::vector<std::vector<mpq_class>>& m_in) {
  auto m = m_in;
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    mpq_class d = 1 / m[rank][col];
    for (int j = col; j < cols; ++j) m[rank][j] *= d;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      mpq_class f = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_piv(cols, false);
  for (int c : pivot_col) is_piv[c] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    std::vector<mpq_class> v(cols, mpq_class(0));
    v[free] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Fraction-free elimination; after k steps every entry is a (k+1)x(k+1)
// minor of the original integer matrix, so the division below is exact.
int rank_bareiss(std::vector<std::vector<mpz_class>> m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  mpz_class prev(1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    const mpz_class p = m[rank][col];
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        mpz_class t = p * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

int rank_mod_p(const std::vector<std::vector<long long>>& m_in,
               std::uint64_t p) {
  int rows = static_cast<int>(m_in.size());
  int cols = rows ? static_cast<int>(m_in[0].size()) : 0;
  std::vector<std::vector<std::uint64_t>> m(rows,
                                            std::vector<std::uint64_t>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      long long r = m_in[i][j] % static_cast<long long>(p);
      if (r < 0) r += static_cast<long long>(p);
      m[i][j] = static_cast<std::uint64_t>(r);
    }
  auto mulmod = [p](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  };
  auto invmod = [p, &mulmod](std::uint64_t a) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    std::uint64_t d = invmod(m[rank][col]);
    for (int j = col; j < cols; ++j) m[rank][j] = mulmod(m[rank][j], d);
    for (int i = rank + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      std::uint64_t f = m[i][col];
      for (int j = col; j < cols; ++j) {
        std::uint64_t sub = mulmod(f, m[rank][j]);
        m[i][j] = (m[i][j] + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace g2
