#include "invkit/linear_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace invkit {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar(0).in(field)) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows, const Field& field) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("matrix rows have unequal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c].in(field);
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n, const Field& field) {
  RationalMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1).in(field);
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  RationalMatrix p(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) p(i, j) += a * o(k, j);
    }
  return p;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
  RationalMatrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
  return s;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const { return *this + o.scaled(-1); }

RationalMatrix RationalMatrix::scaled(const Scalar& c) const {
  RationalMatrix s = *this;
  for (auto& x : s.data_) x *= c;
  return s;
}

Vector RationalMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  Vector out(rows_, Scalar(0).in(field_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

struct Elimination {
  std::vector<std::vector<Scalar>> rows;  // echelon form after run()
  std::vector<std::size_t> pivots;        // pivot column of row k
  int swaps = 0;
  Scalar row_scale = 1;  // product of the factors applied to make rows integral
};

// Fraction-free (Bareiss) elimination. Over Q each row is first scaled to
// integer entries, so every intermediate value is an integer minor of the
// scaled matrix and each division is exact.
Elimination bareiss(const RationalMatrix& m) {
  Elimination e;
  const bool rational = m.field().is_rational();
  e.rows.assign(m.rows(), std::vector<Scalar>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class lcm = 1;
    if (rational)
      for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).value().get_den_mpz_t());
    Scalar f(mpq_class(lcm), m.field().prime);
    e.row_scale *= f;
    for (std::size_t c = 0; c < m.cols(); ++c) e.rows[r][c] = m(r, c) * f;
  }
  Scalar prev = Scalar(1).in(m.field());
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && e.rows[p][c].is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      std::swap(e.rows[p], e.rows[r]);
      ++e.swaps;
    }
    const Scalar piv = e.rows[r][c];
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Scalar lead = e.rows[i][c];
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Scalar v = piv * e.rows[i][j];
        if (!lead.is_zero()) v -= lead * e.rows[r][j];
        e.rows[i][j] = v / prev;
      }
      e.rows[i][c] = Scalar(0).in(m.field());
    }
    prev = piv;
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

std::size_t RationalMatrix::rank() const { return bareiss(*this).pivots.size(); }

std::vector<Vector> RationalMatrix::nullspace() const {
  Elimination e = bareiss(*this);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vector x(cols_, Scalar(0).in(field_));
    x[f] = Scalar(1).in(field_);
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
      std::size_t p = e.pivots[k];
      Scalar s = Scalar(0).in(field_);
      for (std::size_t j = p + 1; j < cols_; ++j)
        if (!x[j].is_zero() && !e.rows[k][j].is_zero()) s += e.rows[k][j] * x[j];
      x[p] = -s / e.rows[k][p];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Scalar RationalMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (rows_ == 0) return Scalar(1).in(field_);
  Elimination e = bareiss(*this);
  if (e.pivots.size() < rows_) return Scalar(0).in(field_);
  Scalar d = e.rows[rows_ - 1][cols_ - 1] / e.row_scale;
  return e.swaps % 2 ? -d : d;
}

bool RationalMatrix::is_invertible() const { return is_square() && rank() == rows_; }

RationalMatrix RationalMatrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix a = *this, inv = identity(n, field_);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw std::domain_error("matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    Scalar s = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Scalar RationalMatrix::minor(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  if (rs.size() != cs.size()) throw std::invalid_argument("minor: row and column sets differ in size");
  RationalMatrix sub(rs.size(), cs.size(), field_);
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) sub(i, j) = (*this)(rs[i], cs[j]);
  return sub.determinant();
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// EchelonBasis

EchelonBasis::EchelonBasis(std::size_t cols, const Field& field)
    : cols_(cols), field_(field), pivot_row_(cols, npos), work_(cols, Scalar(0).in(field)) {}

SparseVector EchelonBasis::reduce_dense(const SparseVector& v) const {
  SparseVector out;
  if (v.empty()) return out;
  for (const auto& [c, x] : v) {
    if (c >= cols_) throw std::out_of_range("echelon: column index out of range");
    work_[c] = x.in(field_);
  }
  for (std::size_t c = v.front().first; c < cols_; ++c) {
    if (work_[c].is_zero()) continue;
    std::size_t r = pivot_row_[c];
    if (r == npos) {
      out.emplace_back(c, work_[c]);
      work_[c] = Scalar(0).in(field_);
      continue;
    }
    const Scalar f = work_[c];
    for (const auto& [j, y] : rows_[r]) work_[j] -= f * y;
  }
  return out;
}

SparseVector EchelonBasis::reduce(const SparseVector& v) const { return reduce_dense(v); }

bool EchelonBasis::insert(const SparseVector& v) {
  SparseVector r = reduce_dense(v);
  if (r.empty()) return false;
  const Scalar inv = r.front().second.inverse();
  for (auto& [c, x] : r) x *= inv;
  pivot_row_[r.front().first] = rows_.size();
  rows_.push_back(std::move(r));
  return true;
}

std::vector<std::size_t> EchelonBasis::pivot_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_row_[c] != npos) out.push_back(c);
  return out;
}

std::vector<std::size_t> EchelonBasis::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_row_[c] == npos) out.push_back(c);
  return out;
}

std::vector<SparseVector> EchelonBasis::kernel() const {
  // Back-substitute to reduced row-echelon form, largest pivot first.
  std::vector<std::size_t> pivots = pivot_columns();
  std::vector<SparseVector> reduced(rows_.size());
  std::vector<std::size_t> reduced_row(cols_, npos);
  for (std::size_t k = pivots.size(); k-- > 0;) {
    std::size_t p = pivots[k];
    const SparseVector& row = rows_[pivot_row_[p]];
    for (const auto& [c, x] : row) work_[c] = x;
    for (const auto& [c, x] : row) {
      if (c == p || work_[c].is_zero() || reduced_row[c] == npos) continue;
      const Scalar f = work_[c];
      for (const auto& [j, y] : reduced[reduced_row[c]]) work_[j] -= f * y;
    }
    SparseVector clean;
    for (std::size_t c = p; c < cols_; ++c) {
      if (work_[c].is_zero()) continue;
      clean.emplace_back(c, work_[c]);
      work_[c] = Scalar(0).in(field_);
    }
    reduced_row[p] = k;
    reduced[k] = std::move(clean);
  }
  std::vector<std::size_t> free = free_columns();
  std::vector<std::size_t> slot(cols_, npos);
  std::vector<SparseVector> basis(free.size());
  for (std::size_t i = 0; i < free.size(); ++i) {
    slot[free[i]] = i;
    basis[i].emplace_back(free[i], Scalar(1).in(field_));
  }
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (const auto& [c, x] : reduced[k])
      if (c != pivots[k]) basis[slot[c]].emplace_back(pivots[k], -x);
  for (auto& v : basis) std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return basis;
}

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t n, const Field& field) {
  Vector out(n, Scalar(0).in(field));
  for (const auto& [c, x] : v) out.at(c) = x;
  return out;
}

}  // namespace invkit
