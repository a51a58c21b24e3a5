#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tvb {

using Integer = mpz_class;
using Rational = mpq_class;
using ZVector = std::vector<Integer>;
using QVector = std::vector<Rational>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input data violates a documented precondition.
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(what) {}
};

/// An operation needs the Sym-degree-1 certificate and none holds.
class CertificateMissing : public Error {
 public:
  explicit CertificateMissing(const std::string& what) : Error(what) {}
};

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InvalidInput("ragged matrix literal");
      for (long v : row) data_.emplace_back(v);
    }
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InvalidInput("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    return from_rows(rows, rows.empty() ? 0 : rows.front().size());
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }
  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }
  void append_row(const std::vector<T>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw InvalidInput("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Submatrix keeping the listed columns, in the given order.
  Matrix select_cols(const std::vector<std::size_t>& cols) const {
    Matrix s(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols.size(); ++k) s(i, k) = (*this)(i, cols[k]);
    return s;
  }
  Matrix select_rows(const std::vector<std::size_t>& rows) const {
    Matrix s(rows.size(), cols_);
    for (std::size_t k = 0; k < rows.size(); ++k)
      for (std::size_t j = 0; j < cols_; ++j) s(k, j) = (*this)(rows[k], j);
    return s;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;

QMatrix to_rational(const ZMatrix& m);
QVector to_rational(const ZVector& v);
ZVector to_integer(const QVector& v);  // requires integral entries

/// Multiply A by the column vector v.
QVector mul(const QMatrix& a, const QVector& v);
ZVector mul(const ZMatrix& a, const ZVector& v);
QMatrix mul(const QMatrix& a, const QMatrix& b);
ZMatrix mul(const ZMatrix& a, const ZMatrix& b);

Rational dot(const QVector& a, const QVector& b);
Integer dot(const ZVector& a, const ZVector& b);

/// Smallest positive integer multiple of v that is integral, divided by the gcd.
ZVector primitive(const QVector& v);
ZVector primitive(const ZVector& v);
bool is_zero(const QVector& v);
bool is_zero(const ZVector& v);

std::size_t rank(const QMatrix& a);
std::size_t rank(const ZMatrix& a);

/// Basis of the right kernel {v : A v = 0}, one vector per row, integral and primitive.
QMatrix kernel_basis(const QMatrix& a);

/// Basis of the row space (pivot rows after fraction-free elimination).
QMatrix row_space_basis(const QMatrix& a);

Rational determinant(const QMatrix& a);
Integer determinant(const ZMatrix& a);

/// Unique solution x of A x = b when A is square and invertible; nullopt otherwise.
std::optional<QVector> solve_square(const QMatrix& a, const QVector& b);

/// Some solution x of A x = b (free variables set to zero), or nullopt.
std::optional<QVector> solve_any(const QMatrix& a, const QVector& b);

/// Column-style Hermite reduction: A U = [H | 0] with U unimodular.
struct ColumnHermite {
  ZMatrix h;       // rows(A) x rank, lower echelon
  ZMatrix u;       // cols(A) x cols(A), unimodular
  std::size_t rank = 0;
};
ColumnHermite column_hermite(const ZMatrix& a);

/// Z-basis of the integer kernel {v in Z^cols : A v = 0}, one vector per row.
ZMatrix integer_kernel_basis(const ZMatrix& a);

/// True iff the rows of V extend to a basis of Z^cols. Rejects dependent rows.
bool hermite_extends_to_lattice_basis(const ZMatrix& v);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(const QVector& v);
std::string to_string(const ZVector& v);

}  // namespace tvb
