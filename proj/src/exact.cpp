#include "tvb/exact.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace tvb {

namespace {

Integer lcm_of_denominators(const QVector& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

ZMatrix clear_denominators(const QMatrix& a) {
  ZMatrix z(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Integer l = lcm_of_denominators(a.row(i));
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Rational s = a(i, j) * l;
      z(i, j) = s.get_num();
    }
  }
  return z;
}

struct Echelon {
  ZMatrix m;
  std::vector<std::size_t> pivots;
};

// Bareiss fraction-free row echelon form.
Echelon bareiss(ZMatrix m) {
  Echelon e;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    e.pivots.push_back(c);
    ++r;
  }
  e.m = std::move(m);
  return e;
}

}  // namespace

QMatrix to_rational(const ZMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

QVector to_rational(const ZVector& v) {
  QVector q;
  q.reserve(v.size());
  for (const auto& z : v) q.emplace_back(z);
  return q;
}

ZVector to_integer(const QVector& v) {
  ZVector z;
  z.reserve(v.size());
  for (const auto& q : v) {
    if (q.get_den() != 1) throw InvalidInput("non-integral entry " + q.get_str());
    z.push_back(q.get_num());
  }
  return z;
}

QVector mul(const QMatrix& a, const QVector& v) {
  if (v.size() != a.cols()) throw InvalidInput("dimension mismatch in matrix-vector product");
  QVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

ZVector mul(const ZMatrix& a, const ZVector& v) {
  if (v.size() != a.cols()) throw InvalidInput("dimension mismatch in matrix-vector product");
  ZVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

template <class T>
static Matrix<T> mul_impl(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw InvalidInput("dimension mismatch in matrix product");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

QMatrix mul(const QMatrix& a, const QMatrix& b) { return mul_impl(a, b); }
ZMatrix mul(const ZMatrix& a, const ZMatrix& b) { return mul_impl(a, b); }

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw InvalidInput("dimension mismatch in dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(const ZVector& a, const ZVector& b) {
  if (a.size() != b.size()) throw InvalidInput("dimension mismatch in dot product");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

ZVector primitive(const ZVector& v) {
  Integer g = 0;
  for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g == 0 || g == 1) return v;
  ZVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

ZVector primitive(const QVector& v) {
  const Integer l = lcm_of_denominators(v);
  ZVector z(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    z[i] = s.get_num();
  }
  return primitive(z);
}

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}
bool is_zero(const ZVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; });
}

std::size_t rank(const ZMatrix& a) { return bareiss(a).pivots.size(); }
std::size_t rank(const QMatrix& a) { return rank(clear_denominators(a)); }

QMatrix kernel_basis(const QMatrix& a) {
  const std::size_t cols = a.cols();
  Echelon e = bareiss(clear_denominators(a));
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  QMatrix out(0, cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVector v(cols);
    v[f] = 1;
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
      const std::size_t pc = e.pivots[k];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) s += Rational(e.m(k, j)) * v[j];
      v[pc] = -s / Rational(e.m(k, pc));
    }
    out.append_row(to_rational(primitive(v)));
  }
  return out;
}

QMatrix row_space_basis(const QMatrix& a) {
  Echelon e = bareiss(clear_denominators(a));
  QMatrix out(0, a.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) out.append_row(to_rational(primitive(e.m.row(k))));
  return out;
}

Integer determinant(const ZMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  ZMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Integer t = m(c, c) * m(i, j) - m(i, c) * m(c, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, c) = 0;
    }
    prev = m(c, c);
  }
  return sign * m(n - 1, n - 1);
}

Rational determinant(const QMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("determinant of non-square matrix");
  Rational scale = 1;
  ZMatrix z(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Integer l = lcm_of_denominators(a.row(i));
    scale *= Rational(l);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Rational s = a(i, j) * l;
      z(i, j) = s.get_num();
    }
  }
  return Rational(determinant(z)) / scale;
}

std::optional<QVector> solve_any(const QMatrix& a, const QVector& b) {
  if (b.size() != a.rows()) throw InvalidInput("dimension mismatch in linear solve");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  QMatrix m(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j);
    m(i, cols) = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j <= cols; ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j <= cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j <= cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m(i, cols) != 0) return std::nullopt;
  QVector x(cols);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = m(k, cols);
  return x;
}

std::optional<QVector> solve_square(const QMatrix& a, const QVector& b) {
  if (a.rows() != a.cols() || rank(a) != a.rows()) return std::nullopt;
  return solve_any(a, b);
}

ColumnHermite column_hermite(const ZMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  ZMatrix w = a;
  ZMatrix u = ZMatrix::identity(cols);
  auto combine = [&](ZMatrix& m, std::size_t k, std::size_t j, const Integer& s, const Integer& t,
                     const Integer& x, const Integer& y) {
    // col_k <- s col_k + t col_j ; col_j <- x col_j - y col_k (old values)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Integer ck = m(i, k);
      Integer cj = m(i, j);
      m(i, k) = s * ck + t * cj;
      m(i, j) = x * cj - y * ck;
    }
  };
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows && k < cols; ++i) {
    for (std::size_t j = k + 1; j < cols; ++j) {
      if (w(i, j) == 0) continue;
      if (w(i, k) == 0) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(w(r, k), w(r, j));
        for (std::size_t r = 0; r < cols; ++r) std::swap(u(r, k), u(r, j));
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), w(i, k).get_mpz_t(), w(i, j).get_mpz_t());
      Integer x = w(i, k) / g;
      Integer y = w(i, j) / g;
      combine(w, k, j, s, t, x, y);
      combine(u, k, j, s, t, x, y);
    }
    if (w(i, k) == 0) continue;
    if (w(i, k) < 0) {
      for (std::size_t r = 0; r < rows; ++r) w(r, k) = -w(r, k);
      for (std::size_t r = 0; r < cols; ++r) u(r, k) = -u(r, k);
    }
    ++k;
  }
  ColumnHermite out;
  out.rank = k;
  std::vector<std::size_t> first(k);
  for (std::size_t c = 0; c < k; ++c) first[c] = c;
  out.h = w.select_cols(first);
  out.u = std::move(u);
  return out;
}

ZMatrix integer_kernel_basis(const ZMatrix& a) {
  ColumnHermite ch = column_hermite(a);
  ZMatrix out(0, a.cols());
  for (std::size_t c = ch.rank; c < a.cols(); ++c) out.append_row(ch.u.col(c));
  return out;
}

bool hermite_extends_to_lattice_basis(const ZMatrix& v) {
  ColumnHermite ch = column_hermite(v);
  if (ch.rank != v.rows()) throw InvalidInput("rows are linearly dependent");
  Integer det = 1;
  for (std::size_t i = 0; i < ch.rank; ++i) det *= ch.h(i, i);
  return abs(det) == 1;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

template <class V>
static std::string vec_to_string(const V& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}
std::string to_string(const QVector& v) { return vec_to_string(v); }
std::string to_string(const ZVector& v) { return vec_to_string(v); }

}  // namespace tvb
