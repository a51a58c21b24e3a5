#include "doctest.h"
#include "tvb/exact.hpp"

using namespace tvb;

TEST_CASE("rank of small matrices") {
  CHECK(rank(QMatrix(3, 3)) == 0);
  CHECK(rank(QMatrix::identity(4)) == 4);
  CHECK(rank(QMatrix{{1, 1, 1}}) == 1);
  CHECK(rank(QMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("kernel of a hyperplane") {
  QMatrix a{{1, 1, 1}};
  QMatrix k = kernel_basis(a);
  CHECK(k.rows() == 2);
  for (std::size_t i = 0; i < k.rows(); ++i) CHECK(is_zero(mul(a, k.row(i))));
  CHECK(kernel_basis(QMatrix::identity(3)).rows() == 0);
}

TEST_CASE("kernel of a 2x5 matrix multiplies back to zero") {
  QMatrix a{{1, 2, 0, -3, 5}, {0, 1, 4, 1, -2}};
  a(1, 3) = Rational(1, 3);
  QMatrix k = kernel_basis(a);
  CHECK(k.rows() == 3);
  for (std::size_t i = 0; i < k.rows(); ++i) CHECK(is_zero(mul(a, k.row(i))));
  CHECK(rank(k) == 3);
}

TEST_CASE("lattice basis extension") {
  CHECK(hermite_extends_to_lattice_basis(ZMatrix{{1, 0}, {0, 1}}));
  CHECK_FALSE(hermite_extends_to_lattice_basis(ZMatrix{{2, 0}}));
  CHECK(hermite_extends_to_lattice_basis(ZMatrix{{1, 1}, {0, 1}}));
  CHECK(hermite_extends_to_lattice_basis(ZMatrix{{2, 3, 0}}));
  CHECK_FALSE(hermite_extends_to_lattice_basis(ZMatrix{{1, 1, 0}, {1, -1, 0}}));
  CHECK_THROWS_AS(hermite_extends_to_lattice_basis(ZMatrix{{1, 2}, {2, 4}}), InvalidInput);
}

TEST_CASE("column hermite form is a unimodular reduction") {
  ZMatrix a{{2, 4, 6}, {1, 3, 5}};
  auto h = column_hermite(a);
  CHECK(h.rank == 2);
  CHECK(determinant(h.u) * determinant(h.u) == 1);
  ZMatrix au = mul(a, h.u);
  for (std::size_t i = 0; i < 2; ++i) CHECK(au(i, 2) == 0);
  ZMatrix ker = integer_kernel_basis(a);
  CHECK(ker.rows() == 1);
  CHECK(is_zero(mul(a, ker.row(0))));
}

TEST_CASE("determinants and solves") {
  CHECK(determinant(ZMatrix{{1, 2}, {3, 4}}) == -2);
  CHECK(determinant(QMatrix{{0, 1}, {1, 0}}) == -1);
  auto x = solve_square(QMatrix{{2, 0}, {0, 4}}, QVector{1, 1});
  REQUIRE(x);
  CHECK((*x)[1] == Rational(1, 4));
  CHECK_FALSE(solve_square(QMatrix{{1, 1}, {1, 1}}, QVector{1, 2}));
  auto y = solve_any(QMatrix{{1, 1}, {1, 1}}, QVector{2, 2});
  REQUIRE(y);
  CHECK((*y)[0] + (*y)[1] == 2);
  CHECK_FALSE(solve_any(QMatrix{{1, 1}, {1, 1}}, QVector{1, 2}));
}
