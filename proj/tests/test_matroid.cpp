#include "doctest.h"
#include "tvb/matroid.hpp"

using namespace tvb;

namespace {
Matroid from(QMatrix rows, std::size_t m) { return Matroid(LinearIdealMatrix(std::move(rows), m)); }
}  // namespace

TEST_CASE("hyperplane ideal") {
  Matroid u23 = from(QMatrix{{1, 1, 1}}, 3);
  CHECK(u23.rank() == 2);
  CHECK(u23.is_uniform());
  CHECK(u23.loops().empty());
  CHECK(u23.coloops().empty());
  REQUIRE(u23.circuits().size() == 1);
  CHECK(u23.circuits()[0].support == IndexSet{0, 1, 2});
  CHECK(u23.circuits()[0].coefficients == QVector{1, 1, 1});
  CHECK(u23.closure(IndexSet{0}) == IndexSet{0});
  CHECK(u23.maximal_proper_flats() == std::vector<Flat>{IndexSet{0}, IndexSet{1}, IndexSet{2}});
}

TEST_CASE("identity ideal has only loops") {
  Matroid m = from(QMatrix::identity(3), 3);
  CHECK(m.rank() == 0);
  CHECK(m.loops() == m.ground());
  CHECK(m.has_unique_basis());
}

TEST_CASE("split ideal circuits") {
  Matroid m = from(QMatrix{{1, 0, 1, 0}, {0, 1, 0, 1}}, 4);
  std::vector<IndexSet> supports;
  for (const auto& c : m.circuits()) supports.push_back(c.support);
  CHECK(supports == std::vector<IndexSet>{IndexSet{0, 2}, IndexSet{1, 3}});
}

TEST_CASE("U24 circuits are all triples") {
  Matroid m = from(QMatrix{{1, 1, 1, 1}, {0, 1, 2, 3}}, 4);
  CHECK(m.rank() == 2);
  CHECK(m.circuits().size() == 4);
  for (const auto& c : m.circuits()) CHECK(c.support.size() == 3);
}

TEST_CASE("coloop of a binomial ideal") {
  Matroid m = from(QMatrix{{0, 1, 1}}, 3);
  CHECK(m.coloops() == IndexSet{0});
  CHECK(m.closure(IndexSet{1}) == IndexSet{1, 2});
  CHECK_FALSE(m.has_unique_basis());
  CHECK(m.bases().size() == 2);
  CHECK(m.maximal_proper_flats() == std::vector<Flat>{IndexSet{0}, IndexSet{1, 2}});
}

TEST_CASE("sym square of the tangent plane ideal has rank 3") {
  // variables y12, y13, y23, y11, y22, y33
  Matroid m = from(QMatrix{{1, 1, 0, 1, 0, 0}, {1, 0, 1, 0, 1, 0}, {0, 1, 1, 0, 0, 1}}, 6);
  CHECK(m.rank() == 3);
  auto flag = flag_from_order(m, m.bases().front().elements());
  CHECK(flag.chain.size() == 3);
  CHECK(is_maximal_flag(m, flag));
}

TEST_CASE("tropical membership") {
  Matroid m = from(QMatrix{{1, 1, 1}}, 3);
  CHECK(trop_membership(m, QVector{3, 0, 0}));
  CHECK_FALSE(trop_membership(m, QVector{0, 1, 2}));
  CHECK(trop_membership(m, QVector{5, 5, 5}));
}

TEST_CASE("apartments of the hyperplane") {
  Matroid m = from(QMatrix{{1, 1, 1}}, 3);
  CHECK(apartment_membership(m, IndexSet{0, 1}, QVector{0, 0, 0}));
  CHECK(apartment_membership(m, IndexSet{0, 1}, QVector{3, 0, 0}));
  CHECK_FALSE(apartment_membership(m, IndexSet{1, 2}, QVector{3, 0, 0}));
  Matroid b = from(QMatrix{{0, 1, 1}}, 3);
  CHECK_THROWS_AS(apartment_membership(b, IndexSet{1, 2}, QVector{0, 0, 0}), InvalidInput);
}

TEST_CASE("initial matroids") {
  Matroid m = from(QMatrix{{1, 1, 1}}, 3);
  Matroid same = initial_matroid(m, QVector{0, 0, 0});
  CHECK(same.ideal().coeffs.rows() == 1);
  CHECK(same.circuits()[0].support == IndexSet{0, 1, 2});
  Matroid in = initial_matroid(m, QVector{9, 0, 0});
  REQUIRE(in.circuits().size() == 1);
  CHECK(in.circuits()[0].support == IndexSet{1, 2});
  CHECK(in.rank() == 2);
  Matroid diag = initial_matroid(m, QVector{1, 1, 0});
  CHECK(diag.loops() == IndexSet{2});
  CHECK(diag.has_unique_basis());
}

TEST_CASE("flags and indicator matrices") {
  Matroid m = from(QMatrix{{1, 1, 1}}, 3);
  auto f = flag_from_order(m, {0, 1});
  CHECK(f.chain == std::vector<Flat>{IndexSet{0, 1, 2}, IndexSet{0}});
  CHECK(flag_indicator_matrix(f, 3) == ZMatrix{{1, 1, 1}, {1, 0, 0}});
  CHECK_THROWS_AS(flag_from_order(from(QMatrix{{0, 1, 1}}, 3), {1, 2}), InvalidInput);
  Matroid free3 = Matroid(LinearIdealMatrix(QMatrix(0, 3), 3));
  auto full = flag_from_order(free3, {0, 1, 2});
  CHECK(flag_indicator_matrix(full, 3) == ZMatrix{{1, 1, 1}, {1, 1, 0}, {1, 0, 0}});
  Matroid rank1 = from(QMatrix{{1, -1}}, 2);
  CHECK(flag_indicator_matrix(flag_from_order(rank1, {0}), 2) == ZMatrix{{1, 1}});
}

TEST_CASE("open maximal faces") {
  Matroid m = from(QMatrix{{1, 1, 1}}, 3);
  auto f = row_in_open_maximal_face(m, QVector{1, 0, 0});
  REQUIRE(f);
  CHECK(f->chain == std::vector<Flat>{IndexSet{0, 1, 2}, IndexSet{0}});
  CHECK_FALSE(row_in_open_maximal_face(m, QVector{0, 0, 0}));
  CHECK_FALSE(row_in_open_maximal_face(m, QVector{2, 2, 0}));
  auto g = row_in_open_maximal_face(m, QVector{0, 0, 2});
  REQUIRE(g);
  CHECK(g->chain.back() == IndexSet{2});
}
