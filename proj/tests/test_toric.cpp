#include <functional>

#include "doctest.h"
#include "tvb/toric.hpp"

using namespace tvb;

namespace {
ZVector z(std::initializer_list<long> xs) {
  ZVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Fan six_ray_fan() {
  Fan f;
  f.dim = 2;
  f.rays = {z({1, 0}), z({1, 1}), z({1, 2}), z({0, 1}), z({-1, 0}), z({0, -1})};
  f.max_cones = {IndexSet{0, 1}, IndexSet{1, 2}, IndexSet{2, 3}, IndexSet{3, 4}, IndexSet{4, 5}, IndexSet{5, 0}};
  return f;
}

// a in Z^n_{>=0}, |a| <= bound, with class(a) = cls, counted by brute force
std::size_t count_effective(const ClassLattice& cl, const ZVector& cls, long bound) {
  std::size_t n = cl.n, hits = 0;
  ZVector a(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      if (cl.class_of(a) == cls) ++hits;
      return;
    }
    for (long v = 0; v <= bound; ++v) {
      a[i] = v;
      rec(i + 1);
    }
    a[i] = 0;
  };
  rec(0);
  return hits;
}
}  // namespace

TEST_CASE("fan validation") {
  CHECK(validate_fan(projective_space_fan(2)).ok);
  CHECK(validate_fan(six_ray_fan()).ok);
  Fan missing = projective_space_fan(2);
  missing.max_cones.pop_back();
  CHECK_FALSE(validate_fan(missing).ok);
  Fan fat = projective_space_fan(2);
  fat.rays[0] = z({2, 0});
  CHECK_FALSE(validate_fan(fat).ok);
  Fan singular;
  singular.dim = 2;
  singular.rays = {z({1, 0}), z({1, 2}), z({-1, 0}), z({0, -1})};
  singular.max_cones = {IndexSet{0, 1}, IndexSet{1, 2}, IndexSet{2, 3}, IndexSet{3, 0}};
  CHECK_FALSE(validate_fan(singular).ok);
  CHECK(validate_fan(hirzebruch_fan(1)).ok);
  CHECK(validate_fan(product_fan(projective_space_fan(1), projective_space_fan(2))).ok);
}

TEST_CASE("class groups") {
  ClassLattice p2 = class_group(projective_space_fan(2));
  CHECK(p2.project == ZMatrix{{1, 1, 1}});
  ClassLattice s = class_group(six_ray_fan());
  CHECK(s.basis_rays == std::vector<int>{0, 1, 2, 3});
  CHECK(s.class_of_ray(4) == z({1, 1, 1, 0}));
  CHECK(s.class_of_ray(5) == z({0, 1, 2, 1}));
  Fan f = six_ray_fan();
  for (std::size_t j = 0; j < 2; ++j) {
    ZVector chi(6);
    for (std::size_t i = 0; i < 6; ++i) chi[i] = f.rays[i][j];
    CHECK(is_zero(s.class_of(chi)));
  }
  CHECK(mul(s.project, s.section) == ZMatrix::identity(4));
  ClassLattice pp = class_group(product_fan(projective_space_fan(1), projective_space_fan(1)));
  CHECK(pp.project == ZMatrix{{1, 1, 0, 0}, {0, 0, 1, 1}});
}

TEST_CASE("complement classes form a lattice basis") {
  Fan f = six_ray_fan();
  ClassLattice cl = class_group(f);
  for (IndexSet sigma : f.max_cones) CHECK(is_smooth_cone(c_sigma(f, cl, sigma)));
  auto s1 = s_sigma(f, cl, f.max_cones[0]);
  CHECK(s1.generators.size() == 4);
  CHECK(s1.generators[0] == z({0, 0, 1, 0}));
  CHECK(s1.generators[2] == z({1, 1, 1, 0}));
}

TEST_CASE("toric nef cones") {
  Fan p2 = projective_space_fan(2);
  QCone nef = toric_nef_cone(p2, class_group(p2));
  CHECK(nef.same_as(QCone::from_generators(1, {z({1})})));
  Fan pp = product_fan(projective_space_fan(1), projective_space_fan(1));
  ClassLattice cl = class_group(pp);
  CHECK(toric_nef_cone(pp, cl).same_as(QCone::from_generators(2, {z({1, 0}), z({0, 1})})));
  auto s = s_sigma(pp, cl, pp.max_cones[0]);
  CHECK(s.member(z({2, 5})));
}

TEST_CASE("divisor polytopes") {
  Fan p2 = projective_space_fan(2);
  ClassLattice cl = class_group(p2);
  CHECK(divisor_polytope(p2, cl, z({1})).lattice_points().size() == 3);
  CHECK(divisor_polytope(p2, cl, z({0})).lattice_points().size() == 1);
  CHECK(divisor_polytope(p2, cl, z({-1})).lattice_points().empty());
  Fan f = six_ray_fan();
  ClassLattice sc = class_group(f);
  auto pts = divisor_polytope(f, sc, z({1, 0, 0, 0})).lattice_points();
  CHECK(pts.size() == count_effective(sc, z({1, 0, 0, 0}), 2));
  CHECK(pts.size() == 1);
  for (const auto& cls : {z({1, 1, 1, 0}), z({0, 1, 2, 1}), z({2, 1, 0, 1})})
    CHECK(divisor_polytope(f, sc, cls).lattice_points().size() == count_effective(sc, cls, 4));
}

TEST_CASE("products of projective spaces") {
  Fan p1p2 = product_fan(projective_space_fan(1), projective_space_fan(2));
  auto blocks = is_product_of_projective_spaces(p1p2);
  REQUIRE(blocks);
  REQUIRE(blocks->size() == 2);
  CHECK((*blocks)[0].size() == 2);
  CHECK((*blocks)[1].size() == 3);
  auto single = is_product_of_projective_spaces(projective_space_fan(2));
  REQUIRE(single);
  CHECK(single->size() == 1);
  Fan f1 = hirzebruch_fan(1);
  CHECK_FALSE(is_product_of_projective_spaces(f1));
  bool all_negative = true;
  for (IndexSet s : f1.max_cones) all_negative = all_negative && negative_ray_test(f1, s);
  CHECK_FALSE(all_negative);
  CHECK(negative_ray_test(projective_space_fan(2), IndexSet{0, 1}));
  CHECK_FALSE(is_product_of_projective_spaces(six_ray_fan()));
}
