#pragma once

// Bundles shared by the unit, property and acceptance tests.

#include "tvb/bundle.hpp"

namespace samples {

inline tvb::ZVector z(std::initializer_list<long> xs) {
  tvb::ZVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline tvb::PEClass cls(std::initializer_list<long> alpha, long beta) { return tvb::PEClass{z(alpha), beta}; }

inline tvb::ToricVectorBundle tp2() {
  return tvb::ToricVectorBundle(tvb::projective_space_fan(2), tvb::LinearIdealMatrix(tvb::QMatrix{{1, 1, 1}}, 3),
                                tvb::ZMatrix::identity(3));
}

// Extension of the tangent bundle by a column (1,1,1).
inline tvb::ToricVectorBundle bl3() {
  return tvb::ToricVectorBundle(tvb::projective_space_fan(2), tvb::LinearIdealMatrix(tvb::QMatrix{{1, 1, 1, 1}}, 4),
                                tvb::ZMatrix{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
}

inline tvb::Fan hexagon_fan() {
  tvb::Fan f;
  f.dim = 2;
  f.rays = {z({1, 0}), z({1, 1}), z({1, 2}), z({0, 1}), z({-1, 0}), z({0, -1})};
  f.max_cones = {tvb::IndexSet{0, 1}, tvb::IndexSet{1, 2}, tvb::IndexSet{2, 3},
                 tvb::IndexSet{3, 4}, tvb::IndexSet{4, 5}, tvb::IndexSet{5, 0}};
  return f;
}

// Rank 2 sparse bundle over the six-ray surface with a non-bpf nef class.
inline tvb::ToricVectorBundle hexagon() {
  return tvb::ToricVectorBundle(hexagon_fan(), tvb::LinearIdealMatrix(tvb::QMatrix{{1, 1, 1}}, 3),
                                tvb::ZMatrix{{3, 0, 0}, {6, 0, 0}, {9, 0, 0}, {2, 0, 0}, {0, 9, 0}, {0, 0, 6}});
}

// Sym^2 of the tangent bundle, variables y12 y13 y23 y11 y22 y33, plus the extra generator Z.
inline tvb::ToricVectorBundle sym2(bool with_m_rows = false) {
  tvb::Fixtures fx;
  fx.extra_columns = {z({2, 2, 2})};
  fx.extra_degrees = {tvb::PEClass{z({6}), 2}};
  if (with_m_rows)
    fx.extra_M_rows = {z({4, 4, 4, 4, 4, 4, 17, 0, 0, 0}), z({10, 10, 0, 20, 0, 0, 27, 0, 0, 0})};
  return tvb::ToricVectorBundle(
      tvb::projective_space_fan(2),
      tvb::LinearIdealMatrix(tvb::QMatrix{{1, 1, 0, 1, 0, 0}, {1, 0, 1, 0, 1, 0}, {0, 1, 1, 0, 0, 1}}, 6),
      tvb::ZMatrix{{1, 1, 0, 2, 0, 0}, {1, 0, 1, 0, 2, 0}, {0, 1, 1, 0, 0, 2}}, fx);
}

}  // namespace samples
