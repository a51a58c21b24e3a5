#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvb/matroid.hpp"
#include "tvb/polyhedral.hpp"

namespace tvb {

/// Fan given by primitive rays u_i and maximal cones (sets of ray indices).
struct Fan {
  std::size_t dim = 0;
  std::vector<ZVector> rays;
  std::vector<IndexSet> max_cones;

  std::size_t ray_count() const { return rays.size(); }
  ZMatrix ray_matrix() const;  // n x d, rows are rays
};

struct FanReport {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Primitive rays, unimodular maximal cones, ridge pairing and covering.
FanReport validate_fan(const Fan& f);
/// Throws InvalidInput carrying the first problem.
void require_valid_fan(const Fan& f);

/// Z^n -> Cl(X): classes of the torus-invariant divisors in a chosen basis.
struct ClassLattice {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<int> basis_rays;       // ray indices whose classes form the basis
  std::vector<int> eliminated_rays;  // the d rays solved away
  ZMatrix project;                   // (n-d) x n; column i = class of e_i
  ZMatrix section;                   // n x (n-d); basis coordinate k -> e_{basis_rays[k]}

  std::size_t rank() const { return n - d; }
  ZVector class_of(const ZVector& a) const { return mul(project, a); }
  ZVector class_of_ray(std::size_t i) const { return project.col(i); }
  ZVector lift(const ZVector& cls) const { return mul(section, cls); }
};

ClassLattice class_group(const Fan& f);

/// Classes of e_i for rays outside sigma.
AffineMonoid s_sigma(const Fan& f, const ClassLattice& cl, IndexSet sigma);
QCone c_sigma(const Fan& f, const ClassLattice& cl, IndexSet sigma);
QCone toric_nef_cone(const Fan& f, const ClassLattice& cl);

/// Delta(d) = {m : <u_i,m> + s_i >= 0}, s = section(d).
LatticePolytope divisor_polytope(const Fan& f, const ClassLattice& cl, const ZVector& cls);

/// Coordinates of ray k in the basis of the rays of the maximal cone sigma.
QVector ray_coordinates(const Fan& f, IndexSet sigma, std::size_t k);
/// Every ray outside sigma has all sigma-coordinates <= 0.
bool negative_ray_test(const Fan& f, IndexSet sigma);

/// Blocks of rays, one per projective-space factor, or none.
std::optional<std::vector<IndexSet>> is_product_of_projective_spaces(const Fan& f);

/// Standard fans used by tests and fixtures.
Fan projective_space_fan(std::size_t n);
Fan product_fan(const Fan& a, const Fan& b);
Fan hirzebruch_fan(long a);

}  // namespace tvb
