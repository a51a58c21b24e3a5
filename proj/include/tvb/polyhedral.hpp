#pragma once

#include <optional>
#include <vector>

#include "tvb/exact.hpp"

namespace tvb {

/// Rational polyhedral cone with both descriptions kept.
/// Vectors are stored as primitive integer vectors; scaling does not change the cone.
class QCone {
 public:
  QCone() = default;

  /// cone(gens) + span(lineality)
  static QCone from_generators(std::size_t dim, const std::vector<ZVector>& gens,
                               const std::vector<ZVector>& lineality = {});
  static QCone from_generators(std::size_t dim, const std::vector<QVector>& gens);
  /// {x : <h,x> >= 0 for h in halfspaces, <e,x> = 0 for e in equations}
  static QCone from_halfspaces(std::size_t dim, const std::vector<ZVector>& halfspaces,
                               const std::vector<ZVector>& equations = {});
  static QCone from_halfspaces(std::size_t dim, const std::vector<QVector>& halfspaces);

  std::size_t dim() const { return dim_; }
  /// Extreme rays modulo the lineality space, sorted.
  const std::vector<ZVector>& generators() const { return rays_; }
  const std::vector<ZVector>& lineality() const { return lineality_; }
  /// Irredundant facet normals, sorted.
  const std::vector<ZVector>& halfspaces() const { return facets_; }
  const std::vector<ZVector>& equations() const { return equations_; }

  bool is_pointed() const { return lineality_.empty(); }
  std::size_t cone_dim() const { return dim_ - equations_.size(); }
  bool is_full_dimensional() const { return equations_.empty(); }

  bool contains(const QVector& v) const;
  bool contains(const ZVector& v) const;
  /// Topological interior: full-dimensional and every facet inequality strict.
  bool contains_interior(const QVector& v) const;
  bool contains_interior(const ZVector& v) const;
  /// Double containment of generators.
  bool same_as(const QCone& other) const;
  bool contains_cone(const QCone& other) const;

 private:
  std::size_t dim_ = 0;
  std::vector<ZVector> rays_;
  std::vector<ZVector> lineality_;
  std::vector<ZVector> facets_;
  std::vector<ZVector> equations_;
};

/// Swap descriptions: the dual cone {y : <y,x> >= 0 for all x in C}.
QCone dualize(const QCone& c);
QCone intersect(const QCone& a, const QCone& b);
QCone intersect_all(const std::vector<QCone>& cones);
bool is_smooth_cone(const QCone& c);

/// Minimal generating set of C ∩ Z^d. Rejects non-pointed cones.
std::vector<ZVector> hilbert_basis(const QCone& c);

/// {x in Q^d : A x = b, G x >= h}, and x >= 0 when nonnegative is set.
struct LatticePolytope {
  std::size_t dim = 0;
  QMatrix eq_a;
  QVector eq_b;
  QMatrix ineq_g;
  QVector ineq_h;
  bool nonnegative = true;

  LatticePolytope() = default;
  explicit LatticePolytope(std::size_t d, bool nonneg = true);
  void add_equality(const QVector& row, const Rational& rhs);
  void add_inequality(const QVector& row, const Rational& rhs);

  bool satisfies(const ZVector& x) const;
  /// Throws InvalidInput when the polytope is unbounded.
  std::vector<QVector> vertices() const;
  std::vector<ZVector> lattice_points() const;
};

/// Image of a polytope: hull of mapped vertices plus the mapped lattice points.
struct PolytopeImage {
  std::vector<QVector> vertices;
  std::vector<ZVector> marked;  // image of every lattice point, in source order
  std::vector<ZVector> distinct_marked() const;
};

QCone linear_image(const ZMatrix& m, const QCone& c);
PolytopeImage linear_image(const ZMatrix& m, const LatticePolytope& p);

/// Extreme points of conv(points).
std::vector<QVector> convex_hull_vertices(const std::vector<QVector>& points);

/// Finitely generated monoid N<generators> + Z<free_generators>, with a grading covector.
struct AffineMonoid {
  std::vector<ZVector> generators;
  std::vector<ZVector> free_generators;
  ZVector grading;

  struct Witness {
    std::vector<Integer> coefficients;       // one per generator, nonnegative
    std::vector<Integer> free_coefficients;  // one per free generator
  };

  /// Throws InvalidInput if the grading does not bound the search.
  void check_grading() const;
  std::optional<Witness> member(const ZVector& v) const;
  ZVector recombine(const Witness& w) const;
};

}  // namespace tvb
