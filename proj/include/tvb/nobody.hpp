#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tvb/bundle.hpp"

namespace tvb {

/// Valuation matrix [D -I ; E_K 0]. Columns are ordered (y; extra generators; x).
struct NOMatrix {
  ZMatrix M;
  FlagOfFlats flag;
  bool fixture_rows = false;  // tail rows came from the fixtures instead of the flag
};

/// Rejects flags that are not maximal in M(L). Fixture M rows replace the flag tail.
NOMatrix build_M(const ToricVectorBundle& e, const FlagOfFlats& flag);

enum class PrimeCertificate { sparse, interior_row, none };
std::string to_string(PrimeCertificate c);
PrimeCertificate precondition_certificate(const ToricVectorBundle& e, const FlagOfFlats& flag);

QCone global_body(const NOMatrix& m);

/// Exponent vectors (b; z; a) of monomials Y^b Z^z X^a of degree c.
LatticePolytope p_alpha_beta(const ToricVectorBundle& e, const PEClass& c);

struct NOBody {
  LatticePolytope source;
  PolytopeImage image;
  PrimeCertificate certificate = PrimeCertificate::none;
  std::string label() const;  // "certified" or the candidate warning
};
NOBody nobody_of_class(const ToricVectorBundle& e, const NOMatrix& m, const PEClass& c);

struct CayleyData {
  std::vector<LatticePolytope> fibers;        // Delta(beta d_j - alpha), one per column
  std::vector<std::size_t> ineffective_columns;
  LatticePolytope total;                      // coordinates (b; m), m in the character lattice
  bool hypothesis_holds() const { return ineffective_columns.empty(); }
};
/// Rejects bundles with fixture columns.
CayleyData cayley_polytope(const ToricVectorBundle& e, const PEClass& c);

/// Homogeneous polynomial in y_0..y_{m-1}.
using Polynomial = std::map<std::vector<int>, Rational>;

/// max over f + L_l of the least w-weight of a term; nullopt when f lies in the ideal.
std::optional<Rational> weight_quasivaluation(const ToricVectorBundle& e, const QVector& w, const Polynomial& f);
std::optional<Rational> weight_quasivaluation(const ToricVectorBundle& e, std::size_t row, const Polynomial& f);

/// Graded piece of the Cox ring modulo the homogenized circuits.
struct SectionSpace {
  std::vector<ZVector> monomials;  // lattice points of P
  std::size_t relation_rank = 0;
  std::size_t dimension() const { return monomials.size() - relation_rank; }
};
SectionSpace section_space(const ToricVectorBundle& e, const PEClass& c);

/// Leaves of the filtration by M-values (lex order), with their dimensions.
struct ValuationLeaf {
  ZVector value;
  std::size_t dimension = 0;
};
std::vector<ValuationLeaf> valuation_leaves(const ToricVectorBundle& e, const NOMatrix& m, const PEClass& c);

}  // namespace tvb
