#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvb/matroid.hpp"
#include "tvb/polyhedral.hpp"
#include "tvb/toric.hpp"

namespace tvb {

/// Element (alpha, beta) of Cl(PE) = Cl(X) x Z.
struct PEClass {
  ZVector alpha;
  Integer beta = 0;

  ZVector flat() const;  // (alpha..., beta)
  static PEClass from_flat(const ZVector& v);
  std::string str() const;
  friend bool operator==(const PEClass& a, const PEClass& b) { return a.alpha == b.alpha && a.beta == b.beta; }
  friend bool operator<(const PEClass& a, const PEClass& b) { return a.flat() < b.flat(); }
};

/// Hand-supplied data for bundles whose Cox ring needs generators beyond Sym-degree 1.
struct Fixtures {
  std::vector<ZVector> extra_columns;  // diagram columns of extra generators, length n
  std::vector<PEClass> extra_degrees;
  std::vector<ZVector> extra_M_rows;   // appended verbatim to the NO matrix
  bool empty() const { return extra_columns.empty() && extra_degrees.empty() && extra_M_rows.empty(); }
};

struct DiagramReport {
  bool ok = true;
  std::vector<std::string> problems;
  std::vector<std::optional<IndexSet>> apartment_basis;  // per maximal cone
};

/// Trop membership of every row and a common apartment on every maximal cone.
DiagramReport validate_diagram(const Fan& fan, const Matroid& mat, const ZMatrix& d);

ZMatrix twist(const ZMatrix& d, const ZVector& r);
ZMatrix nonnegative_form(const ZMatrix& d);

class ToricVectorBundle {
 public:
  /// Validates fan and diagram; throws InvalidInput with the first problem.
  ToricVectorBundle(Fan fan, LinearIdealMatrix ideal, ZMatrix diagram, Fixtures fixtures = {});

  const Fan& fan() const { return fan_; }
  const Matroid& matroid() const { return matroid_; }
  const LinearIdealMatrix& ideal() const { return matroid_.ideal(); }
  const ZMatrix& diagram() const { return diagram_; }
  const ClassLattice& class_lattice() const { return classes_; }
  const Fixtures& fixtures() const { return fixtures_; }
  const DiagramReport& report() const { return report_; }

  std::size_t n() const { return diagram_.rows(); }
  std::size_t m() const { return diagram_.cols(); }
  int rank() const { return matroid_.rank(); }

  /// Sum of the diagram rows of the rays of the maximal cone.
  QVector cone_weight(std::size_t cone) const;
  const Matroid& initial_matroid(std::size_t cone) const { return initial_[cone]; }
  ZVector column_class(std::size_t j) const;

 private:
  Fan fan_;
  Matroid matroid_;
  ZMatrix diagram_;
  Fixtures fixtures_;
  ClassLattice classes_;
  DiagramReport report_;
  std::vector<Matroid> initial_;
};

Flat klyachko_flat(const ToricVectorBundle& e, std::size_t ray, const Integer& t);

bool is_sparse(const ToricVectorBundle& e);
bool is_uniform(const ToricVectorBundle& e);
bool is_monomial(const ToricVectorBundle& e);

struct CIReport {
  bool ok = true;
  std::vector<int> failing_subset;  // empty when ok
  std::string failing_family;       // "A" or "B"
  int failing_index = -1;           // i in B for the second family
};
CIReport ci_check(const ToricVectorBundle& e);
/// Rejects non-uniform matroids.
bool uniform_ci_check(const ToricVectorBundle& e);

enum class Certificate { sparse, ci, none };
std::string to_string(Certificate c);
/// sparse, else CI, else none.
Certificate symdeg1_certificate(const ToricVectorBundle& e);
/// Throws CertificateMissing unless a certificate holds or force is set.
Certificate require_certificate(const ToricVectorBundle& e, bool force);

PEClass deg_x(const ToricVectorBundle& e, std::size_t i);
PEClass deg_y(const ToricVectorBundle& e, std::size_t j);

struct HomogenizedRelation {
  QVector coefficients;
  ZVector delta;  // componentwise minimum of the supported diagram columns
  PEClass degree;
};
std::vector<HomogenizedRelation> homogenized_relations(const ToricVectorBundle& e);

struct EffData {
  AffineMonoid monoid;
  QCone cone;
  Certificate certificate = Certificate::none;
};
/// Generated by every deg_x, deg_y and the fixture degrees. Grading is the Sym-degree.
EffData eff_data(const ToricVectorBundle& e);

struct Site {
  std::size_t cone = 0;
  Flat flat;
  std::string label;  // '1' at j when Y_j is a generator (j outside the flat)
  AffineMonoid monoid;
  QCone cone_hull;
};
std::vector<Site> nef_bpf_sites(const ToricVectorBundle& e, bool force = false);

QCone nef_cone(const std::vector<Site>& sites);
QCone nef_cone(const ToricVectorBundle& e, bool force = false);

struct BpfResult {
  bool member = true;
  std::vector<std::size_t> failing_sites;
};
BpfResult bpf_member(const std::vector<Site>& sites, const PEClass& c);
bool nef_member(const ToricVectorBundle& e, const PEClass& c, bool force = false);
bool is_ample(const ToricVectorBundle& e, const PEClass& c, bool force = false);

struct FujitaGap {
  PEClass cls;
  std::size_t site = 0;
};
struct FujitaScan {
  std::vector<PEClass> hilbert_basis;
  std::vector<FujitaGap> gaps;
};
FujitaScan fujita_gap_scan(const ToricVectorBundle& e, bool force = false);

struct CoverReport {
  bool covered = true;
  std::vector<std::optional<std::size_t>> coloop_cone;  // per column j
  bool zero_in_every_circuit_row = true;                // sufficient condition
};
CoverReport coloop_cover_check(const ToricVectorBundle& e);

struct ExtensionReport {
  bool extends = true;
  std::string problem;
  bool dominance = false;            // new entries >= the row maximum of D
  bool circuit_minimum = false;      // new entries > every circuit minimum of the row
  bool zero_bound = false;           // <= r-2 zeros per new column
  bool ci_guaranteed = false;
  bool monomial_guaranteed = false;
  bool uniform_monomial_guaranteed = false;
};
ExtensionReport extension_checks(const ToricVectorBundle& e, const ToricVectorBundle& ext);

}  // namespace tvb
