#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvb/bundle.hpp"

namespace tvb {

/// (K_X + sum d_j - sum c_k, r). Refuses bundles that are neither CI nor sparse.
PEClass ci_anticanonical(const ToricVectorBundle& e);

/// Rank dim X bundle with positive diagonal diagram.
struct KaneyamaBundle {
  ToricVectorBundle bundle;
  ZVector a;  // diagonal, indexed by ray
};

/// Parallel elements of M(L) are merged into one column, so the stored bundle may have
/// fewer columns than rays; the diagonal is kept in `a`.
KaneyamaBundle kaneyama_validate(const Fan& fan, const LinearIdealMatrix& ideal, const ZMatrix& d);

/// Matrix X_sigma built from the diagonal entries of the rays of sigma.
QMatrix x_sigma_matrix(const KaneyamaBundle& k, std::size_t cone);
bool negative_orthant_test(const KaneyamaBundle& k, std::size_t cone);

struct KaneyamaReport {
  bool nef = false;
  bool ample = false;
  std::string reason;
  std::optional<std::size_t> failing_cone;
  std::optional<std::vector<IndexSet>> blocks;
  PEClass anticanonical;
  PEClass closed_form;  // (sum (a_i - 1) e_i, r)
  bool engine_nef = false;
  bool engine_ample = false;
};
/// Closed form, then the generic engine on -K. Throws Error when the two disagree.
KaneyamaReport kaneyama_classify(const KaneyamaBundle& k);

/// Relations among the ray generators, identity diagram.
ToricVectorBundle tangent_bundle(const Fan& fan);
KaneyamaBundle tangent_kaneyama(const Fan& fan);

}  // namespace tvb
