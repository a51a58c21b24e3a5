#include "tvb/fano.hpp"

#include <algorithm>
#include <map>

namespace tvb {

PEClass ci_anticanonical(const ToricVectorBundle& e) {
  if (symdeg1_certificate(e) == Certificate::none)
    throw InvalidInput("anticanonical formula needs a complete intersection bundle");
  const auto& cl = e.class_lattice();
  PEClass k;
  k.alpha.assign(cl.rank(), 0);
  auto add = [&](const ZVector& v, long sign) {
    for (std::size_t t = 0; t < v.size(); ++t) k.alpha[t] += sign * v[t];
  };
  for (std::size_t i = 0; i < e.n(); ++i) add(cl.class_of_ray(i), -1);
  for (std::size_t j = 0; j < e.m(); ++j) add(e.column_class(j), 1);
  for (const auto& rel : homogenized_relations(e)) add(cl.class_of(rel.delta), -1);
  k.beta = e.rank();
  return k;
}

namespace {

// Merge parallel elements of M(L); representative is the least index of each class.
// Each diagram entry of a merged column is the largest entry over the class.
std::pair<LinearIdealMatrix, ZMatrix> merge_parallel(const Matroid& mat, const ZMatrix& d) {
  const int m = mat.size();
  std::vector<int> rep(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) rep[static_cast<std::size_t>(j)] = j;
  for (const Circuit& c : mat.circuits())
    if (c.support.size() == 2) {
      auto el = c.support.elements();
      rep[static_cast<std::size_t>(el[1])] = std::min(rep[static_cast<std::size_t>(el[1])], rep[static_cast<std::size_t>(el[0])]);
    }
  for (int j = 0; j < m; ++j) rep[static_cast<std::size_t>(j)] = rep[static_cast<std::size_t>(rep[static_cast<std::size_t>(j)])];
  std::vector<std::size_t> reps;
  std::map<int, std::size_t> column_of;
  for (int j = 0; j < m; ++j)
    if (rep[static_cast<std::size_t>(j)] == j) {
      column_of[j] = reps.size();
      reps.push_back(static_cast<std::size_t>(j));
    }
  if (reps.size() == static_cast<std::size_t>(m)) return {mat.ideal(), d};

  QMatrix v = mat.representation().select_cols(reps);
  QMatrix rel = kernel_basis(v);  // rows are relations among the representatives
  LinearIdealMatrix ideal = LinearIdealMatrix::spanned_by(rel, reps.size());
  ZMatrix merged(d.rows(), reps.size());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (int j = 0; j < m; ++j) {
      std::size_t c = column_of.at(rep[static_cast<std::size_t>(j)]);
      merged(i, c) = std::max(merged(i, c), d(i, static_cast<std::size_t>(j)));
    }
  return {ideal, merged};
}

}  // namespace

KaneyamaBundle kaneyama_validate(const Fan& fan, const LinearIdealMatrix& ideal, const ZMatrix& d) {
  require_valid_fan(fan);
  const std::size_t n = fan.rays.size();
  if (d.rows() != n || d.cols() != n) throw InvalidInput("Kaneyama diagram must be square with one row per ray");
  ZVector a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && d(i, j) != 0) throw InvalidInput("Kaneyama diagram is not diagonal");
      if (i == j) a[i] = d(i, i);
    }
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] <= 0) throw InvalidInput("Kaneyama diagram needs positive diagonal entries (row " + std::to_string(i) + ")");
  Matroid mat(ideal);
  if (static_cast<std::size_t>(mat.rank()) != fan.dim)
    throw InvalidInput("Kaneyama bundle needs rank " + std::to_string(fan.dim) + ", got " + std::to_string(mat.rank()));
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c)
    if (!mat.is_basis(fan.max_cones[c]))
      throw InvalidInput("rays of maximal cone " + std::to_string(c) + " " + fan.max_cones[c].str() + " do not give a basis of M(L)");
  auto [merged_ideal, merged_d] = merge_parallel(mat, d);
  return KaneyamaBundle{ToricVectorBundle(fan, merged_ideal, merged_d), a};
}

QMatrix x_sigma_matrix(const KaneyamaBundle& k, std::size_t cone) {
  const Fan& fan = k.bundle.fan();
  if (cone >= fan.max_cones.size()) throw InvalidInput("cone index out of range");
  auto rays = fan.max_cones[cone].indices();
  const std::size_t r = rays.size();
  QMatrix x(r, r);
  for (std::size_t l = 0; l < r; ++l)
    for (std::size_t i = 0; i < r; ++i) {
      Rational di = k.a[rays[i]];
      x(l, i) = (l == i) ? Rational(Rational(1 - static_cast<long>(r)) * di - 1) : Rational(di - 1);
    }
  return x;
}

bool negative_orthant_test(const KaneyamaBundle& k, std::size_t cone) {
  const Fan& fan = k.bundle.fan();
  if (cone >= fan.max_cones.size()) throw InvalidInput("cone index out of range");
  return negative_ray_test(fan, fan.max_cones[cone]);
}

KaneyamaReport kaneyama_classify(const KaneyamaBundle& k) {
  const ToricVectorBundle& e = k.bundle;
  const Fan& fan = e.fan();
  KaneyamaReport rep;

  const auto& cl = e.class_lattice();
  rep.closed_form.alpha.assign(cl.rank(), 0);
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    ZVector c = cl.class_of_ray(i);
    for (std::size_t t = 0; t < c.size(); ++t) rep.closed_form.alpha[t] += (k.a[i] - 1) * c[t];
  }
  rep.closed_form.beta = e.rank();
  rep.anticanonical = ci_anticanonical(e);
  if (!(rep.anticanonical == rep.closed_form))
    throw Error("anticanonical class " + rep.anticanonical.str() + " differs from the diagonal formula " + rep.closed_form.str());

  for (std::size_t c = 0; c < fan.max_cones.size() && !rep.failing_cone; ++c)
    if (!negative_orthant_test(k, c)) rep.failing_cone = c;
  if (rep.failing_cone) {
    rep.reason = "negative orthant test fails at cone " + std::to_string(*rep.failing_cone);
  } else if (!(rep.blocks = is_product_of_projective_spaces(fan))) {
    rep.reason = "fan is not a product of projective spaces";
  } else if (rep.blocks->size() > 1) {
    rep.nef = std::all_of(k.a.begin(), k.a.end(), [](const Integer& x) { return x == 1; });
    rep.reason = rep.nef ? "product of projective spaces with unit diagonal; never ample"
                         : "product of projective spaces with a diagonal entry other than 1";
  } else {
    ZVector a = k.a;
    std::sort(a.begin(), a.end());
    Integer excess = 0;
    for (std::size_t i = 1; i < a.size(); ++i) excess += a[i] - a[0];
    Integer bound = Integer(static_cast<long>(fan.dim) + 1) - a[0];
    rep.nef = excess <= bound;
    rep.ample = excess < bound;
    rep.reason = "projective space: sum of (a_i - a_0) = " + excess.get_str() + ", bound n + 1 - a_0 = " + bound.get_str();
  }

  rep.engine_nef = nef_member(e, rep.anticanonical);
  rep.engine_ample = is_ample(e, rep.anticanonical);
  if (rep.engine_nef != rep.nef || rep.engine_ample != rep.ample)
    throw Error("Kaneyama closed form (nef " + std::to_string(rep.nef) + ", ample " + std::to_string(rep.ample) +
                ") disagrees with the nef engine (nef " + std::to_string(rep.engine_nef) + ", ample " +
                std::to_string(rep.engine_ample) + ")");
  return rep;
}

KaneyamaBundle tangent_kaneyama(const Fan& fan) {
  require_valid_fan(fan);
  QMatrix rel = kernel_basis(to_rational(fan.ray_matrix().transpose()));
  LinearIdealMatrix ideal = LinearIdealMatrix::spanned_by(rel, fan.rays.size());
  return kaneyama_validate(fan, ideal, ZMatrix::identity(fan.rays.size()));
}

ToricVectorBundle tangent_bundle(const Fan& fan) { return tangent_kaneyama(fan).bundle; }

}  // namespace tvb
