#include "tvb/bundle.hpp"

#include <algorithm>
#include <sstream>

#include "tvb/parallel.hpp"

namespace tvb {

ZVector PEClass::flat() const {
  ZVector v = alpha;
  v.push_back(beta);
  return v;
}

PEClass PEClass::from_flat(const ZVector& v) {
  if (v.empty()) throw InvalidInput("empty class vector");
  PEClass c;
  c.alpha.assign(v.begin(), v.end() - 1);
  c.beta = v.back();
  return c;
}

std::string PEClass::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i];
  os << ';' << beta << ')';
  return os.str();
}

namespace {

QVector row_q(const ZMatrix& d, std::size_t i) { return to_rational(d.row(i)); }

}  // namespace

DiagramReport validate_diagram(const Fan& fan, const Matroid& mat, const ZMatrix& d) {
  DiagramReport rep;
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.problems.push_back(msg);
  };
  if (d.rows() != fan.rays.size()) fail("diagram has " + std::to_string(d.rows()) + " rows for " + std::to_string(fan.rays.size()) + " rays");
  if (d.cols() != static_cast<std::size_t>(mat.size())) fail("diagram width differs from the number of variables");
  if (!rep.ok) return rep;
  for (std::size_t i = 0; i < d.rows(); ++i)
    if (!trop_membership(mat, row_q(d, i))) fail("row " + std::to_string(i) + " is not in the tropical linear space");
  if (!rep.ok) return rep;
  const auto bases = mat.bases();
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    std::optional<IndexSet> found;
    for (IndexSet b : bases) {
      bool all = true;
      for (int i : fan.max_cones[c].elements())
        if (!apartment_membership(mat, b, row_q(d, static_cast<std::size_t>(i)))) {
          all = false;
          break;
        }
      if (all) {
        found = b;
        break;
      }
    }
    rep.apartment_basis.push_back(found);
    if (!found) fail("rows of cone " + fan.max_cones[c].str() + " share no apartment");
  }
  return rep;
}

ZMatrix twist(const ZMatrix& d, const ZVector& r) {
  if (r.size() != d.rows()) throw InvalidInput("twist vector length differs from the row count");
  ZMatrix out = d;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) out(i, j) += r[i];
  return out;
}

ZMatrix nonnegative_form(const ZMatrix& d) {
  ZVector shift(d.rows());
  for (std::size_t i = 0; i < d.rows(); ++i) {
    if (d.cols() == 0) continue;
    Integer mn = d(i, 0);
    for (std::size_t j = 1; j < d.cols(); ++j) mn = std::min(mn, Integer(d(i, j)));
    shift[i] = -mn;
  }
  return twist(d, shift);
}

ToricVectorBundle::ToricVectorBundle(Fan fan, LinearIdealMatrix ideal, ZMatrix diagram, Fixtures fixtures)
    : fan_(std::move(fan)), matroid_(std::move(ideal)), diagram_(std::move(diagram)), fixtures_(std::move(fixtures)) {
  require_valid_fan(fan_);
  classes_ = class_group(fan_);
  report_ = validate_diagram(fan_, matroid_, diagram_);
  if (!report_.ok) throw InvalidInput("invalid diagram: " + report_.problems.front());
  if (fixtures_.extra_columns.size() != fixtures_.extra_degrees.size())
    throw InvalidInput("fixtures need one degree per extra column");
  for (const auto& c : fixtures_.extra_columns)
    if (c.size() != n()) throw InvalidInput("extra column length differs from the ray count");
  for (const auto& g : fixtures_.extra_degrees)
    if (g.alpha.size() != classes_.rank()) throw InvalidInput("extra degree has the wrong class length");
  for (std::size_t c = 0; c < fan_.max_cones.size(); ++c) initial_.push_back(tvb::initial_matroid(matroid_, cone_weight(c)));
}

QVector ToricVectorBundle::cone_weight(std::size_t cone) const {
  QVector w(m());
  for (int i : fan_.max_cones.at(cone).elements())
    for (std::size_t j = 0; j < m(); ++j) w[j] += diagram_(static_cast<std::size_t>(i), j);
  return w;
}

ZVector ToricVectorBundle::column_class(std::size_t j) const { return classes_.class_of(diagram_.col(j)); }

Flat klyachko_flat(const ToricVectorBundle& e, std::size_t ray, const Integer& t) {
  ZMatrix d = nonnegative_form(e.diagram());
  IndexSet s;
  for (std::size_t j = 0; j < e.m(); ++j)
    if (d(ray, j) >= t) s.insert(static_cast<int>(j));
  return e.matroid().closure(s);
}

bool is_sparse(const ToricVectorBundle& e) {
  ZMatrix d = nonnegative_form(e.diagram());
  for (std::size_t i = 0; i < d.rows(); ++i) {
    int nonzero = 0;
    for (std::size_t j = 0; j < d.cols(); ++j) nonzero += d(i, j) != 0;
    if (nonzero > 1) return false;
  }
  return true;
}

bool is_uniform(const ToricVectorBundle& e) { return e.matroid().is_uniform(); }

bool is_monomial(const ToricVectorBundle& e) {
  for (std::size_t c = 0; c < e.fan().max_cones.size(); ++c)
    if (!e.initial_matroid(c).has_unique_basis()) return false;
  return true;
}

namespace {

// Rank of the coefficient matrix restricted to columns where all rows of A attain their minimum.
std::size_t m_of(const ZMatrix& d, const QMatrix& coeffs, const std::vector<int>& a) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < d.cols(); ++j) {
    bool common = true;
    for (int i : a) {
      Integer mn = d(static_cast<std::size_t>(i), 0);
      for (std::size_t k = 1; k < d.cols(); ++k) mn = std::min(mn, Integer(d(static_cast<std::size_t>(i), k)));
      if (d(static_cast<std::size_t>(i), j) != mn) {
        common = false;
        break;
      }
    }
    if (common) cols.push_back(j);
  }
  if (cols.empty() || coeffs.rows() == 0) return 0;
  return rank(coeffs.select_cols(cols));
}

}  // namespace

CIReport ci_check(const ToricVectorBundle& e) {
  CIReport rep;
  const std::size_t n = e.n();
  if (n > 20) throw InvalidInput("CI check enumerates subsets; more than 20 rays");
  const ZMatrix& d = e.diagram();
  const QMatrix& coeffs = e.ideal().coeffs;
  const long codim = static_cast<long>(coeffs.rows());
  std::vector<long> m_single(n);
  for (std::size_t i = 0; i < n; ++i) m_single[i] = static_cast<long>(m_of(d, coeffs, {static_cast<int>(i)}));
  const std::uint64_t limit = 1ULL << n;
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    std::vector<int> a = IndexSet(bits).elements();
    const long size = static_cast<long>(a.size());
    const long ma = static_cast<long>(m_of(d, coeffs, a));
    if (!(codim < size + ma)) {
      rep.ok = false;
      rep.failing_subset = a;
      rep.failing_family = "A";
      return rep;
    }
    if (size < 2) continue;
    for (int i : a) {
      if (!(1 + m_single[static_cast<std::size_t>(i)] < size + ma)) {
        rep.ok = false;
        rep.failing_subset = a;
        rep.failing_family = "B";
        rep.failing_index = i;
        return rep;
      }
    }
  }
  return rep;
}

bool uniform_ci_check(const ToricVectorBundle& e) {
  if (!e.matroid().is_uniform()) throw InvalidInput("uniform CI check needs a uniform matroid");
  ZMatrix d = nonnegative_form(e.diagram());
  const std::size_t n = e.n();
  if (n > 20) throw InvalidInput("uniform CI check enumerates subsets; more than 20 rays");
  const long r = e.rank();
  for (std::uint64_t bits = 1; bits < (1ULL << n); ++bits) {
    auto a = IndexSet(bits).elements();
    long used = 0;
    for (std::size_t j = 0; j < e.m(); ++j) {
      bool any = false;
      for (int i : a) any = any || d(static_cast<std::size_t>(i), j) != 0;
      used += any;
    }
    if (used > r + static_cast<long>(a.size()) - 2) return false;
  }
  return true;
}

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::sparse: return "sparse";
    case Certificate::ci: return "CI";
    case Certificate::none: return "none";
  }
  return "none";
}

Certificate symdeg1_certificate(const ToricVectorBundle& e) {
  if (!e.fixtures().extra_degrees.empty()) return Certificate::none;
  if (is_sparse(e)) return Certificate::sparse;
  if (ci_check(e).ok) return Certificate::ci;
  return Certificate::none;
}

Certificate require_certificate(const ToricVectorBundle& e, bool force) {
  Certificate c = symdeg1_certificate(e);
  if (c == Certificate::none && !force)
    throw CertificateMissing("no Sym-degree-1 certificate (bundle is neither sparse nor CI); use --force to proceed");
  return c;
}

PEClass deg_x(const ToricVectorBundle& e, std::size_t i) {
  PEClass c;
  c.alpha = e.class_lattice().class_of_ray(i);
  for (auto& z : c.alpha) z = -z;
  c.beta = 0;
  return c;
}

PEClass deg_y(const ToricVectorBundle& e, std::size_t j) {
  PEClass c;
  c.alpha = e.column_class(j);
  c.beta = 1;
  return c;
}

std::vector<HomogenizedRelation> homogenized_relations(const ToricVectorBundle& e) {
  std::vector<HomogenizedRelation> out;
  const QMatrix& coeffs = e.ideal().coeffs;
  const ZMatrix& d = e.diagram();
  for (std::size_t k = 0; k < coeffs.rows(); ++k) {
    HomogenizedRelation rel;
    rel.coefficients = coeffs.row(k);
    rel.delta.assign(e.n(), 0);
    for (std::size_t i = 0; i < e.n(); ++i) {
      std::optional<Integer> mn;
      for (std::size_t j = 0; j < e.m(); ++j)
        if (rel.coefficients[j] != 0 && (!mn || d(i, j) < *mn)) mn = d(i, j);
      rel.delta[i] = *mn;
    }
    // Every term X^{D_j} Y_j has degree (0,1); dividing by X^delta adds class(delta).
    rel.degree.alpha = e.class_lattice().class_of(rel.delta);
    rel.degree.beta = 1;
    out.push_back(std::move(rel));
  }
  return out;
}

namespace {

std::vector<PEClass> all_degrees(const ToricVectorBundle& e) {
  std::vector<PEClass> out;
  for (std::size_t i = 0; i < e.n(); ++i) out.push_back(deg_x(e, i));
  for (std::size_t j = 0; j < e.m(); ++j) out.push_back(deg_y(e, j));
  for (const auto& g : e.fixtures().extra_degrees) out.push_back(g);
  return out;
}

ZVector symdeg_grading(std::size_t class_rank) {
  ZVector g(class_rank + 1);
  g[class_rank] = 1;
  return g;
}

}  // namespace

EffData eff_data(const ToricVectorBundle& e) {
  EffData out;
  out.certificate = symdeg1_certificate(e);
  std::vector<ZVector> gens;
  for (const auto& c : all_degrees(e)) gens.push_back(c.flat());
  out.monoid.generators = gens;
  out.monoid.grading = symdeg_grading(e.class_lattice().rank());
  out.cone = QCone::from_generators(e.class_lattice().rank() + 1, gens);
  return out;
}

std::vector<Site> nef_bpf_sites(const ToricVectorBundle& e, bool force) {
  require_certificate(e, force);
  struct Job {
    std::size_t cone;
    Flat flat;
  };
  std::vector<Job> jobs;
  for (std::size_t c = 0; c < e.fan().max_cones.size(); ++c)
    for (Flat f : e.initial_matroid(c).maximal_proper_flats()) jobs.push_back({c, f});
  const std::size_t dim = e.class_lattice().rank() + 1;
  return parallel_map(jobs.size(), [&](std::size_t k) {
    Site s;
    s.cone = jobs[k].cone;
    s.flat = jobs[k].flat;
    IndexSet sigma = e.fan().max_cones[s.cone];
    for (std::size_t i = 0; i < e.n(); ++i)
      if (!sigma.contains(static_cast<int>(i))) s.monoid.generators.push_back(deg_x(e, i).flat());
    for (std::size_t j = 0; j < e.m(); ++j) {
      const bool outside = !s.flat.contains(static_cast<int>(j));
      s.label.push_back(outside ? '1' : '0');
      if (outside) s.monoid.generators.push_back(deg_y(e, j).flat());
    }
    s.monoid.grading = symdeg_grading(dim - 1);
    s.cone_hull = QCone::from_generators(dim, s.monoid.generators);
    return s;
  });
}

QCone nef_cone(const std::vector<Site>& sites) {
  std::vector<QCone> cones;
  for (const auto& s : sites) cones.push_back(s.cone_hull);
  return intersect_all(cones);
}

QCone nef_cone(const ToricVectorBundle& e, bool force) { return nef_cone(nef_bpf_sites(e, force)); }

BpfResult bpf_member(const std::vector<Site>& sites, const PEClass& c) {
  BpfResult r;
  const ZVector v = c.flat();
  auto hits = parallel_map(sites.size(), [&](std::size_t k) { return sites[k].monoid.member(v).has_value(); });
  for (std::size_t k = 0; k < sites.size(); ++k)
    if (!hits[k]) {
      r.member = false;
      r.failing_sites.push_back(k);
    }
  return r;
}

bool nef_member(const ToricVectorBundle& e, const PEClass& c, bool force) {
  return nef_cone(e, force).contains(c.flat());
}

bool is_ample(const ToricVectorBundle& e, const PEClass& c, bool force) {
  return nef_cone(e, force).contains_interior(c.flat());
}

FujitaScan fujita_gap_scan(const ToricVectorBundle& e, bool force) {
  auto sites = nef_bpf_sites(e, force);
  QCone nef = nef_cone(sites);
  FujitaScan scan;
  for (const auto& v : hilbert_basis(nef)) scan.hilbert_basis.push_back(PEClass::from_flat(v));
  for (const auto& c : scan.hilbert_basis) {
    BpfResult r = bpf_member(sites, c);
    for (auto k : r.failing_sites) scan.gaps.push_back({c, k});
  }
  return scan;
}

CoverReport coloop_cover_check(const ToricVectorBundle& e) {
  CoverReport rep;
  for (std::size_t j = 0; j < e.m(); ++j) {
    std::optional<std::size_t> found;
    for (std::size_t c = 0; c < e.fan().max_cones.size() && !found; ++c)
      if (e.initial_matroid(c).coloops().contains(static_cast<int>(j))) found = c;
    rep.coloop_cone.push_back(found);
    if (!found) rep.covered = false;
  }
  ZMatrix d = nonnegative_form(e.diagram());
  for (const auto& circ : e.matroid().circuits())
    for (std::size_t i = 0; i < e.n(); ++i) {
      bool zero = false;
      for (int j : circ.support.elements()) zero = zero || d(i, static_cast<std::size_t>(j)) == 0;
      if (!zero) rep.zero_in_every_circuit_row = false;
    }
  return rep;
}

ExtensionReport extension_checks(const ToricVectorBundle& e, const ToricVectorBundle& ext) {
  ExtensionReport rep;
  const std::size_t m = e.m();
  auto refuse = [&](const std::string& why) {
    rep.extends = false;
    rep.problem = why;
    return rep;
  };
  if (ext.n() != e.n() || !(ext.fan().rays == e.fan().rays)) return refuse("the bundles live on different fans");
  if (ext.m() <= m) return refuse("the extension adds no columns");
  ZMatrix d = nonnegative_form(e.diagram());
  ZMatrix dx = nonnegative_form(ext.diagram());
  for (std::size_t i = 0; i < e.n(); ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (dx(i, j) != d(i, j)) return refuse("the first columns of the new diagram differ from the old diagram");
  const QMatrix& mo = e.ideal().coeffs;
  const QMatrix& mx = ext.ideal().coeffs;
  if (mx.rows() != mo.rows()) return refuse("the ideals have different numbers of generators");
  std::vector<std::size_t> first(m);
  for (std::size_t j = 0; j < m; ++j) first[j] = j;
  QMatrix head = mx.select_cols(first);
  QMatrix both = head;
  for (std::size_t i = 0; i < mo.rows(); ++i) both.append_row(mo.row(i));
  if (rank(head) != mo.rows() || rank(both) != mo.rows()) return refuse("the new ideal does not restrict to the old one");

  rep.dominance = true;
  rep.circuit_minimum = true;
  for (std::size_t i = 0; i < e.n(); ++i) {
    Integer row_max = d(i, 0);
    for (std::size_t j = 1; j < m; ++j) row_max = std::max(row_max, Integer(d(i, j)));
    std::optional<Integer> circ_max;
    for (const auto& c : e.matroid().circuits()) {
      std::optional<Integer> mn;
      for (int j : c.support.elements())
        if (!mn || d(i, static_cast<std::size_t>(j)) < *mn) mn = d(i, static_cast<std::size_t>(j));
      if (!circ_max || *mn > *circ_max) circ_max = *mn;
    }
    for (std::size_t j = m; j < ext.m(); ++j) {
      if (dx(i, j) < row_max) rep.dominance = false;
      if (circ_max && dx(i, j) <= *circ_max) rep.circuit_minimum = false;
    }
  }
  rep.zero_bound = true;
  for (std::size_t j = m; j < ext.m(); ++j) {
    long zeros = 0;
    for (std::size_t i = 0; i < e.n(); ++i) zeros += dx(i, j) == 0;
    if (zeros > e.rank() - 2) rep.zero_bound = false;
  }
  const bool ci = ci_check(e).ok || is_sparse(e);
  const bool monomial = is_monomial(e);
  rep.ci_guaranteed = ci && rep.dominance;
  rep.monomial_guaranteed = ci && monomial && rep.circuit_minimum;
  rep.uniform_monomial_guaranteed = is_uniform(e) && monomial && rep.zero_bound;
  return rep;
}

}  // namespace tvb
