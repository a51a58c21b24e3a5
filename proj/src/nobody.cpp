#include "tvb/nobody.hpp"

#include <algorithm>
#include <functional>

namespace tvb {

namespace {

std::size_t extra_count(const ToricVectorBundle& e) { return e.fixtures().extra_columns.size(); }

void check_fixture_shape(const ToricVectorBundle& e) {
  const auto& fx = e.fixtures();
  if (fx.extra_degrees.size() != fx.extra_columns.size())
    throw InvalidInput("fixture extra columns and extra degrees differ in number");
  for (const auto& c : fx.extra_columns)
    if (c.size() != e.n()) throw InvalidInput("fixture column length differs from the number of rays");
}

// Row echelon set built incrementally. Rows are reduced against earlier pivots only,
// which is enough for membership tests.
class Echelon {
 public:
  explicit Echelon(std::size_t width) : width_(width) {}

  bool reduces_to_zero(QVector v) const {
    reduce(v);
    return is_zero(v);
  }
  bool add(QVector v) {
    reduce(v);
    for (std::size_t p = 0; p < width_; ++p)
      if (v[p] != 0) {
        rows_.push_back({p, std::move(v)});
        return true;
      }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(QVector& v) const {
    for (const auto& [p, r] : rows_) {
      if (v[p] == 0) continue;
      Rational f = v[p] / r[p];
      for (std::size_t k = 0; k < width_; ++k)
        if (r[k] != 0) v[k] -= f * r[k];
    }
  }
  std::size_t width_;
  std::vector<std::pair<std::size_t, QVector>> rows_;
};

QVector unit(std::size_t width, std::size_t k) {
  QVector v(width);
  v[k] = 1;
  return v;
}

// Homogenized circuit X^{D_j - delta} Y_j summed with the circuit coefficients.
struct CircuitForm {
  std::vector<std::pair<ZVector, Rational>> terms;  // exponent vectors in (b; z; a)
  PEClass degree;
};

std::vector<CircuitForm> circuit_forms(const ToricVectorBundle& e) {
  const std::size_t n = e.n(), m = e.m(), k = extra_count(e);
  const ZMatrix& d = e.diagram();
  std::vector<CircuitForm> out;
  for (const Circuit& c : e.matroid().circuits()) {
    ZVector delta(n);
    auto supp = c.support.indices();
    for (std::size_t i = 0; i < n; ++i) {
      delta[i] = d(i, supp.front());
      for (std::size_t j : supp) delta[i] = std::min(delta[i], d(i, j));
    }
    CircuitForm f;
    for (std::size_t j : supp) {
      ZVector x(m + k + n);
      x[j] = 1;
      for (std::size_t i = 0; i < n; ++i) x[m + k + i] = d(i, j) - delta[i];
      f.terms.push_back({x, c.coefficients[j]});
    }
    f.degree.alpha = e.class_lattice().class_of(delta);
    f.degree.beta = 1;
    out.push_back(std::move(f));
  }
  return out;
}

PEClass minus(const PEClass& a, const PEClass& b) {
  PEClass c = a;
  for (std::size_t t = 0; t < c.alpha.size(); ++t) c.alpha[t] -= b.alpha[t];
  c.beta -= b.beta;
  return c;
}

void enumerate_monomials(std::size_t vars, int degree, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(vars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (v + 1 == vars) {
      cur[v] = left;
      out.push_back(cur);
      return;
    }
    for (int t = left; t >= 0; --t) {
      cur[v] = t;
      rec(v + 1, left - t);
    }
  };
  if (vars == 0) {
    if (degree == 0) out.push_back({});
    return;
  }
  rec(0, degree);
}

}  // namespace

NOMatrix build_M(const ToricVectorBundle& e, const FlagOfFlats& flag) {
  check_fixture_shape(e);
  const auto& fx = e.fixtures();
  const std::size_t n = e.n(), m = e.m(), k = extra_count(e);
  const std::size_t cols = m + k + n;
  NOMatrix out;
  out.flag = flag;
  ZMatrix& mm = out.M;
  for (std::size_t i = 0; i < n; ++i) {
    ZVector row(cols);
    for (std::size_t j = 0; j < m; ++j) row[j] = e.diagram()(i, j);
    for (std::size_t t = 0; t < k; ++t) row[m + t] = fx.extra_columns[t][i];
    row[m + k + i] = -1;
    mm.append_row(row);
  }
  ZVector sym(cols);
  for (std::size_t j = 0; j < m; ++j) sym[j] = 1;
  for (std::size_t t = 0; t < k; ++t) sym[m + t] = fx.extra_degrees[t].beta;
  mm.append_row(sym);

  if (!fx.extra_M_rows.empty()) {
    out.fixture_rows = true;
    for (const auto& r : fx.extra_M_rows) {
      if (r.size() != cols) throw InvalidInput("fixture M row has length " + std::to_string(r.size()) + ", expected " + std::to_string(cols));
      mm.append_row(r);
    }
    return out;
  }
  if (!is_maximal_flag(e.matroid(), flag)) throw InvalidInput("flag is not a maximal flag of flats");
  for (std::size_t f = 1; f < flag.chain.size(); ++f) {
    ZVector row(cols);
    for (int j : flag.chain[f].elements()) row[static_cast<std::size_t>(j)] = 1;
    mm.append_row(row);
  }
  return out;
}

std::string to_string(PrimeCertificate c) {
  switch (c) {
    case PrimeCertificate::sparse: return "sparse";
    case PrimeCertificate::interior_row: return "interior_row";
    case PrimeCertificate::none: return "none";
  }
  return "none";
}

PrimeCertificate precondition_certificate(const ToricVectorBundle& e, const FlagOfFlats& flag) {
  if (is_sparse(e)) return PrimeCertificate::sparse;
  for (std::size_t i = 0; i < e.n(); ++i) {
    auto face = row_in_open_maximal_face(e.matroid(), to_rational(e.diagram().row(i)));
    if (face && *face == flag) return PrimeCertificate::interior_row;
  }
  return PrimeCertificate::none;
}

QCone global_body(const NOMatrix& m) {
  std::vector<ZVector> cols;
  for (std::size_t j = 0; j < m.M.cols(); ++j) cols.push_back(m.M.col(j));
  return QCone::from_generators(m.M.rows(), cols);
}

LatticePolytope p_alpha_beta(const ToricVectorBundle& e, const PEClass& c) {
  check_fixture_shape(e);
  const auto& cl = e.class_lattice();
  if (c.alpha.size() != cl.rank()) throw InvalidInput("class has " + std::to_string(c.alpha.size()) + " coordinates, expected " + std::to_string(cl.rank()));
  const auto& fx = e.fixtures();
  const std::size_t n = e.n(), m = e.m(), k = extra_count(e);
  LatticePolytope p(m + k + n);
  std::vector<ZVector> dcls;
  for (std::size_t j = 0; j < m; ++j) dcls.push_back(e.column_class(j));
  for (std::size_t t = 0; t < cl.rank(); ++t) {
    QVector row(m + k + n);
    for (std::size_t j = 0; j < m; ++j) row[j] = dcls[j][t];
    for (std::size_t s = 0; s < k; ++s) row[m + s] = fx.extra_degrees[s].alpha[t];
    for (std::size_t i = 0; i < n; ++i) row[m + k + i] = -cl.class_of_ray(i)[t];
    p.add_equality(row, c.alpha[t]);
  }
  QVector sym(m + k + n);
  for (std::size_t j = 0; j < m; ++j) sym[j] = 1;
  for (std::size_t s = 0; s < k; ++s) sym[m + s] = fx.extra_degrees[s].beta;
  p.add_equality(sym, c.beta);
  return p;
}

std::string NOBody::label() const {
  return certificate == PrimeCertificate::none ? "candidate (prime-cone hypothesis unverified)" : "certified";
}

NOBody nobody_of_class(const ToricVectorBundle& e, const NOMatrix& m, const PEClass& c) {
  NOBody out;
  out.source = p_alpha_beta(e, c);
  out.image = linear_image(m.M, out.source);
  out.certificate = m.fixture_rows ? PrimeCertificate::none : precondition_certificate(e, m.flag);
  return out;
}

CayleyData cayley_polytope(const ToricVectorBundle& e, const PEClass& c) {
  if (extra_count(e) != 0) throw InvalidInput("Cayley structure needs a bundle generated in Sym-degree 1");
  const auto& cl = e.class_lattice();
  const Fan& fan = e.fan();
  const std::size_t m = e.m(), d = fan.dim;
  CayleyData out;
  for (std::size_t j = 0; j < m; ++j) {
    ZVector cls = e.column_class(j);
    for (std::size_t t = 0; t < cls.size(); ++t) cls[t] = c.beta * cls[t] - c.alpha[t];
    out.fibers.push_back(divisor_polytope(fan, cl, cls));
    if (out.fibers.back().lattice_points().empty()) out.ineffective_columns.push_back(j);
  }

  // a_i = <u_i,x> + s(sum b_j d_j - alpha)_i, with s the fixed section.
  LatticePolytope& p = out.total;
  p = LatticePolytope(m + d, false);
  QVector sum_b(m + d);
  for (std::size_t j = 0; j < m; ++j) {
    QVector row(m + d);
    row[j] = 1;
    p.add_inequality(row, 0);
    sum_b[j] = 1;
  }
  p.add_equality(sum_b, c.beta);
  std::vector<ZVector> lifts;
  for (std::size_t j = 0; j < m; ++j) lifts.push_back(cl.lift(e.column_class(j)));
  ZVector s_alpha = cl.lift(c.alpha);
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    QVector row(m + d);
    for (std::size_t j = 0; j < m; ++j) row[j] = lifts[j][i];
    for (std::size_t t = 0; t < d; ++t) row[m + t] = fan.rays[i][t];
    p.add_inequality(row, s_alpha[i]);
  }
  return out;
}

std::optional<Rational> weight_quasivaluation(const ToricVectorBundle& e, const QVector& w, const Polynomial& f) {
  const std::size_t m = e.m();
  if (w.size() != m) throw InvalidInput("weight has the wrong length");
  std::optional<int> degree;
  for (const auto& [expo, coeff] : f) {
    if (coeff == 0) continue;
    if (expo.size() != m) throw InvalidInput("exponent vector has the wrong length");
    int deg = 0;
    for (int x : expo) {
      if (x < 0) throw InvalidInput("negative exponent");
      deg += x;
    }
    if (degree && *degree != deg) throw InvalidInput("polynomial is not homogeneous");
    degree = deg;
  }
  if (!degree) return std::nullopt;
  if (*degree > 4) throw InvalidInput("degree cap exceeded: quasivaluation supports degree at most 4");
  if (*degree == 0) return Rational(0);

  std::vector<std::vector<int>> monos;
  enumerate_monomials(m, *degree, monos);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t t = 0; t < monos.size(); ++t) index[monos[t]] = t;
  const std::size_t width = monos.size();

  Echelon ech(width);
  std::vector<std::vector<int>> lower;
  enumerate_monomials(m, *degree - 1, lower);
  const QMatrix& coeffs = e.ideal().coeffs;
  for (std::size_t g = 0; g < coeffs.rows(); ++g)
    for (const auto& mu : lower) {
      QVector v(width);
      for (std::size_t j = 0; j < m; ++j) {
        if (coeffs(g, j) == 0) continue;
        auto x = mu;
        ++x[j];
        v[index.at(x)] += coeffs(g, j);
      }
      ech.add(v);
    }

  QVector target(width);
  for (const auto& [expo, coeff] : f)
    if (coeff != 0) target[index.at(expo)] += coeff;
  if (ech.reduces_to_zero(target)) return std::nullopt;

  std::vector<std::pair<Rational, std::size_t>> weighted;
  for (std::size_t t = 0; t < width; ++t) {
    Rational s = 0;
    for (std::size_t j = 0; j < m; ++j) s += w[j] * monos[t][j];
    weighted.push_back({s, t});
  }
  std::sort(weighted.begin(), weighted.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t t = 0; t < weighted.size();) {
    const Rational level = weighted[t].first;
    for (; t < weighted.size() && weighted[t].first == level; ++t) ech.add(unit(width, weighted[t].second));
    if (ech.reduces_to_zero(target)) return level;
  }
  throw Error("quasivaluation: target outside the span of all monomials");
}

std::optional<Rational> weight_quasivaluation(const ToricVectorBundle& e, std::size_t row, const Polynomial& f) {
  if (row >= e.n()) throw InvalidInput("row index out of range");
  return weight_quasivaluation(e, to_rational(e.diagram().row(row)), f);
}

namespace {

struct GradedPiece {
  std::vector<ZVector> monomials;
  std::map<ZVector, std::size_t> index;
  std::vector<QVector> relations;
};

GradedPiece graded_piece(const ToricVectorBundle& e, const PEClass& c) {
  GradedPiece g;
  g.monomials = p_alpha_beta(e, c).lattice_points();
  for (std::size_t t = 0; t < g.monomials.size(); ++t) g.index[g.monomials[t]] = t;
  for (const CircuitForm& form : circuit_forms(e)) {
    PEClass rest = minus(c, form.degree);
    if (rest.beta < 0) continue;
    for (const ZVector& mu : p_alpha_beta(e, rest).lattice_points()) {
      QVector v(g.monomials.size());
      for (const auto& [x, coeff] : form.terms) {
        ZVector prod = mu;
        for (std::size_t t = 0; t < prod.size(); ++t) prod[t] += x[t];
        v[g.index.at(prod)] += coeff;
      }
      g.relations.push_back(std::move(v));
    }
  }
  return g;
}

}  // namespace

SectionSpace section_space(const ToricVectorBundle& e, const PEClass& c) {
  GradedPiece g = graded_piece(e, c);
  Echelon ech(g.monomials.size());
  for (auto& r : g.relations) ech.add(r);
  SectionSpace out;
  out.monomials = std::move(g.monomials);
  out.relation_rank = ech.rank();
  return out;
}

std::vector<ValuationLeaf> valuation_leaves(const ToricVectorBundle& e, const NOMatrix& m, const PEClass& c) {
  GradedPiece g = graded_piece(e, c);
  const std::size_t width = g.monomials.size();
  Echelon ech(width);
  for (auto& r : g.relations) ech.add(r);

  std::vector<std::pair<ZVector, std::size_t>> valued;
  for (std::size_t t = 0; t < width; ++t) valued.push_back({mul(m.M, g.monomials[t]), t});
  std::sort(valued.begin(), valued.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

  std::vector<ValuationLeaf> out;
  for (std::size_t t = 0; t < valued.size();) {
    ValuationLeaf leaf;
    leaf.value = valued[t].first;
    for (; t < valued.size() && valued[t].first == leaf.value; ++t)
      if (ech.add(unit(width, valued[t].second))) ++leaf.dimension;
    if (leaf.dimension > 0) out.push_back(std::move(leaf));
  }
  return out;
}

}  // namespace tvb
