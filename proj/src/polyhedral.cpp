#include "tvb/polyhedral.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace tvb {

namespace {

// Tight-constraint sets for the adjacency test.
class Bits {
 public:
  void set(std::size_t i) {
    if (w_.size() <= i / 64) w_.resize(i / 64 + 1, 0);
    w_[i / 64] |= (1ULL << (i % 64));
  }
  void set_all_below(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) set(i);
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.w_.resize(std::min(w_.size(), o.w_.size()));
    for (std::size_t i = 0; i < r.w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t ow = i < o.w_.size() ? o.w_[i] : 0;
      if (w_[i] & ~ow) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> w_;
};

struct DDResult {
  std::vector<ZVector> rays;
  std::vector<ZVector> lineality;
};

ZVector combine(const Integer& a, const ZVector& x, const Integer& b, const ZVector& y) {
  ZVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] - b * y[i];
  return primitive(out);
}

ZVector negated(ZVector v) {
  for (auto& z : v) z = -z;
  return v;
}

// Generators of {x : <a,x> >= 0 for every row a}. Constraints are inserted in the given order.
DDResult double_description(std::size_t d, const std::vector<ZVector>& rows) {
  std::vector<ZVector> lin;
  for (std::size_t i = 0; i < d; ++i) {
    ZVector e(d);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<ZVector> rays;
  std::vector<Bits> tight;

  for (std::size_t k = 0; k < rows.size(); ++k) {
    const ZVector& a = rows[k];
    if (a.size() != d) throw InvalidInput("constraint length differs from ambient dimension");
    std::size_t pick = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        pick = i;
        break;
      }
    if (pick < lin.size()) {
      ZVector ls = lin[pick];
      Integer s = dot(a, ls);
      if (s < 0) {
        ls = negated(ls);
        s = -s;
      }
      std::vector<ZVector> next_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == pick) continue;
        next_lin.push_back(combine(s, lin[i], dot(a, lin[i]), ls));
      }
      for (std::size_t i = 0; i < rays.size(); ++i) {
        Integer v = dot(a, rays[i]);
        if (v != 0) rays[i] = combine(s, rays[i], v, ls);
        tight[i].set(k);
      }
      Bits t;
      t.set_all_below(k);
      rays.push_back(ls);
      tight.push_back(t);
      lin = std::move(next_lin);
      continue;
    }

    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<ZVector> next;
    std::vector<Bits> next_tight;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i]);
      if (val[i] > 0) pos.push_back(i);
      if (val[i] < 0) neg.push_back(i);
      if (val[i] >= 0) {
        next.push_back(rays[i]);
        next_tight.push_back(tight[i]);
        if (val[i] == 0) next_tight.back().set(k);
      }
    }
    for (auto p : pos) {
      for (auto n : neg) {
        Bits common = tight[p] & tight[n];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (common.subset_of(tight[r])) adjacent = false;
        }
        if (!adjacent) continue;
        next.push_back(combine(val[p], rays[n], val[n], rays[p]));
        common.set(k);
        next_tight.push_back(common);
      }
    }
    rays = std::move(next);
    tight = std::move(next_tight);
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return {rays, lin};
}

std::vector<ZVector> with_negatives(std::vector<ZVector> rows, const std::vector<ZVector>& eqs) {
  for (const auto& e : eqs) {
    rows.push_back(e);
    rows.push_back(negated(e));
  }
  return rows;
}

std::vector<ZVector> primitive_nonzero(const std::vector<ZVector>& vs, std::size_t d) {
  std::vector<ZVector> out;
  for (const auto& v : vs) {
    if (v.size() != d) throw InvalidInput("vector length differs from ambient dimension");
    if (!is_zero(v)) out.push_back(primitive(v));
  }
  return out;
}

Integer floor_q(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

Integer ceil_q(const Rational& q) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c;
}

ZVector scaled_row(const QVector& row, const Rational& rhs) {
  QVector r = row;
  r.push_back(-rhs);
  return primitive(r);
}

}  // namespace

QCone QCone::from_generators(std::size_t dim, const std::vector<ZVector>& gens, const std::vector<ZVector>& lineality) {
  QCone c;
  c.dim_ = dim;
  auto g = primitive_nonzero(gens, dim);
  auto l = primitive_nonzero(lineality, dim);
  DDResult dual = double_description(dim, with_negatives(g, l));
  c.facets_ = dual.rays;
  c.equations_ = dual.lineality;
  DDResult primal = double_description(dim, with_negatives(c.facets_, c.equations_));
  c.rays_ = primal.rays;
  c.lineality_ = primal.lineality;
  return c;
}

QCone QCone::from_generators(std::size_t dim, const std::vector<QVector>& gens) {
  std::vector<ZVector> z;
  for (const auto& g : gens) z.push_back(primitive(g));
  return from_generators(dim, z);
}

QCone QCone::from_halfspaces(std::size_t dim, const std::vector<ZVector>& halfspaces, const std::vector<ZVector>& equations) {
  QCone c;
  c.dim_ = dim;
  auto h = primitive_nonzero(halfspaces, dim);
  auto e = primitive_nonzero(equations, dim);
  DDResult primal = double_description(dim, with_negatives(h, e));
  c.rays_ = primal.rays;
  c.lineality_ = primal.lineality;
  DDResult dual = double_description(dim, with_negatives(c.rays_, c.lineality_));
  c.facets_ = dual.rays;
  c.equations_ = dual.lineality;
  return c;
}

QCone QCone::from_halfspaces(std::size_t dim, const std::vector<QVector>& halfspaces) {
  std::vector<ZVector> z;
  for (const auto& h : halfspaces) z.push_back(primitive(h));
  return from_halfspaces(dim, z);
}

bool QCone::contains(const ZVector& v) const {
  if (v.size() != dim_) throw InvalidInput("point length differs from cone dimension");
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const auto& h : facets_)
    if (dot(h, v) < 0) return false;
  return true;
}

bool QCone::contains(const QVector& v) const { return contains(primitive(v)); }

bool QCone::contains_interior(const ZVector& v) const {
  if (v.size() != dim_) throw InvalidInput("point length differs from cone dimension");
  if (!equations_.empty()) return false;
  for (const auto& h : facets_)
    if (dot(h, v) <= 0) return false;
  return true;
}

bool QCone::contains_interior(const QVector& v) const { return contains_interior(primitive(v)); }

bool QCone::contains_cone(const QCone& other) const {
  for (const auto& r : other.rays_)
    if (!contains(r)) return false;
  for (const auto& l : other.lineality_)
    if (!contains(l) || !contains(negated(l))) return false;
  return true;
}

bool QCone::same_as(const QCone& other) const {
  return dim_ == other.dim_ && contains_cone(other) && other.contains_cone(*this);
}

QCone dualize(const QCone& c) {
  return QCone::from_generators(c.dim(), c.halfspaces(), c.equations());
}

QCone intersect(const QCone& a, const QCone& b) {
  if (a.dim() != b.dim()) throw InvalidInput("intersecting cones of different dimension");
  auto h = a.halfspaces();
  h.insert(h.end(), b.halfspaces().begin(), b.halfspaces().end());
  auto e = a.equations();
  e.insert(e.end(), b.equations().begin(), b.equations().end());
  return QCone::from_halfspaces(a.dim(), h, e);
}

QCone intersect_all(const std::vector<QCone>& cones) {
  if (cones.empty()) throw InvalidInput("empty intersection list");
  std::vector<ZVector> h, e;
  for (const auto& c : cones) {
    if (c.dim() != cones.front().dim()) throw InvalidInput("intersecting cones of different dimension");
    h.insert(h.end(), c.halfspaces().begin(), c.halfspaces().end());
    e.insert(e.end(), c.equations().begin(), c.equations().end());
  }
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  return QCone::from_halfspaces(cones.front().dim(), h, e);
}

bool is_smooth_cone(const QCone& c) {
  if (!c.is_pointed()) throw InvalidInput("smoothness test needs a pointed cone");
  const auto& g = c.generators();
  if (g.empty()) return true;
  ZMatrix m = ZMatrix::from_rows(g, c.dim());
  if (rank(m) != g.size()) return false;
  return hermite_extends_to_lattice_basis(m);
}

namespace {

// Pulling triangulation of the face spanned by `face` (indices into rays) of dimension k.
void pull(const std::vector<ZVector>& rays, const std::vector<std::vector<bool>>& on_facet, const std::vector<int>& face,
          std::size_t k, std::vector<std::vector<int>>& out) {
  if (k == 1) {
    out.push_back({face.front()});
    return;
  }
  if (face.size() == k) {
    out.push_back(face);
    return;
  }
  const int apex = face.front();
  std::set<std::vector<int>> seen;
  for (const auto& f : on_facet) {
    if (f[static_cast<std::size_t>(apex)]) continue;
    std::vector<int> sub;
    for (int i : face)
      if (f[static_cast<std::size_t>(i)]) sub.push_back(i);
    if (sub.size() + 1 < k || !seen.insert(sub).second) continue;
    std::vector<ZVector> vs;
    for (int i : sub) vs.push_back(rays[static_cast<std::size_t>(i)]);
    if (rank(ZMatrix::from_rows(vs, rays.front().size())) != k - 1) continue;
    std::vector<std::vector<int>> pieces;
    pull(rays, on_facet, sub, k - 1, pieces);
    for (auto& p : pieces) {
      p.insert(p.begin(), apex);
      out.push_back(std::move(p));
    }
  }
}

std::vector<ZVector> hilbert_basis_full(const QCone& c) {
  const std::size_t k = c.dim();
  const auto& rays = c.generators();
  std::vector<std::vector<bool>> on_facet;
  for (const auto& h : c.halfspaces()) {
    std::vector<bool> t(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) t[i] = dot(h, rays[i]) == 0;
    on_facet.push_back(std::move(t));
  }
  std::vector<int> all(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) all[i] = static_cast<int>(i);
  std::vector<std::vector<int>> simplices;
  pull(rays, on_facet, all, k, simplices);

  std::set<ZVector> candidates(rays.begin(), rays.end());
  for (const auto& s : simplices) {
    ZMatrix v(k, k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i) v(i, j) = rays[static_cast<std::size_t>(s[j])][i];
    ColumnHermite ch = column_hermite(v);
    QMatrix vq = to_rational(v);
    ZVector rep(k);
    std::vector<Integer> bound(k);
    for (std::size_t i = 0; i < k; ++i) bound[i] = abs(ch.h(i, i));
    // mixed-radix walk over the box of coset representatives
    while (true) {
      auto lambda = solve_square(vq, to_rational(rep));
      ZVector p(k);
      QVector pq(k);
      for (std::size_t j = 0; j < k; ++j) {
        Rational f = (*lambda)[j] - Rational(floor_q((*lambda)[j]));
        for (std::size_t i = 0; i < k; ++i) pq[i] += f * vq(i, j);
      }
      if (!is_zero(pq)) candidates.insert(to_integer(pq));
      std::size_t i = 0;
      while (i < k) {
        rep[i] += 1;
        if (rep[i] < bound[i]) break;
        rep[i] = 0;
        ++i;
      }
      if (i == k) break;
    }
  }

  ZVector grade(k);
  for (const auto& h : c.halfspaces())
    for (std::size_t i = 0; i < k; ++i) grade[i] += h[i];
  std::vector<std::pair<Integer, ZVector>> sorted;
  for (const auto& x : candidates) sorted.emplace_back(dot(grade, x), x);
  std::sort(sorted.begin(), sorted.end());
  std::vector<ZVector> kept;
  for (const auto& [g, x] : sorted) {
    bool reducible = false;
    for (const auto& y : kept) {
      ZVector diff(k);
      for (std::size_t i = 0; i < k; ++i) diff[i] = x[i] - y[i];
      if (c.contains(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) kept.push_back(x);
  }
  return kept;
}

}  // namespace

std::vector<ZVector> hilbert_basis(const QCone& c) {
  if (!c.is_pointed()) throw InvalidInput("Hilbert basis of a cone with lineality");
  if (c.generators().empty()) return {};
  const std::size_t d = c.dim();
  std::vector<ZVector> out;
  if (c.is_full_dimensional()) {
    out = hilbert_basis_full(c);
  } else {
    // coordinates on the saturated lattice span(C) ∩ Z^d
    ZMatrix eq = ZMatrix::from_rows(c.equations(), d);
    ZMatrix basis = integer_kernel_basis(eq);
    const std::size_t k = basis.rows();
    QMatrix bt = to_rational(basis.transpose());
    std::vector<ZVector> coords;
    for (const auto& r : c.generators()) {
      auto y = solve_any(bt, to_rational(r));
      if (!y) throw Error("generator outside its own span");
      coords.push_back(to_integer(*y));
    }
    QCone inner = QCone::from_generators(k, coords);
    for (const auto& y : hilbert_basis_full(inner)) {
      ZVector x(d);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < d; ++i) x[i] += y[j] * basis(j, i);
      out.push_back(std::move(x));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LatticePolytope::LatticePolytope(std::size_t d, bool nonneg)
    : dim(d), eq_a(0, d), ineq_g(0, d), nonnegative(nonneg) {}

void LatticePolytope::add_equality(const QVector& row, const Rational& rhs) {
  if (row.size() != dim) throw InvalidInput("equality length differs from dimension");
  eq_a.append_row(row);
  eq_b.push_back(rhs);
}

void LatticePolytope::add_inequality(const QVector& row, const Rational& rhs) {
  if (row.size() != dim) throw InvalidInput("inequality length differs from dimension");
  ineq_g.append_row(row);
  ineq_h.push_back(rhs);
}

bool LatticePolytope::satisfies(const ZVector& x) const {
  QVector q = to_rational(x);
  for (std::size_t i = 0; i < eq_a.rows(); ++i)
    if (dot(eq_a.row(i), q) != eq_b[i]) return false;
  for (std::size_t i = 0; i < ineq_g.rows(); ++i)
    if (dot(ineq_g.row(i), q) < ineq_h[i]) return false;
  if (nonnegative)
    for (const auto& z : x)
      if (z < 0) return false;
  return true;
}

std::vector<QVector> LatticePolytope::vertices() const {
  const std::size_t h = dim + 1;
  std::vector<ZVector> hs, eqs;
  for (std::size_t i = 0; i < eq_a.rows(); ++i) eqs.push_back(scaled_row(eq_a.row(i), eq_b[i]));
  for (std::size_t i = 0; i < ineq_g.rows(); ++i) hs.push_back(scaled_row(ineq_g.row(i), ineq_h[i]));
  if (nonnegative)
    for (std::size_t j = 0; j < dim; ++j) {
      ZVector e(h);
      e[j] = 1;
      hs.push_back(e);
    }
  ZVector t(h);
  t[dim] = 1;
  hs.push_back(t);
  QCone hom = QCone::from_halfspaces(h, hs, eqs);
  std::vector<QVector> out;
  bool recession = !hom.lineality().empty();
  for (const auto& r : hom.generators()) {
    if (r[dim] == 0) {
      recession = true;
      continue;
    }
    QVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = Rational(r[i], r[dim]);
    out.push_back(std::move(v));
  }
  if (!out.empty() && recession) throw InvalidInput("polytope is unbounded");
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ZVector> LatticePolytope::lattice_points() const {
  const auto verts = vertices();
  if (verts.empty()) return {};

  // Solve the equalities for pivot variables: x_P = c - R x_F.
  const std::size_t rows = eq_a.rows();
  QMatrix m(rows, dim + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = eq_a(i, j);
    m(i, dim) = eq_b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j <= dim; ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j <= dim; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j <= dim; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < dim; ++j)
    if (!is_pivot[j]) free.push_back(j);
  const std::size_t nf = free.size();

  // Every constraint as  sum_k coef[k] x_free[k] >= rhs.
  struct Row {
    QVector coef;
    Rational rhs;
  };
  std::vector<Row> cons;
  auto express = [&](const QVector& g, const Rational& h) {
    Row row{QVector(nf), h};
    for (std::size_t k = 0; k < nf; ++k) row.coef[k] = g[free[k]];
    for (std::size_t p = 0; p < pivots.size(); ++p) {
      const Rational& gp = g[pivots[p]];
      if (gp == 0) continue;
      row.rhs -= gp * m(p, dim);
      for (std::size_t k = 0; k < nf; ++k) row.coef[k] -= gp * m(p, free[k]);
    }
    cons.push_back(std::move(row));
  };
  for (std::size_t i = 0; i < ineq_g.rows(); ++i) express(ineq_g.row(i), ineq_h[i]);
  if (nonnegative)
    for (std::size_t j = 0; j < dim; ++j) {
      QVector e(dim);
      e[j] = 1;
      express(e, 0);
    }

  std::vector<Integer> lo(nf), hi(nf);
  for (std::size_t k = 0; k < nf; ++k) {
    Rational mn = verts.front()[free[k]], mx = mn;
    for (const auto& v : verts) {
      mn = std::min(mn, v[free[k]]);
      mx = std::max(mx, v[free[k]]);
    }
    lo[k] = ceil_q(mn);
    hi[k] = floor_q(mx);
    if (lo[k] > hi[k]) return {};
  }

  // best[c][k]: largest possible contribution of free variables k.. to constraint c
  std::vector<std::vector<Rational>> best(cons.size(), std::vector<Rational>(nf + 1));
  for (std::size_t c = 0; c < cons.size(); ++c)
    for (std::size_t k = nf; k-- > 0;) {
      const Rational& a = cons[c].coef[k];
      Rational top = a > 0 ? a * Rational(hi[k]) : a * Rational(lo[k]);
      best[c][k] = best[c][k + 1] + top;
    }

  std::vector<ZVector> out;
  ZVector xf(nf);
  std::vector<Rational> partial(cons.size());
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    for (std::size_t c = 0; c < cons.size(); ++c)
      if (partial[c] + best[c][k] < cons[c].rhs) return;
    if (k == nf) {
      ZVector x(dim);
      for (std::size_t f = 0; f < nf; ++f) x[free[f]] = xf[f];
      for (std::size_t p = 0; p < pivots.size(); ++p) {
        Rational v = m(p, dim);
        for (std::size_t f = 0; f < nf; ++f) v -= m(p, free[f]) * Rational(xf[f]);
        if (v.get_den() != 1) return;
        x[pivots[p]] = v.get_num();
      }
      if (satisfies(x)) out.push_back(std::move(x));
      return;
    }
    for (Integer v = lo[k]; v <= hi[k]; ++v) {
      xf[k] = v;
      for (std::size_t c = 0; c < cons.size(); ++c) partial[c] += cons[c].coef[k] * Rational(v);
      walk(k + 1);
      for (std::size_t c = 0; c < cons.size(); ++c) partial[c] -= cons[c].coef[k] * Rational(v);
    }
  };
  walk(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ZVector> PolytopeImage::distinct_marked() const {
  std::vector<ZVector> out = marked;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QCone linear_image(const ZMatrix& m, const QCone& c) {
  if (m.cols() != c.dim()) throw InvalidInput("map and cone dimensions differ");
  std::vector<ZVector> gens, lin;
  for (const auto& r : c.generators()) gens.push_back(mul(m, r));
  for (const auto& l : c.lineality()) lin.push_back(mul(m, l));
  return QCone::from_generators(m.rows(), gens, lin);
}

std::vector<QVector> convex_hull_vertices(const std::vector<QVector>& points) {
  if (points.empty()) return {};
  const std::size_t d = points.front().size();
  std::vector<ZVector> lifted;
  for (const auto& p : points) {
    QVector q = p;
    q.push_back(1);
    lifted.push_back(primitive(q));
  }
  QCone c = QCone::from_generators(d + 1, lifted);
  std::vector<QVector> out;
  for (const auto& r : c.generators()) {
    QVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = Rational(r[i], r[d]);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PolytopeImage linear_image(const ZMatrix& m, const LatticePolytope& p) {
  if (m.cols() != p.dim) throw InvalidInput("map and polytope dimensions differ");
  PolytopeImage img;
  QMatrix mq = to_rational(m);
  std::vector<QVector> mapped;
  for (const auto& v : p.vertices()) mapped.push_back(mul(mq, v));
  img.vertices = convex_hull_vertices(mapped);
  for (const auto& x : p.lattice_points()) img.marked.push_back(mul(m, x));
  return img;
}

void AffineMonoid::check_grading() const {
  for (const auto& g : generators) {
    if (g.size() != grading.size()) throw InvalidInput("generator length differs from grading length");
    if (dot(grading, g) < 0) throw InvalidInput("grading is negative on a generator");
  }
  for (const auto& f : free_generators)
    if (f.size() != grading.size() || dot(grading, f) != 0) throw InvalidInput("grading is nonzero on a free generator");
}

ZVector AffineMonoid::recombine(const Witness& w) const {
  ZVector v(grading.size());
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += w.coefficients[i] * generators[i][j];
  for (std::size_t i = 0; i < free_generators.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += w.free_coefficients[i] * free_generators[i][j];
  return v;
}

std::optional<AffineMonoid::Witness> AffineMonoid::member(const ZVector& v) const {
  check_grading();
  if (v.size() != grading.size()) throw InvalidInput("point length differs from grading length");
  const std::size_t d = v.size();
  std::vector<std::size_t> graded, flat;
  std::vector<Integer> deg(generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    deg[i] = dot(grading, generators[i]);
    (deg[i] > 0 ? graded : flat).push_back(i);
  }
  const Integer target = dot(grading, v);
  if (target < 0) return std::nullopt;

  // Zero-degree part: columns = flat generators then free generators.
  const std::size_t nz = flat.size() + free_generators.size();
  QMatrix z(d, nz);
  for (std::size_t k = 0; k < flat.size(); ++k)
    for (std::size_t j = 0; j < d; ++j) z(j, k) = generators[flat[k]][j];
  for (std::size_t k = 0; k < free_generators.size(); ++k)
    for (std::size_t j = 0; j < d; ++j) z(j, flat.size() + k) = free_generators[k][j];
  const bool independent = rank(z) == nz;
  if (!independent && !free_generators.empty())
    throw InvalidInput("grading does not bound the search: dependent free generators");
  if (!independent) {
    std::vector<ZVector> fl;
    for (auto i : flat) fl.push_back(generators[i]);
    if (!QCone::from_generators(d, fl).is_pointed())
      throw InvalidInput("grading does not bound the search: degree-zero generators span a line");
  }

  Witness w;
  w.coefficients.assign(generators.size(), 0);
  w.free_coefficients.assign(free_generators.size(), 0);

  auto settle = [&](const ZVector& residual) -> bool {
    if (nz == 0) return is_zero(residual);
    if (independent) {
      auto sol = solve_any(z, to_rational(residual));
      if (!sol) return false;
      for (std::size_t k = 0; k < nz; ++k) {
        if ((*sol)[k].get_den() != 1) return false;
        if (k < flat.size() && (*sol)[k] < 0) return false;
      }
      for (std::size_t k = 0; k < flat.size(); ++k) w.coefficients[flat[k]] = (*sol)[k].get_num();
      for (std::size_t k = 0; k < free_generators.size(); ++k)
        w.free_coefficients[k] = (*sol)[flat.size() + k].get_num();
      return true;
    }
    LatticePolytope p(flat.size());
    for (std::size_t j = 0; j < d; ++j) {
      QVector row(flat.size());
      for (std::size_t k = 0; k < flat.size(); ++k) row[k] = z(j, k);
      p.add_equality(row, residual[j]);
    }
    auto pts = p.lattice_points();
    if (pts.empty()) return false;
    for (std::size_t k = 0; k < flat.size(); ++k) w.coefficients[flat[k]] = pts.front()[k];
    return true;
  };

  ZVector residual = v;
  std::function<bool(std::size_t, Integer)> search = [&](std::size_t idx, Integer left) -> bool {
    if (idx == graded.size()) return left == 0 && settle(residual);
    const std::size_t g = graded[idx];
    const Integer most = left / deg[g];
    for (Integer c = 0; c <= most; ++c) {
      w.coefficients[g] = c;
      if (search(idx + 1, left - c * deg[g])) return true;
      for (std::size_t j = 0; j < d; ++j) residual[j] -= generators[g][j];
    }
    for (std::size_t j = 0; j < d; ++j) residual[j] += (most + 1) * generators[g][j];
    w.coefficients[g] = 0;
    return false;
  };
  if (!search(0, target)) return std::nullopt;
  return w;
}

}  // namespace tvb
