#include "tvb/toric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace tvb {

ZMatrix Fan::ray_matrix() const { return ZMatrix::from_rows(rays, dim); }

namespace {

ZMatrix cone_matrix(const Fan& f, IndexSet sigma) {
  std::vector<ZVector> rows;
  for (int i : sigma.elements()) rows.push_back(f.rays[static_cast<std::size_t>(i)]);
  return ZMatrix::from_rows(rows, f.dim);
}

std::string cone_name(IndexSet s) { return "cone " + s.str(); }

}  // namespace

FanReport validate_fan(const Fan& f) {
  FanReport rep;
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.problems.push_back(msg);
  };
  const std::size_t d = f.dim;
  const std::size_t n = f.rays.size();
  if (d == 0) fail("dimension must be positive");
  if (n > 64) fail("more than 64 rays are not supported");
  if (!rep.ok) return rep;
  for (std::size_t i = 0; i < n; ++i) {
    if (f.rays[i].size() != d) {
      fail("ray " + std::to_string(i) + " has the wrong length");
      continue;
    }
    if (is_zero(f.rays[i])) fail("ray " + std::to_string(i) + " is zero");
    else if (primitive(f.rays[i]) != f.rays[i]) fail("ray " + std::to_string(i) + " is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (f.rays[j] == f.rays[i]) fail("rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
  if (f.max_cones.empty()) fail("no maximal cones");
  if (!rep.ok) return rep;

  std::set<std::uint64_t> seen;
  for (IndexSet s : f.max_cones) {
    if (!seen.insert(s.bits()).second) fail(cone_name(s) + " is listed twice");
    for (int i : s.elements())
      if (static_cast<std::size_t>(i) >= n) fail(cone_name(s) + " uses an unknown ray");
    if (static_cast<std::size_t>(s.size()) != d) {
      fail(cone_name(s) + " does not have dim rays");
      continue;
    }
  }
  if (!rep.ok) return rep;
  for (IndexSet s : f.max_cones) {
    Integer det = determinant(cone_matrix(f, s));
    if (abs(det) != 1) fail(cone_name(s) + " is not unimodular (determinant " + det.get_str() + ")");
  }
  if (!rep.ok) return rep;

  // Ridge pairing: every ridge lies in exactly two maximal cones, on opposite sides.
  std::map<std::uint64_t, std::vector<std::size_t>> ridges;
  for (std::size_t c = 0; c < f.max_cones.size(); ++c)
    for (int i : f.max_cones[c].elements()) {
      IndexSet r = f.max_cones[c];
      r.erase(i);
      ridges[r.bits()].push_back(c);
    }
  for (const auto& [bits, cones] : ridges) {
    IndexSet r(bits);
    if (cones.size() != 2) {
      fail("ridge " + r.str() + " lies in " + std::to_string(cones.size()) + " maximal cones");
      continue;
    }
    QMatrix rm = to_rational(cone_matrix(f, r));
    QMatrix normal = d > 1 ? kernel_basis(rm) : QMatrix::identity(1);
    QVector h = normal.row(0);
    int signs[2];
    for (int t = 0; t < 2; ++t) {
      IndexSet extra = f.max_cones[cones[static_cast<std::size_t>(t)]] - r;
      Rational v = dot(h, to_rational(f.rays[static_cast<std::size_t>(extra.elements().front())]));
      signs[t] = sgn(v);
    }
    if (signs[0] * signs[1] >= 0) fail("cones at ridge " + r.str() + " overlap");
  }
  if (!rep.ok) return rep;

  // Generic points: each must lie in exactly one maximal cone.
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<long> coord(-1000003, 1000003);
  for (int trial = 0; trial < 8; ++trial) {
    QVector p(d);
    for (auto& x : p) x = Rational(coord(rng), 997);
    int hits = 0;
    for (IndexSet s : f.max_cones) {
      auto lam = solve_square(to_rational(cone_matrix(f, s).transpose()), p);
      if (lam && std::all_of(lam->begin(), lam->end(), [](const Rational& q) { return q >= 0; })) ++hits;
    }
    if (hits != 1) {
      fail("a generic point lies in " + std::to_string(hits) + " maximal cones; the fan is not complete");
      break;
    }
  }
  return rep;
}

void require_valid_fan(const Fan& f) {
  FanReport r = validate_fan(f);
  if (!r.ok) throw InvalidInput("invalid fan: " + r.problems.front());
}

ClassLattice class_group(const Fan& f) {
  const std::size_t n = f.rays.size();
  const std::size_t d = f.dim;
  if (n < d) throw InvalidInput("fewer rays than the dimension");
  ClassLattice cl;
  cl.n = n;
  cl.d = d;
  // Pivot set: the d-subset with the largest indices (compared from the top) that is unimodular.
  std::vector<int> pick;
  std::vector<int> idx(d);
  std::function<bool(std::size_t, int)> choose = [&](std::size_t k, int below) -> bool {
    if (k == d) {
      IndexSet s = IndexSet::from(idx);
      if (abs(determinant(cone_matrix(f, s))) == 1) {
        pick = idx;
        return true;
      }
      return false;
    }
    for (int i = below - 1; i >= static_cast<int>(d - k - 1); --i) {
      idx[k] = i;
      if (choose(k + 1, i)) return true;
    }
    return false;
  };
  if (!choose(0, static_cast<int>(n))) throw InvalidInput("no unimodular set of rays; the fan is not smooth");
  std::sort(pick.begin(), pick.end());
  IndexSet p = IndexSet::from(pick);
  cl.eliminated_rays = pick;
  for (std::size_t i = 0; i < n; ++i)
    if (!p.contains(static_cast<int>(i))) cl.basis_rays.push_back(static_cast<int>(i));

  // Dual basis m_k of the pivot rays: U_P m_k = e_k.
  QMatrix up = to_rational(cone_matrix(f, p));
  cl.project = ZMatrix(n - d, n);
  for (std::size_t b = 0; b < cl.basis_rays.size(); ++b) cl.project(b, static_cast<std::size_t>(cl.basis_rays[b])) = 1;
  for (std::size_t k = 0; k < d; ++k) {
    QVector ek(d);
    ek[k] = 1;
    QVector m = *solve_square(up, ek);
    for (std::size_t b = 0; b < cl.basis_rays.size(); ++b) {
      Rational v = dot(to_rational(f.rays[static_cast<std::size_t>(cl.basis_rays[b])]), m);
      cl.project(b, static_cast<std::size_t>(pick[k])) = -v.get_num();
    }
  }
  cl.section = ZMatrix(n, n - d);
  for (std::size_t b = 0; b < cl.basis_rays.size(); ++b) cl.section(static_cast<std::size_t>(cl.basis_rays[b]), b) = 1;
  return cl;
}

AffineMonoid s_sigma(const Fan& f, const ClassLattice& cl, IndexSet sigma) {
  AffineMonoid s;
  for (std::size_t i = 0; i < f.rays.size(); ++i)
    if (!sigma.contains(static_cast<int>(i))) s.generators.push_back(cl.class_of_ray(i));
  // grading: sum of the dual basis, 1 on every generator
  ZMatrix g = ZMatrix::from_rows(s.generators, cl.rank());
  QVector ones(s.generators.size(), Rational(1));
  auto sol = solve_square(to_rational(g), ones);
  if (!sol) throw InvalidInput("classes outside " + sigma.str() + " are not a basis");
  s.grading = primitive(*sol);
  return s;
}

QCone c_sigma(const Fan& f, const ClassLattice& cl, IndexSet sigma) {
  std::vector<ZVector> gens;
  for (std::size_t i = 0; i < f.rays.size(); ++i)
    if (!sigma.contains(static_cast<int>(i))) gens.push_back(cl.class_of_ray(i));
  return QCone::from_generators(cl.rank(), gens);
}

QCone toric_nef_cone(const Fan& f, const ClassLattice& cl) {
  std::vector<QCone> cones;
  for (IndexSet s : f.max_cones) cones.push_back(c_sigma(f, cl, s));
  return intersect_all(cones);
}

LatticePolytope divisor_polytope(const Fan& f, const ClassLattice& cl, const ZVector& cls) {
  if (cls.size() != cl.rank()) throw InvalidInput("class has the wrong length");
  ZVector s = cl.lift(cls);
  LatticePolytope p(f.dim, false);
  for (std::size_t i = 0; i < f.rays.size(); ++i) p.add_inequality(to_rational(f.rays[i]), Rational(-s[i]));
  return p;
}

QVector ray_coordinates(const Fan& f, IndexSet sigma, std::size_t k) {
  QMatrix basis = to_rational(cone_matrix(f, sigma).transpose());
  auto c = solve_square(basis, to_rational(f.rays[k]));
  if (!c) throw InvalidInput(cone_name(sigma) + " is not a basis");
  return *c;
}

bool negative_ray_test(const Fan& f, IndexSet sigma) {
  for (std::size_t k = 0; k < f.rays.size(); ++k) {
    if (sigma.contains(static_cast<int>(k))) continue;
    for (const auto& c : ray_coordinates(f, sigma, k))
      if (c > 0) return false;
  }
  return true;
}

std::optional<std::vector<IndexSet>> is_product_of_projective_spaces(const Fan& f) {
  const int n = static_cast<int>(f.rays.size());
  for (IndexSet sigma : f.max_cones) {
    auto members = sigma.elements();
    std::vector<IndexSet> blocks;
    IndexSet covered;
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      if (sigma.contains(k)) continue;
      QVector c = ray_coordinates(f, sigma, static_cast<std::size_t>(k));
      IndexSet support;
      for (std::size_t t = 0; t < c.size(); ++t) {
        if (c[t] == 0) continue;
        if (c[t] != -1) ok = false;
        support.insert(members[t]);
      }
      if (!ok || support.empty() || !(support & covered).empty()) {
        ok = false;
        break;
      }
      covered = covered | support;
      support.insert(k);
      blocks.push_back(support);
    }
    if (!ok || !(covered == sigma)) continue;

    // The maximal cones must be exactly: drop one ray from every block.
    std::set<std::uint64_t> expected;
    std::function<void(std::size_t, IndexSet)> build = [&](std::size_t b, IndexSet acc) {
      if (b == blocks.size()) {
        expected.insert(acc.bits());
        return;
      }
      for (int drop : blocks[b].elements()) {
        IndexSet part = blocks[b];
        part.erase(drop);
        build(b + 1, acc | part);
      }
    };
    build(0, IndexSet());
    std::set<std::uint64_t> actual;
    for (IndexSet s : f.max_cones) actual.insert(s.bits());
    if (expected != actual) continue;
    std::sort(blocks.begin(), blocks.end(), [](IndexSet a, IndexSet b) { return a.elements() < b.elements(); });
    return blocks;
  }
  return std::nullopt;
}

Fan projective_space_fan(std::size_t n) {
  Fan f;
  f.dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    ZVector e(n);
    e[i] = 1;
    f.rays.push_back(e);
  }
  f.rays.push_back(ZVector(n, Integer(-1)));
  for (std::size_t drop = 0; drop <= n; ++drop) {
    IndexSet s = IndexSet::full(static_cast<int>(n + 1));
    s.erase(static_cast<int>(drop));
    f.max_cones.push_back(s);
  }
  return f;
}

Fan product_fan(const Fan& a, const Fan& b) {
  Fan f;
  f.dim = a.dim + b.dim;
  for (const auto& r : a.rays) {
    ZVector v = r;
    v.resize(f.dim);
    f.rays.push_back(v);
  }
  for (const auto& r : b.rays) {
    ZVector v(a.dim);
    v.insert(v.end(), r.begin(), r.end());
    f.rays.push_back(v);
  }
  const int shift = static_cast<int>(a.rays.size());
  for (IndexSet s : a.max_cones)
    for (IndexSet t : b.max_cones) f.max_cones.push_back(s | IndexSet(t.bits() << shift));
  return f;
}

Fan hirzebruch_fan(long a) {
  Fan f;
  f.dim = 2;
  f.rays = {ZVector{1, 0}, ZVector{0, 1}, ZVector{-1, Integer(a)}, ZVector{0, -1}};
  f.max_cones = {IndexSet{0, 1}, IndexSet{1, 2}, IndexSet{2, 3}, IndexSet{3, 0}};
  return f;
}

}  // namespace tvb
