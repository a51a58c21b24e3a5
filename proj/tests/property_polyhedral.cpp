// Randomized checks of the cone and polytope routines against box enumeration.

#include <functional>
#include <map>
#include <random>

#include "doctest.h"
#include "tvb/polyhedral.hpp"

using namespace tvb;

namespace {

constexpr int kCases = 200;

std::mt19937_64& rng() {
  static std::mt19937_64 g(0xc0ffee);
  return g;
}

long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

ZVector random_vector(std::size_t d, long r) {
  ZVector v(d);
  for (auto& x : v) x = pick(-r, r);
  return v;
}

QCone random_cone(std::size_t d) {
  std::vector<ZVector> gens;
  long k = pick(1, 6);
  for (long i = 0; i < k; ++i) gens.push_back(random_vector(d, 3));
  if (pick(0, 3) == 0) return QCone::from_halfspaces(d, gens);
  return QCone::from_generators(d, gens);
}

// Full-dimensional pointed cone with small generators.
QCone random_pointed_cone(std::size_t d, long& span) {
  for (;;) {
    std::vector<ZVector> gens;
    long k = pick(static_cast<long>(d), static_cast<long>(d) + 2);
    for (long i = 0; i < k; ++i) gens.push_back(random_vector(d, 3));
    QCone c = QCone::from_generators(d, gens);
    if (!c.is_pointed() || !c.is_full_dimensional()) continue;
    span = 1;
    for (const auto& g : c.generators())
      for (const auto& x : g) span = std::max(span, std::abs(x.get_si()));
    return c;
  }
}

void for_box(std::size_t d, long r, const std::function<void(const ZVector&)>& fn) {
  ZVector x(d, Integer(-r));
  for (;;) {
    fn(x);
    std::size_t i = 0;
    while (i < d && x[i] == r) x[i++] = -r;
    if (i == d) return;
    x[i] += 1;
  }
}

Integer ev(const ZVector& a, const ZVector& x) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

}  // namespace

TEST_CASE("dualize is an involution") {
  for (int t = 0; t < kCases; ++t) {
    std::size_t d = static_cast<std::size_t>(pick(1, 4));
    QCone c = random_cone(d);
    QCone dual = dualize(c);
    CAPTURE(t);
    CHECK(dualize(dual).same_as(c));
    for (const auto& g : c.generators())
      for (const auto& h : dual.generators()) CHECK(ev(g, h) >= 0);
    for (const auto& l : c.lineality()) {
      for (const auto& h : dual.generators()) CHECK(ev(l, h) == 0);
      for (const auto& h : dual.lineality()) CHECK(ev(l, h) == 0);
    }
    for (const auto& g : c.generators()) CHECK(c.contains(g));
  }
}

TEST_CASE("Hilbert bases generate every lattice point of the cone") {
  for (int t = 0; t < kCases; ++t) {
    std::size_t d = static_cast<std::size_t>(pick(2, 3));
    long span = 1;
    QCone c = random_pointed_cone(d, span);
    auto basis = hilbert_basis(c);
    CAPTURE(t);
    // Sum of the facet normals is positive on the pointed cone minus the origin.
    ZVector grading(d);
    for (const auto& h : c.halfspaces())
      for (std::size_t i = 0; i < d; ++i) grading[i] += h[i];
    for (const auto& h : basis) {
      CHECK(c.contains(h));
      CHECK(ev(grading, h) > 0);
    }
    std::map<ZVector, bool> memo;
    std::function<bool(const ZVector&)> generated = [&](const ZVector& x) {
      if (ev(grading, x) == 0) return true;
      if (auto it = memo.find(x); it != memo.end()) return it->second;
      bool ok = false;
      for (const auto& h : basis) {
        ZVector y(d);
        for (std::size_t i = 0; i < d; ++i) y[i] = x[i] - h[i];
        if (c.contains(y) && generated(y)) {
          ok = true;
          break;
        }
      }
      return memo[x] = ok;
    };
    std::vector<ZVector> points;
    const long box = 3 * span;
    for_box(d, box, [&](const ZVector& x) {
      if (c.contains(x)) points.push_back(x);
    });
    for (const auto& x : points) CHECK(generated(x));
    // No basis element splits as a sum of two nonzero lattice points of the box.
    for (const auto& h : basis)
      for (const auto& p : points) {
        if (ev(grading, p) == 0 || p == h) continue;
        ZVector q(d);
        for (std::size_t i = 0; i < d; ++i) q[i] = h[i] - p[i];
        CHECK_FALSE(c.contains(q));
      }
  }
}

TEST_CASE("lattice points agree with box enumeration") {
  for (int t = 0; t < kCases; ++t) {
    std::size_t d = static_cast<std::size_t>(pick(1, 3));
    long r = pick(1, 4);
    bool nonneg = pick(0, 3) == 0;
    LatticePolytope p(d, nonneg);
    std::vector<std::pair<ZVector, Integer>> ineqs;
    for (std::size_t i = 0; i < d; ++i) {
      ZVector e(d), f(d);
      e[i] = 1;
      f[i] = -1;
      ineqs.push_back({e, Integer(-r)});
      ineqs.push_back({f, Integer(-r)});
    }
    long k = pick(0, 3);
    for (long i = 0; i < k; ++i) ineqs.push_back({random_vector(d, 3), Integer(pick(-6, 1))});
    for (const auto& [g, h] : ineqs) p.add_inequality(to_rational(g), Rational(h));
    std::optional<std::pair<ZVector, Integer>> eq;
    if (d > 1 && pick(0, 2) == 0) {
      eq = std::pair{random_vector(d, 2), Integer(pick(-2, 2))};
      p.add_equality(to_rational(eq->first), Rational(eq->second));
    }
    CAPTURE(t);

    std::vector<ZVector> want;
    for_box(d, r, [&](const ZVector& x) {
      for (const auto& [g, h] : ineqs)
        if (ev(g, x) < h) return;
      if (eq && ev(eq->first, x) != eq->second) return;
      if (nonneg)
        for (const auto& xi : x)
          if (xi < 0) return;
      want.push_back(x);
    });
    auto got = p.lattice_points();
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}
