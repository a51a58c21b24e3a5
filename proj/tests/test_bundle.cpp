#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "sample_bundles.hpp"

using namespace tvb;
using samples::cls;
using samples::z;

namespace {

std::set<std::string> as_strings(const std::vector<PEClass>& cs) {
  std::set<std::string> out;
  for (const auto& c : cs) out.insert(c.str());
  return out;
}

// Membership in a site monoid by listing the Y-parts of Sym-degree beta and solving the
// square X-system directly. Only valid on smooth cones, where the X-generators form a basis.
bool site_member_bruteforce(const Site& s, const PEClass& c) {
  std::vector<ZVector> xs, ys;
  for (const auto& g : s.monoid.generators) (g.back() == 0 ? xs : ys).push_back(g);
  const std::size_t rank = c.alpha.size();
  REQUIRE(xs.size() == rank);
  QMatrix a(rank, rank);
  for (std::size_t k = 0; k < rank; ++k)
    for (std::size_t t = 0; t < rank; ++t) a(t, k) = xs[k][t];
  std::vector<std::size_t> pick;
  bool found = false;
  std::function<void(std::size_t, long)> rec = [&](std::size_t from, long left) {
    if (found) return;
    if (left == 0) {
      QVector rhs(rank);
      for (std::size_t t = 0; t < rank; ++t) {
        Rational v = c.alpha[t];
        for (std::size_t y : pick) v -= ys[y][t];
        rhs[t] = v;
      }
      auto sol = solve_square(a, rhs);
      REQUIRE(sol.has_value());
      found = std::all_of(sol->begin(), sol->end(), [](const Rational& q) { return q >= 0 && q.get_den() == 1; });
      return;
    }
    for (std::size_t y = from; y < ys.size(); ++y) {
      pick.push_back(y);
      rec(y, left - 1);
      pick.pop_back();
    }
  };
  if (c.beta < 0) return false;
  rec(0, c.beta.get_si());
  return found;
}

}  // namespace

TEST_CASE("diagram validation") {
  CHECK(samples::tp2().report().ok);
  CHECK(samples::hexagon().report().ok);
  Matroid hyper(LinearIdealMatrix(QMatrix{{1, 1, 1}}, 3));
  auto rep = validate_diagram(projective_space_fan(2), hyper, ZMatrix{{0, 1, 2}, {0, 0, 0}, {0, 0, 0}});
  CHECK_FALSE(rep.ok);
  CHECK_THROWS_AS(ToricVectorBundle(projective_space_fan(2), LinearIdealMatrix(QMatrix{{1, 1, 1}}, 3),
                                    ZMatrix{{0, 1, 2}, {0, 0, 0}, {0, 0, 0}}),
                  InvalidInput);
  CHECK_THROWS_AS(ToricVectorBundle(projective_space_fan(2), LinearIdealMatrix(QMatrix{{1, 1, 1}}, 3), ZMatrix::identity(2)),
                  InvalidInput);
}

TEST_CASE("twist and nonnegative form") {
  ZMatrix d{{3, 1, 1}};
  CHECK(nonnegative_form(d) == ZMatrix{{2, 0, 0}});
  ZMatrix id = ZMatrix::identity(3);
  CHECK(nonnegative_form(id) == id);
  ZMatrix t = twist(id, z({4, -2, 7}));
  CHECK(t == ZMatrix{{5, 4, 4}, {-2, -1, -2}, {7, 7, 8}});
  CHECK(nonnegative_form(t) == nonnegative_form(id));
}

TEST_CASE("Klyachko flats") {
  auto e = samples::tp2();
  CHECK(klyachko_flat(e, 0, 1) == IndexSet{0});
  CHECK(klyachko_flat(e, 0, 2).empty());
  CHECK(klyachko_flat(e, 2, 0) == IndexSet{0, 1, 2});
  CHECK(klyachko_flat(e, 1, -3) == IndexSet{0, 1, 2});
  auto h = samples::hexagon();
  CHECK(klyachko_flat(h, 1, 1) == IndexSet{0});
  CHECK(klyachko_flat(h, 1, 7).empty());
}

TEST_CASE("sparse, uniform and monomial") {
  auto tp2 = samples::tp2();
  auto hex = samples::hexagon();
  auto sym = samples::sym2();
  CHECK(is_sparse(tp2));
  CHECK(is_sparse(hex));
  CHECK_FALSE(is_sparse(sym));
  CHECK(is_uniform(tp2));
  CHECK_FALSE(is_uniform(sym));
  CHECK(is_monomial(tp2));
  CHECK_FALSE(is_monomial(hex));
  ToricVectorBundle split(projective_space_fan(1), LinearIdealMatrix(QMatrix(0, 2), 2), ZMatrix{{0, 0}, {0, 0}});
  CHECK(is_monomial(split));
  CHECK(split.rank() == 2);
}

TEST_CASE("complete intersection criteria") {
  CHECK(ci_check(samples::tp2()).ok);
  CHECK(ci_check(samples::bl3()).ok);
  CHECK(ci_check(samples::hexagon()).ok);
  // Row 0 of Sym^2 is minimal on columns 2,4,5, whose coefficient columns have rank 2.
  auto rep = ci_check(samples::sym2());
  CHECK_FALSE(rep.ok);
  CHECK(rep.failing_family == "A");
  CHECK(rep.failing_subset == std::vector<int>{0});

  CHECK(uniform_ci_check(samples::tp2()));
  CHECK(uniform_ci_check(samples::bl3()));
  // U^3_5 over P1: two rows with disjoint pairs of nonzeros use 4 > r + 2 - 2 columns.
  ToricVectorBundle wide(projective_space_fan(1), LinearIdealMatrix(QMatrix{{1, 1, 1, 1, 1}, {0, 1, 2, 3, 4}}, 5),
                         ZMatrix{{1, 1, 0, 0, 0}, {0, 0, 1, 1, 0}});
  CHECK(is_uniform(wide));
  CHECK_FALSE(uniform_ci_check(wide));
  CHECK_THROWS_AS(uniform_ci_check(samples::sym2()), InvalidInput);
}

TEST_CASE("certificates") {
  CHECK(symdeg1_certificate(samples::tp2()) == Certificate::sparse);
  CHECK(symdeg1_certificate(samples::bl3()) == Certificate::ci);
  CHECK(symdeg1_certificate(samples::sym2()) == Certificate::none);
  CHECK_THROWS_AS(require_certificate(samples::sym2(), false), CertificateMissing);
  CHECK(require_certificate(samples::sym2(), true) == Certificate::none);
  CHECK_THROWS_AS(nef_bpf_sites(samples::sym2()), CertificateMissing);
}

TEST_CASE("degrees of the Cox generators") {
  auto h = samples::hexagon();
  CHECK(deg_y(h, 0) == cls({3, 6, 9, 2}, 1));
  CHECK(deg_y(h, 1) == cls({9, 9, 9, 0}, 1));
  CHECK(deg_y(h, 2) == cls({0, 6, 12, 6}, 1));
  CHECK(deg_x(h, 4) == cls({-1, -1, -1, 0}, 0));
  CHECK(deg_x(h, 5) == cls({0, -1, -2, -1}, 0));
  auto t = samples::tp2();
  for (std::size_t j = 0; j < 3; ++j) CHECK(deg_y(t, j) == cls({1}, 1));
  auto rels = homogenized_relations(t);
  REQUIRE(rels.size() == 1);
  CHECK(rels[0].delta == z({0, 0, 0}));
  CHECK(rels[0].degree == cls({0}, 1));
  auto b = homogenized_relations(samples::bl3());
  REQUIRE(b.size() == 1);
  CHECK(b[0].degree == cls({0}, 1));
}

TEST_CASE("effective cones") {
  auto eff = eff_data(samples::tp2());
  CHECK(eff.cone.same_as(QCone::from_generators(2, {z({-1, 0}), z({1, 1})})));
  auto effb = eff_data(samples::bl3());
  CHECK(effb.cone.same_as(QCone::from_generators(2, {z({-1, 0}), z({3, 1})})));
  ToricVectorBundle split(projective_space_fan(1), LinearIdealMatrix(QMatrix(0, 2), 2), ZMatrix{{0, 0}, {0, 0}});
  CHECK(eff_data(split).cone.same_as(QCone::from_generators(2, {z({-1, 0}), z({0, 1})})));

  auto s = eff_data(samples::sym2());
  CHECK(s.certificate == Certificate::none);
  CHECK(s.cone.contains(z({3, 1})));
  CHECK_FALSE(s.monoid.member(z({3, 1})).has_value());
  CHECK(s.monoid.member(z({6, 2})).has_value());
}

TEST_CASE("sites of the six-ray example") {
  auto e = samples::hexagon();
  auto sites = nef_bpf_sites(e);
  REQUIRE(sites.size() == 12);
  std::vector<std::pair<std::size_t, std::string>> got;
  for (const auto& s : sites) got.push_back({s.cone, s.label});
  std::vector<std::pair<std::size_t, std::string>> want{{0, "011"}, {0, "100"}, {1, "011"}, {1, "100"},
                                                         {2, "011"}, {2, "100"}, {3, "010"}, {3, "100"},
                                                         {4, "001"}, {4, "010"}, {5, "001"}, {5, "100"}};
  CHECK(got == want);

  // S_1^{100} and S_1^{011} as listed in the example.
  auto gens = [](const Site& s) {
    auto g = s.monoid.generators;
    std::sort(g.begin(), g.end());
    return g;
  };
  std::vector<ZVector> x_part{z({0, 0, -1, 0, 0}), z({0, 0, 0, -1, 0}), z({-1, -1, -1, 0, 0}), z({0, -1, -2, -1, 0})};
  auto s100 = x_part;
  s100.push_back(z({3, 6, 9, 2, 1}));
  std::sort(s100.begin(), s100.end());
  CHECK(gens(sites[1]) == s100);
  auto s011 = x_part;
  s011.push_back(z({9, 9, 9, 0, 1}));
  s011.push_back(z({0, 6, 12, 6, 1}));
  std::sort(s011.begin(), s011.end());
  CHECK(gens(sites[0]) == s011);

  for (const auto& s : sites) CHECK(is_smooth_cone(s.cone_hull) == (s.label != "011"));
}

TEST_CASE("nef cone of the tangent bundle of P2") {
  auto e = samples::tp2();
  QCone nef = nef_cone(e);
  CHECK(nef.same_as(QCone::from_generators(2, {z({-1, 0}), z({1, 1})})));
  CHECK(is_ample(e, cls({0}, 2)));
  CHECK(nef_member(e, cls({1}, 1)));
  CHECK_FALSE(is_ample(e, cls({1}, 1)));
  CHECK_FALSE(nef_member(e, cls({2}, 1)));
  auto scan = fujita_gap_scan(e);
  CHECK(scan.gaps.empty());
}

TEST_CASE("Hilbert basis and gaps of the six-ray example") {
  auto e = samples::hexagon();
  auto sites = nef_bpf_sites(e);
  auto scan = fujita_gap_scan(e);
  std::vector<PEClass> listed{cls({-2, -2, -2, -1}, 0), cls({0, 5, 10, 0}, 2), cls({0, 1, 2, 0}, 1),
                              cls({0, 2, 3, 0}, 1),     cls({0, 3, 5, 0}, 1),  cls({-1, -1, -1, 0}, 0),
                              cls({0, 2, 4, 0}, 1),     cls({-1, 2, 5, 0}, 1), cls({0, 3, 3, -1}, 1),
                              cls({-1, -1, -2, -1}, 0), cls({0, -1, -2, -1}, 0), cls({0, 3, 4, 0}, 1)};
  CHECK(as_strings(scan.hilbert_basis) == as_strings(listed));

  // Independent membership for every basis element at every site.
  std::set<std::string> expected_gaps;
  for (const auto& c : scan.hilbert_basis) {
    bool all = true;
    for (std::size_t k = 0; k < sites.size(); ++k) {
      bool brute = site_member_bruteforce(sites[k], c);
      if (!brute) expected_gaps.insert(c.str() + "@" + std::to_string(k));
      all = all && brute;
    }
    CHECK(bpf_member(sites, c).member == all);
    CHECK(nef_member(e, c));
  }
  std::set<std::string> gaps;
  for (const auto& g : scan.gaps) gaps.insert(g.cls.str() + "@" + std::to_string(g.site));
  CHECK(gaps == expected_gaps);
  CHECK(gaps == std::set<std::string>{"(0,2,3,0;1)@2", "(0,3,4,0;1)@2", "(0,3,5,0;1)@2"});
  CHECK(sites[2].cone == 1);
  CHECK(sites[2].label == "011");

  // -e_6 is itself a generator of each S^{011}.
  CHECK(bpf_member(sites, cls({0, -1, -2, -1}, 0)).member);
  CHECK(bpf_member(sites, cls({-1, -1, -1, 0}, 0)).member);
}

TEST_CASE("coloop cover") {
  auto rep = coloop_cover_check(samples::hexagon());
  CHECK(rep.covered);
  REQUIRE(rep.coloop_cone.size() == 3);
  CHECK(rep.coloop_cone[0] == std::optional<std::size_t>(0));
  CHECK(rep.coloop_cone[1] == std::optional<std::size_t>(3));
  CHECK(rep.coloop_cone[2] == std::optional<std::size_t>(4));
  CHECK(rep.zero_in_every_circuit_row);
  // The circuit {0,1} carries no zero of row 0.
  ToricVectorBundle pair(projective_space_fan(1), LinearIdealMatrix(QMatrix{{1, -1, 0}}, 3), ZMatrix{{1, 1, 0}, {0, 0, 0}});
  CHECK_FALSE(coloop_cover_check(pair).zero_in_every_circuit_row);
}

TEST_CASE("extensions") {
  auto rep = extension_checks(samples::tp2(), samples::bl3());
  CHECK(rep.extends);
  CHECK(rep.dominance);
  CHECK(rep.ci_guaranteed);

  ToricVectorBundle low(projective_space_fan(2), LinearIdealMatrix(QMatrix{{1, 1, 1, 1}}, 4),
                        ZMatrix{{1, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  auto r2 = extension_checks(samples::tp2(), low);
  CHECK(r2.extends);
  CHECK_FALSE(r2.dominance);

  ToricVectorBundle big(projective_space_fan(2), LinearIdealMatrix(QMatrix{{1, 1, 1, 1}}, 4),
                        ZMatrix{{1, 0, 0, 2}, {0, 1, 0, 2}, {0, 0, 1, 2}});
  auto r3 = extension_checks(samples::tp2(), big);
  CHECK(r3.circuit_minimum);
  CHECK(r3.monomial_guaranteed);
  CHECK(is_monomial(big));

  CHECK_FALSE(extension_checks(samples::hexagon(), samples::bl3()).extends);
}
