#include "doctest.h"
#include "sample_bundles.hpp"
#include "tvb/document.hpp"

using namespace tvb;
using samples::cls;
using samples::z;

namespace {

const char* kTangent = R"(# tangent bundle of P^2
[fan]
dim = 2
rays = [[1,0], [0,1], [-1,-1]]
max_cones = [[0,1], [1,2], [0,2]]   # order is free

[ideal]
generators = [[1, 1, 1]]

[diagram]
rows = [[1,0,0],
        [0,1,0],
        [0,0,1]]
)";

std::string fixture(const std::string& name) { return std::string(TVB_FIXTURES_DIR) + "/" + name; }

void same_bundle(const ToricVectorBundle& a, const ToricVectorBundle& b) {
  CHECK(a.fan().rays == b.fan().rays);
  CHECK(a.fan().max_cones.size() == b.fan().max_cones.size());
  CHECK(a.ideal().coeffs == b.ideal().coeffs);
  CHECK(a.diagram() == b.diagram());
  CHECK(a.fixtures().extra_columns == b.fixtures().extra_columns);
  CHECK(a.fixtures().extra_degrees == b.fixtures().extra_degrees);
  CHECK(a.fixtures().extra_M_rows == b.fixtures().extra_M_rows);
}

int error_line(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("tangent bundle document") {
  BundleDocument doc = parse_document(kTangent);
  CHECK(doc.fan.dim == 2);
  CHECK(doc.fan.rays.size() == 3);
  CHECK(doc.fan.max_cones.size() == 3);
  REQUIRE(doc.has_bundle());
  auto e = doc.bundle();
  CHECK(e.ideal().coeffs == samples::tp2().ideal().coeffs);
  CHECK(e.diagram() == ZMatrix::identity(3));
}

TEST_CASE("fixture files") {
  same_bundle(read_document(fixture("tangent_p2.tvb")).bundle(), samples::tp2());
  same_bundle(read_document(fixture("hexagon.tvb")).bundle(), samples::hexagon());
  same_bundle(read_document(fixture("sym2_tangent_p2.tvb")).bundle(), samples::sym2(true));
  same_bundle(read_document(fixture("bl3_extension.tvb")).bundle(), samples::bl3());
  BundleDocument fan_only = read_document(fixture("fan_f1.tvb"));
  CHECK_FALSE(fan_only.has_bundle());
  CHECK_THROWS_AS(fan_only.bundle(), InvalidInput);
  CHECK_THROWS_AS(read_document(fixture("no_such_file.tvb")), InvalidInput);
}

TEST_CASE("format and parse round trip") {
  for (const auto& e : {samples::tp2(), samples::hexagon(), samples::sym2(true), samples::sym2(false), samples::bl3()})
    same_bundle(parse_document(format_document(e)).bundle(), e);
}

TEST_CASE("rationals and empty ideals") {
  BundleDocument doc = parse_document(R"([fan]
dim = 1
rays = [[1], [-1]]
max_cones = [[0], [1]]
[ideal]
generators = [[1/2, -3/4]]
[diagram]
rows = [[0, 0], [0, 0]]
)");
  REQUIRE(doc.generators.has_value());
  CHECK((*doc.generators)(0, 0) == Rational(1, 2));
  CHECK((*doc.generators)(0, 1) == Rational(-3, 4));

  BundleDocument free = parse_document(R"([fan]
dim = 1
rays = [[1], [-1]]
max_cones = [[0], [1]]
[ideal]
generators = []
[diagram]
rows = [[2, 0], [0, 1]]
)");
  auto e = free.bundle();
  CHECK(e.rank() == 2);
  CHECK(e.ideal().coeffs.cols() == 2);
}

TEST_CASE("malformed documents") {
  std::string floaty = kTangent;
  floaty.replace(floaty.find("[[1, 1, 1]]"), 11, "[[1, 0.5, 1]]");
  try {
    parse_document(floaty);
    FAIL("float accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 8);
    CHECK(e.column() == 19);
    CHECK(std::string(e.what()).find("floating point") != std::string::npos);
  }
  CHECK(error_line("[fan]\ndim = 2\nrays = [[1,0],[0,1]\nmax_cones = []\n") == 4);
  CHECK(error_line("[fan]\ndim = 1e3\n") == 2);
  CHECK(error_line("dim = 2\n") == 1);
  CHECK(error_line("[fan]\ndim = 2\n[shape]\n") == 3);
  CHECK(error_line("[fan]\ndim = 2\ndim = 3\n") == 3);
  CHECK(error_line("[fan]\ndim = 2\nrays = [[1,0]]\nmax_cones = [[0, 4]]\n") == 4);
  CHECK(error_line("[fan]\ndim = 2\nrays = [[1,0], [1]]\nmax_cones = []\n") == 3);
  CHECK(error_line("[fan]\ndim = 2\nrays = [[1,0]] x\n") == 3);
  CHECK(error_line("[fan]\ndim = 1\nrays = [[1],[-1]]\nmax_cones = [[0],[1]]\n[diagram]\nrows = [[1/2],[0]]\n") == 6);
  std::string bad_ideal = kTangent;
  bad_ideal.replace(bad_ideal.find("[[1, 1, 1]]"), 11, "[[1, 1]]");
  CHECK(error_line(bad_ideal) == 8);
  std::string zero_den = kTangent;
  zero_den.replace(zero_den.find("[[1, 1, 1]]"), 11, "[[1, 1/0, 1]]");
  CHECK(error_line(zero_den) == 8);
}

TEST_CASE("invalid bundles parse but do not validate") {
  std::string wrong = kTangent;
  wrong.replace(wrong.find("[[1, 1, 1]]"), 11, "[[1, -1, 0]]");
  BundleDocument doc = parse_document(wrong);
  CHECK_THROWS_AS(doc.bundle(), InvalidInput);
}

TEST_CASE("command line classes") {
  CHECK(parse_class("0,-1,-2,-1;0") == cls({0, -1, -2, -1}, 0));
  CHECK(parse_class(" 3 ; 1") == cls({3}, 1));
  CHECK(parse_class(";2") == PEClass{ZVector{}, 2});
  CHECK_THROWS_AS(parse_class("1,2"), InvalidInput);
  CHECK_THROWS_AS(parse_class("1,0.5;1"), InvalidInput);
  CHECK_THROWS_AS(parse_class("1,;1"), InvalidInput);
  CHECK_THROWS_AS(parse_class("1;1;1"), InvalidInput);
}
