#include "clustexp/document.hpp"
#include "clustexp/error.hpp"
#include "support.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace clustexp;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Returns "code|message" of the parse error, or "" when parsing succeeds.
std::string parse_error(const std::string& text) {
  try {
    parse_surface(text);
  } catch (const Error& e) {
    return e.code() + "|" + e.what();
  }
  return "";
}

const char* small =
    "arc a internal\n"
    "arc b boundary\n"
    "arc c boundary\n"
    "arc d boundary\n"
    "arc e boundary\n"
    "triangle +a +b +c\n"
    "triangle -a +d +e\n";

}  // namespace

TEST_CASE("fixtures parse") {
  const SurfaceDocument oct = load_surface(std::string(FIXTURE_DIR) + "/octagon.srf");
  const SurfaceStats so = surface_stats(oct.triangulation);
  CHECK(so.genus == 0);
  CHECK(so.boundary_components == 1);
  CHECK(so.marked_points == 8);
  CHECK(so.internal_arcs == 5);
  CHECK(oct.curves.size() == 1);
  CHECK(oct.find_curve("gamma")->curve.d() == 3);
  CHECK(oct.find_curve("nope") == nullptr);

  const SurfaceDocument ann = load_surface(std::string(FIXTURE_DIR) + "/annulus.srf");
  const SurfaceStats sa = surface_stats(ann.triangulation);
  CHECK(sa.genus == 0);
  CHECK(sa.boundary_components == 2);
  CHECK(sa.marked_points == 3);
  CHECK(sa.internal_arcs == 3);
  CHECK(ann.find_curve("gamma")->curve.d() == 6);
  CHECK(ann.find_curve("gamma2")->curve.d() == 4);
}

TEST_CASE("declaration order fixes internal indices") {
  const SurfaceDocument doc = parse_surface(small);
  CHECK(doc.triangulation.internal_count() == 1);
  CHECK(doc.triangulation.arc(doc.triangulation.internal_arc(1)).label == "a");
}

TEST_CASE("render then parse is the identity") {
  for (const char* name : {"octagon.srf", "annulus.srf"}) {
    const SurfaceDocument doc = support::fixture(name);
    const std::string text = render_surface(doc);
    const SurfaceDocument again = parse_surface(text);
    CHECK(render_surface(again) == text);
    CHECK(again.triangulation.canonical_key() == doc.triangulation.canonical_key());
    REQUIRE(again.curves.size() == doc.curves.size());
    for (std::size_t i = 0; i < doc.curves.size(); ++i) {
      CHECK(again.curves[i].name == doc.curves[i].name);
      CHECK(again.curves[i].curve == doc.curves[i].curve);
    }
  }
  // Fixtures are written in canonical form.
  CHECK(render_surface(support::fixture("annulus.srf")).find("curve gamma2 from 3 crosses t2 t3 t1 t3") !=
        std::string::npos);
}

TEST_CASE("arc-form curves") {
  const SurfaceDocument doc = parse_surface(std::string(small) + "curve g arc a\n");
  CHECK(doc.find_curve("g")->curve.is_arc());
  CHECK(parse_error(std::string(small) + "curve g arc b\n").rfind("document.invalid|line 8", 0) == 0);
}

TEST_CASE("syntax errors carry line and column") {
  CHECK(parse_error("arc a internal\narc b sideways\n") ==
        "document.syntax|line 2, column 7: expected 'internal' or 'boundary'");
  CHECK(parse_error("polygon 5\n") == "document.syntax|line 1, column 1: unknown keyword 'polygon'");
  CHECK(parse_error("arc a internal\n  triangle a +a +a\n") ==
        "document.syntax|line 2, column 12: expected '+name' or '-name'");
  CHECK(parse_error(std::string(small) + "curve g from x crosses a\n") ==
        "document.syntax|line 8, column 14: expected a triangle index");
}

TEST_CASE("invalid documents") {
  CHECK(parse_error("arc a internal\narc a boundary\n") ==
        "document.invalid|line 2, column 5: arc 'a' declared twice");
  CHECK(parse_error("arc a boundary\ntriangle +a +a +zz\n").find("line 2") != std::string::npos);
  const std::string dup = parse_error("arc a boundary\narc b boundary\ntriangle +a -a +b\n");
  CHECK(dup.rfind("document.invalid|line 3", 0) == 0);
  CHECK(dup.find("appears twice") != std::string::npos);
  const std::string unknown = parse_error("arc a boundary\ntriangle +a +q +a\n");
  CHECK(unknown.find("unknown arc 'q'") != std::string::npos);
  CHECK(unknown.find("column 14") != std::string::npos);
  // An internal arc used by only one triangle.
  const std::string lonely = parse_error("arc a internal\narc b boundary\narc c boundary\ntriangle +a +b +c\n");
  CHECK(lonely.rfind("document.invalid|line 1", 0) == 0);
  CHECK(parse_error(std::string(small) + "curve g from 1 crosses b\n").rfind("document.invalid|line 8", 0) == 0);
  CHECK(parse_error(std::string(small) + "curve g arc a\ncurve g arc a\n").find("declared twice") !=
        std::string::npos);
}

TEST_CASE("comments and blank lines") {
  const SurfaceDocument doc = parse_surface(std::string("# header\n\n") + small + "   # trailing\n");
  CHECK(doc.triangulation.triangles().size() == 2);
}

TEST_CASE("missing file") {
  try {
    load_surface("/nonexistent/file.srf");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "document.io");
  }
  CHECK(slurp(std::string(FIXTURE_DIR) + "/octagon.srf").find("curve gamma") != std::string::npos);
}
