#include <catch_amalgamated.hpp>

#include <algorithm>

#include "skein/cabling.hpp"
#include "skein/fixtures.hpp"
#include "skein/yamada.hpp"

using namespace skein;

namespace {

GraphDiagram fx(const std::string& name) { return parse_diagram(fixture(name).payload); }

const PolyXYZ one(1), x = PolyXYZ::x(), y = PolyXYZ::y(), z = PolyXYZ::z();
const PolyXYZ dinv(LocalizedElement::d_inverse());

}  // namespace

TEST_CASE("cabling expands over subsets of edges") {
  const auto terms = cable(fx("theta"));
  REQUIRE(terms.size() == 8);
  std::vector<int> circles;
  for (const auto& t : terms) {
    CHECK(t.link.nodes().empty());
    CHECK(t.coefficient == (-LocalizedElement::d_inverse()).pow(static_cast<unsigned>(t.turnbacks)));
    circles.push_back(t.link.free_circles());
  }
  std::sort(circles.begin(), circles.end());
  CHECK(circles == std::vector<int>{1, 1, 1, 2, 2, 2, 2, 3});

  CHECK(cable(fx("circle")).size() == 2);
  CHECK(cable(fx("hopf")).size() == 4);
  CHECK(cable(fx("hopf"))[0].link.crossing_count() == 8);
  CHECK_THROWS_AS(cable(bouquet(25)), DiagramError);
}

TEST_CASE("plane evaluation of the cable equals the Yamada polynomial") {
  for (const char* name : {"circle", "theta", "handcuff", "k4", "kink", "theta_kink", "theta_twist", "theta_r2", "hopf",
                           "trefoil", "bouquet2"}) {
    INFO(name);
    CHECK(phi_plane(fx(name)) == yamada(fx(name)));
  }
  for (int m = 1; m <= 4; ++m) CHECK(phi_plane(bouquet(m)) == yamada(bouquet(m)));
  CHECK(phi_plane(disjoint_union(fx("theta"), fx("kink"))) == phi_plane(fx("theta")) * phi_plane(fx("kink")));
}

TEST_CASE("generator images in the twice-punctured disk") {
  for (auto placement : {ProjectorPlacement::FirstArc, ProjectorPlacement::LastArc}) {
    CHECK(phi_punctured(fx("disk_x"), placement) == x * x - one);
    CHECK(phi_punctured(fx("disk_y"), placement) == y * y - one);
    CHECK(phi_punctured(fx("disk_z"), placement) == z * z - one);
    CHECK(phi_punctured(fx("disk_t"), placement) == x * y * z - dinv * (x * x + y * y + z * z) + PolyXYZ(2) * dinv);
  }
  CHECK(phi_annulus(fx("annulus_core")) == x * x - one);
  // opposite orientation of the word gives the same class
  CHECK(phi_punctured(parse_diagram("V 1 1\nRAY 1 1-\n")) == x * x - one);
  CHECK(phi_punctured(parse_diagram("V 1 1\nRAY 1 2- 1-\n")) == z * z - one);
}

TEST_CASE("diagrams avoiding the holes evaluate as in the plane") {
  for (const char* name : {"circle", "theta", "handcuff", "k4", "bouquet2"}) {
    const GraphDiagram g = fx(name);
    CHECK(phi_punctured(g) == PolyXYZ(phi_plane(g)));
  }
}

TEST_CASE("two copies of the hole-1 circle") {
  const GraphDiagram two = disjoint_union(fx("disk_x"), fx("disk_x"));
  CHECK(phi_punctured(two) == (x * x - one) * (x * x - one));
}

TEST_CASE("punctured evaluation rejects unsupported input") {
  CHECK_THROWS_AS(phi_punctured(fx("kink")), DiagramError);
  CHECK_THROWS_AS(phi_punctured(parse_diagram("V 1 1\nRAY 1 1+ 1+\n")), DiagramError);
  CHECK_THROWS_AS(phi_annulus(fx("disk_y")), DiagramError);
}
