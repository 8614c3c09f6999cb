#include <catch_amalgamated.hpp>

#include "skein/diagram.hpp"
#include "skein/errors.hpp"
#include "skein/fixtures.hpp"

using namespace skein;

namespace {

GraphDiagram fx(const std::string& name) { return parse_diagram(fixture(name).payload); }

std::string parse_error_text(const std::string& text) {
  try {
    parse_diagram(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("diagram files round-trip through serialize") {
  for (const auto& f : fixtures()) {
    if (f.kind != Fixture::Kind::Diagram) continue;
    INFO(f.name);
    const GraphDiagram g = parse_diagram(f.payload);
    CHECK(parse_diagram(serialize_diagram(g)) == g);
    CHECK(serialize_diagram(parse_diagram(serialize_diagram(g))) == serialize_diagram(g));
  }
}

TEST_CASE("basic counts") {
  const GraphDiagram theta = fx("theta");
  CHECK(theta.vertex_count() == 2);
  CHECK(theta.crossing_count() == 0);
  CHECK(theta.arc_count() == 3);
  CHECK(theta.edge_count() == 3);
  CHECK(theta.alpha() == 1);

  const GraphDiagram pet = fx("petersen_pentagram");
  CHECK(pet.vertex_count() == 10);
  CHECK(pet.crossing_count() == 5);
  CHECK(pet.edge_count() == 15);
  CHECK(pet.alpha() == 5);

  CHECK(fx("circle").free_circles() == 1);
  CHECK(fx("circle").arc_count() == 0);
  CHECK(bouquet(3).edge_count() == 3);
  CHECK(fx("trefoil").edge_classes().size() == 1);
  CHECK(fx("trefoil").edge_classes()[0].second);
  CHECK(fx("hopf").edge_classes().size() == 2);
}

TEST_CASE("labels are kept when they are 1..m and renumbered otherwise") {
  const GraphDiagram a = parse_diagram("V 2 1 3\nV 2 3 1\n");
  CHECK(a.nodes()[0].arcs == std::vector<int>{1, 0, 2});
  const GraphDiagram b = parse_diagram("V a b c\nV a c b\n");
  CHECK(b.nodes()[0].arcs == std::vector<int>{0, 1, 2});
  const GraphDiagram c = parse_diagram("V 10 20 30\nV 10 30 20\n");
  CHECK(c.nodes()[1].arcs == std::vector<int>{0, 2, 1});
  CHECK(parse_diagram("# comment\n\nO  # circle\n").free_circles() == 1);
}

TEST_CASE("parser diagnostics") {
  CHECK_THAT(parse_error_text("V 1 1\nV 2 3 2\n"), Catch::Matchers::ContainsSubstring("line 2"));
  CHECK_THAT(parse_error_text("V 1 1\nV 2 3 2\n"), Catch::Matchers::ContainsSubstring("'3'"));
  CHECK_THAT(parse_error_text("V 1 1 1\n"), Catch::Matchers::ContainsSubstring("3 time(s)"));
  CHECK_THAT(parse_error_text("Q 1 1\n"), Catch::Matchers::ContainsSubstring("unknown directive"));
  CHECK_THAT(parse_error_text("X 1 1 2\n"), Catch::Matchers::ContainsSubstring("four"));
  CHECK_THAT(parse_error_text("V\n"), Catch::Matchers::ContainsSubstring("at least one"));
  CHECK_THAT(parse_error_text("O 1\n"), Catch::Matchers::ContainsSubstring("no arguments"));
  CHECK_THAT(parse_error_text("V 1 1\nRAY 1 1+\nRAY 1 2+\n"), Catch::Matchers::ContainsSubstring("duplicate RAY"));
  CHECK_THAT(parse_error_text("V 1 1\nRAY 2 1+\n"), Catch::Matchers::ContainsSubstring("unknown arc"));
  CHECK_THAT(parse_error_text("V 1 1\nRAY 1 3+\n"), Catch::Matchers::ContainsSubstring("bad ray letter"));
  try {
    parse_diagram("O\nV 1 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(GraphDiagram({{NodeKind::Crossing, {0, 0, 1}}}), DiagramError);
  CHECK_THROWS_AS(GraphDiagram({{NodeKind::Vertex, {}}}), DiagramError);
  CHECK_THROWS_AS(GraphDiagram({{NodeKind::Vertex, {0, 2, 2}}}), DiagramError);
  CHECK_THROWS_AS(GraphDiagram({}, -1), DiagramError);
  CHECK_THROWS_AS(GraphDiagram({{NodeKind::Vertex, {0, 0}}}, 0, {{3, {RayLetter::Hole1Plus}}}), DiagramError);
  CHECK_FALSE(GraphDiagram({{NodeKind::Vertex, {0, 0}}}, 0, {{0, {}}}).has_ray_words());
}

TEST_CASE("ray words") {
  const RayWord w{RayLetter::Hole1Plus, RayLetter::Hole2Minus};
  CHECK(reversed(w) == RayWord{RayLetter::Hole2Plus, RayLetter::Hole1Minus});
  CHECK(reversed(reversed(w)) == w);
  CHECK(winding(w) == std::array<int, 2>{1, -1});
  CHECK(winding(reversed(w)) == std::array<int, 2>{-1, 1});
  for (const char* s : {"1+", "1-", "2+", "2-"}) CHECK(to_string(*parse_ray_letter(s)) == s);
  CHECK_FALSE(parse_ray_letter("3+").has_value());
  const GraphDiagram z = fx("disk_z");
  CHECK(z.word(0) == RayWord{RayLetter::Hole1Plus, RayLetter::Hole2Plus});
}

TEST_CASE("resolving the kink crossing") {
  const GraphDiagram kink = fx("kink");
  const GraphDiagram a = resolve_crossing(kink, 0, Resolution::SmoothA);
  const GraphDiagram b = resolve_crossing(kink, 0, Resolution::SmoothB);
  const GraphDiagram v = resolve_crossing(kink, 0, Resolution::Vertex);
  CHECK(a.nodes().empty());
  CHECK(a.free_circles() == 2);
  CHECK(b.nodes().empty());
  CHECK(b.free_circles() == 1);
  CHECK(v.vertex_count() == 1);
  CHECK(v == bouquet(2));
  CHECK_THROWS(resolve_crossing(kink, 1, Resolution::SmoothA));
}

TEST_CASE("smoothing a Hopf crossing") {
  const GraphDiagram h = fx("hopf");
  for (auto k : {Resolution::SmoothA, Resolution::SmoothB}) {
    const GraphDiagram r = resolve_crossing(h, 0, k);
    CHECK(r.crossing_count() == 1);
    CHECK(r.vertex_count() == 0);
  }
}

TEST_CASE("flat states") {
  const FlatState s = to_flat_state(fx("theta"));
  CHECK(s.vertex_count == 2);
  CHECK(s.edges.size() == 3);
  CHECK(s.circle_count == 0);
  for (auto [u, v] : s.edges) CHECK(u != v);
  const FlatState b = to_flat_state(bouquet(2));
  CHECK(b.edges == std::vector<std::pair<int, int>>{{0, 0}, {0, 0}});
  CHECK(to_flat_state(parse_diagram("O\nO\n")).circle_count == 2);
  CHECK_THROWS_AS(to_flat_state(fx("kink")), DiagramError);
}

TEST_CASE("mirror and disjoint union") {
  for (const auto& f : fixtures()) {
    if (f.kind != Fixture::Kind::Diagram) continue;
    const GraphDiagram g = parse_diagram(f.payload);
    CHECK(mirror(mirror(g)) == g);
    if (g.crossing_count() == 0) CHECK(mirror(g) == g);
  }
  const GraphDiagram u = disjoint_union(fx("theta"), fx("hopf"));
  CHECK(u.vertex_count() == 2);
  CHECK(u.crossing_count() == 2);
  CHECK(u.arc_count() == 3 + 4);
  const GraphDiagram w = disjoint_union(fx("disk_x"), fx("disk_y"));
  CHECK(w.word(1) == RayWord{RayLetter::Hole2Plus});
}

TEST_CASE("equality ignores rotation of nodes") {
  CHECK(parse_diagram("V 1 2 3\nV 3 2 1\n") == parse_diagram("V 2 3 1\nV 1 3 2\n"));
  CHECK_FALSE(parse_diagram("V 1 2 3\nV 3 2 1\n") == parse_diagram("V 1 2 3\nV 1 2 3\n"));
  CHECK(parse_diagram("X 1 2 3 4\nX 3 4 1 2\n") == parse_diagram("X 3 4 1 2\nX 1 2 3 4\n"));
}
