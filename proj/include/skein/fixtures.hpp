#pragma once

// Built-in diagrams and polynomials.  The same texts ship as files under
// fixtures/ in the source tree.

#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

struct Fixture {
  std::string name;
  enum class Kind { Diagram, Polynomial } kind = Kind::Diagram;
  std::string payload;
  std::string note;
};

inline const std::vector<Fixture>& fixtures() {
  using K = Fixture::Kind;
  static const std::vector<Fixture> all = {
      {"circle", K::Diagram, "O\n", "unknotted circle"},
      {"bouquet2", K::Diagram, "V 1 1 2 2\n", "one vertex, two petal loops"},
      {"theta", K::Diagram, "V 3 2 1\nV 3 1 2\n", "planar theta graph"},
      {"handcuff", K::Diagram, "V 1 2 1\nV 3 3 2\n", "planar handcuff graph"},
      {"k4", K::Diagram, "V 2 3 1\nV 4 1 6\nV 5 2 4\nV 6 3 5\n", "planar K4"},
      {"kink", K::Diagram, "X 1 1 2 2\n", "circle with one curl"},
      {"hopf", K::Diagram, "X 3 2 4 1\nX 1 4 2 3\n", "Hopf link, two crossings"},
      {"trefoil", K::Diagram, "X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n", "trefoil, three crossings"},
      {"figure8", K::Diagram, "X 4 2 5 1\nX 8 6 1 5\nX 6 3 7 4\nX 2 7 3 8\n", "figure-eight knot"},
      {"r2_unlink", K::Diagram, "X 3 2 4 1\nX 4 2 3 1\n", "two circles overlapped by a second Reidemeister move"},
      {"r2_unlink_after", K::Diagram, "O\nO\n", "the same two circles pulled apart"},
      {"r3_before", K::Diagram,
       "X 1 6 4 7\nX 11 2 10 1\nX 8 3 5 2\nX 3 12 4 9\nX 10 5 9 6\nX 7 12 8 11\n",
       "three strands before a third Reidemeister move, closed up"},
      {"r3_after", K::Diagram,
       "X 1 6 4 7\nX 5 2 6 1\nX 10 3 9 2\nX 3 12 4 9\nX 11 8 10 5\nX 7 12 8 11\n",
       "the same closure after the move"},
      {"theta_r2", K::Diagram, "V 7 4 1\nV 7 3 6\nX 5 1 4 2\nX 6 3 5 2\n",
       "theta with two edges overlapped by a second Reidemeister move"},
      {"theta_kink", K::Diagram, "V 5 4 1\nV 5 3 4\nX 3 2 2 1\n", "theta with a curl on one edge"},
      {"theta_twist", K::Diagram, "V 2 4 1\nV 5 1 3\nX 2 5 3 4\n", "theta with two edges crossing once"},
      {"petersen_pentagram", K::Diagram,
       "V 1 6 5\nV 11 22 6\nV 2 7 1\nV 14 25 7\nV 3 8 2\nV 8 17 13\nV 4 9 3\nV 9 20 16\nV 10 4 5\nV 19 10 23\n"
       "X 13 15 12 14\nX 12 24 11 25\nX 16 18 15 17\nX 18 20 19 21\nX 21 23 22 24\n",
       "Petersen graph drawn as pentagon and pentagram (five crossings); a reconstruction, not the published embedding"},
      {"disk_x", K::Diagram, "V 1 1\nRAY 1 1+\n", "circle around hole 1 of a twice-punctured disk"},
      {"disk_y", K::Diagram, "V 1 1\nRAY 1 2+\n", "circle around hole 2"},
      {"disk_z", K::Diagram, "V 1 1\nRAY 1 1+ 2+\n", "circle around both holes"},
      {"disk_t", K::Diagram, "V 1 2 3\nV 3 2 1\nRAY 1 1+\nRAY 3 2-\n",
       "theta graph with its faces around hole 1, hole 2 and the outside; a reconstruction"},
      {"annulus_core", K::Diagram, "V 1 1\nRAY 1 1+\n", "core circle of the annulus"},
      {"petersen", K::Polynomial,
       "{\"terms\": [[-1, -34], [-6, -30], [-15, -26], [-35, -22], [-65, -18], [-66, -14], [-36, -10], "
       "[-15, -6], [-5, -2], [10, 6], [35, 10], [61, 14], [66, 18], [40, 22], [15, 26], [10, 30], [6, 34], "
       "[1, 38]], \"d_power\": 0}\n",
       "published Yamada polynomial of a Petersen graph embedding"},
  };
  return all;
}

inline const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw std::out_of_range("unknown fixture " + name);
}

/// File name of a fixture under fixtures/.
inline std::string fixture_file_name(const Fixture& f) {
  return f.name + (f.kind == Fixture::Kind::Diagram ? ".txt" : ".poly");
}

}  // namespace skein
