#pragma once

// The cabling map: every edge becomes two parallel strands carrying the
// projector f1 = 1 - d^{-1}(turnback), every degree-n vertex becomes an
// n-gon of arcs joining neighbouring cables, and every crossing becomes four.

#include <map>
#include <vector>

#include "skein/bracket.hpp"
#include "skein/diagram.hpp"
#include "skein/localized.hpp"
#include "skein/polyxyz.hpp"

namespace skein {

/// One summand of the expansion.  `loop_words[i]` is the ray word of the
/// i-th free circle of `link` (empty for contractible data).
struct CabledTerm {
  LocalizedElement coefficient;
  GraphDiagram link;
  std::vector<RayWord> loop_words;
  int turnbacks = 0;
};

/// Arc of each edge that carries the projector.
enum class ProjectorPlacement { FirstArc, LastArc };

inline std::vector<CabledTerm> cable(const GraphDiagram& g, ProjectorPlacement placement = ProjectorPlacement::FirstArc) {
  const auto classes = g.edge_classes();
  std::vector<int> host;
  for (const auto& [arcs, closed] : classes) host.push_back(placement == ProjectorPlacement::FirstArc ? arcs.front() : arcs.back());
  const int edges = static_cast<int>(classes.size()) + g.free_circles();
  if (edges > 24) throw DiagramError("cable: too many edges to expand");

  // Output crossings: four per input crossing, listed SW, SE, NE, NW.
  std::vector<Node> out;
  std::map<int, int> first_mini;  // input node -> index of its SW mini-crossing
  for (int i = 0; i < static_cast<int>(g.nodes().size()); ++i) {
    if (g.nodes()[i].kind != NodeKind::Crossing) continue;
    first_mini[i] = static_cast<int>(out.size());
    for (int k = 0; k < 4; ++k) out.push_back({NodeKind::Crossing, std::vector<int>(4, -1)});
  }

  std::vector<CabledTerm> terms;
  const LocalizedElement minus_inverse = -LocalizedElement::d_inverse();
  for (std::uint32_t mask = 0; mask < (1U << edges); ++mask) {
    detail::Wiring w;
    // Two cable points per input slot, in counterclockwise order.
    std::map<std::pair<Slot, int>, int> pt;
    for (int i = 0; i < static_cast<int>(g.nodes().size()); ++i)
      for (int k = 0; k < static_cast<int>(g.nodes()[i].arcs.size()); ++k)
        for (int s = 0; s < 2; ++s) pt[{{i, k}, s}] = w.add_internal();
    auto P = [&](int node, int pos, int side) { return pt.at({{node, pos}, side}); };

    int turnbacks = 0;
    std::vector<bool> turned(static_cast<std::size_t>(g.arc_count()), false);
    for (std::size_t e = 0; e < classes.size(); ++e)
      if (mask >> e & 1U) {
        turned[static_cast<std::size_t>(host[e])] = true;
        ++turnbacks;
      }
    for (int a = 0; a < g.arc_count(); ++a) {
      const auto& [t, h] = g.arc_ends(a);
      const RayWord word = g.word(a);
      // Tail slot lists (right, left); head slot lists (left, right).
      const int rt = P(t.node, t.pos, 0), lt = P(t.node, t.pos, 1);
      const int lh = P(h.node, h.pos, 0), rh = P(h.node, h.pos, 1);
      if (turned[static_cast<std::size_t>(a)]) {
        RayWord there_and_back = word;
        const RayWord back = reversed(word);
        there_and_back.insert(there_and_back.end(), back.begin(), back.end());
        w.connect(lt, rt, there_and_back);
        w.connect(lh, rh);
      } else {
        w.connect(lt, lh, word);
        w.connect(rt, rh, word);
      }
    }
    for (int i = 0; i < static_cast<int>(g.nodes().size()); ++i) {
      const Node& n = g.nodes()[i];
      if (n.kind == NodeKind::Vertex) {
        const int deg = static_cast<int>(n.arcs.size());
        for (int k = 0; k < deg; ++k) w.connect(P(i, k, 1), P(i, (k + 1) % deg, 0));
        continue;
      }
      const int base = first_mini.at(i);
      auto T = [&](int mini, int pos) { return w.add_terminal({base + mini, pos}); };
      enum { SW, SE, NE, NW };
      w.connect(P(i, 0, 0), T(SW, 0));
      w.connect(P(i, 3, 1), T(SW, 3));
      w.connect(P(i, 0, 1), T(SE, 0));
      w.connect(P(i, 1, 0), T(SE, 1));
      w.connect(P(i, 1, 1), T(NE, 1));
      w.connect(P(i, 2, 0), T(NE, 2));
      w.connect(P(i, 2, 1), T(NW, 2));
      w.connect(P(i, 3, 0), T(NW, 3));
      w.connect(T(SW, 1), T(SE, 3));
      w.connect(T(SW, 2), T(NW, 0));
      w.connect(T(SE, 2), T(NE, 0));
      w.connect(T(NE, 3), T(NW, 1));
    }
    auto [paths, loops] = w.trace();
    int extra_circles = 0;
    for (int c = 0; c < g.free_circles(); ++c) {
      const bool turn = mask >> (classes.size() + static_cast<std::size_t>(c)) & 1U;
      extra_circles += turn ? 1 : 2;
      turnbacks += turn ? 1 : 0;
    }
    std::vector<RayWord> loop_words = std::move(loops);
    loop_words.resize(loop_words.size() + static_cast<std::size_t>(extra_circles));
    const int circles = static_cast<int>(loop_words.size());
    terms.push_back({minus_inverse.pow(static_cast<unsigned>(turnbacks)), detail::assemble(out, paths, circles),
                     std::move(loop_words), turnbacks});
  }
  return terms;
}

/// Evaluation in the plane: sum of coefficient times bracket.
inline LocalizedElement phi_plane(const GraphDiagram& g) {
  LocalizedElement total;
  for (const auto& t : cable(g)) total += t.coefficient * LocalizedElement(bracket(t.link));
  return total;
}

/// Evaluation in the disk with two holes, by classifying cabled circles:
/// around hole 1 only -> x, hole 2 only -> y, both -> z, neither -> d.
inline PolyXYZ phi_punctured(const GraphDiagram& g, ProjectorPlacement placement = ProjectorPlacement::FirstArc) {
  if (g.crossing_count() > 0) throw DiagramError("phi_punctured: diagram must be flat");
  PolyXYZ total;
  for (const auto& t : cable(g, placement)) {
    Monomial m{};
    unsigned contractible = 0;
    for (const auto& w : t.loop_words) {
      const auto wind = winding(w);
      if (wind[0] < -1 || wind[0] > 1 || wind[1] < -1 || wind[1] > 1)
        throw DiagramError("phi_punctured: circle winds more than once around a hole");
      const bool h1 = wind[0] != 0, h2 = wind[1] != 0;
      if (h1 && h2)
        ++m.z;
      else if (h1)
        ++m.x;
      else if (h2)
        ++m.y;
      else
        ++contractible;
    }
    total += PolyXYZ(m, t.coefficient * LocalizedElement::d().pow(contractible));
  }
  return total;
}

/// Annulus evaluation as a polynomial in the core curve b (stored as x).
inline PolyXYZ phi_annulus(const GraphDiagram& g) {
  for (const auto& [arc, w] : g.ray_words())
    for (auto l : w)
      if (l == RayLetter::Hole2Plus || l == RayLetter::Hole2Minus)
        throw DiagramError("phi_annulus: ray word mentions a second hole");
  return phi_punctured(g);
}

}  // namespace skein
