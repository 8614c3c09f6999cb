#pragma once

// Kauffman bracket of a link diagram: sum over smoothings of
// A^{#A - #B} d^{#loops}, with the empty diagram evaluating to 1.

#include <map>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"
#include "skein/localized.hpp"
#include "skein/yamada.hpp"

namespace skein {

inline LaurentPoly bracket(const GraphDiagram& g) {
  if (g.vertex_count() > 0) throw DiagramError("bracket: diagram has flat vertices");
  const detail::SlotTable t(g);
  const std::size_t c = t.crossings.size();
  if (c >= 31) throw DiagramError("bracket: too many crossings");
  std::map<int, std::map<int, BigInt>> count;  // A-exponent -> loops -> states
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    detail::SlotUnion u(t.total);
    for (auto [a, b] : t.arc_slots) u.join(a, b);
    int a_exp = 0;
    for (std::size_t k = 0; k < c; ++k) {
      const int o = t.offset[t.crossings[k]];
      if (mask >> k & 1U) {
        u.join(o, o + 3);
        u.join(o + 1, o + 2);
        --a_exp;
      } else {
        u.join(o, o + 1);
        u.join(o + 2, o + 3);
        ++a_exp;
      }
    }
    int loops = g.free_circles();
    for (int x = 0; x < t.total; ++x) loops += u.find(x) == x ? 1 : 0;
    count[a_exp][loops] += 1;
  }
  LaurentPoly out;
  for (const auto& [e, byloops] : count)
    for (const auto& [l, n] : byloops) out += d_power_expansion(static_cast<unsigned>(l)).shifted(e) * LaurentPoly(n);
  return out;
}

}  // namespace skein
