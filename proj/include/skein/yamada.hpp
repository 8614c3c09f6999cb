#pragma once

// Yamada polynomial of a diagram in the 3-sphere:
// Y(X) = A^4 Y(smooth A) + A^{-4} Y(smooth B) - d Y(vertex), then flat states.

#include <atomic>
#include <future>
#include <iostream>
#include <map>
#include <numeric>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/flat_eval.hpp"
#include "skein/localized.hpp"
#include "skein/parallel.hpp"

namespace skein {

struct YamadaOptions {
  unsigned threads = 0;  // 0: worker_count()
  std::ostream* warnings = &std::cerr;
  FlatMemo* memo = nullptr;  // nullptr: the global memo
};

namespace detail {

/// Slot numbering and the per-arc pairing shared by every resolution state.
struct SlotTable {
  std::vector<int> offset;  // first slot of each node
  int total = 0;
  std::vector<int> crossings;  // node indices
  std::vector<int> vertex_nodes;
  std::vector<std::pair<int, int>> arc_slots;

  explicit SlotTable(const GraphDiagram& g) {
    for (int i = 0; i < static_cast<int>(g.nodes().size()); ++i) {
      offset.push_back(total);
      total += static_cast<int>(g.nodes()[i].arcs.size());
      (g.nodes()[i].kind == NodeKind::Crossing ? crossings : vertex_nodes).push_back(i);
    }
    for (int a = 0; a < g.arc_count(); ++a) {
      const auto& [t, h] = g.arc_ends(a);
      arc_slots.emplace_back(offset[t.node] + t.pos, offset[h.node] + h.pos);
    }
  }
};

class SlotUnion {
 public:
  explicit SlotUnion(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void join(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

/// Flat state of one resolution: choice[k] for the k-th crossing.
inline FlatState resolved_state(const GraphDiagram& g, const SlotTable& t, const std::vector<Resolution>& choice) {
  SlotUnion u(t.total);
  for (auto [a, b] : t.arc_slots) u.join(a, b);
  std::vector<int> vertex_of_slot(static_cast<std::size_t>(t.total), -1);
  int vertices = 0;
  for (int v : t.vertex_nodes) {
    for (std::size_t k = 0; k < g.nodes()[v].arcs.size(); ++k) vertex_of_slot[t.offset[v] + k] = vertices;
    ++vertices;
  }
  for (std::size_t k = 0; k < t.crossings.size(); ++k) {
    const int o = t.offset[t.crossings[k]];
    switch (choice[k]) {
      case Resolution::SmoothA:
        u.join(o, o + 1);
        u.join(o + 2, o + 3);
        break;
      case Resolution::SmoothB:
        u.join(o, o + 3);
        u.join(o + 1, o + 2);
        break;
      case Resolution::Vertex:
        for (int j = 0; j < 4; ++j) vertex_of_slot[o + j] = vertices;
        ++vertices;
        break;
    }
  }
  FlatState s;
  s.vertex_count = vertices;
  std::map<int, std::vector<int>> ends;
  std::vector<bool> root_seen(static_cast<std::size_t>(t.total), false);
  for (int x = 0; x < t.total; ++x) {
    const int r = u.find(x);
    root_seen[r] = true;
    if (vertex_of_slot[x] >= 0) ends[r].push_back(vertex_of_slot[x]);
  }
  for (const auto& [r, vs] : ends) s.edges.emplace_back(vs.at(0), vs.at(1));
  for (int r = 0; r < t.total; ++r)
    if (root_seen[r] && !ends.count(r)) ++s.circle_count;
  s.circle_count += g.free_circles();
  return s;
}

/// Contributions keyed by A-exponent, each a Laurent polynomial in d.
using ACoefficients = std::map<int, DPoly>;

inline void yamada_subtree(const GraphDiagram& g, const SlotTable& t, std::vector<Resolution>& choice, std::size_t k,
                           int a_exp, int v_count, ACoefficients& acc, FlatMemo& memo) {
  if (k == t.crossings.size()) {
    const FlatState s = resolved_state(g, t, choice);
    DPoly w = flat_w(s, memo);
    if (w.is_zero()) return;
    static const DPoly d2m1 = DPoly(1, 2) - DPoly(1);
    w = w * d2m1.pow(static_cast<unsigned>(s.circle_count)) * DPoly(v_count % 2 ? -1 : 1, v_count);
    acc[a_exp] += w;
    return;
  }
  choice[k] = Resolution::SmoothA;
  yamada_subtree(g, t, choice, k + 1, a_exp + 4, v_count, acc, memo);
  choice[k] = Resolution::SmoothB;
  yamada_subtree(g, t, choice, k + 1, a_exp - 4, v_count, acc, memo);
  choice[k] = Resolution::Vertex;
  yamada_subtree(g, t, choice, k + 1, a_exp, v_count + 1, acc, memo);
}

inline LocalizedElement combine(const ACoefficients& acc) {
  LocalizedElement y;
  for (const auto& [e, w] : acc)
    if (!w.is_zero()) y += LocalizedElement::A(e) * LocalizedElement::from_d_laurent(w);
  return y;
}

}  // namespace detail

inline LocalizedElement yamada(const GraphDiagram& g, const YamadaOptions& opt = {}) {
  if (g.has_ray_words()) throw DiagramError("yamada: diagram carries ray words (punctured-disk diagram)");
  FlatMemo& memo = opt.memo ? *opt.memo : FlatMemo::global();
  const detail::SlotTable table(g);
  const std::size_t c = table.crossings.size();
  if (c > 16 && opt.warnings)
    *opt.warnings << "warning: " << c << " crossings, 3^" << c << " resolution states\n";

  const unsigned threads = opt.threads ? opt.threads : worker_count();
  // Split off the first `depth` crossings as independent tasks.
  std::size_t depth = 0;
  for (std::size_t tasks = 1; depth < c && depth < 4 && tasks < 4 * static_cast<std::size_t>(threads); ++depth)
    tasks *= 3;
  if (threads <= 1 || c < 3) depth = 0;

  std::size_t task_count = 1;
  for (std::size_t i = 0; i < depth; ++i) task_count *= 3;
  std::vector<detail::ACoefficients> partial(task_count);
  auto run = [&](std::size_t task) {
    std::vector<Resolution> choice(c, Resolution::SmoothA);
    int a_exp = 0, v_count = 0;
    std::size_t code = task;
    for (std::size_t i = 0; i < depth; ++i, code /= 3) {
      choice[i] = static_cast<Resolution>(code % 3);
      if (choice[i] == Resolution::SmoothA) a_exp += 4;
      if (choice[i] == Resolution::SmoothB) a_exp -= 4;
      if (choice[i] == Resolution::Vertex) ++v_count;
    }
    detail::yamada_subtree(g, table, choice, depth, a_exp, v_count, partial[task], memo);
  };
  if (task_count == 1) {
    run(0);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < std::min<std::size_t>(threads, task_count); ++w)
      workers.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i; (i = next++) < task_count;) run(i);
      }));
    for (auto& f : workers) f.get();
  }
  detail::ACoefficients total;
  for (const auto& p : partial)
    for (const auto& [e, w] : p) total[e] += w;
  return detail::combine(total);
}

}  // namespace skein
