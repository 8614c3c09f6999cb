#pragma once

// Combinatorial diagrams of spatial graphs and links.
//
// A diagram is a list of nodes (flat vertices and crossings), each listing
// the arcs that meet it in counterclockwise order, plus a count of free
// circles.  Every arc has exactly two ends.  At a crossing [a, b, c, d] the
// strand through positions 1 and 3 (b, d) passes over the strand through
// positions 0 and 2 (a, c).  An arc is oriented from its first slot in node
// order to its second; ray words are read along that orientation.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "skein/errors.hpp"

namespace skein {

/// Signed crossing of an arc with the reference ray from hole 1 or hole 2.
enum class RayLetter : std::uint8_t { Hole1Plus, Hole1Minus, Hole2Plus, Hole2Minus };
using RayWord = std::vector<RayLetter>;

inline RayLetter flipped(RayLetter l) {
  switch (l) {
    case RayLetter::Hole1Plus: return RayLetter::Hole1Minus;
    case RayLetter::Hole1Minus: return RayLetter::Hole1Plus;
    case RayLetter::Hole2Plus: return RayLetter::Hole2Minus;
    case RayLetter::Hole2Minus: return RayLetter::Hole2Plus;
  }
  return l;
}

/// The word read along the arc in the opposite direction.
inline RayWord reversed(const RayWord& w) {
  RayWord r(w.rbegin(), w.rend());
  for (auto& l : r) l = flipped(l);
  return r;
}

inline std::string to_string(RayLetter l) {
  switch (l) {
    case RayLetter::Hole1Plus: return "1+";
    case RayLetter::Hole1Minus: return "1-";
    case RayLetter::Hole2Plus: return "2+";
    case RayLetter::Hole2Minus: return "2-";
  }
  return "?";
}

inline std::optional<RayLetter> parse_ray_letter(const std::string& s) {
  if (s == "1+") return RayLetter::Hole1Plus;
  if (s == "1-") return RayLetter::Hole1Minus;
  if (s == "2+") return RayLetter::Hole2Plus;
  if (s == "2-") return RayLetter::Hole2Minus;
  return std::nullopt;
}

/// Signed ray-crossing totals (hole 1, hole 2); winding numbers of a closed curve.
inline std::array<int, 2> winding(const RayWord& w) {
  std::array<int, 2> r{0, 0};
  for (auto l : w) {
    switch (l) {
      case RayLetter::Hole1Plus: ++r[0]; break;
      case RayLetter::Hole1Minus: --r[0]; break;
      case RayLetter::Hole2Plus: ++r[1]; break;
      case RayLetter::Hole2Minus: --r[1]; break;
    }
  }
  return r;
}

enum class NodeKind : std::uint8_t { Vertex, Crossing };

struct Node {
  NodeKind kind = NodeKind::Vertex;
  std::vector<int> arcs;  // counterclockwise

  friend bool operator==(const Node&, const Node&) = default;
};

struct Slot {
  int node = 0;
  int pos = 0;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

enum class Resolution : std::uint8_t { SmoothA, SmoothB, Vertex };

/// Crossing-free residue of a diagram as an abstract multigraph.
struct FlatState {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // loops allowed
  int circle_count = 0;
};

class GraphDiagram {
 public:
  GraphDiagram() = default;

  /// Arc labels must be exactly 0..m-1, each used twice; throws DiagramError.
  explicit GraphDiagram(std::vector<Node> nodes, int free_circles = 0, std::map<int, RayWord> ray_words = {})
      : nodes_(std::move(nodes)), free_circles_(free_circles), ray_words_(std::move(ray_words)) {
    validate();
  }

  const std::vector<Node>& nodes() const { return nodes_; }
  int free_circles() const { return free_circles_; }
  const std::map<int, RayWord>& ray_words() const { return ray_words_; }
  bool has_ray_words() const { return !ray_words_.empty(); }
  int arc_count() const { return static_cast<int>(ends_.size()); }

  int vertex_count() const { return count(NodeKind::Vertex); }
  int crossing_count() const { return count(NodeKind::Crossing); }

  /// Node index of the k-th crossing.
  int crossing_node(int k) const {
    for (int i = 0; i < static_cast<int>(nodes_.size()); ++i)
      if (nodes_[i].kind == NodeKind::Crossing && k-- == 0) return i;
    throw DiagramError("unknown crossing id");
  }

  /// (tail, head) of an arc; tail is the earlier slot.
  const std::pair<Slot, Slot>& arc_ends(int arc) const { return ends_.at(static_cast<std::size_t>(arc)); }

  RayWord word(int arc) const {
    auto it = ray_words_.find(arc);
    return it == ray_words_.end() ? RayWord{} : it->second;
  }

  int arc_at(const Slot& s) const { return nodes_[static_cast<std::size_t>(s.node)].arcs[static_cast<std::size_t>(s.pos)]; }

  /// Arcs grouped into edges: an edge runs straight through crossings and
  /// ends at vertices.  Second member: true for vertexless closed strands.
  std::vector<std::pair<std::vector<int>, bool>> edge_classes() const {
    std::vector<int> parent(ends_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& n : nodes_)
      if (n.kind == NodeKind::Crossing) {
        parent[find(n.arcs[0])] = find(n.arcs[2]);
        parent[find(n.arcs[1])] = find(n.arcs[3]);
      }
    std::map<int, std::size_t> index;
    std::vector<std::pair<std::vector<int>, bool>> out;
    for (int a = 0; a < arc_count(); ++a) {
      auto [it, fresh] = index.try_emplace(find(a), out.size());
      if (fresh) out.push_back({{}, true});
      out[it->second].first.push_back(a);
    }
    for (auto& [arcs, closed] : out)
      for (int a : arcs) {
        const auto& [t, h] = arc_ends(a);
        if (nodes_[t.node].kind == NodeKind::Vertex || nodes_[h.node].kind == NodeKind::Vertex) closed = false;
      }
    return out;
  }

  /// Edges of the underlying graph (vertexless components excluded).
  int edge_count() const {
    int e = 0;
    for (const auto& [arcs, closed] : edge_classes()) e += closed ? 0 : 1;
    return e;
  }
  int alpha() const { return edge_count() - vertex_count(); }

  /// Representative up to the symmetries of the encoding: vertices rotated
  /// cyclically, crossings by two positions.  Labels are left untouched.
  GraphDiagram canonical() const {
    std::vector<int> rot(nodes_.size(), 0);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const auto& a = nodes_[i].arcs;
      const int n = static_cast<int>(a.size());
      const int step = nodes_[i].kind == NodeKind::Crossing ? 2 : 1;
      auto rotated = [&](int r) {
        std::vector<int> v(a.size());
        for (int k = 0; k < n; ++k) v[k] = a[(k + r) % n];
        return v;
      };
      int best = 0;
      for (int r = step; r < n; r += step)
        if (rotated(r) < rotated(best)) best = r;
      rot[i] = best;
    }
    return rotate_nodes(rot);
  }

  /// New node i lists old positions starting at rot[i]; ray words follow.
  GraphDiagram rotate_nodes(const std::vector<int>& rot) const {
    std::vector<Node> nodes = nodes_;
    std::map<Slot, Slot> moved;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const int n = static_cast<int>(nodes_[i].arcs.size());
      for (int k = 0; k < n; ++k) {
        const int from = (k + rot[i]) % n;
        nodes[i].arcs[k] = nodes_[i].arcs[from];
        moved[{static_cast<int>(i), from}] = {static_cast<int>(i), k};
      }
    }
    GraphDiagram g(std::move(nodes), free_circles_);
    for (const auto& [arc, w] : ray_words_) {
      const Slot new_tail = moved.at(arc_ends(arc).first);
      g.ray_words_[arc] = new_tail == g.arc_ends(arc).first ? w : reversed(w);
    }
    return g;
  }

  friend bool operator==(const GraphDiagram& a, const GraphDiagram& b) {
    if (a.free_circles_ != b.free_circles_ || a.nodes_.size() != b.nodes_.size()) return false;
    const GraphDiagram ca = a.canonical(), cb = b.canonical();
    return ca.nodes_ == cb.nodes_ && ca.ray_words_ == cb.ray_words_;
  }

 private:
  int count(NodeKind k) const {
    return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(), [k](const Node& n) { return n.kind == k; }));
  }

  void validate() {
    if (free_circles_ < 0) throw DiagramError("negative free circle count");
    std::vector<std::vector<Slot>> seen;
    for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
      const auto& n = nodes_[i];
      if (n.kind == NodeKind::Crossing && n.arcs.size() != 4) throw DiagramError("crossing needs exactly four arcs");
      if (n.kind == NodeKind::Vertex && n.arcs.empty()) throw DiagramError("vertex needs at least one arc");
      for (int k = 0; k < static_cast<int>(n.arcs.size()); ++k) {
        const int a = n.arcs[k];
        if (a < 0) throw DiagramError("negative arc label");
        if (static_cast<std::size_t>(a) >= seen.size()) seen.resize(static_cast<std::size_t>(a) + 1);
        seen[static_cast<std::size_t>(a)].push_back({i, k});
      }
    }
    ends_.clear();
    for (std::size_t a = 0; a < seen.size(); ++a) {
      if (seen[a].size() != 2)
        throw DiagramError("arc " + std::to_string(a) + " has " + std::to_string(seen[a].size()) + " ends");
      ends_.emplace_back(seen[a][0], seen[a][1]);
    }
    for (const auto& [arc, w] : ray_words_)
      if (arc < 0 || arc >= arc_count()) throw DiagramError("ray word on unknown arc");
    for (auto it = ray_words_.begin(); it != ray_words_.end();)
      it = it->second.empty() ? ray_words_.erase(it) : std::next(it);
  }

  std::vector<Node> nodes_;
  int free_circles_ = 0;
  std::map<int, RayWord> ray_words_;
  std::vector<std::pair<Slot, Slot>> ends_;
};

namespace detail {

/// Joins strand ends into arcs.  Terminal points are slots of the output
/// diagram; internal points have exactly two wires and are traced through.
class Wiring {
 public:
  int add_terminal(Slot s) {
    terminal_.push_back(s);
    is_terminal_.push_back(true);
    adj_.emplace_back();
    return static_cast<int>(adj_.size()) - 1;
  }
  int add_internal() {
    terminal_.push_back({});
    is_terminal_.push_back(false);
    adj_.emplace_back();
    return static_cast<int>(adj_.size()) - 1;
  }
  void connect(int a, int b, RayWord w = {}) {
    const int id = static_cast<int>(wires_.size());
    wires_.push_back({a, b, std::move(w)});
    adj_[a].push_back(id);
    adj_[b].push_back(id);
  }

  struct Path {
    Slot from, to;
    RayWord word;  // read from -> to
  };

  /// Open paths between terminals, and words of closed loops.
  std::pair<std::vector<Path>, std::vector<RayWord>> trace() const {
    std::vector<bool> used(wires_.size(), false);
    std::vector<Path> paths;
    std::vector<RayWord> loops;
    auto walk = [&](int start, int wire, RayWord& word) {
      int at = start;
      while (true) {
        used[wire] = true;
        const Wire& w = wires_[wire];
        const bool forward = w.a == at;
        const RayWord piece = forward ? w.word : reversed(w.word);
        word.insert(word.end(), piece.begin(), piece.end());
        at = forward ? w.b : w.a;
        if (is_terminal_[at]) return at;
        const auto& next = adj_[at];
        if (next.size() != 2) throw DiagramError("internal wiring point without two wires");
        const int cand = next[0] == wire ? next[1] : next[0];
        if (next[0] == wire && next[1] == wire) return at;  // a one-wire loop
        if (used[cand]) return at;
        wire = cand;
      }
    };
    for (int p = 0; p < static_cast<int>(adj_.size()); ++p) {
      if (!is_terminal_[p]) continue;
      if (adj_[p].size() != 1) throw DiagramError("terminal wiring point without exactly one wire");
      if (used[adj_[p][0]]) continue;
      RayWord word;
      const int end = walk(p, adj_[p][0], word);
      paths.push_back({terminal_[p], terminal_[end], std::move(word)});
    }
    for (int w = 0; w < static_cast<int>(wires_.size()); ++w) {
      if (used[w]) continue;
      RayWord word;
      walk(wires_[w].a, w, word);
      loops.push_back(std::move(word));
    }
    return {std::move(paths), std::move(loops)};
  }

 private:
  struct Wire {
    int a, b;
    RayWord word;
  };
  std::vector<Slot> terminal_;
  std::vector<bool> is_terminal_;
  std::vector<std::vector<int>> adj_;
  std::vector<Wire> wires_;
};

/// Fills arc labels of `nodes` (placeholders) from traced paths, numbering
/// arcs by first occurrence, and orients the path words.
inline GraphDiagram assemble(std::vector<Node> nodes, const std::vector<Wiring::Path>& paths, int free_circles) {
  std::map<Slot, std::size_t> path_at;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    path_at[paths[i].from] = i;
    path_at[paths[i].to] = i;
  }
  std::vector<int> label(paths.size(), -1);
  int next = 0;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    for (int k = 0; k < static_cast<int>(nodes[i].arcs.size()); ++k) {
      const std::size_t p = path_at.at({i, k});
      if (label[p] < 0) label[p] = next++;
      nodes[i].arcs[k] = label[p];
    }
  std::map<int, RayWord> words;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].word.empty()) continue;
    const bool forward = paths[i].from < paths[i].to;
    words[label[i]] = forward ? paths[i].word : reversed(paths[i].word);
  }
  return GraphDiagram(std::move(nodes), free_circles, std::move(words));
}

}  // namespace detail

/// Swaps over and under at every crossing.
inline GraphDiagram mirror(const GraphDiagram& g) {
  std::vector<int> rot(g.nodes().size(), 0);
  for (std::size_t i = 0; i < rot.size(); ++i)
    if (g.nodes()[i].kind == NodeKind::Crossing) rot[i] = 1;
  return g.rotate_nodes(rot);
}

inline GraphDiagram disjoint_union(const GraphDiagram& a, const GraphDiagram& b) {
  std::vector<Node> nodes = a.nodes();
  const int offset = a.arc_count();
  for (Node n : b.nodes()) {
    for (int& arc : n.arcs) arc += offset;
    nodes.push_back(std::move(n));
  }
  std::map<int, RayWord> words = a.ray_words();
  for (const auto& [arc, w] : b.ray_words()) words[arc + offset] = w;
  return GraphDiagram(std::move(nodes), a.free_circles() + b.free_circles(), std::move(words));
}

/// Replaces crossing `crossing_id` (ordinal among crossings) by a smoothing
/// or by a flat 4-valent vertex.  Loops closed off by a smoothing become
/// free circles and drop their ray words.
inline GraphDiagram resolve_crossing(const GraphDiagram& g, int crossing_id, Resolution kind) {
  const int c = g.crossing_node(crossing_id);
  if (kind == Resolution::Vertex) {
    std::vector<Node> nodes = g.nodes();
    nodes[static_cast<std::size_t>(c)].kind = NodeKind::Vertex;
    return GraphDiagram(std::move(nodes), g.free_circles(), g.ray_words());
  }
  detail::Wiring wiring;
  std::vector<Node> out;
  std::map<Slot, int> point;
  for (int i = 0; i < static_cast<int>(g.nodes().size()); ++i) {
    const Node& n = g.nodes()[i];
    if (i != c) out.push_back({n.kind, std::vector<int>(n.arcs.size(), -1)});
    for (int k = 0; k < static_cast<int>(n.arcs.size()); ++k)
      point[{i, k}] = i == c ? wiring.add_internal() : wiring.add_terminal({static_cast<int>(out.size()) - 1, k});
  }
  for (int a = 0; a < g.arc_count(); ++a) {
    const auto& [t, h] = g.arc_ends(a);
    wiring.connect(point.at(t), point.at(h), g.word(a));
  }
  const bool smooth_a = kind == Resolution::SmoothA;
  wiring.connect(point.at({c, 0}), point.at({c, smooth_a ? 1 : 3}));
  wiring.connect(point.at({c, 2}), point.at({c, smooth_a ? 3 : 1}));
  auto [paths, loops] = wiring.trace();
  return detail::assemble(std::move(out), paths, g.free_circles() + static_cast<int>(loops.size()));
}

inline FlatState to_flat_state(const GraphDiagram& g) {
  if (g.crossing_count() > 0) throw DiagramError("to_flat_state: diagram has crossings");
  FlatState s;
  s.vertex_count = static_cast<int>(g.nodes().size());
  s.circle_count = g.free_circles();
  for (int a = 0; a < g.arc_count(); ++a) s.edges.emplace_back(g.arc_ends(a).first.node, g.arc_ends(a).second.node);
  return s;
}

/// One vertex carrying m loops drawn as disjoint petals.
inline GraphDiagram bouquet(int m) {
  if (m < 1) throw DiagramError("bouquet needs at least one loop");
  Node v{NodeKind::Vertex, {}};
  for (int i = 0; i < m; ++i) {
    v.arcs.push_back(i);
    v.arcs.push_back(i);
  }
  return GraphDiagram({v});
}

inline GraphDiagram circle_diagram() { return GraphDiagram({}, 1); }

// ---------------------------------------------------------------------------
// Text format

inline GraphDiagram parse_diagram(const std::string& text) {
  struct Use {
    int node;
    int line;
  };
  std::vector<std::pair<Node, int>> raw_nodes;  // node with token labels resolved later
  std::vector<std::vector<std::string>> node_tokens;
  std::vector<std::pair<std::string, std::pair<RayWord, int>>> rays;
  int circles = 0;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "V" || kw == "X") {
      if (kw == "X" && tok.size() != 5) throw ParseError("crossing needs exactly four arc labels", lineno);
      if (kw == "V" && tok.size() < 2) throw ParseError("vertex needs at least one arc label", lineno);
      raw_nodes.push_back({{kw == "V" ? NodeKind::Vertex : NodeKind::Crossing, {}}, lineno});
      node_tokens.emplace_back(tok.begin() + 1, tok.end());
    } else if (kw == "O") {
      if (tok.size() != 1) throw ParseError("'O' takes no arguments", lineno);
      ++circles;
    } else if (kw == "RAY") {
      if (tok.size() < 2) throw ParseError("RAY needs an arc label", lineno);
      RayWord w;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        auto l = parse_ray_letter(tok[i]);
        if (!l) throw ParseError("bad ray letter '" + tok[i] + "' (expected 1+, 1-, 2+ or 2-)", lineno);
        w.push_back(*l);
      }
      for (const auto& r : rays)
        if (r.first == tok[1]) throw ParseError("duplicate RAY declaration for arc '" + tok[1] + "'", lineno);
      rays.push_back({tok[1], {std::move(w), lineno}});
    } else {
      throw ParseError("unknown directive '" + kw + "'", lineno);
    }
  }

  // Labels: kept as numbers when they are exactly 1..m, else numbered by
  // first occurrence.
  std::map<std::string, std::vector<int>> uses;  // token -> lines
  std::vector<std::string> order;
  for (std::size_t i = 0; i < node_tokens.size(); ++i)
    for (const auto& t : node_tokens[i]) {
      auto& u = uses[t];
      if (u.empty()) order.push_back(t);
      u.push_back(raw_nodes[i].second);
    }
  for (const auto& t : order) {
    const auto& u = uses[t];
    if (u.size() != 2)
      throw ParseError("arc label '" + t + "' used " + std::to_string(u.size()) + " time(s), expected exactly 2",
                       u.size() > 2 ? u[2] : u[0]);
  }
  std::map<std::string, int> label;
  bool numeric = !order.empty();
  std::set<long long> values;
  for (const auto& t : order) {
    if (t.empty() || t.size() > 9 || !std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      numeric = false;
      break;
    }
    values.insert(std::stoll(t));
  }
  if (numeric && (*values.begin() != 1 || *values.rbegin() != static_cast<long long>(order.size()))) numeric = false;
  for (std::size_t i = 0; i < order.size(); ++i)
    label[order[i]] = numeric ? static_cast<int>(std::stoll(order[i])) - 1 : static_cast<int>(i);

  std::vector<Node> nodes;
  for (std::size_t i = 0; i < raw_nodes.size(); ++i) {
    Node n = raw_nodes[i].first;
    for (const auto& t : node_tokens[i]) n.arcs.push_back(label.at(t));
    nodes.push_back(std::move(n));
  }
  std::map<int, RayWord> words;
  for (const auto& [tokname, wl] : rays) {
    auto it = label.find(tokname);
    if (it == label.end()) throw ParseError("ray word on unknown arc '" + tokname + "'", wl.second);
    words[it->second] = wl.first;
  }
  try {
    return GraphDiagram(std::move(nodes), circles, std::move(words));
  } catch (const DiagramError& e) {
    throw ParseError(e.what());
  }
}

inline std::string serialize_diagram(const GraphDiagram& g) {
  std::ostringstream os;
  for (const auto& n : g.nodes()) {
    os << (n.kind == NodeKind::Vertex ? 'V' : 'X');
    for (int a : n.arcs) os << ' ' << a + 1;
    os << '\n';
  }
  for (int i = 0; i < g.free_circles(); ++i) os << "O\n";
  for (const auto& [arc, w] : g.ray_words()) {
    os << "RAY " << arc + 1;
    for (auto l : w) os << ' ' << to_string(l);
    os << '\n';
  }
  return os.str();
}

}  // namespace skein
