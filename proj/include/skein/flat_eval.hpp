#pragma once

// Yamada value of a crossing-free state, evaluated on the abstract multigraph.
//
// W(G) is computed as a Laurent polynomial in d: loops contribute d - 1/d,
// a non-loop edge gives W(G/e) - d^{-1} W(G - e), and k isolated vertices
// give d^k.  Circles contribute d^2 - 1 each.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"
#include "skein/localized.hpp"

namespace skein {

/// Laurent polynomial in d (exponents are powers of d).
using DPoly = LaurentPoly;

namespace detail {

inline const DPoly& d_minus_inverse() {
  static const DPoly v = DPoly(1, 1) - DPoly(1, -1);
  return v;
}

/// Multigraph as a symmetric multiplicity matrix; the diagonal counts loops.
struct Multigraph {
  int n = 0;
  std::vector<int> m;  // n*n

  explicit Multigraph(int vertices = 0) : n(vertices), m(static_cast<std::size_t>(vertices) * vertices, 0) {}
  int& at(int i, int j) { return m[static_cast<std::size_t>(i) * n + j]; }
  int at(int i, int j) const { return m[static_cast<std::size_t>(i) * n + j]; }
  void add_edge(int u, int v) {
    if (u == v) {
      ++at(u, u);
    } else {
      ++at(u, v);
      ++at(v, u);
    }
  }
  int degree(int v) const {  // loops excluded
    int s = 0;
    for (int j = 0; j < n; ++j)
      if (j != v) s += at(v, j);
    return s;
  }
  int edge_count() const {
    int s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) s += at(i, j);
    return s;
  }
  Multigraph without(int v) const {
    Multigraph g(n - 1);
    for (int i = 0, a = 0; i < n; ++i) {
      if (i == v) continue;
      for (int j = 0, b = 0; j < n; ++j) {
        if (j == v) continue;
        g.at(a, b) = at(i, j);
        ++b;
      }
      ++a;
    }
    return g;
  }
  /// Contracts one u-v edge (u != v); other parallel u-v edges become loops.
  Multigraph contracted(int u, int v) const {
    Multigraph g = *this;
    const int parallel = g.at(u, v) - 1;
    g.at(u, v) = g.at(v, u) = 0;
    g.at(u, u) += g.at(v, v) + parallel;
    for (int j = 0; j < n; ++j) {
      if (j == u || j == v) continue;
      g.at(u, j) += g.at(v, j);
      g.at(j, u) = g.at(u, j);
    }
    for (int j = 0; j < n; ++j) g.at(v, j) = g.at(j, v) = 0;
    return g.without(v);
  }
  Multigraph deleted(int u, int v) const {
    Multigraph g = *this;
    --g.at(u, v);
    if (u != v) --g.at(v, u);
    return g;
  }
  Multigraph induced(const std::vector<int>& vs) const {
    Multigraph g(static_cast<int>(vs.size()));
    for (int a = 0; a < g.n; ++a)
      for (int b = 0; b < g.n; ++b) g.at(a, b) = at(vs[a], vs[b]);
    return g;
  }
  std::vector<std::vector<int>> components() const {
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      out.emplace_back();
      std::vector<int> stack{s};
      comp[s] = static_cast<int>(out.size()) - 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        out.back().push_back(v);
        for (int j = 0; j < n; ++j)
          if (j != v && at(v, j) > 0 && comp[j] < 0) {
            comp[j] = comp[s];
            stack.push_back(j);
          }
      }
      std::sort(out.back().begin(), out.back().end());
    }
    return out;
  }
};

inline Multigraph to_multigraph(const FlatState& s) {
  Multigraph g(s.vertex_count);
  for (const auto& [u, v] : s.edges) {
    if (u < 0 || v < 0 || u >= s.vertex_count || v >= s.vertex_count) throw DiagramError("edge endpoint out of range");
    g.add_edge(u, v);
  }
  return g;
}

/// Memo key: adjacency matrix under a canonical vertex order.  Colour
/// refinement splits vertices into cells; orders within cells are searched
/// exhaustively up to a budget, beyond which the refined order is used as is
/// (still a correct key, only less sharing).
inline std::string canonical_key(const Multigraph& g) {
  const int n = g.n;
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v) * 64 + g.at(v, v);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<std::pair<int, int>> nb;
      for (int j = 0; j < n; ++j)
        if (j != v && g.at(v, j) > 0) nb.emplace_back(colour[j], g.at(v, j));
      std::sort(nb.begin(), nb.end());
      for (auto [c, k] : nb) {
        sig[v].push_back(c);
        sig[v].push_back(k);
      }
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    const auto classes = [](const std::vector<int>& c) {
      std::vector<int> s = c;
      std::sort(s.begin(), s.end());
      return std::unique(s.begin(), s.end()) - s.begin();
    };
    const bool stable = classes(next) == classes(colour);
    colour = std::move(next);
    if (stable) break;
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b]; });
  std::vector<std::pair<int, int>> cells;  // [begin, end)
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  constexpr long kBudget = 2000;
  long budget = 1;
  for (auto [b, e] : cells) {
    for (int k = 2; k <= e - b && budget <= kBudget; ++k) budget *= k;
  }

  auto encode = [&](const std::vector<int>& ord) {
    std::string key;
    key.reserve(static_cast<std::size_t>(n) * (n + 1) / 2 + 4);
    key.push_back(static_cast<char>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) key.push_back(static_cast<char>(g.at(ord[i], ord[j])));
    return key;
  };
  if (budget > kBudget) return encode(order);

  std::string best;
  bool first = true;
  // Odometer over permutations of every cell.
  std::vector<int> ord = order;
  for (auto [b, e] : cells) std::sort(ord.begin() + b, ord.begin() + e);
  while (true) {
    std::string k = encode(ord);
    if (first || k < best) {
      best = std::move(k);
      first = false;
    }
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto [b, e] = cells[c];
      if (std::next_permutation(ord.begin() + b, ord.begin() + e)) break;
    }
    if (c == cells.size()) break;
  }
  return best;
}

}  // namespace detail

/// Thread-safe memo table for flat evaluations, keyed by canonical multigraph.
class FlatMemo {
 public:
  std::optional<DPoly> find(const std::string& key) const {
    std::shared_lock lock(mu_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const std::string& key, const DPoly& value) {
    std::unique_lock lock(mu_);
    table_.emplace(key, value);
  }
  std::size_t size() const {
    std::shared_lock lock(mu_);
    return table_.size();
  }
  void clear() {
    std::unique_lock lock(mu_);
    table_.clear();
  }
  static FlatMemo& global() {
    static FlatMemo memo;
    return memo;
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, DPoly> table_;
};

namespace detail {

inline DPoly flat_w(Multigraph g, FlatMemo& memo) {
  DPoly factor(1);
  // Normalize: strip loops and isolated vertices, suppress degree-2
  // vertices, vanish on leaves.
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < g.n; ++v) {
      if (g.at(v, v) > 0) {
        factor *= d_minus_inverse().pow(static_cast<unsigned>(g.at(v, v)));
        g.at(v, v) = 0;
      }
    }
    for (int v = g.n - 1; v >= 0; --v) {
      const int deg = g.degree(v);
      if (deg == 0) {
        factor *= DPoly(1, 1);
        g = g.without(v);
        changed = true;
      } else if (deg == 1) {
        return DPoly();
      } else if (deg == 2) {
        int u = -1;
        for (int j = 0; j < g.n && u < 0; ++j)
          if (j != v && g.at(v, j) > 0) u = j;
        g = g.contracted(u, v);
        changed = true;
        break;
      }
    }
  }
  if (g.n == 0) return factor;

  const auto comps = g.components();
  if (comps.size() > 1) {
    for (const auto& c : comps) factor *= flat_w(g.induced(c), memo);
    return factor;
  }

  const std::string key = canonical_key(g);
  if (auto hit = memo.find(key)) return factor * *hit;

  // Branch on the heaviest parallel class.
  int bu = 0, bv = 1, best = -1;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.at(i, j) > best) {
        best = g.at(i, j);
        bu = i;
        bv = j;
      }
  DPoly w = flat_w(g.contracted(bu, bv), memo) - DPoly(1, -1) * flat_w(g.deleted(bu, bv), memo);
  memo.insert(key, w);
  return factor * w;
}

inline LocalizedElement circle_factor(int c) {
  static const LocalizedElement d2m1 = LocalizedElement::d() * LocalizedElement::d() - LocalizedElement(1);
  return d2m1.pow(static_cast<unsigned>(c));
}

}  // namespace detail

/// Flat value as a Laurent polynomial in d, circles excluded.
inline DPoly flat_w(const FlatState& s, FlatMemo& memo = FlatMemo::global()) {
  return detail::flat_w(detail::to_multigraph(s), memo);
}

inline LocalizedElement flat_eval(const FlatState& s, FlatMemo& memo = FlatMemo::global()) {
  return detail::circle_factor(s.circle_count) * LocalizedElement::from_d_laurent(flat_w(s, memo));
}

/// Plain deletion-contraction with edges chosen by `rng`; no shortcuts, no memo.
template <class Rng>
LocalizedElement flat_eval_random_order(const FlatState& s, Rng& rng) {
  std::vector<std::pair<int, int>> edges = s.edges;
  auto rec = [&rng](auto&& self, int n, std::vector<std::pair<int, int>> es) -> DPoly {
    DPoly factor(1);
    std::vector<std::pair<int, int>> rest;
    for (auto e : es) {
      if (e.first == e.second)
        factor *= detail::d_minus_inverse();
      else
        rest.push_back(e);
    }
    if (rest.empty()) return factor * DPoly(1, n);
    std::uniform_int_distribution<std::size_t> pick(0, rest.size() - 1);
    const std::size_t k = pick(rng);
    const auto [u, v] = rest[k];
    std::vector<std::pair<int, int>> del = rest;
    del.erase(del.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<std::pair<int, int>> con;
    auto relabel = [u = u, v = v](int x) {
      if (x == v) x = u;
      return x > v ? x - 1 : x;
    };
    for (auto [a, b] : del) con.emplace_back(relabel(a), relabel(b));
    return factor * (self(self, n - 1, std::move(con)) - DPoly(1, -1) * self(self, n, std::move(del)));
  };
  return detail::circle_factor(s.circle_count) *
         LocalizedElement::from_d_laurent(rec(rec, s.vertex_count, std::move(edges)));
}

/// Subset state sum over spanning subgraphs:
/// sum_F (-1/d)^{|E-F|} d^{beta(F) + c(F)}.
inline LocalizedElement flat_eval_oracle(const FlatState& s, int edge_limit = 20) {
  const int e = static_cast<int>(s.edges.size());
  if (e > edge_limit) throw std::invalid_argument("oracle: edge count above limit");
  std::map<int, BigInt> acc;
  std::vector<int> parent(static_cast<std::size_t>(s.vertex_count));
  for (std::uint32_t mask = 0; mask < (1U << e); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int comps = s.vertex_count, kept = 0;
    for (int i = 0; i < e; ++i) {
      if (!(mask >> i & 1U)) continue;
      ++kept;
      const int a = find(s.edges[i].first), b = find(s.edges[i].second);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    const int removed = e - kept;
    const int exponent = kept - s.vertex_count + 2 * comps - removed;
    acc[exponent] += removed % 2 ? -1 : 1;
  }
  DPoly w;
  for (const auto& [ex, c] : acc) w += DPoly(c, ex);
  return detail::circle_factor(s.circle_count) * LocalizedElement::from_d_laurent(w);
}

}  // namespace skein
