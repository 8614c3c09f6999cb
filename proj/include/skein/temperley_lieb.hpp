#pragma once

// Temperley-Lieb algebra on n strands: linear combinations of crossingless
// pairings of n bottom and n top points, loops evaluating to d.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skein/rational.hpp"

namespace skein {

/// Points 0..n-1 are the bottom row left to right, n..2n-1 the top row.
class PlanarPairing {
 public:
  PlanarPairing() = default;

  /// partner[i] is the point matched with i; throws if not a crossingless
  /// perfect matching.
  explicit PlanarPairing(std::vector<int> partner) : partner_(std::move(partner)) { validate(); }

  static PlanarPairing identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
      p[i] = n + i;
      p[n + i] = i;
    }
    return PlanarPairing(std::move(p));
  }

  /// Generator U_i, 1 <= i < n: cup and cap joining strands i and i+1.
  static PlanarPairing generator(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
    PlanarPairing p = identity(n);
    auto& q = p.partner_;
    q[i - 1] = i;
    q[i] = i - 1;
    q[n + i - 1] = n + i;
    q[n + i] = n + i - 1;
    return p;
  }

  int strands() const { return static_cast<int>(partner_.size()) / 2; }
  int partner(int i) const { return partner_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& partners() const { return partner_; }

  /// Arcs (a, b) with a < b, sorted by a.
  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(partner_.size()); ++i)
      if (i < partner_[i]) out.emplace_back(i, partner_[i]);
    return out;
  }

  friend bool operator==(const PlanarPairing&, const PlanarPairing&) = default;
  friend bool operator<(const PlanarPairing& a, const PlanarPairing& b) { return a.partner_ < b.partner_; }

  friend std::pair<PlanarPairing, int> compose(const PlanarPairing& lower, const PlanarPairing& upper);

 private:
  void validate() const {
    const int m = static_cast<int>(partner_.size());
    if (m % 2) throw std::invalid_argument("pairing needs an even number of points");
    const int n = m / 2;
    auto around = [n](int i) { return i < n ? i : 3 * n - 1 - i; };  // position on the boundary circle
    for (int i = 0; i < m; ++i) {
      const int j = partner_[i];
      if (j < 0 || j >= m || j == i || partner_[j] != i) throw std::invalid_argument("not a perfect matching");
    }
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) {
        int a = around(i), b = around(partner_[i]), c = around(k), e = around(partner_[k]);
        if (a > b) std::swap(a, b);
        if ((a < c && c < b) != (a < e && e < b)) throw std::invalid_argument("pairing is not crossingless");
      }
  }

  std::vector<int> partner_;
};

/// `upper` stacked on `lower`: lower's top row glued to upper's bottom row.
/// Returns the resulting pairing and the number of closed loops.
inline std::pair<PlanarPairing, int> compose(const PlanarPairing& lower, const PlanarPairing& upper) {
  const int n = lower.strands();
  if (upper.strands() != n) throw std::invalid_argument("strand count mismatch");
  // Nodes: lower points 0..2n-1, upper points 2n..4n-1.
  auto pair_of = [&](int x) { return x < 2 * n ? lower.partner(x) : 2 * n + upper.partner(x - 2 * n); };
  auto glue = [&](int x) -> int {  // lower top i <-> upper bottom i
    if (x < 2 * n) return x >= n ? 2 * n + (x - n) : -1;
    return x - 2 * n < n ? n + (x - 2 * n) : -1;
  };
  auto external = [&](int x) { return glue(x) < 0; };
  std::vector<int> result(static_cast<std::size_t>(2 * n));
  std::vector<bool> seen(static_cast<std::size_t>(4 * n), false);
  auto out_index = [&](int x) { return x < 2 * n ? x : x - 2 * n; };  // lower bottom or upper top
  for (int x = 0; x < 4 * n; ++x) {
    if (!external(x) || seen[x]) continue;
    int at = x;
    seen[at] = true;
    while (true) {
      at = pair_of(at);
      seen[at] = true;
      if (external(at)) break;
      at = glue(at);
      seen[at] = true;
    }
    result[out_index(x)] = out_index(at);
    result[out_index(at)] = out_index(x);
  }
  int loops = 0;
  for (int x = 0; x < 4 * n; ++x) {
    if (seen[x]) continue;
    ++loops;
    int at = x;
    do {
      seen[at] = true;
      at = pair_of(at);
      seen[at] = true;
      at = glue(at);
    } while (at != x);
  }
  return {PlanarPairing(std::move(result)), loops};
}

/// All crossingless pairings on n strands (Catalan(n) of them).
inline std::vector<PlanarPairing> all_pairings(int n) {
  const int m = 2 * n;
  // Match points in boundary-circle order, then translate positions back.
  auto from_around = [n](int c) { return c < n ? c : 3 * n - 1 - c; };
  std::vector<PlanarPairing> out;
  std::vector<int> circ(static_cast<std::size_t>(m), -1);
  // Matchings of the interval [lo, hi) are enumerated by choosing lo's partner.
  auto rec = [&](auto&& self, std::vector<std::pair<int, int>> pending) -> void {
    while (!pending.empty() && pending.back().first >= pending.back().second) pending.pop_back();
    if (pending.empty()) {
      std::vector<int> p(static_cast<std::size_t>(m));
      for (int c = 0; c < m; ++c) p[from_around(c)] = from_around(circ[c]);
      out.emplace_back(std::move(p));
      return;
    }
    const auto [lo, hi] = pending.back();
    pending.pop_back();
    for (int j = lo + 1; j < hi; j += 2) {
      circ[lo] = j;
      circ[j] = lo;
      auto next = pending;
      next.emplace_back(j + 1, hi);
      next.emplace_back(lo + 1, j);
      self(self, std::move(next));
    }
  };
  rec(rec, {{0, m}});
  std::sort(out.begin(), out.end());
  return out;
}

class TangleElement {
 public:
  using Terms = std::map<PlanarPairing, RationalFunction>;

  explicit TangleElement(int n = 1) : n_(n) {}
  TangleElement(const PlanarPairing& p, RationalFunction c = 1) : n_(p.strands()) { add(p, std::move(c)); }

  static TangleElement identity(int n) { return TangleElement(PlanarPairing::identity(n)); }
  static TangleElement generator(int n, int i) { return TangleElement(PlanarPairing::generator(n, i)); }

  int strands() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFunction coefficient(const PlanarPairing& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? RationalFunction() : it->second;
  }

  void add(const PlanarPairing& p, const RationalFunction& c) {
    if (p.strands() != n_) throw std::invalid_argument("strand count mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(p, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TangleElement operator-() const {
    TangleElement r(n_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
  }
  friend TangleElement operator+(TangleElement a, const TangleElement& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("strand count mismatch");
    for (const auto& [p, c] : b.terms_) a.add(p, c);
    return a;
  }
  friend TangleElement operator-(const TangleElement& a, const TangleElement& b) { return a + (-b); }
  friend TangleElement operator*(const RationalFunction& s, const TangleElement& a) {
    TangleElement r(a.n_);
    if (s.is_zero()) return r;
    for (const auto& [p, c] : a.terms_) r.terms_.emplace(p, s * c);
    return r;
  }
  friend bool operator==(const TangleElement& a, const TangleElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")[";
      bool first = true;
      for (auto [a, b] : p.arcs()) {
        s += (first ? "" : " ") + std::to_string(a) + "-" + std::to_string(b);
        first = false;
      }
      s += "]";
    }
    return s;
  }

 private:
  int n_;
  Terms terms_;
};

/// b stacked on a; loops contribute d.
inline TangleElement tl_mul(const TangleElement& a, const TangleElement& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("strand count mismatch");
  const RationalFunction d = RationalFunction::d();
  std::map<PlanarPairing, std::map<int, RationalFunction>> acc;  // result -> loops -> coefficient
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) {
      auto [r, loops] = compose(p, q);
      acc[r][loops] += cp * cq;
    }
  TangleElement out(a.strands());
  for (const auto& [r, byloops] : acc) {
    RationalFunction c;
    for (const auto& [l, v] : byloops) {
      RationalFunction dl = 1;
      for (int i = 0; i < l; ++i) dl *= d;
      c += v * dl;
    }
    out.add(r, c);
  }
  return out;
}

/// Jones-Wenzl projector on n strands: f <- f - mu_k f U_k f for k = 1..n-1,
/// with mu_1 = 1/d and mu_{k+1} = 1/(d - mu_k).
inline TangleElement jones_wenzl(int n) {
  if (n < 1) throw std::invalid_argument("jones_wenzl needs n >= 1");
  const RationalFunction d = RationalFunction::d();
  TangleElement f = TangleElement::identity(n);
  RationalFunction mu = d.inverse();
  for (int k = 1; k < n; ++k) {
    f = f - mu * tl_mul(tl_mul(f, TangleElement::generator(n, k)), f);
    mu = (d - mu).inverse();
  }
  return f;
}

/// Closure joining top point i to bottom point i around the right.
inline RationalFunction markov_trace(const TangleElement& a) {
  const RationalFunction d = RationalFunction::d();
  const int n = a.strands();
  std::map<int, RationalFunction> byloops;
  for (const auto& [p, c] : a.terms()) {
    std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
    int loops = 0;
    for (int x = 0; x < 2 * n; ++x) {
      if (seen[x]) continue;
      ++loops;
      int at = x;
      do {
        seen[at] = true;
        at = p.partner(at);
        seen[at] = true;
        at = at < n ? at + n : at - n;
      } while (at != x);
    }
    byloops[loops] += c;
  }
  RationalFunction out;
  for (const auto& [l, c] : byloops) {
    RationalFunction dl = 1;
    for (int i = 0; i < l; ++i) dl *= d;
    out += c * dl;
  }
  return out;
}

}  // namespace skein
