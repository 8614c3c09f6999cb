#pragma once

// Self-check suites run by `skein verify` and by the test programs.

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "skein/bracket.hpp"
#include "skein/cabling.hpp"
#include "skein/fixtures.hpp"
#include "skein/flat_eval.hpp"
#include "skein/surface_algebra.hpp"
#include "skein/temperley_lieb.hpp"
#include "skein/yamada.hpp"

namespace skein {

struct CheckLine {
  std::string description;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckLine> checks;
  double seconds = 0;
  std::string report;  // extra text, e.g. the t^2 relation diff

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }
  void check(std::string description, bool ok, std::string detail = {}) {
    checks.push_back({std::move(description), ok, std::move(detail)});
  }
  std::string to_text() const {
    std::string s = "suite " + name + ": " + (passed() ? "PASS" : "FAIL") + "\n";
    for (const auto& c : checks) {
      s += std::string("  [") + (c.passed ? "pass" : "FAIL") + "] " + c.description;
      if (!c.detail.empty()) s += " (" + c.detail + ")";
      s += "\n";
    }
    s += report;
    return s;
  }
};

namespace detail {

inline GraphDiagram fixture_diagram(const std::string& name) { return parse_diagram(fixture(name).payload); }

inline LocalizedElement d2_minus_1() { return LocalizedElement::d() * LocalizedElement::d() - LocalizedElement(1); }

/// Y of the m-loop bouquet from the closed form (d - 1/d)^{m-1} (d^2 - 1).
inline LocalizedElement bouquet_value(int m) {
  return (LocalizedElement::d() - LocalizedElement::d_inverse()).pow(static_cast<unsigned>(m - 1)) * d2_minus_1();
}

/// Every multigraph (as an edge multiset over ordered vertex pairs) with at
/// most `max_v` vertices and `max_e` edges.
inline void for_each_small_multigraph(int max_v, int max_e, const std::function<void(const FlatState&)>& visit) {
  for (int v = 0; v <= max_v; ++v) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < v; ++i)
      for (int j = i; j < v; ++j) slots.emplace_back(i, j);
    FlatState s;
    s.vertex_count = v;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      visit(s);
      if (static_cast<int>(s.edges.size()) == max_e) return;
      for (std::size_t k = from; k < slots.size(); ++k) {
        s.edges.push_back(slots[k]);
        self(self, k);
        s.edges.pop_back();
      }
    };
    rec(rec, 0);
  }
}

inline FlatState random_multigraph(std::mt19937_64& rng, int max_v, int max_e) {
  FlatState s;
  s.vertex_count = std::uniform_int_distribution<int>(1, max_v)(rng);
  const int e = std::uniform_int_distribution<int>(0, max_e)(rng);
  std::uniform_int_distribution<int> pick(0, s.vertex_count - 1);
  for (int i = 0; i < e; ++i) s.edges.emplace_back(pick(rng), pick(rng));
  s.circle_count = std::uniform_int_distribution<int>(0, 1)(rng);
  return s;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const auto& f : fixtures())
    if (f.kind == Fixture::Kind::Diagram && parse_diagram(f.payload).ray_words().empty()) names.push_back(f.name);
  return names;
}

}  // namespace detail

/// Deletion-contraction against the subset state sum.
inline SuiteResult verify_oracle(int random_count = 200) {
  SuiteResult r{"oracle", {}, 0, {}};
  detail::Stopwatch clock;
  long total = 0, bad = 0;
  detail::for_each_small_multigraph(5, 5, [&](const FlatState& s) {
    ++total;
    if (!(flat_eval(s) == flat_eval_oracle(s))) ++bad;
  });
  r.check("all multigraphs with at most 5 vertices and 5 edges", bad == 0,
          std::to_string(total) + " graphs, " + std::to_string(bad) + " disagreements");
  std::mt19937_64 rng(20240611);
  bad = 0;
  for (int i = 0; i < random_count; ++i) {
    const FlatState s = detail::random_multigraph(rng, 7, 10);
    if (!(flat_eval(s) == flat_eval_oracle(s))) ++bad;
  }
  r.check("random multigraphs with at most 10 edges", bad == 0,
          std::to_string(random_count) + " graphs, " + std::to_string(bad) + " disagreements");
  const LocalizedElement d = LocalizedElement::d();
  r.check("single vertex evaluates to d", flat_eval_oracle({1, {}, 0}) == d);
  r.check("double edge evaluates to d^2 - 1", flat_eval_oracle({2, {{0, 1}, {0, 1}}, 0}) == detail::d2_minus_1());
  r.seconds = clock.seconds();
  return r;
}

/// Independence of the edge order in deletion-contraction.
inline SuiteResult verify_confluence(int graphs = 60, int orders = 10) {
  SuiteResult r{"confluence", {}, 0, {}};
  detail::Stopwatch clock;
  std::mt19937_64 rng(77);
  int bad = 0;
  for (int g = 0; g < graphs; ++g) {
    const FlatState s = detail::random_multigraph(rng, 6, 8);
    const LocalizedElement ref = flat_eval(s);
    for (int k = 0; k < orders; ++k)
      if (!(flat_eval_random_order(s, rng) == ref)) ++bad;
  }
  r.check("random edge orders agree with the memoized evaluation", bad == 0,
          std::to_string(graphs) + " graphs x " + std::to_string(orders) + " orders");
  FlatMemo fresh;
  bool same = true;
  std::mt19937_64 rng2(78);
  for (int g = 0; g < 40; ++g) {
    const FlatState s = detail::random_multigraph(rng2, 6, 9);
    same = same && flat_eval(s, fresh) == flat_eval_oracle(s);
  }
  r.check("a cold memo table gives the same values", same);
  r.seconds = clock.seconds();
  return r;
}

/// Reidemeister moves, curls and mirror images on the fixture corpus.
inline SuiteResult verify_moves() {
  SuiteResult r{"moves", {}, 0, {}};
  detail::Stopwatch clock;
  using detail::fixture_diagram;
  const LocalizedElement a8 = LocalizedElement::A(8), am8 = LocalizedElement::A(-8);
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"r2_unlink", "r2_unlink_after"}, {"r3_before", "r3_after"}, {"theta_r2", "theta"}}) {
    const GraphDiagram ga = fixture_diagram(a), gb = fixture_diagram(b);
    r.check(std::string("Y unchanged: ") + a + " / " + b, yamada(ga) == yamada(gb));
    if (ga.vertex_count() == 0) r.check(std::string("bracket unchanged: ") + a + " / " + b, bracket(ga) == bracket(gb));
  }
  for (auto [curled, plain] : std::vector<std::pair<const char*, const char*>>{{"kink", "circle"}, {"theta_kink", "theta"}}) {
    const GraphDiagram g = fixture_diagram(curled);
    const LocalizedElement y = yamada(g), y0 = yamada(fixture_diagram(plain));
    r.check(std::string("curl multiplies Y by A^8 or A^-8: ") + curled, y == a8 * y0 || y == am8 * y0);
    r.check(std::string("mirrored curl gives the inverse factor: ") + curled,
            (y == a8 * y0 && yamada(mirror(g)) == am8 * y0) || (y == am8 * y0 && yamada(mirror(g)) == a8 * y0));
  }
  {
    const LaurentPoly k = bracket(fixture_diagram("kink")), c = bracket(fixture_diagram("circle"));
    const LaurentPoly m = bracket(mirror(fixture_diagram("kink")));
    r.check("curl multiplies the bracket by -A^3 or -A^-3",
            (k == LaurentPoly(-1, 3) * c && m == LaurentPoly(-1, -3) * c) ||
                (k == LaurentPoly(-1, -3) * c && m == LaurentPoly(-1, 3) * c));
  }
  int mirror_bad = 0, bracket_bad = 0, count = 0;
  for (const auto& name : detail::corpus_names()) {
    const GraphDiagram g = fixture_diagram(name);
    ++count;
    if (!(yamada(mirror(g)) == yamada(g).inverted_variable())) ++mirror_bad;
    if (g.vertex_count() == 0 && !(bracket(mirror(g)) == bracket(g).inverted())) ++bracket_bad;
    if (!(mirror(mirror(g)) == g)) ++mirror_bad;
  }
  r.check("Y(mirror) = Y with A -> 1/A on the corpus", mirror_bad == 0, std::to_string(count) + " diagrams");
  r.check("bracket(mirror) = bracket with A -> 1/A on the corpus", bracket_bad == 0);
  {
    const GraphDiagram a = fixture_diagram("trefoil"), b = fixture_diagram("theta_twist");
    r.check("Y multiplicative on disjoint unions", yamada(disjoint_union(a, b)) == yamada(a) * yamada(b));
    r.check("mirror commutes with disjoint union", mirror(disjoint_union(a, b)) == disjoint_union(mirror(a), mirror(b)));
  }
  r.seconds = clock.seconds();
  return r;
}

/// Jones-Wenzl projectors: idempotent, killed by every U_i, Chebyshev traces.
inline SuiteResult verify_jw(int max_n = 5, int max_trace_n = 6) {
  SuiteResult r{"jw", {}, 0, {}};
  detail::Stopwatch clock;
  const RationalFunction d = RationalFunction::d();
  RationalFunction prev = 1, cur = d;  // Delta_0, Delta_1
  for (int n = 1; n <= std::max(max_n, max_trace_n); ++n) {
    const TangleElement f = jones_wenzl(n);
    if (n <= max_n) {
      r.check("f^2 = f on " + std::to_string(n) + " strands", tl_mul(f, f) == f);
      bool killed = true;
      for (int i = 1; i < n; ++i) {
        const TangleElement u = TangleElement::generator(n, i);
        killed = killed && tl_mul(f, u).is_zero() && tl_mul(u, f).is_zero();
      }
      r.check("f U_i = U_i f = 0 on " + std::to_string(n) + " strands", killed);
    }
    if (n <= max_trace_n) {
      if (n >= 2) {
        RationalFunction next = d * cur - prev;
        prev = cur;
        cur = next;
      }
      r.check("trace of f on " + std::to_string(n) + " strands follows the Chebyshev recurrence", markov_trace(f) == cur);
    }
  }
  r.seconds = clock.seconds();
  return r;
}

/// The cabling map against direct evaluation, and its punctured-disk images.
inline SuiteResult verify_phi() {
  SuiteResult r{"phi", {}, 0, {}};
  detail::Stopwatch clock;
  using detail::fixture_diagram;
  std::vector<std::pair<std::string, GraphDiagram>> cases;
  for (const char* n : {"circle", "theta", "handcuff", "k4", "kink", "theta_kink", "theta_twist"})
    cases.emplace_back(n, fixture_diagram(n));
  for (int m = 1; m <= 4; ++m) cases.emplace_back("bouquet" + std::to_string(m), bouquet(m));
  for (const auto& [name, g] : cases) r.check("Y = Phi on " + name, yamada(g) == phi_plane(g));
  {
    const GraphDiagram a = fixture_diagram("theta"), b = fixture_diagram("kink");
    r.check("Phi multiplicative on disjoint unions", phi_plane(disjoint_union(a, b)) == phi_plane(a) * phi_plane(b));
  }
  {
    bool counts = true, coeffs = true;
    for (const auto& [name, g] : cases) {
      const auto terms = cable(g);
      counts = counts && terms.size() == (std::size_t{1} << (g.edge_classes().size() + static_cast<std::size_t>(g.free_circles())));
      for (const auto& t : terms) coeffs = coeffs && t.coefficient == (-LocalizedElement::d_inverse()).pow(static_cast<unsigned>(t.turnbacks));
    }
    r.check("2^|E| expansion terms", counts);
    r.check("term coefficients are (-1/d)^turnbacks", coeffs);
  }
  const PolyXYZ one(1), x = PolyXYZ::x(), y = PolyXYZ::y(), z = PolyXYZ::z();
  r.check("Phi(x) = x^2 - 1", phi_punctured(fixture_diagram("disk_x")) == x * x - one);
  r.check("Phi(y) = y^2 - 1", phi_punctured(fixture_diagram("disk_y")) == y * y - one);
  r.check("Phi(z) = z^2 - 1", phi_punctured(fixture_diagram("disk_z")) == z * z - one);
  r.check("annulus: Phi(b) = b^2 - 1", phi_annulus(fixture_diagram("annulus_core")) == annulus_phi_powers(1));
  {
    bool same = true;
    for (const char* n : {"theta", "k4", "handcuff"}) {
      const GraphDiagram g = fixture_diagram(n);
      same = same && phi_punctured(g) == PolyXYZ(phi_plane(g));
    }
    r.check("hole-avoiding diagrams evaluate as in the plane", same);
  }
  {
    bool same = true;
    for (const char* n : {"disk_t", "disk_x", "theta"}) {
      const GraphDiagram g = fixture_diagram(n);
      same = same && phi_punctured(g, ProjectorPlacement::FirstArc) == phi_punctured(g, ProjectorPlacement::LastArc);
    }
    for (const char* n : {"theta_kink", "theta_twist"}) {
      const GraphDiagram g = fixture_diagram(n);
      LocalizedElement last;
      for (const auto& t : cable(g, ProjectorPlacement::LastArc)) last += t.coefficient * LocalizedElement(bracket(t.link));
      same = same && last == phi_plane(g);
    }
    r.check("projector position does not matter", same);
  }
  {
    const PolyXYZ computed = phi_punctured(fixture_diagram("disk_t"));
    const PolyXYZ delta = t_image_delta(computed);
    r.report += "  Phi(t) from the reconstructed diagram: " + computed.to_string() + "\n";
    r.report += "  difference from the tabulated image: " + delta.to_string() + "\n";
  }
  r.seconds = clock.seconds();
  return r;
}

/// The t^2 relation and the inverse pair of generator tables.
inline SuiteResult verify_thm11() {
  SuiteResult r{"thm11", {}, 0, {}};
  detail::Stopwatch clock;
  const RelationReport rel = derive_t_squared_relation();
  r.check("derived relation holds identically", rel.identity_holds);
  r.check("elimination basis has distinct leading monomials", rel.leading_monomials_distinct);
  bool sym = true;
  for (const auto& [m, c] : rel.derived) {
    auto it = rel.derived.find(Monomial{m.y, m.x, m.z, m.t});
    sym = sym && it != rel.derived.end() && it->second == c;
  }
  r.check("coefficients symmetric under x <-> y", sym);
  r.check("tables are mutually inverse", verify_psi_phi());
  r.report = rel.to_text();
  r.seconds = clock.seconds();
  return r;
}

inline std::vector<std::string> suite_names() { return {"oracle", "confluence", "moves", "jw", "phi", "thm11"}; }

inline SuiteResult run_suite(const std::string& name) {
  if (name == "oracle") return verify_oracle();
  if (name == "confluence") return verify_confluence();
  if (name == "moves") return verify_moves();
  if (name == "jw") return verify_jw();
  if (name == "phi") return verify_phi();
  if (name == "thm11") return verify_thm11();
  throw std::invalid_argument("unknown suite " + name);
}

}  // namespace skein
