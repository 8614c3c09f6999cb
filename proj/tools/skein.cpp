// skein: Yamada polynomials, Kauffman brackets, the cabling map and
// symmetry obstructions from the command line.
//
// Exit status: 0 success, 1 unreadable or malformed input, 2 invalid
// diagram, bad argument or usage error, 3 a verify suite failed.
// Symmetry verdicts never affect the status.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "skein/skein.hpp"

namespace {

using namespace skein;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphDiagram load_diagram(const std::string& path) { return parse_diagram(read_file(path)); }
LocalizedElement load_polynomial(const std::string& path) { return parse_polynomial(read_file(path)); }

bool machine(const std::string& output) { return output == "machine"; }

nlohmann::json polyxyz_json(const PolyXYZ& p, const std::array<const char*, 4>& names) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"monomial", m.to_string(names)}, {"coefficient", to_json(c)}});
  return {{"terms", terms}};
}

int cmd_yamada(const std::string& file, const std::string& output) {
  const LocalizedElement y = yamada(load_diagram(file));
  if (machine(output))
    std::cout << serialize_polynomial(y) << "\n";
  else
    std::cout << "Y = " << y.to_string() << "\n  = " << y.a_form() << "\n";
  return 0;
}

int cmd_bracket(const std::string& file, const std::string& output) {
  const LaurentPoly b = bracket(load_diagram(file));
  if (machine(output))
    std::cout << serialize_polynomial(LocalizedElement(b)) << "\n";
  else
    std::cout << "<D> = " << b.to_string() << "\n";
  return 0;
}

int cmd_phi(const std::string& file, const std::string& surface, bool compare_t, const std::string& output) {
  const GraphDiagram g = load_diagram(file);
  if (surface == "plane") {
    if (g.has_ray_words()) throw DiagramError("plane evaluation of a diagram with ray words; use --surface");
    const LocalizedElement v = phi_plane(g);
    if (machine(output))
      std::cout << serialize_polynomial(v) << "\n";
    else
      std::cout << "Phi = " << v.to_string() << "\n  = " << v.a_form() << "\n";
    return 0;
  }
  const bool annulus = surface == "annulus";
  const std::array<const char*, 4> names = annulus ? std::array<const char*, 4>{"b", "y", "z", "t"}
                                                   : std::array<const char*, 4>{"x", "y", "z", "t"};
  const PolyXYZ v = annulus ? phi_annulus(g) : phi_punctured(g);
  std::optional<PolyXYZ> delta;
  if (compare_t && !annulus) delta = t_image_delta(v);
  if (machine(output)) {
    nlohmann::json j = {{"surface", surface}, {"value", polyxyz_json(v, names)}};
    if (delta) j["delta_from_tabulated_t"] = polyxyz_json(*delta, names);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Phi = " << v.to_string(names) << "\n";
    if (delta) std::cout << "difference from the tabulated image of t: " << delta->to_string(names) << "\n";
  }
  return 0;
}

int cmd_symmetry(std::uint64_t p, const std::string& poly, const std::string& diagram, const std::string& quotient,
                 const std::string& mode, const std::string& output) {
  checked_prime(p);
  if (poly.empty() == diagram.empty()) throw std::invalid_argument("give exactly one of --poly and --diagram");
  const LocalizedElement yg = poly.empty() ? yamada(load_diagram(diagram)) : load_polynomial(poly);
  std::optional<LocalizedElement> yq;
  if (!quotient.empty()) yq = load_polynomial(quotient);
  const ObstructionReport r =
      full_report(yg, yq, p, mode == "folded" ? MembershipMode::Folded : MembershipMode::Saturated);
  if (machine(output))
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << r.to_text();
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& output) {
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  nlohmann::json all = nlohmann::json::array();
  for (const auto& n : names) {
    const SuiteResult r = run_suite(n);
    ok = ok && r.passed();
    if (machine(output)) {
      nlohmann::json j = to_json(r);
      if (n == "thm11") j["relation"] = to_json(derive_t_squared_relation());
      all.push_back(std::move(j));
    } else {
      std::cout << r.to_text();
      std::cout << "  (" << r.seconds << " s)\n";
    }
  }
  if (machine(output)) std::cout << nlohmann::json{{"passed", ok}, {"suites", all}}.dump(2) << "\n";
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skein: Yamada polynomials, Kauffman brackets and symmetry obstructions"};
  app.require_subcommand(1);
  std::string output = "text";
  app.add_option("--output", output, "text or machine")->check(CLI::IsMember({"text", "machine"}));

  std::string file;
  auto* yam = app.add_subcommand("yamada", "Yamada polynomial of a diagram file");
  yam->add_option("file", file, "diagram file")->required();

  auto* brk = app.add_subcommand("bracket", "Kauffman bracket of a link diagram file");
  brk->add_option("file", file, "diagram file")->required();

  std::string surface = "plane";
  bool compare_t = false;
  auto* phi = app.add_subcommand("phi", "cabling map of a diagram file");
  phi->add_option("file", file, "diagram file")->required();
  phi->add_option("--surface", surface, "plane, annulus or pants")->check(CLI::IsMember({"plane", "annulus", "pants"}));
  phi->add_flag("--compare-t", compare_t, "also print the difference from the tabulated image of t");

  std::uint64_t p = 0;
  std::string poly, diagram, quotient, mode = "saturated";
  auto* sym = app.add_subcommand("symmetry", "congruence tests for Z_p-symmetry");
  sym->add_option("--p", p, "prime")->required();
  sym->add_option("--poly", poly, "polynomial document of Y(G)");
  sym->add_option("--diagram", diagram, "diagram file of G");
  sym->add_option("--quotient-poly", quotient, "polynomial document of the quotient graph");
  sym->add_option("--mode", mode, "folded or saturated")->check(CLI::IsMember({"folded", "saturated"}));

  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "run self-check suites");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  ver->add_option("--suite", suite, "suite name")->check(CLI::IsMember(choices));

  for (auto* sub : {yam, brk, phi, sym, ver})
    sub->add_option("--output", output, "text or machine")->check(CLI::IsMember({"text", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*yam) return cmd_yamada(file, output);
    if (*brk) return cmd_bracket(file, output);
    if (*phi) return cmd_phi(file, surface, compare_t, output);
    if (*sym) return cmd_symmetry(p, poly, diagram, quotient, mode, output);
    if (*ver) return cmd_verify(suite, output);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {  // DiagramError, bad p, bad combination
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
