// hymcg: command line frontend. Exit codes: 0 success, 1 failed boolean
// check, 2 usage or input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "hymcg/hyp_dictionary.hpp"
#include "hymcg/json_io.hpp"
#include "hymcg/rand_util.hpp"
#include "hymcg/strata.hpp"
#include "hymcg/surface.hpp"
#include "hymcg/symplectic.hpp"
#include "hymcg/words.hpp"

namespace {

using nlohmann::json;
using namespace hymcg;

bool g_json = false;
int g_exit = 0;

void emit(const json& machine, const std::string& human) {
  if (g_json)
    std::cout << machine.dump() << "\n";
  else
    std::cout << human << "\n";
}

std::vector<int> parseCommaList(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + item + "' in list");
    }
  }
  return out;
}

std::uint64_t closureCapFromEnv(std::uint64_t flag_value) {
  if (const char* env = std::getenv("HYMCG_CLOSURE_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError("HYMCG_CLOSURE_CAP is not an integer");
    }
  }
  return flag_value;
}

std::string matrixText(const SympMatrix& m) {
  std::ostringstream out;
  for (int r = 0; r < m.size(); ++r) {
    for (int c = 0; c < m.size(); ++c) {
      if (c) out << ' ';
      out << m.at(r, c);
    }
    if (r + 1 < m.size()) out << '\n';
  }
  return out.str();
}

void setupSurface(CLI::App& app) {
  auto* surface = app.add_subcommand("surface", "Topological types");

  auto* info = surface->add_subcommand("info", "Euler characteristic and "
                                               "hyperbolicity; validates the "
                                               "fixed locus when given");
  static int g, n, k, wp = -1, wo = 0, wb = 0;
  info->add_option("--g", g, "genus")->required();
  info->add_option("--n", n, "punctures")->required();
  info->add_option("--k", k, "boundary circles")->required();
  info->add_option("--wp", wp, "fixed points");
  info->add_option("--wo", wo, "fixed punctures");
  info->add_option("--wb", wb, "fixed boundary circles");
  info->callback([] {
    const Surface s = makeSurface(g, n, k);
    json j = toJson(s);
    j["eulerCharacteristic"] = s.eulerCharacteristic();
    j["hyperbolic"] = s.hyperbolic();
    std::string human = "chi = " + std::to_string(s.eulerCharacteristic()) +
                        (s.hyperbolic() ? ", hyperbolic" : ", not hyperbolic");
    if (wp >= 0) {
      const auto h = makeHyperelliptic(s, wp, wo, wb);
      j = toJson(h);
      j["eulerCharacteristic"] = s.eulerCharacteristic();
      j["hyperbolic"] = s.hyperbolic();
      human += ", valid hyperelliptic structure (" + std::to_string(wp) + "+" +
               std::to_string(wo) + "+" + std::to_string(wb) + " = 2g+2)";
    }
    emit(j, human);
  });

  auto* quot = surface->add_subcommand("quotient", "Genus-0 quotient profile");
  static int qg, qn, qk, qwp, qwo = 0, qwb = 0;
  quot->add_option("--g", qg, "genus")->required();
  quot->add_option("--n", qn, "punctures")->required();
  quot->add_option("--k", qk, "boundary circles")->required();
  quot->add_option("--wp", qwp, "fixed points")->required();
  quot->add_option("--wo", qwo, "fixed punctures");
  quot->add_option("--wb", qwb, "fixed boundary circles");
  quot->callback([] {
    const auto q = quotientSurface(
        makeHyperelliptic(makeSurface(qg, qn, qk), qwp, qwo, qwb));
    emit(toJson(q),
         "quotient: genus 0, " + std::to_string(q.quotient.punctures()) +
             " punctures, " + std::to_string(q.quotient.boundary()) +
             " boundary circles, " + std::to_string(q.branchPoints) +
             " branch points");
  });
}

void setupWord(CLI::App& app) {
  auto* word = app.add_subcommand("word", "Twist words and the marked-point action");

  static int genus;
  static std::string literal;

  auto* red = word->add_subcommand("reduce", "Freely reduce a word");
  red->add_option("--genus", genus, "genus")->required();
  red->add_option("--word", literal, "word literal")->required();
  red->callback([] {
    const auto w = reduce(TwistWord::parse(genus, literal));
    emit(toJson(w), w.str());
  });

  auto* rho = word->add_subcommand("rhow", "Induced permutation of the 2g+2 "
                                           "marked points");
  rho->add_option("--genus", genus, "genus")->required();
  rho->add_option("--word", literal, "word literal")->required();
  rho->callback([] {
    const auto p = rhoW(TwistWord::parse(genus, literal));
    emit(toJson(p), p.cycles());
  });

  auto* inv = word->add_subcommand("involution", "The word realizing the "
                                                 "hyperelliptic involution");
  inv->add_option("--genus", genus, "genus")->required();
  inv->callback([] {
    const auto w = involutionWord(genus);
    emit(toJson(w), w.str());
  });
}

void setupSymp(CLI::App& app) {
  auto* symp = app.add_subcommand("symp", "Action on first homology");

  static int genus;
  static std::string literal;
  static std::int64_t mod = 0;

  auto* eval = symp->add_subcommand("eval", "Evaluate a word");
  eval->add_option("--genus", genus, "genus")->required();
  eval->add_option("--word", literal, "word literal")->required();
  eval->add_option("--mod", mod, "reduce mod m");
  eval->callback([] {
    const auto m = evaluate(TwistWord::parse(genus, literal),
                            mod ? std::optional<std::int64_t>(mod) : std::nullopt);
    emit(toJson(m), matrixText(m));
  });

  auto* level = symp->add_subcommand("level", "Test membership in the mod-m "
                                              "homology kernel");
  level->add_option("--genus", genus, "genus")->required();
  level->add_option("--word", literal, "word literal")->required();
  level->add_option("--mod", mod, "modulus")->required();
  level->callback([] {
    const bool in = levelMembership(TwistWord::parse(genus, literal), mod);
    emit(json{{"member", in}, {"modulus", mod}},
         in ? "in level" : "not in level");
    if (!in) g_exit = 1;
  });

  auto* braid = symp->add_subcommand("braid-check", "Verify braid and "
                                                    "commutation relations");
  braid->add_option("--genus", genus, "genus")->required();
  braid->add_option("--mod", mod, "check mod m instead of over Z");
  braid->callback([] {
    const bool ok = braidRelationsHold(
        genus, mod ? std::optional<std::int64_t>(mod) : std::nullopt);
    emit(json{{"ok", ok}}, ok ? "OK: braid relations hold" : "FAILED");
    if (!ok) g_exit = 1;
  });

  auto* inv = symp->add_subcommand("involution-check", "Verify the involution "
                                                       "word gives -I");
  inv->add_option("--genus", genus, "genus")->required();
  inv->callback([] {
    const bool ok = evaluate(involutionWord(genus)).isMinusIdentity();
    emit(json{{"ok", ok}}, ok ? "OK: -I" : "FAILED: not -I");
    if (!ok) g_exit = 1;
  });

  auto* closure = symp->add_subcommand("closure", "Breadth-first closure of "
                                                  "the chain transvections mod m");
  static bool squares = false;
  static std::uint64_t cap = 10'000'000;
  closure->add_option("--genus", genus, "genus")->required();
  closure->add_option("--mod", mod, "modulus")->required();
  closure->add_flag("--squares", squares, "use squared transvections");
  closure->add_option("--cap", cap,
                      "element cap (HYMCG_CLOSURE_CAP overrides)");
  closure->callback([] {
    const auto c =
        groupClosure(chainTransvections(genus, mod, squares), closureCapFromEnv(cap));
    const bool minus = c.contains(SympMatrix::identity(2 * genus, mod).negated());
    emit(json{{"order", c.order()}, {"containsMinusIdentity", minus}},
         "order " + std::to_string(c.order()) +
             (minus ? " (contains -I)" : " (no -I)"));
  });

  auto* chain = symp->add_subcommand("chain", "Chain curve homology classes "
                                              "and their transvections");
  chain->add_option("--genus", genus, "genus")->required();
  chain->add_option("--mod", mod, "reduce transvections mod m");
  chain->callback([] {
    const auto classes = chainClasses(genus);
    const auto opt_mod = mod ? std::optional<std::int64_t>(mod) : std::nullopt;
    json arr = json::array();
    std::string human;
    for (std::size_t i = 0; i < classes.vectors.size(); ++i) {
      const auto& v = classes.vectors[i];
      json entry;
      entry["index"] = i + 1;
      json coords = json::array();
      std::string vec;
      for (const auto& c : v) {
        coords.push_back(bigintToJson(c));
        vec += (vec.empty() ? "" : " ") + c.str();
      }
      entry["vector"] = coords;
      entry["transvection"] = toJson(transvection(v, opt_mod));
      arr.push_back(std::move(entry));
      human += "v" + std::to_string(i + 1) + " = (" + vec + ")\n";
    }
    human.pop_back();
    emit(json{{"genus", genus}, {"classes", arr}}, human);
  });

  auto* pure = symp->add_subcommand(
      "pure-check", "Seeded check: words in the mod-2 kernel act trivially "
                    "on the marked points");
  static std::uint64_t seed = 1;
  static int samples = 1000;
  pure->add_option("--genus", genus, "genus")->required();
  pure->add_option("--samples", samples, "number of random words");
  pure->add_option("--seed", seed, "random seed");
  pure->callback([] {
    std::mt19937_64 rng(seed);
    int hits = 0;
    for (int i = 0; i < samples; ++i) {
      const auto w = i % 2 == 0 ? randomWord(genus, 12, 3, rng)
                                : randomSquareWord(genus, 8, rng);
      if (!levelMembership(w, 2)) continue;
      ++hits;
      if (!rhoW(w).isIdentity()) {
        emit(json{{"ok", false}, {"word", w.str()}},
             "FAILED on word " + w.str());
        g_exit = 1;
        return;
      }
    }
    emit(json{{"ok", true}, {"kernelSamples", hits}},
         "OK: " + std::to_string(hits) + " kernel samples act trivially");
  });
}

void setupStrata(CLI::App& app) {
  auto* strata = app.add_subcommand("strata", "Orbit complexes of sphere "
                                              "curve systems");

  static int n, dim = 0, maxDim = -1;
  static std::string variant = "full", group = "pure", family;

  auto* count = strata->add_subcommand("count", "Number of vertex orbits");
  count->add_option("--n", n, "punctures")->required();
  count->add_option("--variant", variant, "full|b");
  count->add_option("--group", group, "pure|full");
  count->callback([] {
    const int c =
        countVertexOrbits(n, parseVariant(variant), parseOrbitGroup(group));
    emit(json{{"count", c}}, std::to_string(c));
  });

  auto* en = strata->add_subcommand("enum", "Enumerate orbit simplices");
  en->add_option("--n", n, "punctures")->required();
  en->add_option("--dim", dim, "simplex dimension")->required();
  en->add_option("--variant", variant, "full|b");
  en->add_option("--group", group, "pure|full");
  en->callback([] {
    const auto simplices =
        enumerateSimplices(n, dim, parseVariant(variant), parseOrbitGroup(group));
    json arr = json::array();
    std::string human;
    for (const auto& f : simplices) {
      arr.push_back(toJson(f));
      human += f.str() + "\n";
    }
    human += std::to_string(simplices.size()) + " simplices";
    emit(json{{"count", simplices.size()}, {"simplices", arr}}, human);
  });

  auto* d = strata->add_subcommand("dim", "Dimension of the orbit complex");
  d->add_option("--n", n, "punctures")->required();
  d->add_option("--variant", variant, "full|b");
  d->callback([] {
    const int c = complexDimension(n, parseVariant(variant));
    emit(json{{"dimension", c}}, std::to_string(c));
  });

  auto* hom = strata->add_subcommand("homology", "Rational Betti numbers of "
                                                 "the orbit complex");
  hom->add_option("--n", n, "punctures")->required();
  hom->add_option("--variant", variant, "full|b");
  hom->add_option("--max-dim", maxDim, "truncate reported Betti numbers");
  hom->callback([] {
    const auto h = homology(n, parseVariant(variant), maxDim);
    std::string human = "f = (";
    for (std::size_t i = 0; i < h.fVector.size(); ++i)
      human += (i ? "," : "") + std::to_string(h.fVector[i]);
    human += "), betti = (";
    for (std::size_t i = 0; i < h.betti.size(); ++i)
      human += (i ? "," : "") + std::to_string(h.betti[i]);
    human += "), chi = " + std::to_string(h.eulerCharacteristic);
    emit(toJson(h), human);
  });

  auto* dot = strata->add_subcommand("dot", "DOT export of the dual tree");
  dot->add_option("--n", n, "punctures")->required();
  dot->add_option("--family", family, "family literal, e.g. [[2,3]]")->required();
  dot->callback([] {
    const auto tree = familyToTree(LaminarFamily::parse(n, family));
    // DOT goes to stdout verbatim in both modes; --json wraps it.
    if (g_json)
      std::cout << json{{"dot", tree.dot()}, {"tree", toJson(tree)}}.dump()
                << "\n";
    else
      std::cout << tree.dot();
  });
}

void setupHyp(CLI::App& app) {
  auto* hyp = app.add_subcommand("hyp", "Double-cover dictionary");

  static int g;
  static std::string subset, family, flavor = "pure";
  static bool raw = false;

  auto* cls = hyp->add_subcommand("classify", "Classify a sphere curve side");
  cls->add_option("--g", g, "genus")->required();
  cls->add_option("--subset", subset, "comma-separated side, e.g. 3,4,5")
      ->required();
  cls->callback([] {
    const auto c = classifyCurve(parseCommaList(subset), g);
    emit(toJson(c), c.str());
  });

  auto* lift = hyp->add_subcommand("lift", "Lift a family to symmetric curve "
                                           "classes");
  lift->add_option("--g", g, "genus")->required();
  lift->add_option("--family", family, "family literal")->required();
  lift->callback([] {
    const auto r = liftMulticurve(LaminarFamily::parse(2 * g + 2, family), g);
    json arr = json::array();
    std::string human;
    for (const auto& c : r.classes) {
      arr.push_back(toJson(c));
      human += c.str() + "\n";
    }
    human += "upstairs simplex size " + std::to_string(r.upstairsSimplexSize);
    emit(json{{"classes", arr},
              {"upstairsSimplexSize", r.upstairsSimplexSize}},
         human);
  });

  auto* cut = hyp->add_subcommand("cut", "Cut-surface decomposition");
  cut->add_option("--g", g, "genus")->required();
  cut->add_option("--family", family, "family literal")->required();
  cut->add_flag("--raw", raw, "keep annulus pieces over 2-point sides");
  cut->callback([] {
    const auto p = cutProfile(LaminarFamily::parse(2 * g + 2, family), g, !raw);
    std::string human;
    for (const auto& c : p.components) {
      human += "component: genus " + std::to_string(c.genus) + ", boundary " +
               std::to_string(c.boundary) + ", branch " +
               std::to_string(c.branch) + ", " +
               (c.action == ComponentAction::Invariant
                    ? "invariant"
                    : "swapped with #" + std::to_string(c.partner)) +
               "\n";
    }
    human += "upstairs simplex size " + std::to_string(p.upstairsSimplexSize);
    emit(toJson(p), human);
  });

  auto* stab = hyp->add_subcommand("stab", "Stabilizer profile");
  stab->add_option("--g", g, "genus")->required();
  stab->add_option("--family", family, "family literal")->required();
  stab->add_option("--flavor", flavor, "full|pure");
  stab->callback([] {
    const auto p = stabilizerProfile(LaminarFamily::parse(2 * g + 2, family), g,
                                     parseStabilizerFlavor(flavor));
    std::string human;
    for (const auto& t : p.twists)
      human += "twist about " + t.curveClass.str() + ": exponents " +
               (t.lattice == TwistLattice::Z ? "Z" : "2Z") + "\n";
    human += "cut factors: " + std::to_string(p.cutFactors.size()) +
             ", oriented-curve symmetric group order " + p.symmetryPart.str();
    emit(toJson(p), human);
  });

  auto* check = hyp->add_subcommand(
      "check", "Seeded Euler-conservation check over random families");
  static std::uint64_t seed = 1;
  static int samples = 1000;
  check->add_option("--g", g, "genus")->required();
  check->add_option("--samples", samples, "number of random families");
  check->add_option("--seed", seed, "random seed");
  check->callback([] {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
      const auto f = randomLaminarFamily(2 * g + 2, rng);
      for (const bool merge : {true, false}) {
        const auto p = cutProfile(f, g, merge);
        int chi = 0;
        for (const auto& c : p.components)
          chi += 2 - 2 * c.genus - c.boundary;
        if (chi != 2 - 2 * g) {
          emit(json{{"ok", false}, {"family", toJson(f)}},
               "FAILED on family " + f.str());
          g_exit = 1;
          return;
        }
      }
    }
    emit(json{{"ok", true}, {"samples", samples}},
         "OK: " + std::to_string(samples) + " families conserve chi");
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of surfaces with an order-2 symmetry: "
               "twist words, homology action, sphere curve orbits and the "
               "double-cover dictionary"};
  app.require_subcommand(1);
  app.fallthrough(true);
  app.add_flag("--json", g_json, "machine-readable output");

  setupSurface(app);
  setupWord(app);
  setupSymp(app);
  setupStrata(app);
  setupHyp(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const hymcg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return g_exit;
}
