#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "daggerkit/io.hpp"
#include "daggerkit/termdsl.hpp"
#include "daggerkit/verify.hpp"

namespace {

using namespace dk;

std::uint64_t fnv64(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

int cmdVerify(bool all, const std::string& suite, std::uint64_t seed, std::size_t scale) {
  std::vector<SuiteResult> results;
  if (all || suite.empty())
    results = runAll(seed, scale);
  else
    results.push_back(runSuite(suite, seed, scale));
  bool ok = true;
  for (const auto& r : results) {
    std::cout << r.reportLine() << "\n";
    for (const auto& f : r.failures)
      std::cout << "  FAIL seed=" << f.seed << " case=" << f.digest << " " << f.message
                << "\n";
    ok = ok && r.passed();
  }
  std::cout << "DIGEST " << std::hex << fnv64(deterministicReport(results)) << std::dec
            << "\n";
  return ok ? 0 : 1;
}

// optional --convention guard on file-based commands
void requireConvention(const Pairing& h, const std::string& expected) {
  if (expected.empty()) return;
  Convention want = expected == "super" ? Convention::SUPER : Convention::GRADED;
  if (h.conv != want)
    throw ConventionMismatch("file is " +
                             std::string(h.conv == Convention::SUPER ? "super" : "graded") +
                             ", --convention wants " + expected);
}

Flavor flavorFromName(const std::string& name) {
  if (name == "spin") return Flavor::SPIN;
  if (name == "oriented") return Flavor::ORIENTED;
  throw ObjectMismatch("flavor must be spin or oriented");
}

int cmdSig(const std::string& path, const std::string& convention) {
  Pairing h = pairingFromJson(readFile(path));
  requireConvention(h, convention);
  std::cout << to_string(signature(h)) << "\n";
  return 0;
}

int cmdDagger(const std::string& mapPath, const std::string& domPath,
              const std::string& codPath) {
  EvenMap t = mapFromJson(readFile(mapPath));
  Pairing hd = pairingFromJson(readFile(domPath));
  Pairing hc = pairingFromJson(readFile(codPath));
  std::cout << mapToJson(dagger(t, hd, hc)) << "\n";
  return 0;
}

int cmdDual(const std::string& path, const std::string& convention) {
  Pairing h = pairingFromJson(readFile(path));
  requireConvention(h, convention);
  std::cout << pairingToJson(dualPairing(h)) << "\n";
  return 0;
}

int cmdTensor(const std::string& aPath, const std::string& bPath) {
  std::string aText = readFile(aPath), bText = readFile(bPath);
  bool pairings = nlohmann::json::parse(aText).contains("convention");
  if (pairings) {
    Pairing a = pairingFromJson(aText), b = pairingFromJson(bText);
    std::cout << pairingToJson(tensorPairing(a, b)) << "\n";
  } else {
    EvenMap a = mapFromJson(aText), b = mapFromJson(bText);
    std::cout << mapToJson(tensor(a, b)) << "\n";
  }
  return 0;
}

int cmdEval(const std::string& specPath, const std::string& term) {
  FunctorSpec spec = functorSpecFromJson(readFile(specPath));
  BordMorphism m = parseBordTerm(term, spec.flavor);
  EvenMap image = evaluate(spec, m);
  if (image.dom.total() == 1 && image.cod.total() == 1 && m.src.empty() && m.tgt.empty())
    std::cout << to_string(image.m.at(0, 0)) << "\n";
  else
    std::cout << mapToJson(image) << "\n";
  return 0;
}

int cmdSolve(const std::string& pairingPath, const std::string& thetaPath,
             const std::string& flavorName, const std::string& targetName) {
  Pairing h = pairingFromJson(readFile(pairingPath));
  EvenMap theta = thetaPath.empty() ? EvenMap::identity(h.space)
                                    : mapFromJson(readFile(thetaPath));
  Flavor flavor = flavorFromName(flavorName);
  auto ev = solveDuality(h, theta, flavor);
  if (!ev) {
    std::cout << "NONE\n";
    return 0;
  }
  std::cout << mapToJson(*ev) << "\n";
  if (!targetName.empty()) {
    PositivityClass target =
        targetName == "shilb" ? PositivityClass::SHILB : PositivityClass::SHERM;
    ValidationReport rep = validate(FunctorSpec{flavor, target, h, theta, *ev});
    std::cout << "target " << targetName << ": isMonoidal=" << rep.isMonoidal
              << " isDagger=" << rep.isDagger << " isEquivariant=" << rep.isEquivariant
              << "\n";
  }
  return 0;
}

int demoSpinStatistics(std::uint64_t seed) {
  Matrix gram(2, 2);
  gram.at(0, 0) = Scalar(1);
  gram.at(1, 1) = Scalar::i();
  Pairing h(SuperDims{1, 1}, gram, Convention::SUPER);
  EvenMap parity = structureIso(StructureKind::Parity, h.space, std::nullopt, h.conv);
  std::cout << "state pairing diag(1, i) on (1|1), theta = parity\n";
  auto ev = solveDuality(h, parity, Flavor::SPIN);
  if (!ev) {
    std::cout << "unexpected: no duality\n";
    return 1;
  }
  FunctorSpec spec{Flavor::SPIN, PositivityClass::SHILB, h, parity, *ev};
  ValidationReport report = validate(spec);
  std::cout << "isMonoidal=" << report.isMonoidal << " isDagger=" << report.isDagger
            << " isEquivariant=" << report.isEquivariant << "\n";
  std::cout << "solved evaluation:\n" << mapToJson(*ev) << "\n";
  auto [per, ap] = circleFactors(spec);
  std::cout << "periodic circle = " << to_string(per) << " (p - q)\n";
  std::cout << "antiperiodic circle = " << to_string(ap) << " (p + q)\n";
  EvenMap id11 = EvenMap::identity(h.space);
  auto evBad = solveDuality(h, id11, Flavor::SPIN);
  std::cout << "theta = id instead: " << (evBad ? "solvable (?!)" : "NONE") << "\n";
  SweepReport sweep = equivarianceTheoremSweep(2, seed, 4);
  std::cout << sweep.summary() << "\n";
  return sweep.consistent() && !evBad && report.isEquivariant ? 0 : 1;
}

int demoCounterexample() {
  Matrix gram(1, 1);
  gram.at(0, 0) = -Scalar::i();
  Pairing h(SuperDims{0, 1}, gram, Convention::SUPER);
  EvenMap theta = EvenMap::identity(h.space);
  std::cout << "oriented theory valued in sHerm, point -> negative odd line diag(-i)\n";
  auto ev = solveDuality(h, theta, Flavor::ORIENTED);
  if (!ev) {
    std::cout << "unexpected: no duality\n";
    return 1;
  }
  FunctorSpec spec{Flavor::ORIENTED, PositivityClass::SHERM, h, theta, *ev};
  ValidationReport report = validate(spec);
  std::cout << "isMonoidal=" << report.isMonoidal << " isDagger=" << report.isDagger
            << " isEquivariant=" << report.isEquivariant << "\n";
  std::cout << "evaluation:\n" << mapToJson(*ev) << "\n";
  std::cout << "a Hermitian but non-unitary theory: dagger functor, not equivariant\n";
  return report.isDagger && report.isMonoidal && !report.isEquivariant ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for super-Hermitian pairings, dagger structure and 1-d "
               "spin bordisms"};
  app.require_subcommand(1);

  bool all = false;
  std::string suite, pathA, pathB, pathC, term, flavorName = "spin", demoName;
  std::string convention, targetName;
  std::uint64_t seed = 7;
  std::size_t scale = 200;

  auto* verify = app.add_subcommand("verify", "run named property suites");
  verify->add_flag("--all", all, "run the whole registry");
  verify->add_option("--suite", suite, "single suite name");
  verify->add_option("--seed", seed, "replayable random seed");
  verify->add_option("--scale", scale, "cases per suite");

  auto* sig = app.add_subcommand("sig", "print the signature of a pairing file");
  sig->add_option("pairing", pathA, "pairing json")->required();
  sig->add_option("--convention", convention)->check(CLI::IsMember({"super", "graded"}));

  auto* dag = app.add_subcommand("dagger", "adjoint of a map between pairings");
  dag->add_option("--map", pathA)->required();
  dag->add_option("--dom", pathB)->required();
  dag->add_option("--cod", pathC)->required();

  auto* dual = app.add_subcommand("dual", "dual Hermitian pairing");
  dual->add_option("pairing", pathA)->required();
  dual->add_option("--convention", convention)->check(CLI::IsMember({"super", "graded"}));

  auto* tens = app.add_subcommand("tensor", "tensor two pairings or two maps");
  tens->add_option("a", pathA)->required();
  tens->add_option("b", pathB)->required();

  auto* eval = app.add_subcommand("eval", "evaluate a bordism term under a functor spec");
  eval->add_option("--spec", pathA)->required();
  eval->add_option("--term", term)->required();

  auto* solve = app.add_subcommand("solve", "solve the flavor's duality equation");
  solve->add_option("--pairing", pathA)->required();
  solve->add_option("--theta", pathB);
  solve->add_option("--flavor", flavorName)->check(CLI::IsMember({"spin", "oriented"}));
  solve->add_option("--target", targetName)->check(CLI::IsMember({"shilb", "sherm"}));

  auto* demo = app.add_subcommand("demo", "worked spin-statistics and counterexample instances");
  demo->add_option("name", demoName)
      ->required()
      ->check(CLI::IsMember({"spin-statistics", "counterexample"}));
  demo->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmdVerify(all, suite, seed, scale);
    if (sig->parsed()) return cmdSig(pathA, convention);
    if (dag->parsed()) return cmdDagger(pathA, pathB, pathC);
    if (dual->parsed()) return cmdDual(pathA, convention);
    if (tens->parsed()) return cmdTensor(pathA, pathB);
    if (eval->parsed()) return cmdEval(pathA, term);
    if (solve->parsed()) return cmdSolve(pathA, pathB, flavorName, targetName);
    if (demo->parsed())
      return demoName == "spin-statistics" ? demoSpinStatistics(seed) : demoCounterexample();
  } catch (const SyntaxError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
