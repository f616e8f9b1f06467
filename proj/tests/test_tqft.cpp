#include <doctest.h>

#include "daggerkit/io.hpp"
#include "daggerkit/random.hpp"
#include "daggerkit/termdsl.hpp"
#include "daggerkit/tqft.hpp"

using namespace dk;

namespace {

Pairing mixedShilb() {
  Matrix g(2, 2);
  g.at(0, 0) = Scalar(1);
  g.at(1, 1) = Scalar::i();
  return Pairing(SuperDims{1, 1}, g, Convention::SUPER);
}

FunctorSpec solvedSpec(const Pairing& h, const EvenMap& theta, Flavor flavor,
                       PositivityClass target) {
  auto ev = solveDuality(h, theta, flavor);
  REQUIRE(ev.has_value());
  return FunctorSpec{flavor, target, h, theta, *ev};
}

EvenMap parityOf(const Pairing& h) {
  return structureIso(StructureKind::Parity, h.space, std::nullopt, h.conv);
}

}  // namespace

TEST_CASE("solveDuality frozen instances") {
  Pairing h = mixedShilb();
  CHECK(solveDuality(h, parityOf(h), Flavor::SPIN).has_value());
  CHECK_FALSE(solveDuality(h, EvenMap::identity(h.space), Flavor::SPIN).has_value());

  Matrix neg(1, 1);
  neg.at(0, 0) = -Scalar::i();
  Pairing negLine(SuperDims{0, 1}, neg, Convention::SUPER);
  CHECK(solveDuality(negLine, EvenMap::identity(negLine.space), Flavor::ORIENTED)
            .has_value());

  Matrix pos(1, 1);
  pos.at(0, 0) = Scalar::i();
  Pairing posLine(SuperDims{0, 1}, pos, Convention::SUPER);
  CHECK_FALSE(
      solveDuality(posLine, EvenMap::identity(posLine.space), Flavor::SPIN).has_value());

  // theta must be a unitary involution
  Matrix twist(2, 2);
  twist.at(0, 0) = Scalar(2);
  twist.at(1, 1) = Scalar(1);
  CHECK_THROWS_AS(
      solveDuality(h, EvenMap(h.space, h.space, twist), Flavor::SPIN),
      NotUnitaryInvolution);
}

TEST_CASE("validate reports") {
  Pairing h = mixedShilb();
  FunctorSpec good = solvedSpec(h, parityOf(h), Flavor::SPIN, PositivityClass::SHILB);
  ValidationReport rep = validate(good);
  CHECK(rep.isMonoidal);
  CHECK(rep.isDagger);
  CHECK(rep.isEquivariant);
  CHECK(rep.failures.empty());

  // wrong theta with any supplied ev must fail the dagger condition
  FunctorSpec bad{Flavor::SPIN, PositivityClass::SHILB, h, EvenMap::identity(h.space),
                  good.evImage};
  ValidationReport repBad = validate(bad);
  CHECK_FALSE(repBad.isDagger);
  CHECK_FALSE(repBad.failures.empty());

  // oriented sHerm counterexample: dagger functor, not equivariant
  Matrix neg(1, 1);
  neg.at(0, 0) = -Scalar::i();
  Pairing negLine(SuperDims{0, 1}, neg, Convention::SUPER);
  FunctorSpec cx = solvedSpec(negLine, EvenMap::identity(negLine.space), Flavor::ORIENTED,
                              PositivityClass::SHERM);
  ValidationReport repCx = validate(cx);
  CHECK(repCx.isMonoidal);
  CHECK(repCx.isDagger);
  CHECK_FALSE(repCx.isEquivariant);

  // the same oriented theory cannot land in sHilb
  Matrix pos(1, 1);
  pos.at(0, 0) = Scalar::i();
  Pairing posLine(SuperDims{0, 1}, pos, Convention::SUPER);
  FunctorSpec intoShilb = solvedSpec(posLine, EvenMap::identity(posLine.space),
                                     Flavor::ORIENTED, PositivityClass::SHILB);
  CHECK_FALSE(validate(intoShilb).isMonoidal);

  // malformed evaluation shape is reported, not crashed on
  FunctorSpec badShape{Flavor::ORIENTED, PositivityClass::SHERM, negLine,
                       EvenMap::identity(negLine.space),
                       EvenMap::identity(negLine.space)};
  ValidationReport repShape = validate(badShape);
  CHECK_FALSE(repShape.isMonoidal);
  CHECK_FALSE(repShape.isDagger);
}

TEST_CASE("circle values by contraction") {
  for (std::size_t p = 0; p <= 3; ++p)
    for (std::size_t q = 0; p + q >= 1 && q <= 3; ++q) {
      if (p + q == 0 || p + q > 4) continue;
      SuperDims d{p, q};
      Rng rng(100 + 7 * p + q);
      Pairing h = randomPairing(rng, d, Convention::SUPER, PositivityClass::SHILB);
      FunctorSpec spec =
          solvedSpec(h, parityOf(h), Flavor::SPIN, PositivityClass::SHILB);
      auto [per, ap] = circleFactors(spec);
      CHECK(per == Scalar(static_cast<long>(p) - static_cast<long>(q)));
      CHECK(ap == Scalar(static_cast<long>(p + q)));
    }
}

TEST_CASE("evaluate basics") {
  Pairing h = mixedShilb();
  FunctorSpec spec = solvedSpec(h, parityOf(h), Flavor::SPIN, PositivityClass::SHILB);
  BordObject word = parseObject("pdp");
  CHECK(evaluate(spec, identityBord(word, Flavor::SPIN)) ==
        EvenMap::identity(objectDims(spec, word)));
  CHECK(evaluate(spec, parseBordTerm("theta")) == parityOf(h));
  // evaluating theta on a dual strand through a cup-cap detour agrees with
  // the dualised theta image
  BordMorphism thetaDual = parseBordTerm(
      "(ev @ id(d)) . (id(d) @ theta @ id(d)) . (id(d) @ coev)");
  EvenMap img = evaluate(spec, thetaDual);
  CHECK(img == evaluate(spec, flipAction(parseObject("d"), Flavor::SPIN)));
  CHECK_THROWS_AS(
      evaluate(FunctorSpec{Flavor::SPIN, PositivityClass::SHILB, h,
                           EvenMap::identity(h.space), spec.evImage},
               parseBordTerm("theta")),
      NotAValidFunctor);
}

TEST_CASE("functoriality and dagger preservation on random normal forms") {
  Pairing h = mixedShilb();
  FunctorSpec spec = solvedSpec(h, parityOf(h), Flavor::SPIN, PositivityClass::SHILB);
  Rng rng(55);
  for (int n = 0; n < 60; ++n) {
    BordMorphism f = randomBordism(rng, Flavor::SPIN, 2);
    BordMorphism g = randomBordism(rng, Flavor::SPIN, 2);
    BordMorphism upper = tensorBord(identityBord(f.tgt, Flavor::SPIN), g);
    BordMorphism lower = tensorBord(f, identityBord(g.src, Flavor::SPIN));
    CHECK(evaluate(spec, compose(upper, lower)) ==
          compose(evaluate(spec, upper), evaluate(spec, lower)));
    // strong monoidality along the regrouping structure map
    CHECK(compose(evaluate(spec, tensorBord(f, g)), regroup(spec, f.src, g.src)) ==
          compose(regroup(spec, f.tgt, g.tgt),
                  tensor(evaluate(spec, f), evaluate(spec, g))));
    CHECK(evaluate(spec, daggerBord(f)) ==
          dagger(evaluate(spec, f), objectPairing(spec, f.src),
                 objectPairing(spec, f.tgt)));
  }
}

TEST_CASE("oriented functor evaluation") {
  Matrix neg(1, 1);
  neg.at(0, 0) = -Scalar::i();
  Pairing h(SuperDims{0, 1}, neg, Convention::SUPER);
  FunctorSpec spec = solvedSpec(h, EvenMap::identity(h.space), Flavor::ORIENTED,
                                PositivityClass::SHERM);
  Rng rng(66);
  for (int n = 0; n < 40; ++n) {
    BordMorphism f = randomBordism(rng, Flavor::ORIENTED, 3);
    CHECK(evaluate(spec, daggerBord(f)) ==
          dagger(evaluate(spec, f), objectPairing(spec, f.src),
                 objectPairing(spec, f.tgt)));
  }
  auto [per, ap] = circleFactors(spec);
  CHECK(per == Scalar(-1));  // supertrace of the odd line
}

TEST_CASE("equivariance sweep") {
  SweepReport report = equivarianceTheoremSweep(2, 2024, 4);
  CHECK(report.consistent());
  CHECK(report.samples > 0);
  CHECK(report.thetaParity > 0);
  CHECK(report.solvable == report.thetaParity);
  // two runs with one seed agree
  SweepReport again = equivarianceTheoremSweep(2, 2024, 4);
  CHECK(report.summary() == again.summary());
}

TEST_CASE("functor spec io") {
  Pairing h = mixedShilb();
  FunctorSpec spec = solvedSpec(h, parityOf(h), Flavor::SPIN, PositivityClass::SHILB);
  std::string json = R"({
    "flavor": "spin", "target": "shilb",
    "statePairing": {"dims": [1,1], "convention": "super",
                     "entries": ["1", "0", "0", "i"]},
    "theta": {"dims_dom": [1,1], "dims_cod": [1,1],
              "entries": ["1", "0", "0", "-1"]},
    "ev": "solve"
  })";
  FunctorSpec loaded = functorSpecFromJson(json);
  CHECK(loaded.statePairing == spec.statePairing);
  CHECK(loaded.thetaImage == spec.thetaImage);
  CHECK(validate(loaded).ok());
  CHECK(pairingFromJson(pairingToJson(h)) == h);
  CHECK(mapFromJson(mapToJson(spec.evImage)) == spec.evImage);
}
