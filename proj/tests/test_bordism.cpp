#include <doctest.h>

#include "daggerkit/random.hpp"
#include "daggerkit/termdsl.hpp"

using namespace dk;

namespace {
const Flavor SP = Flavor::SPIN;
const Flavor OR_ = Flavor::ORIENTED;
}  // namespace

TEST_CASE("generators") {
  BordMorphism theta = generator(GeneratorKind::THETA, SP);
  BordMorphism id1 = generator(GeneratorKind::ID, SP);
  CHECK(compose(theta, theta) == id1);
  CHECK_THROWS_AS(generator(GeneratorKind::THETA, OR_), ThetaNotInOriented);

  BordMorphism ev = generator(GeneratorKind::EV, SP);
  BordMorphism coev = generator(GeneratorKind::COEV, SP);
  CHECK(ev.src == parseObject("dp"));
  CHECK(coev.tgt == parseObject("pd"));
  BordObject p{Slot::PT};
  BordMorphism zig =
      compose(tensorBord(identityBord(p, SP), ev), tensorBord(coev, identityBord(p, SP)));
  CHECK(zig == identityBord(p, SP));
}

TEST_CASE("composition and circles") {
  BordMorphism ev = generator(GeneratorKind::EV, SP);
  BordMorphism dbl = compose(ev, daggerBord(ev));
  CHECK(dbl.strands.empty());
  CHECK(dbl.nAntiperiodic == 1);
  CHECK(dbl.nPeriodic == 0);

  BordMorphism closure = compose(
      ev,
      compose(braidNF({Slot::PT}, {Slot::DUAL_PT}, SP), generator(GeneratorKind::COEV, SP)));
  CHECK(closure.nPeriodic == 1);
  CHECK(closure.nAntiperiodic == 0);

  BordMorphism id1 = generator(GeneratorKind::ID, SP);
  CHECK(compose(id1, id1) == id1);
  CHECK_THROWS_AS(compose(ev, generator(GeneratorKind::COEV, SP)), ObjectMismatch);
}

TEST_CASE("tensor") {
  BordMorphism id1 = generator(GeneratorKind::ID, SP);
  CHECK(tensorBord(id1, id1) == identityBord(parseObject("pp"), SP));
  BordMorphism both =
      tensorBord(generator(GeneratorKind::EV, SP), generator(GeneratorKind::COEV, SP));
  CHECK(both.strands.size() == 2);
  CHECK(wellFormed(both));
  Rng rng(1);
  BordMorphism f = randomBordism(rng, SP, 3);
  CHECK(tensorBord(identityBord({}, SP), f) == f);
}

TEST_CASE("dagger") {
  BordMorphism ev = generator(GeneratorKind::EV, SP);
  BordMorphism theta = generator(GeneratorKind::THETA, SP);
  BordMorphism coev = generator(GeneratorKind::COEV, SP);
  // ev^dagger = braid . (theta (x) id_d) . coev in the spin flavor
  BordMorphism rhs = compose(
      braidNF({Slot::PT}, {Slot::DUAL_PT}, SP),
      compose(tensorBord(theta, identityBord({Slot::DUAL_PT}, SP)), coev));
  CHECK(daggerBord(ev) == rhs);
  CHECK(daggerBord(theta) == theta);

  BordMorphism evO = generator(GeneratorKind::EV, OR_);
  BordMorphism rhsO = compose(braidNF({Slot::PT}, {Slot::DUAL_PT}, OR_),
                              generator(GeneratorKind::COEV, OR_));
  CHECK(daggerBord(evO) == rhsO);
}

TEST_CASE("flip action") {
  CHECK(flipAction({}, SP) == identityBord({}, SP));
  CHECK(flipAction({Slot::PT}, SP) == generator(GeneratorKind::THETA, SP));
  BordObject pp = parseObject("pp");
  CHECK(compose(flipAction(pp, SP), flipAction(pp, SP)) == identityBord(pp, SP));
  CHECK_THROWS_AS(flipAction({Slot::PT}, OR_), ThetaNotInOriented);
}

TEST_CASE("dagger category axioms on random bordisms") {
  Rng rng(13);
  for (int n = 0; n < 150; ++n) {
    Flavor fl = rng.coin() ? SP : OR_;
    BordMorphism f = randomBordism(rng, fl, 4);
    CHECK(wellFormed(f));
    CHECK(daggerBord(daggerBord(f)) == f);
    BordMorphism g = randomBordism(rng, fl, 3);
    CHECK(daggerBord(tensorBord(f, g)) == tensorBord(daggerBord(f), daggerBord(g)));
    BordMorphism upper = tensorBord(identityBord(f.tgt, fl), g);
    BordMorphism lower = tensorBord(f, identityBord(g.src, fl));
    CHECK(daggerBord(compose(upper, lower)) ==
          compose(daggerBord(lower), daggerBord(upper)));
  }
}

TEST_CASE("fermionic dagger compactness as a normal form identity") {
  Rng rng(17);
  for (int n = 0; n < 80; ++n) {
    BordObject y = randomWord(rng, 4);
    BordObject yd = dualObject(y);
    for (Flavor fl : {SP, OR_}) {
      BordMorphism ev = wordEv(y, fl);
      BordMorphism coev = wordCoev(y, fl);
      BordMorphism zig1 = compose(tensorBord(identityBord(y, fl), ev),
                                  tensorBord(coev, identityBord(y, fl)));
      CHECK(zig1 == identityBord(y, fl));
      BordMorphism expected =
          fl == SP ? compose(braidNF(y, yd, fl),
                             compose(tensorBord(flipAction(y, fl), identityBord(yd, fl)),
                                     coev))
                   : compose(braidNF(y, yd, fl), coev);
      CHECK(daggerBord(ev) == expected);
    }
  }
}

TEST_CASE("braiding is unitary in normal form") {
  Rng rng(19);
  for (int n = 0; n < 60; ++n) {
    BordObject a = randomWord(rng, 3), b = randomWord(rng, 3);
    BordObject ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    BordMorphism sigma = braidNF(a, b, SP);
    CHECK(daggerBord(sigma) == braidNF(b, a, SP));
    CHECK(compose(braidNF(b, a, SP), sigma) == identityBord(ab, SP));
  }
}

TEST_CASE("theta slides along strands") {
  Rng rng(29);
  for (int n = 0; n < 60; ++n) {
    BordObject y = randomWord(rng, 3);
    if (y.empty()) continue;
    BordMorphism ev = wordEv(y, SP);
    BordObject yd = dualObject(y);
    BordMorphism left =
        compose(ev, tensorBord(flipAction(yd, SP), identityBord(y, SP)));
    BordMorphism right =
        compose(ev, tensorBord(identityBord(yd, SP), flipAction(y, SP)));
    CHECK(left == right);
  }
}

TEST_CASE("term parsing") {
  BordMorphism m = parseBordTerm("ev . (ev !)");
  CHECK(m.nAntiperiodic == 1);
  CHECK(m.strands.empty());
  CHECK(parseBordTerm("id(p)") == identityBord({Slot::PT}, SP));
  CHECK_THROWS_AS(parseBordTerm("ev . coev"), ObjectMismatch);
  CHECK_THROWS_AS(parseBordTerm("ev ."), SyntaxError);
  CHECK_THROWS_AS(parseBordTerm("foo"), SyntaxError);
  CHECK_THROWS_AS(parseBordTerm("theta", OR_), ThetaNotInOriented);
  CHECK(parseBordTerm("ev . swap(p,d) . coev").nPeriodic == 1);
  // one flip toggles the circle type
  BordMorphism thetaLoop = parseBordTerm("ev . swap(p,d) . ((theta @ id(d)) . coev)");
  CHECK(thetaLoop.nAntiperiodic == 1);
  CHECK(thetaLoop.nPeriodic == 0);
  CHECK(parseBordTerm("id()") == identityBord({}, SP));
  CHECK(parseBordTerm("(theta @ id(d)) . swap(d,p)").src == parseObject("dp"));
}

TEST_CASE("print parse round trip") {
  Rng rng(23);
  for (int n = 0; n < 120; ++n) {
    Flavor fl = rng.coin() ? SP : OR_;
    BordMorphism m = randomBordism(rng, fl, 4);
    CHECK(parseBordTerm(printTerm(m), fl) == m);
  }
}

TEST_CASE("flip action is a natural monoidal involution") {
  Rng rng(31);
  for (int n = 0; n < 80; ++n) {
    BordMorphism f = randomBordism(rng, SP, 4);
    CHECK(compose(flipAction(f.tgt, SP), f) == compose(f, flipAction(f.src, SP)));
    BordObject a = randomWord(rng, 3), b = randomWord(rng, 3);
    BordObject ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(flipAction(ab, SP) == tensorBord(flipAction(a, SP), flipAction(b, SP)));
  }
}

TEST_CASE("parser survives junk input") {
  Rng rng(37);
  const char alphabet[] = "pdev coivthas!@.(),x";
  for (int n = 0; n < 400; ++n) {
    std::string text;
    std::size_t len = rng.below(24);
    for (std::size_t k = 0; k < len; ++k)
      text += alphabet[rng.below(sizeof(alphabet) - 1)];
    try {
      (void)parseBordTerm(text);
    } catch (const SyntaxError&) {
    } catch (const ObjectMismatch&) {
    } catch (const ThetaNotInOriented&) {
    }
  }
  CHECK(true);
}
