// Acceptance suite: one line per criterion, nonzero exit when any fails.
// All arithmetic is exact, so every comparison below is equality, not a
// tolerance check; the only numeric bounds are the stated runtime budgets.

#include <chrono>
#include <iostream>
#include <vector>

#include "daggerkit/random.hpp"
#include "daggerkit/termdsl.hpp"
#include "daggerkit/tqft.hpp"
#include "daggerkit/verify.hpp"

using namespace dk;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << what
            << "\n";
  if (!ok) ++failures;
}

using Clock = std::chrono::steady_clock;

long msSince(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
      .count();
}

SuperDims randomDims(Rng& rng, std::size_t maxTotal) {
  while (true) {
    SuperDims d{rng.below(maxTotal + 1), rng.below(maxTotal + 1)};
    if (d.total() >= 1 && d.total() <= maxTotal) return d;
  }
}

EvenMap parityOf(SuperDims d) {
  return structureIso(StructureKind::Parity, d, std::nullopt, Convention::SUPER);
}

void criterion1() {
  auto start = Clock::now();
  Rng rng(101);
  bool ok = true;
  for (int n = 0; n < 200; ++n) {
    Convention cv = rng.coin() ? Convention::SUPER : Convention::GRADED;
    SuperDims d = randomDims(rng, 6);
    Pairing h = randomPairing(rng, d, cv, PositivityClass::SHERM);
    ok = ok && signature(dualPairing(h)) == signature(h).swap34();
  }
  long ms = msSince(start);
  report(1, "dual-signature law on 200 random pairings (" + std::to_string(ms) + " ms)",
         ok && ms < 5000);
}

void criterion2() {
  auto start = Clock::now();
  Rng rng(102);
  bool ok = true;
  for (int n = 0; n < 200; ++n) {
    Convention cv = rng.coin() ? Convention::SUPER : Convention::GRADED;
    SuperDims d1 = randomDims(rng, 4), d2 = randomDims(rng, 4);
    Pairing h1 = randomPairing(rng, d1, cv, PositivityClass::SHERM);
    Pairing h2 = randomPairing(rng, d2, cv, PositivityClass::SHERM);
    EvenMap t = randomEvenMap(rng, d1, d2);
    EvenMap td = dagger(t, h1, h2);
    for (std::size_t j = 0; j < d1.total() && ok; ++j)
      for (std::size_t k = 0; k < d2.total() && ok; ++k) {
        Scalar lhs(0), rhs(0);
        for (std::size_t r = 0; r < d2.total(); ++r)
          lhs += t.m.at(r, j) * h2.gram.at(r, k);
        for (std::size_t r = 0; r < d1.total(); ++r)
          rhs += h1.gram.at(j, r) * conj(td.m.at(r, k));
        ok = lhs == rhs;
      }
  }
  long ms = msSince(start);
  report(2,
         "super-adjoint identity on all basis pairs, 200 random instances (" +
             std::to_string(ms) + " ms)",
         ok && ms < 5000);
}

void criterion3() {
  Rng rng(103);
  bool ok = true;
  for (int n = 0; n < 200; ++n) {
    SuperDims d1 = randomDims(rng, 3), d2 = randomDims(rng, 3);
    Pairing h1 = randomPairing(rng, d1, Convention::SUPER, PositivityClass::SHILB);
    Pairing h2 = randomPairing(rng, d2, Convention::SUPER, PositivityClass::SHILB);
    SuperDims dd = tensor(d1, d2);
    ok = ok && signature(tensorPairing(h1, h2)) == SignatureQuad{dd.p, 0, dd.q, 0};
  }
  // mismatched convention: the tensor square of every odd line is negative
  // definite, exactly -1 for a unit line
  for (long num = 1; num <= 5 && ok; ++num)
    for (long den = 1; den <= 3 && ok; ++den) {
      Rat r(num, den);
      r.canonicalize();
      for (int sign = 0; sign < 2; ++sign, r = -r) {
        Matrix line(1, 1);
        line.at(0, 0) = Scalar(r);
        Pairing h(SuperDims{0, 1}, line, Convention::GRADED);
        Pairing sq = tensorPairingWithSign(h, h, true);
        ok = ok && sq.gram.at(0, 0) == Scalar(-(r * r)) &&
             signature(sq) == SignatureQuad{0, 1, 0, 0};
      }
    }
  Matrix unit(1, 1);
  unit.at(0, 0) = Scalar(1);
  Pairing odd1(SuperDims{0, 1}, unit, Convention::GRADED);
  ok = ok && tensorPairingWithSign(odd1, odd1, true).gram.at(0, 0) == Scalar(-1);
  report(3, "tensor closure of sHilb and the mismatched-convention failure", ok);
}

void criterion4() {
  bool ok = compactness(PositivityClass::SHILB, SuperDims{1, 1},
                        CompactnessMode::DAGGER_COMPACT) == false;
  ok = ok && compactness(PositivityClass::SHILB, SuperDims{1, 1},
                         CompactnessMode::FERM_DAGGER_COMPACT);
  for (std::size_t n = 1; n <= 4; ++n)
    ok = ok && compactness(PositivityClass::SHILB, SuperDims{n, 0},
                           CompactnessMode::DAGGER_COMPACT);
  report(4, "compactness decisions at (1|1) and (n|0)", ok);
}

void criterion5() {
  Rng rng(105);
  bool ok = true;
  for (int n = 0; n < 200; ++n) {
    SuperDims d1 = randomDims(rng, 3), d2 = randomDims(rng, 3);
    Pairing h1 = randomPairing(rng, d1, Convention::SUPER, PositivityClass::SHILB);
    Pairing h2 = randomPairing(rng, d2, Convention::SUPER, PositivityClass::SHILB);
    EvenMap t = randomEvenMap(rng, d1, d2);
    Pairing g1 = convEquivalence(h1, ConvDirection::SUPER_TO_GRADED);
    Pairing g2 = convEquivalence(h2, ConvDirection::SUPER_TO_GRADED);
    ok = ok && dagger(t, h1, h2) == dagger(t, g1, g2);
    ok = ok && convEquivalence(g1, ConvDirection::GRADED_TO_SUPER) == h1;
  }
  report(5, "daggers agree across the convention equivalence, 200 instances", ok);
}

std::vector<BordObject> allWords(std::size_t maxLen) {
  std::vector<BordObject> words{{}};
  for (std::size_t len = 1; len <= maxLen; ++len) {
    for (std::size_t bits = 0; bits < (1u << len); ++bits) {
      BordObject w;
      for (std::size_t k = 0; k < len; ++k)
        w.push_back((bits >> k) & 1 ? Slot::DUAL_PT : Slot::PT);
      words.push_back(w);
    }
  }
  return words;
}

void criterion6() {
  bool ok = true;
  BordMorphism ev1 = generator(GeneratorKind::EV, Flavor::SPIN);
  BordMorphism dbl = compose(ev1, daggerBord(ev1));
  ok = ok && dbl.strands.empty() && dbl.nAntiperiodic == 1 && dbl.nPeriodic == 0;
  BordMorphism closure =
      compose(ev1, compose(braidNF({Slot::PT}, {Slot::DUAL_PT}, Flavor::SPIN),
                           generator(GeneratorKind::COEV, Flavor::SPIN)));
  ok = ok && closure.nPeriodic == 1 && closure.nAntiperiodic == 0;

  for (const auto& y : allWords(4)) {
    for (Flavor fl : {Flavor::SPIN, Flavor::ORIENTED}) {
      BordObject yd = dualObject(y);
      BordMorphism ev = wordEv(y, fl);
      BordMorphism coev = wordCoev(y, fl);
      ok = ok && compose(tensorBord(identityBord(y, fl), ev),
                         tensorBord(coev, identityBord(y, fl))) == identityBord(y, fl);
      ok = ok && compose(tensorBord(ev, identityBord(yd, fl)),
                         tensorBord(identityBord(yd, fl), coev)) == identityBord(yd, fl);
      BordMorphism expected =
          fl == Flavor::SPIN
              ? compose(braidNF(y, yd, fl),
                        compose(tensorBord(flipAction(y, fl), identityBord(yd, fl)), coev))
              : compose(braidNF(y, yd, fl), coev);
      ok = ok && daggerBord(ev) == expected;
      ok = ok && daggerBord(daggerBord(ev)) == ev;
    }
  }
  Rng rng(106);
  for (int n = 0; n < 100; ++n) {
    Flavor fl = rng.coin() ? Flavor::SPIN : Flavor::ORIENTED;
    BordMorphism f = randomBordism(rng, fl, 4);
    BordMorphism g = randomBordism(rng, fl, 4);
    BordMorphism upper = tensorBord(identityBord(f.tgt, fl), g);
    BordMorphism lower = tensorBord(f, identityBord(g.src, fl));
    ok = ok && daggerBord(daggerBord(f)) == f;
    ok = ok &&
         daggerBord(compose(upper, lower)) == compose(daggerBord(lower), daggerBord(upper));
  }
  report(6, "bordism calculus: circle calibration, zigzag and dagger axioms", ok);
}

void criterion7() {
  auto start = Clock::now();
  bool ok = true;
  std::size_t samples = 0;
  Rng rng(107);
  for (std::size_t p = 0; p <= 2; ++p) {
    for (std::size_t q = 0; q <= 2; ++q) {
      if (p + q == 0) continue;
      SuperDims dims{p, q};
      for (std::size_t s = 0; s < 7; ++s) {
        FramedPairing fp =
            randomFramedPairing(rng, dims, Convention::SUPER, PositivityClass::SHILB);
        EvenMap theta = randomUnitaryInvolution(rng, fp, s % 2 == 0);
        bool isParity = theta == parityOf(dims);
        auto ev = solveDuality(fp.h, theta, Flavor::SPIN);
        ok = ok && ev.has_value() == isParity;
        ++samples;
        if (ev && isParity) {
          FunctorSpec spec{Flavor::SPIN, PositivityClass::SHILB, fp.h, theta, *ev};
          ok = ok && validate(spec).ok();
          ok = ok &&
               evaluate(spec, flipAction({Slot::PT}, Flavor::SPIN)) == parityOf(dims);
        }
      }
    }
  }
  long ms = msSince(start);
  report(7,
         "spin-statistics at d=1: solveDuality iff theta = parity over " +
             std::to_string(samples) + " samples (" + std::to_string(ms) + " ms)",
         ok && samples >= 50 && ms < 30000);
}

void criterion8() {
  Matrix neg(1, 1);
  neg.at(0, 0) = -Scalar::i();
  Pairing h(SuperDims{0, 1}, neg, Convention::SUPER);
  EvenMap theta = EvenMap::identity(h.space);
  auto ev = solveDuality(h, theta, Flavor::ORIENTED);
  bool ok = ev.has_value();
  if (ok) {
    FunctorSpec spec{Flavor::ORIENTED, PositivityClass::SHERM, h, theta, *ev};
    ValidationReport rep = validate(spec);
    ok = rep.isDagger && rep.isMonoidal && !rep.isEquivariant;
  }
  report(8, "oriented sHerm counterexample: dagger functor, not equivariant", ok);
}

void criterion9() {
  bool ok = true;
  Rng rng(109);
  BordMorphism periodic = parseBordTerm("ev . swap(p,d) . coev");
  BordMorphism antiperiodic = parseBordTerm("ev . (ev !)");
  for (std::size_t p = 0; p <= 3; ++p) {
    for (std::size_t q = 0; q <= 3; ++q) {
      if (p + q == 0) continue;
      SuperDims dims{p, q};
      Pairing h = randomPairing(rng, dims, Convention::SUPER, PositivityClass::SHILB);
      auto ev = solveDuality(h, parityOf(dims), Flavor::SPIN);
      ok = ok && ev.has_value();
      if (!ev) continue;
      FunctorSpec spec{Flavor::SPIN, PositivityClass::SHILB, h, parityOf(dims), *ev};
      Scalar per = evaluate(spec, periodic).m.at(0, 0);
      Scalar ap = evaluate(spec, antiperiodic).m.at(0, 0);
      ok = ok && per == Scalar(static_cast<long>(p) - static_cast<long>(q));
      ok = ok && ap == Scalar(static_cast<long>(p + q));
    }
  }
  report(9, "circle values p-q and p+q from the spec's own duality", ok);
}

void criterion10() {
  auto start = Clock::now();
  auto results = runAll(7, 200);
  bool ok = true;
  for (const auto& r : results) {
    std::cout << "  " << r.reportLine() << "\n";
    ok = ok && r.passed();
  }
  auto replay = runAll(7, 200);
  ok = ok && deterministicReport(results) == deterministicReport(replay);
  long ms = msSince(start);
  report(10,
         "full registry twice, zero failures and byte-identical reports (" +
             std::to_string(ms) + " ms)",
         ok && ms < 60000);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (failures == 0)
    std::cout << "all acceptance criteria passed\n";
  else
    std::cout << failures << " acceptance criteria failed\n";
  return failures == 0 ? 0 : 1;
}
