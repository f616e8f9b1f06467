#include "daggerkit/tqft.hpp"

#include <sstream>

#include "daggerkit/random.hpp"

namespace dk {

Pairing dualStatePairing(const Pairing& h, Flavor flavor) {
  Pairing dual = dualPairing(h);
  return flavor == Flavor::SPIN ? parityTwist(dual) : dual;
}

namespace {

Matrix evaluationSquare(const EvenMap& ev, SuperDims d) {
  if (ev.dom != tensor(d, d) || ev.cod != SuperDims{1, 0})
    throw DimensionMismatch("evaluation must map the dual-state tensor square to the unit");
  // ev row indexed by graded pair slots (i, j) -> matrix eps[i][j]
  auto pairs = tensorSlotPairs(d, d);
  Matrix eps(d.total(), d.total());
  for (std::size_t s = 0; s < pairs.size(); ++s)
    eps.at(pairs[s].first, pairs[s].second) = ev.m.at(0, s);
  return eps;
}

EvenMap evFromSquare(const Matrix& eps, SuperDims d) {
  auto pairs = tensorSlotPairs(d, d);
  Matrix row(1, pairs.size());
  for (std::size_t s = 0; s < pairs.size(); ++s)
    row.at(0, s) = eps.at(pairs[s].first, pairs[s].second);
  return EvenMap(tensor(d, d), SuperDims{1, 0}, std::move(row));
}

EvenMap thetaForFlavor(const FunctorSpec& spec) {
  return spec.flavor == Flavor::SPIN ? spec.thetaImage
                                     : EvenMap::identity(spec.statePairing.space);
}

/// sigma . (theta (x) id) . coev, the required value of ev^dagger.
EvenMap doubleElbowRhs(const FunctorSpec& spec) {
  SuperDims d = spec.statePairing.space;
  EvenMap coev = coevInduced(spec.statePairing, spec.evImage);
  EvenMap twist = tensor(thetaForFlavor(spec), EvenMap::identity(d));
  return compose(braid(d, d), compose(twist, coev));
}

}  // namespace

EvenMap coevInduced(const Pairing& h, const EvenMap& ev) {
  SuperDims d = h.space;
  Matrix eps = evaluationSquare(ev, d);
  Matrix c = eps.inverse();
  auto pairs = tensorSlotPairs(d, d);
  Matrix col(pairs.size(), 1);
  for (std::size_t s = 0; s < pairs.size(); ++s)
    col.at(s, 0) = c.at(pairs[s].first, pairs[s].second);
  return EvenMap(SuperDims{1, 0}, tensor(d, d), std::move(col));
}

std::optional<EvenMap> solveDuality(const Pairing& h, const EvenMap& theta, Flavor flavor) {
  if (h.conv != Convention::SUPER)
    throw ConventionMismatch("solveDuality expects a SUPER pairing");
  if (theta.dom != h.space || theta.cod != h.space)
    throw DimensionMismatch("theta must act on the state space");
  if (!theta.isInvertible() || !(theta.m * theta.m).isIdentity() ||
      dagger(theta, h, h) != theta)
    throw NotUnitaryInvolution("theta^2 = id and theta = theta^dagger required");
  if (flavor == Flavor::ORIENTED && !theta.m.isIdentity())
    throw NotUnitaryInvolution("oriented flavor carries no spin flip; theta must be id");

  Matrix lhs = h.gram;
  if (flavor == Flavor::SPIN)
    lhs = structureIso(StructureKind::Parity, h.space, std::nullopt, h.conv).m * lhs;
  Pairing m1(h.space, lhs, h.conv);
  Pairing m2(h.space, theta.m.transpose() * h.gram, h.conv);
  if (!checkPairing(m1) || !checkPairing(m2)) return std::nullopt;
  auto eps = solveCongruence(m1, m2);
  if (!eps) return std::nullopt;
  EvenMap ev = evFromSquare(eps->m, h.space);
  // defensive: the solution must satisfy the flavor's dagger condition
  FunctorSpec probe{flavor, PositivityClass::SHERM, h,
                    flavor == Flavor::SPIN ? theta : EvenMap::identity(h.space), ev};
  Pairing domPair = tensorPairing(dualStatePairing(h, flavor), h);
  if (dagger(ev, domPair, unitPairing(h.conv)) != doubleElbowRhs(probe))
    throw std::logic_error("solveDuality produced an invalid witness");
  return ev;
}

ValidationReport validate(const FunctorSpec& spec) {
  ValidationReport report;
  const Pairing& h = spec.statePairing;
  SuperDims d = h.space;
  auto fail = [&](bool& flag, const std::string& name, const Matrix& expected,
                  const Matrix& actual) {
    flag = false;
    report.failures.push_back({name, expected, actual});
  };

  if (h.conv != Convention::SUPER || !checkPairing(h))
    fail(report.isMonoidal, "state_pairing", Matrix::identity(d.total()), h.gram);
  else {
    if (!sigInClass(signature(h), spec.target, d))
      fail(report.isMonoidal, "state_pairing_not_in_target", Matrix::identity(d.total()),
           h.gram);
    Pairing dual = dualStatePairing(h, spec.flavor);
    if (!sigInClass(signature(dual), spec.target, d))
      fail(report.isMonoidal, "dual_pairing_not_in_target", Matrix::identity(d.total()),
           dual.gram);
  }

  if (spec.evImage.dom != tensor(d, d) || spec.evImage.cod != SuperDims{1, 0}) {
    fail(report.isMonoidal, "ev_shape", Matrix::identity(d.total()), spec.evImage.m);
    report.isDagger = false;
    return report;
  }
  Matrix eps = evaluationSquare(spec.evImage, d);
  if (!eps.isInvertible()) {
    fail(report.isMonoidal, "ev_not_a_duality", Matrix::identity(d.total()), eps);
    report.isDagger = false;
    return report;
  }
  EvenMap coev = coevInduced(h, spec.evImage);
  EvenMap idV = EvenMap::identity(d);
  EvenMap zig1 = compose(tensor(idV, spec.evImage),
                         compose(assoc(d, d, d), tensor(coev, idV)));
  EvenMap zig2 = compose(tensor(spec.evImage, idV),
                         compose(assoc(d, d, d).inverse(), tensor(idV, coev)));
  if (!(zig1 == idV && zig2 == idV))
    fail(report.isMonoidal, "zigzag", idV.m, zig1.m);

  const EvenMap& theta = spec.thetaImage;
  bool thetaOk = theta.dom == d && theta.cod == d && theta.isInvertible() &&
                 (theta.m * theta.m).isIdentity() && dagger(theta, h, h) == theta;
  if (spec.flavor == Flavor::ORIENTED && !theta.m.isIdentity()) thetaOk = false;
  if (!thetaOk)
    fail(report.isDagger, "theta_unitary_involution", Matrix::identity(d.total()), theta.m);

  Pairing domPair = tensorPairing(dualStatePairing(h, spec.flavor), h);
  EvenMap actual = dagger(spec.evImage, domPair, unitPairing(h.conv));
  EvenMap expected = doubleElbowRhs(spec);
  if (actual != expected) fail(report.isDagger, "ev_dagger", expected.m, actual.m);

  report.isEquivariant =
      theta.m == structureIso(StructureKind::Parity, d, std::nullopt, h.conv).m;
  return report;
}

SuperDims objectDims(const FunctorSpec& spec, const BordObject& word) {
  SuperDims acc{1, 0};
  for (std::size_t k = 0; k < word.size(); ++k) acc = tensor(acc, spec.statePairing.space);
  return acc;
}

Pairing objectPairing(const FunctorSpec& spec, const BordObject& word) {
  Pairing acc = unitPairing(spec.statePairing.conv);
  Pairing dual = dualStatePairing(spec.statePairing, spec.flavor);
  for (Slot s : word)
    acc = tensorPairing(acc, s == Slot::PT ? spec.statePairing : dual);
  return acc;
}

namespace {

// permutation from lex tuple order to the left-fold graded order of an
// n-letter word whose letters all have dims d
Matrix foldPermutation(SuperDims d, std::size_t letters) {
  Matrix q = Matrix::identity(1);
  SuperDims acc{1, 0};
  for (std::size_t k = 0; k < letters; ++k) {
    q = gradedPermutation(acc, d) * q.kron(Matrix::identity(d.total()));
    acc = tensor(acc, d);
  }
  return q;
}

// graded-basis matrix of a core map -> raw lex-tuple basis
Matrix rawOfCore(const Matrix& graded, SuperDims d, std::size_t domLetters,
                 std::size_t codLetters) {
  Matrix out = graded;
  if (codLetters == 2) out = gradedPermutation(d, d).transpose() * out;
  if (domLetters == 2) out = out * gradedPermutation(d, d);
  return out;
}

}  // namespace

std::pair<Scalar, Scalar> circleFactors(const FunctorSpec& spec) {
  SuperDims d = spec.statePairing.space;
  EvenMap coev = coevInduced(spec.statePairing, spec.evImage);
  EvenMap sigma = braid(d, d);
  Scalar periodic = compose(spec.evImage, compose(sigma, coev)).m.at(0, 0);
  EvenMap twist = tensor(thetaForFlavor(spec), EvenMap::identity(d));
  Scalar antiperiodic =
      compose(spec.evImage, compose(sigma, compose(twist, coev))).m.at(0, 0);
  return {periodic, antiperiodic};
}

EvenMap evaluate(const FunctorSpec& spec, const BordMorphism& m) {
  ValidationReport report = validate(spec);
  if (!report.ok()) throw NotAValidFunctor("evaluate requires a validated spec");
  if (m.flavor != spec.flavor) throw NotAValidFunctor("bordism flavor differs from spec");

  SuperDims d = spec.statePairing.space;
  std::size_t n = d.total();
  Matrix eps = evaluationSquare(spec.evImage, d);
  Matrix epsInv = eps.inverse();
  Matrix theta = thetaForFlavor(spec).m;
  Matrix thetaDual = (eps * theta * epsInv).transpose();

  auto power = [&](std::size_t k) {
    std::size_t size = 1;
    while (k--) size *= n;
    return size;
  };

  auto factors = factorize(m);
  Matrix total = Matrix::identity(power(m.src.size()));
  for (const auto& f : factors) {
    std::size_t domLetters = 0, codLetters = 0;
    Matrix core(0, 0);
    switch (f.kind) {
      case Factor::Kind::SWAP_ADJ:
        domLetters = codLetters = 2;
        core = braid(d, d).m;
        break;
      case Factor::Kind::EV_AT: {
        domLetters = 2;
        codLetters = 0;
        Matrix evm = spec.evImage.m;
        if (f.flip)
          evm = evm * tensor(EvenMap::identity(d), thetaForFlavor(spec)).m;
        core = evm;
        break;
      }
      case Factor::Kind::COEV_AT: {
        domLetters = 0;
        codLetters = 2;
        Matrix cm = coevInduced(spec.statePairing, spec.evImage).m;
        if (f.flip)
          cm = tensor(thetaForFlavor(spec), EvenMap::identity(d)).m * cm;
        core = cm;
        break;
      }
      case Factor::Kind::THETA_AT:
        domLetters = codLetters = 1;
        core = f.word[f.pos] == Slot::PT ? theta : thetaDual;
        break;
    }
    Matrix raw = rawOfCore(core, d, domLetters, codLetters);
    std::size_t pre = power(f.pos);
    std::size_t post = power(f.word.size() - f.pos - domLetters);
    total = Matrix::identity(pre).kron(raw).kron(Matrix::identity(post)) * total;
  }

  Matrix graded = foldPermutation(d, m.tgt.size()) * total *
                  foldPermutation(d, m.src.size()).transpose();
  auto [perFactor, apFactor] = circleFactors(spec);
  Scalar scale(1);
  for (std::uint64_t c = 0; c < m.nPeriodic; ++c) scale *= perFactor;
  for (std::uint64_t c = 0; c < m.nAntiperiodic; ++c) scale *= apFactor;
  return EvenMap(objectDims(spec, m.src), objectDims(spec, m.tgt), scale * graded);
}

EvenMap regroup(const FunctorSpec& spec, const BordObject& w1, const BordObject& w2) {
  SuperDims d = spec.statePairing.space;
  std::size_t n = d.total();
  auto rawOf = [&](const BordObject& w) {
    Matrix q = foldPermutation(d, w.size());
    std::vector<std::size_t> raw(q.rows());
    for (std::size_t g = 0; g < q.rows(); ++g)
      for (std::size_t r = 0; r < q.cols(); ++r)
        if (!q.at(g, r).isZero()) raw[g] = r;
    return raw;
  };
  auto raw1 = rawOf(w1);
  auto raw2 = rawOf(w2);
  SuperDims dims1 = objectDims(spec, w1), dims2 = objectDims(spec, w2);
  auto pairs = tensorSlotPairs(dims1, dims2);
  BordObject joined = w1;
  joined.insert(joined.end(), w2.begin(), w2.end());
  Matrix qJoined = foldPermutation(d, joined.size());
  std::size_t pow2 = 1;
  for (std::size_t k = 0; k < w2.size(); ++k) pow2 *= n;
  Matrix m(qJoined.rows(), pairs.size());
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    std::size_t raw = raw1[pairs[c].first] * pow2 + raw2[pairs[c].second];
    for (std::size_t g = 0; g < qJoined.rows(); ++g)
      if (!qJoined.at(g, raw).isZero()) m.at(g, c) = Scalar(1);
  }
  return EvenMap(tensor(dims1, dims2), objectDims(spec, joined), std::move(m));
}

std::string SweepReport::summary() const {
  std::ostringstream os;
  os << "sweep seed=" << seed << " samples=" << samples << " solvable=" << solvable
     << " theta=parity=" << thetaParity << " mismatches=" << mismatches
     << " regraded-equivariant=" << regradedEquivariant
     << " evaluate-parity-checks=" << evaluatedParityChecks;
  return os.str();
}

SweepReport equivarianceTheoremSweep(std::size_t dimsMax, std::uint64_t seed,
                                     std::size_t samplesPerShape) {
  SweepReport report;
  report.seed = seed;
  Rng rng(seed);
  for (std::size_t p = 0; p <= dimsMax; ++p) {
    for (std::size_t q = 0; p + q <= dimsMax; ++q) {
      if (p + q == 0) continue;
      SuperDims dims{p, q};
      EvenMap parity = structureIso(StructureKind::Parity, dims, std::nullopt,
                                    Convention::SUPER);
      for (std::size_t s = 0; s < samplesPerShape; ++s) {
        FramedPairing fp =
            randomFramedPairing(rng, dims, Convention::SUPER, PositivityClass::SHILB);
        bool forceParity = s % 2 == 0;
        EvenMap theta = randomUnitaryInvolution(rng, fp, forceParity);
        bool isParity = theta == parity;
        auto ev = solveDuality(fp.h, theta, Flavor::SPIN);
        ++report.samples;
        if (ev) ++report.solvable;
        if (isParity) ++report.thetaParity;
        if (ev.has_value() != isParity) ++report.mismatches;
        if (!isParity && dims.q == 0) ++report.regradedEquivariant;
        if (ev && isParity) {
          FunctorSpec spec{Flavor::SPIN, PositivityClass::SHILB, fp.h, theta, *ev};
          EvenMap image = evaluate(spec, flipAction({Slot::PT}, Flavor::SPIN));
          if (image == parity)
            ++report.evaluatedParityChecks;
          else
            ++report.mismatches;
        }
      }
    }
  }
  return report;
}

}  // namespace dk
