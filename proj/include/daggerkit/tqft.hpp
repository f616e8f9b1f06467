#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "daggerkit/bordism.hpp"
#include "daggerkit/hermforms.hpp"

namespace dk {

/// Candidate TQFT out of the 1-d bordism model: the images of the point,
/// the spin flip and the evaluation bordism. The dual point carries the
/// flavor-twisted dual pairing and the coevaluation is induced by zigzag.
struct FunctorSpec {
  Flavor flavor;
  PositivityClass target;  // SHILB or SHERM
  Pairing statePairing;    // convention must be SUPER
  EvenMap thetaImage;
  EvenMap evImage;         // Z(PT*) (x) Z(PT) -> unit
};

struct GeneratorFailure {
  std::string generator;
  Matrix expected, actual;
};

struct ValidationReport {
  bool isMonoidal = true;
  bool isDagger = true;
  bool isEquivariant = false;
  std::vector<GeneratorFailure> failures;

  bool ok() const { return isMonoidal && isDagger; }
};

/// Pairing carried by the image of the dual point: the standard dual
/// pairing for ORIENTED, its parity twist for SPIN.
Pairing dualStatePairing(const Pairing& h, Flavor flavor);

/// An evaluation matrix satisfying zigzag together with the flavor's
/// dagger condition (the parity-twisted one for SPIN), or nothing when no
/// solution exists. Solved exactly over Q(i) via the congruence equation
///   eps^T (parity H) conj(eps) = theta^T H    (SPIN)
///   eps^T H conj(eps)          = H            (ORIENTED)
std::optional<EvenMap> solveDuality(const Pairing& h, const EvenMap& theta, Flavor flavor);

/// Coevaluation induced from an evaluation by the zigzag equations.
EvenMap coevInduced(const Pairing& h, const EvenMap& ev);

ValidationReport validate(const FunctorSpec& spec);

SuperDims objectDims(const FunctorSpec& spec, const BordObject& word);

/// Left-fold tensor pairing over the word letters (h on PT, twisted dual
/// on DUAL_PT); matches the slot convention used by evaluate.
Pairing objectPairing(const FunctorSpec& spec, const BordObject& word);

/// Exact image matrix of a normal-form bordism; circles contribute factors
/// contracted from the spec's own duality data.
EvenMap evaluate(const FunctorSpec& spec, const BordMorphism& m);

/// The monoidal structure map Z(w1) (x) Z(w2) -> Z(w1 ++ w2): a signless
/// unitary permutation regrouping the slot orders. evaluate is a strong
/// monoidal functor along it:
///   evaluate(f (x) g) . regroup(src) = regroup(tgt) . (evaluate f (x) evaluate g)
EvenMap regroup(const FunctorSpec& spec, const BordObject& w1, const BordObject& w2);

/// Circle factors (periodic, antiperiodic) by explicit contraction.
std::pair<Scalar, Scalar> circleFactors(const FunctorSpec& spec);

struct SweepReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t solvable = 0;
  std::size_t thetaParity = 0;
  std::size_t mismatches = 0;           // solveDuality success disagreeing with theta==parity
  std::size_t regradedEquivariant = 0;  // purely even state space, theta a parity after regrading
  std::size_t evaluatedParityChecks = 0;

  bool consistent() const { return mismatches == 0; }
  std::string summary() const;
};

/// Random SHILB state spaces with total dimension <= dimsMax and sampled
/// unitary involutions; asserts solveDuality succeeds iff theta is the
/// parity operator, and that validated specs send THETA to parity.
SweepReport equivarianceTheoremSweep(std::size_t dimsMax, std::uint64_t seed,
                                     std::size_t samplesPerShape);

}  // namespace dk
