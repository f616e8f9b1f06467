#pragma once

#include "daggerkit/bordism.hpp"
#include "daggerkit/hermforms.hpp"
#include "daggerkit/rng.hpp"

namespace dk {

/// Pairing together with the frame it was transferred along:
/// h = transfer(canonicalPairing(sig), frame), frame : h.space -> rep space.
/// The frame is a unitary (h.space, h) -> (rep, canonical), which is what
/// makes exact unitary sampling possible.
struct FramedPairing {
  Pairing h;
  EvenMap frame;
  SignatureQuad sig;
};

Scalar randomScalar(Rng& rng, long height = 2);

EvenMap randomEvenMap(Rng& rng, SuperDims dom, SuperDims cod, long height = 2);

/// Product of elementary block shears and unit diagonals; invertible by
/// construction with entries of bounded height.
EvenMap randomInvertibleEven(Rng& rng, SuperDims dims);

SignatureQuad randomClassSignature(Rng& rng, SuperDims dims, PositivityClass cls);

FramedPairing randomFramedPairing(Rng& rng, SuperDims dims, Convention conv,
                                  PositivityClass cls);

Pairing randomPairing(Rng& rng, SuperDims dims, Convention conv, PositivityClass cls);

/// Exact unitary of the canonical diagonal pairing: rational rotations
/// within equal-norm slots, unit phases, and permutations.
EvenMap randomCanonicalUnitary(Rng& rng, const SignatureQuad& sig, Convention conv);

EvenMap randomUnitary(Rng& rng, const FramedPairing& fp);

/// u S u^dagger for random signs S; forceParity pins S to the parity
/// pattern, in which case the result is exactly the parity operator.
EvenMap randomUnitaryInvolution(Rng& rng, const FramedPairing& fp, bool forceParity);

/// Random self-adjoint automorphism of (space, h).
EvenMap randomSelfAdjointAut(Rng& rng, const FramedPairing& fp);

BordMorphism randomBordism(Rng& rng, Flavor flavor, std::size_t maxLen);

BordObject randomWord(Rng& rng, std::size_t maxLen);

}  // namespace dk
