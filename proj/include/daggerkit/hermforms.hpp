#pragma once

#include <optional>
#include <vector>

#include "daggerkit/supervect.hpp"

namespace dk {

/// Counts of orthogonal norms +1, -1, +i, -i. For GRADED pairings the odd
/// norms are real and p3/p4 count +1/-1 on the odd part instead.
struct SignatureQuad {
  std::size_t p1 = 0, p2 = 0, p3 = 0, p4 = 0;

  SignatureQuad swap34() const { return {p1, p2, p4, p3}; }
  friend bool operator==(const SignatureQuad&, const SignatureQuad&) = default;
  friend auto operator<=>(const SignatureQuad&, const SignatureQuad&) = default;
};

std::string to_string(const SignatureQuad& s);

enum class PositivityClass { SHILB, SHERM, SHILB_ODD_NEG };

/// Invertible grading-preserving sesquilinear form, stored as the Gram
/// matrix gram[i][j] = <e_i, e_j> (linear in the first slot). Construction
/// rejects non-invertible matrices; hermiticity is checked by checkPairing.
struct Pairing {
  SuperDims space;
  Matrix gram;
  Convention conv;

  Pairing(SuperDims space_, Matrix gram_, Convention conv_);

  /// Matrix of the morphism h : V -> dV in slot bases (the Gram transpose).
  Matrix mor() const { return gram.transpose(); }

  friend bool operator==(const Pairing&, const Pairing&) = default;
};

Pairing unitPairing(Convention conv);

/// All TYPE invariants, verified against the categorical condition
/// d(h) . eta = h built from the structure isomorphisms of the convention.
bool checkPairing(const Pairing& h);

/// h^{-1} . d(T) . h, the adjoint characterised by <Tv,w> = <v, T^dagger w>.
EvenMap dagger(const EvenMap& t, const Pairing& hDom, const Pairing& hCod);

/// d(g) . h . g for an isomorphism g into h's space; preserves signature.
Pairing transfer(const Pairing& h, const EvenMap& g);

/// Tensor pairing; SUPER inserts the sign (-1)^{|v2||w1|}, GRADED does not.
Pairing tensorPairing(const Pairing& h1, const Pairing& h2);

/// Same Gram construction with the Koszul sign forced on or off, regardless
/// of the stored convention. Used to exhibit the mismatched-convention
/// failure (tensor square of an odd line going negative).
Pairing tensorPairingWithSign(const Pairing& h1, const Pairing& h2, bool koszulSign);

/// Pairing on V* via h^{*-1} and the convention's (dV)* = d(V*) identification.
Pairing dualPairing(const Pairing& h);

/// Pairing (dh)^{-1} on dV; h itself is unitary (V,h) -> (dV, conjPairing(h)).
Pairing conjPairing(const Pairing& h);

/// Exact signature by congruence diagonalization; no square roots.
SignatureQuad signature(const Pairing& h);

std::vector<SignatureQuad> classSignatures(PositivityClass cls, SuperDims dims);
bool sigInClass(const SignatureQuad& sig, PositivityClass cls, SuperDims dims);

/// Diagonal representative of a signature class.
Pairing canonicalPairing(const SignatureQuad& sig, Convention conv);

/// h . (-1)^F, the parity-twisted pairing (the ~P construction).
Pairing parityTwist(const Pairing& h);

/// f = g^dagger g for an isomorphism g into some object of the class.
/// Decided by the signature criterion: h.f must be a pairing whose
/// signature is realizable in the class at the same dimensions.
bool isoPositive(const EvenMap& f, const Pairing& h, PositivityClass cls);

/// The canonical dual automorphism of V*, evaluated as the explicit
/// composite (coev^dagger (x) id) . (braid (x) id) . (id (x) coev).
EvenMap lambdaAuto(const Pairing& h);

enum class CompactnessMode { DAGGER_COMPACT, FERM_DAGGER_COMPACT };

/// Decides P* = P (dagger compact) or P* = ~P (fermionically dagger
/// compact) at fixed dimensions by pushing class representatives through
/// dualPairing and the parity twist.
bool compactness(PositivityClass cls, SuperDims dims, CompactnessMode mode);

enum class ConvDirection { SUPER_TO_GRADED, GRADED_TO_SUPER };

/// h -> h . i^{-+F}; maps SHILB-positive super pairings to positive graded
/// pairings and commutes with daggers.
Pairing convEquivalence(const Pairing& h, ConvDirection direction);

// --- exact congruence tooling ----------------------------------------------

struct HermDiagonalization {
  Matrix basis;            // columns are the new basis: basis^T M conj(basis) = diag
  std::vector<Rat> diag;   // real diagonal entries
};

/// Congruence diagonalization of a conjugate-symmetric matrix over Q(i).
HermDiagonalization diagonalizeHermitian(const Matrix& m);

/// s with s * conj(s) = r for positive rational r, when r is a norm of Q(i).
std::optional<Scalar> twoSquares(const Rat& r);

/// g with g^T A.gram conj(g) = B.gram, i.e. B is the transfer of A along g
/// (g is then a unitary (B.space, B) -> (A.space, A)). Empty when the
/// signatures differ; throws when a rational witness resists construction.
std::optional<EvenMap> solveCongruence(const Pairing& a, const Pairing& b);

}  // namespace dk
