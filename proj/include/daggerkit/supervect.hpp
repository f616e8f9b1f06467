#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "daggerkit/matrix.hpp"

namespace dk {

/// Sign-convention selector for the anti-involution data on sVect.
/// SUPER is the Koszul convention (eta = parity, chi carries the Koszul
/// sign); GRADED is the ungraded-looking convention (eta' and chi' both
/// trivial in the slot basis).
enum class Convention { SUPER, GRADED };

/// Dimensions of a super vector space. Slots 0..p-1 are even, p..p+q-1 odd.
struct SuperDims {
  std::size_t p = 0, q = 0;

  std::size_t total() const { return p + q; }
  bool odd(std::size_t slot) const { return slot >= p; }
  int deg(std::size_t slot) const { return slot >= p ? 1 : 0; }

  friend bool operator==(const SuperDims&, const SuperDims&) = default;
};

SuperDims tensor(SuperDims a, SuperDims b);

/// Slots of a tensor product in graded order: pairs (i, j) enumerated
/// lexicographically and stably re-sorted with even total degree first.
std::vector<std::pair<std::size_t, std::size_t>> tensorSlotPairs(SuperDims a, SuperDims b);

/// Permutation matrix sending raw Kronecker slot order to graded order.
Matrix gradedPermutation(SuperDims a, SuperDims b);

/// Grading-preserving linear map as an exact block matrix (cod rows x dom
/// columns). Construction rejects entries between slots of different degree.
struct EvenMap {
  SuperDims dom, cod;
  Matrix m;

  EvenMap(SuperDims dom_, SuperDims cod_, Matrix m_);
  static EvenMap identity(SuperDims d) { return EvenMap(d, d, Matrix::identity(d.total())); }
  static EvenMap zero(SuperDims dom_, SuperDims cod_) {
    return EvenMap(dom_, cod_, Matrix::zero(cod_.total(), dom_.total()));
  }

  EvenMap inverse() const { return EvenMap(cod, dom, m.inverse()); }
  bool isInvertible() const { return m.isInvertible(); }

  friend bool operator==(const EvenMap& a, const EvenMap& b) {
    return a.dom == b.dom && a.cod == b.cod && a.m == b.m;
  }
};

/// Composition g . f (f acts first).
EvenMap compose(const EvenMap& g, const EvenMap& f);

/// Tensor product of even maps in graded slot order; no Koszul sign (the
/// signs live in the braiding).
EvenMap tensor(const EvenMap& a, const EvenMap& b);

/// Koszul braiding V (x) W -> W (x) V.
EvenMap braid(SuperDims v, SuperDims w);

/// Sign-free relabeling permutation (a (x) b) (x) c -> a (x) (b (x) c).
EvenMap assoc(SuperDims a, SuperDims b, SuperDims c);

/// Transpose: the dual of an even map on standard duals.
EvenMap dualizeMap(const EvenMap& t);

/// Entrywise complex conjugate.
EvenMap conjugateMap(const EvenMap& t);

/// d on morphisms for d(V) = conj(V)^*: the conjugate transpose.
EvenMap antiInv(const EvenMap& t);

enum class StructureKind { Eta, Chi, Parity, IF, EvStd, CoevStd };

/// Exact matrix of the requested structure morphism in the slot basis:
///   Eta     : V -> d^2 V        (parity for SUPER, identity for GRADED)
///   Chi     : dV (x) dW -> d(V (x) W), requires w
///   Parity  : diag(+1 even, -1 odd)
///   IF      : diag(1 even, i odd)
///   EvStd   : V* (x) V -> 1     (functional evaluation; V* shares V's dims)
///   CoevStd : 1 -> V (x) V*
EvenMap structureIso(StructureKind kind, SuperDims v, std::optional<SuperDims> w,
                     Convention conv);

}  // namespace dk
