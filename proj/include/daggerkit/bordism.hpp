#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "daggerkit/errors.hpp"

namespace dk {

enum class Flavor { SPIN, ORIENTED };

enum class Slot : std::uint8_t { PT, DUAL_PT };

/// Object word of the 1-d bordism category; tensor is concatenation and the
/// monoidal unit is the empty word.
using BordObject = std::vector<Slot>;

BordObject parseObject(const std::string& word);  // 'p'/'d' letters
std::string objectWord(const BordObject& obj);

/// Boundary slot of a bordism: src or tgt side plus position.
struct Endpoint {
  bool tgt = false;
  std::size_t index = 0;

  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct Strand {
  Endpoint a, b;  // a < b in endpoint order
  bool flip = false;

  friend auto operator<=>(const Strand&, const Strand&) = default;
};

/// Normal form of a 1-d bordism: an oriented perfect matching on the
/// boundary slots with Z/2 flip labels, plus labelled circles. Structural
/// equality is equality in the category.
struct BordMorphism {
  Flavor flavor = Flavor::SPIN;
  BordObject src, tgt;
  std::vector<Strand> strands;  // sorted
  std::uint64_t nPeriodic = 0, nAntiperiodic = 0;

  friend bool operator==(const BordMorphism&, const BordMorphism&) = default;
};

enum class GeneratorKind { ID, THETA, EV, COEV };

/// ID/THETA on a point, EV : [d p] -> [], COEV : [] -> [p d].
BordMorphism generator(GeneratorKind kind, Flavor flavor);

BordMorphism identityBord(const BordObject& obj, Flavor flavor);

/// Crossing [a b] -> [b a]; carries no data in a symmetric category.
BordMorphism braidNF(const BordObject& a, const BordObject& b, Flavor flavor);

/// Gluing: strand paths concatenate with flips added mod 2; closed loops
/// become circles (flip sum 1 -> antiperiodic, 0 -> periodic).
BordMorphism compose(const BordMorphism& g, const BordMorphism& f);

BordMorphism tensorBord(const BordMorphism& f, const BordMorphism& g);

/// Swap src and tgt; turn-back strands gain a flip in the SPIN flavor.
BordMorphism daggerBord(const BordMorphism& f);

/// Tensor of THETA over all slots of Y: the B Z/2-action on objects.
BordMorphism flipAction(const BordObject& y, Flavor flavor);

/// Nested (rainbow) evaluation dual(Y) ++ Y -> [] and its coevaluation.
BordMorphism wordEv(const BordObject& y, Flavor flavor);
BordMorphism wordCoev(const BordObject& y, Flavor flavor);
BordObject dualObject(const BordObject& y);

/// True when the matching, polarity and flavor invariants hold.
bool wellFormed(const BordMorphism& m);

/// One elementary layer of a sliced normal form, acting on `word`:
///   SWAP_ADJ  : crossing of word[pos] and word[pos+1]
///   EV_AT     : cap consuming the [d p] pair at pos, pos+1 (flip on the p leg)
///   COEV_AT   : cup inserting [p d] at pos (flip on the p leg)
///   THETA_AT  : spin flip of the strand through word[pos]
struct Factor {
  enum class Kind { SWAP_ADJ, EV_AT, COEV_AT, THETA_AT };
  Kind kind;
  BordObject word;  // source word the layer acts on
  std::size_t pos;
  bool flip = false;
};

BordMorphism factorMorphism(const Factor& f, Flavor flavor);

/// Slices the matching of m (circles excluded) into layers whose composite
/// equals m with the circles removed: caps first, then through-strand
/// flips, then cups, with crossing layers in between.
std::vector<Factor> factorize(const BordMorphism& m);

}  // namespace dk
