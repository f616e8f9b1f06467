#pragma once

#include <string>

#include "daggerkit/bordism.hpp"

namespace dk {

/// Bordism term grammar:
///   term := atom | term "." term   (composition, right acts first)
///         | term "@" term          (tensor)
///         | term "!"               (dagger)
///   atom := "id" "(" obj ")" | "theta" | "ev" | "coev"
///         | "swap" "(" obj "," obj ")" | "(" term ")"
///   obj  := "" | ("p"|"d")+
/// Precedence: "!" binds tightest, then "@", then ".".
BordMorphism parseBordTerm(const std::string& text, Flavor flavor = Flavor::SPIN);

/// Canonical term whose normal form equals m; parseBordTerm round-trips it.
std::string printTerm(const BordMorphism& m);

}  // namespace dk
