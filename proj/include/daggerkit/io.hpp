#pragma once

#include <optional>
#include <string>

#include "daggerkit/tqft.hpp"

namespace dk {

/// File formats (JSON):
///   pairing:  {"dims": [p, q], "convention": "super"|"graded",
///              "entries": [row-major scalar strings]}
///   matrix:   {"dims_dom": [p, q], "dims_cod": [p, q],
///              "entries": [row-major scalar strings]}
///   functor:  {"flavor": "spin"|"oriented", "target": "shilb"|"sherm",
///              "statePairing": <pairing>, "theta": <matrix>,
///              "ev": <matrix> | "solve"}

std::string pairingToJson(const Pairing& h);
Pairing pairingFromJson(const std::string& text);

std::string mapToJson(const EvenMap& m);
EvenMap mapFromJson(const std::string& text);

/// "solve" for ev resolves through solveDuality; throws on NONE.
FunctorSpec functorSpecFromJson(const std::string& text);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& text);

}  // namespace dk
