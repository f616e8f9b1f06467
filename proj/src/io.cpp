#include "daggerkit/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace dk {

namespace {

using nlohmann::json;

json matrixEntries(const Matrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(to_string(m.at(i, j)));
  return entries;
}

Matrix entriesToMatrix(const json& entries, std::size_t rows, std::size_t cols) {
  if (entries.size() != rows * cols)
    throw DimensionMismatch("entry count does not match dims");
  Matrix m(rows, cols);
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = parseScalar(entries[k++].get<std::string>());
  return m;
}

SuperDims dimsFromJson(const json& j) {
  return SuperDims{j.at(0).get<std::size_t>(), j.at(1).get<std::size_t>()};
}

Convention convFromString(const std::string& s) {
  if (s == "super") return Convention::SUPER;
  if (s == "graded") return Convention::GRADED;
  throw ConventionMismatch("expected \"super\" or \"graded\", got \"" + s + "\"");
}

}  // namespace

std::string pairingToJson(const Pairing& h) {
  json j;
  j["dims"] = {h.space.p, h.space.q};
  j["convention"] = h.conv == Convention::SUPER ? "super" : "graded";
  j["entries"] = matrixEntries(h.gram);
  return j.dump(2);
}

Pairing pairingFromJson(const std::string& text) {
  json j = json::parse(text);
  SuperDims d = dimsFromJson(j.at("dims"));
  Convention conv = convFromString(j.at("convention").get<std::string>());
  return Pairing(d, entriesToMatrix(j.at("entries"), d.total(), d.total()), conv);
}

std::string mapToJson(const EvenMap& m) {
  json j;
  j["dims_dom"] = {m.dom.p, m.dom.q};
  j["dims_cod"] = {m.cod.p, m.cod.q};
  j["entries"] = matrixEntries(m.m);
  return j.dump(2);
}

EvenMap mapFromJson(const std::string& text) {
  json j = json::parse(text);
  SuperDims dom = dimsFromJson(j.at("dims_dom"));
  SuperDims cod = dimsFromJson(j.at("dims_cod"));
  return EvenMap(dom, cod, entriesToMatrix(j.at("entries"), cod.total(), dom.total()));
}

FunctorSpec functorSpecFromJson(const std::string& text) {
  json j = json::parse(text);
  std::string flavorName = j.at("flavor").get<std::string>();
  if (flavorName != "spin" && flavorName != "oriented")
    throw ObjectMismatch("flavor must be \"spin\" or \"oriented\"");
  Flavor flavor = flavorName == "spin" ? Flavor::SPIN : Flavor::ORIENTED;
  std::string targetName = j.at("target").get<std::string>();
  PositivityClass target;
  if (targetName == "shilb")
    target = PositivityClass::SHILB;
  else if (targetName == "sherm")
    target = PositivityClass::SHERM;
  else
    throw ObjectMismatch("target must be \"shilb\" or \"sherm\"");
  Pairing h = pairingFromJson(j.at("statePairing").dump());
  EvenMap theta = mapFromJson(j.at("theta").dump());
  if (j.at("ev").is_string() && j.at("ev").get<std::string>() == "solve") {
    auto ev = solveDuality(h, theta, flavor);
    if (!ev) throw NotAValidFunctor("solveDuality found no evaluation for this spec");
    return FunctorSpec{flavor, target, h, theta, *ev};
  }
  return FunctorSpec{flavor, target, h, theta, mapFromJson(j.at("ev").dump())};
}

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace dk
