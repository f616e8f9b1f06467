#pragma once

#include <stdexcept>
#include <string>

namespace dk {

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero in Q(i)") {}
};

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what)
      : std::runtime_error("dimension mismatch: " + what) {}
};

struct ConventionMismatch : std::runtime_error {
  explicit ConventionMismatch(const std::string& what)
      : std::runtime_error("convention mismatch: " + what) {}
};

struct NotInvertible : std::runtime_error {
  explicit NotInvertible(const std::string& what)
      : std::runtime_error("matrix not invertible: " + what) {}
};

struct NotAPairing : std::runtime_error {
  explicit NotAPairing(const std::string& what)
      : std::runtime_error("not a Hermitian pairing: " + what) {}
};

struct MissingSecondSpace : std::runtime_error {
  MissingSecondSpace() : std::runtime_error("chi requires a second space") {}
};

struct ThetaNotInOriented : std::runtime_error {
  ThetaNotInOriented()
      : std::runtime_error("theta generator does not exist in the oriented flavor") {}
};

struct ObjectMismatch : std::runtime_error {
  explicit ObjectMismatch(const std::string& what)
      : std::runtime_error("object mismatch: " + what) {}
};

struct NotUnitaryInvolution : std::runtime_error {
  explicit NotUnitaryInvolution(const std::string& what)
      : std::runtime_error("theta is not a unitary involution: " + what) {}
};

struct NotAValidFunctor : std::runtime_error {
  explicit NotAValidFunctor(const std::string& what)
      : std::runtime_error("functor spec failed validation: " + what) {}
};

struct UnknownSuite : std::runtime_error {
  explicit UnknownSuite(const std::string& name)
      : std::runtime_error("unknown suite: " + name) {}
};

struct SyntaxError : std::runtime_error {
  std::size_t line, column;
  SyntaxError(const std::string& what, std::size_t line_, std::size_t col)
      : std::runtime_error("syntax error at " + std::to_string(line_) + ":" +
                           std::to_string(col) + ": " + what),
        line(line_),
        column(col) {}
};

}  // namespace dk
