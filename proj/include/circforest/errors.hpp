// errors.hpp — exception taxonomy shared by all circforest components.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace circforest {

// Base for all domain errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- model construction ---
struct LoopInBase : Error {
  using Error::Error;
};
struct FiberCountMismatch : Error {
  using Error::Error;
};
struct NonIncreasingJumps : Error {
  using Error::Error;
};
struct DisconnectedBase : Error {
  using Error::Error;
};
struct JumpTooLargeForN : Error {
  using Error::Error;
};
struct UnknownFamily : Error {
  using Error::Error;
};
struct BadArity : Error {
  using Error::Error;
};

// --- exact algebra ---
struct NonIntegerCoefficient : Error {
  using Error::Error;
};
struct ZeroPolynomial : Error {
  using Error::Error;
};

// --- arithmetic structure ---
struct FactorizationTimeout : Error {
  using Error::Error;
};
// A falsified count identity: aborts loudly, never silently ignored.
struct StructureViolation : Error {
  using Error::Error;
};

// --- numerics ---
struct ConvergenceFailure : Error {
  using Error::Error;
};
struct UnitCircleRoot : Error {
  using Error::Error;
};
struct QuadratureNonconvergence : Error {
  using Error::Error;
};
struct PrecisionInsufficient : Error {
  using Error::Error;
};

// --- family text ---
struct SyntaxError : Error {
  SyntaxError(const std::string& msg, std::size_t pos, std::vector<std::string> exp)
      : Error(msg), position(pos), expected(std::move(exp)) {}
  std::size_t position;                // byte offset into the source text
  std::vector<std::string> expected;   // token spellings acceptable here
};
struct SemanticError : Error {
  SemanticError(const std::string& msg, std::size_t pos) : Error(msg), position(pos) {}
  std::size_t position;
};

}  // namespace circforest
