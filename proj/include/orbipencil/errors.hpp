#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbipencil {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// polynomial grammar
struct SyntaxError : Error {
  std::size_t offset;
  SyntaxError(std::string msg, std::size_t off)
      : Error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};
struct UnknownVariable : SyntaxError {
  UnknownVariable(const std::string& sym, std::size_t off)
      : SyntaxError("unknown variable '" + sym + "'", off) {}
};

// polynomial domain errors
struct BothZero : Error {
  BothZero() : Error("gcd of two zero polynomials") {}
};
struct ZeroInput : Error {
  ZeroInput(const char* what) : Error(std::string("zero input to ") + what) {}
};
struct DegenerateSlice : Error {
  DegenerateSlice() : Error("all sampled lines were degenerate") {}
};

// pencil construction / analysis
struct DegreeMismatch : Error {
  using Error::Error;
};
struct NotCoprimeDegrees : Error {
  using Error::Error;
};
struct CommonFactor : Error {
  using Error::Error;
};
struct IsPerfectPower : Error {
  int generator;  // 1 = first, 2 = second
  long k;
  IsPerfectPower(int gen, long kk)
      : Error("generator " + std::to_string(gen) + " is a " + std::to_string(kk) +
              "-th power"),
        generator(gen),
        k(kk) {}
};
struct TooManyMultipleFibers : Error {
  using Error::Error;
};
struct ExhaustedRetries : Error {
  using Error::Error;
};

// group machinery
struct NotSurjective : Error {
  using Error::Error;
};
struct BadArity : Error {
  using Error::Error;
};
struct BadMultiplicity : Error {
  using Error::Error;
};
struct BadInput : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct MonodromyUsesBaseGenerators : Error {
  using Error::Error;
};

// homology
struct HypothesisNotMet : Error {
  using Error::Error;
};
struct EmptyInput : Error {
  using Error::Error;
};

// inference
struct HypothesisFailed : Error {
  std::string rule;
  std::string hypothesis;
  HypothesisFailed(std::string r, std::string h)
      : Error("rule " + r + ": hypothesis failed: " + h),
        rule(std::move(r)),
        hypothesis(std::move(h)) {}
};
struct AmbientUnsupported : Error {
  using Error::Error;
};

}  // namespace orbipencil
