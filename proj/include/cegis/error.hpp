#pragma once

#include <stdexcept>
#include <string>

namespace cegis {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An arithmetic result does not fit in the host natural type.
struct InputTooLarge : Error {
  using Error::Error;
};

/// An index lies beyond a family's declared cap.
struct OutOfRange : Error {
  using Error::Error;
};

struct InvalidRectangle : Error {
  using Error::Error;
};

/// A language violates the defining constraints of its family.
struct InvalidFamilyMember : Error {
  using Error::Error;
};

struct EmptyLanguage : Error {
  using Error::Error;
};

/// A counterexample strategy cannot honour its selection constraint.
struct StrategyInfeasible : Error {
  using Error::Error;
};

/// A generalizer produced a program the family cannot interpret.
struct EngineFault : Error {
  using Error::Error;
};

/// A verifier answer contradicts facts the caller already holds.
struct InconsistentOracle : Error {
  using Error::Error;
};

struct ProbeOverflow : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace cegis
