#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vops {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A word letter lies outside [0, rank).
struct InvalidGeneratorError : Error {
  using Error::Error;
};

// Two objects of different ranks were combined.
struct RankMismatchError : Error {
  using Error::Error;
};

// An operation that requires a connected premaniplex got a disconnected one.
struct DisconnectedError : Error {
  using Error::Error;
};

// A precondition on the mathematical input failed (bad quotient group,
// incompatible base flag, violated hypothesis of an analysis routine, ...).
struct DomainError : Error {
  using Error::Error;
};

// Coset enumeration hit its cap before completing.  `partial` is the number
// of cosets alive when the cap was reached.
struct CappedError : Error {
  std::size_t partial;
  CappedError(const std::string& what, std::size_t partial_cosets)
      : Error(what), partial(partial_cosets) {}
};

// File parsing / serialization problems.
struct IoError : Error {
  using Error::Error;
};

}  // namespace vops
