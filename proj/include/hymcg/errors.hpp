#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hymcg {

/// Base class for all errors raised by the library. Everything thrown on
/// purpose derives from this; anything else escaping is a bug.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidTopologicalType : public Error {
public:
  using Error::Error;
};

class FixedLocusMismatch : public Error {
public:
  using Error::Error;
};

class PairingViolation : public Error {
public:
  using Error::Error;
};

class InvalidGenus : public Error {
public:
  using Error::Error;
};

class RangeError : public Error {
public:
  using Error::Error;
};

class InvalidModulus : public Error {
public:
  using Error::Error;
};

class UnsupportedModulus : public Error {
public:
  using Error::Error;
};

class NoEssentialCurves : public Error {
public:
  using Error::Error;
};

class ComplexTooLarge : public Error {
public:
  using Error::Error;
};

class InvalidCurve : public Error {
public:
  using Error::Error;
};

/// Malformed word/family literals and JSON payloads.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Breadth-first closure ran over its element cap. Carries how far it got.
class ClosureTooLarge : public Error {
public:
  ClosureTooLarge(std::uint64_t partial_count, std::uint64_t cap)
      : Error("group closure exceeded cap of " + std::to_string(cap) +
              " elements (reached " + std::to_string(partial_count) + ")"),
        partialCount(partial_count),
        cap(cap) {}

  std::uint64_t partialCount;
  std::uint64_t cap;
};

}  // namespace hymcg
