#pragma once

#include <stdexcept>
#include <string>

namespace gs {

// Base of every error raised by the engine.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operands of incompatible shape: different truncation, category, ring or
// matrix dimension.
class StructuralError : public Error {
public:
  using Error::Error;
};

class NotAUnit : public Error {
public:
  using Error::Error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

// An exact ring was asked for a transcendental value (exp(2) over Q, ...).
class InexactScalar : public DomainError {
public:
  using DomainError::DomainError;
};

class ValuationError : public DomainError {
public:
  using DomainError::DomainError;
};

class InfiniteDecomposition : public Error {
public:
  using Error::Error;
};

class ClosureExplosion : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace gs
