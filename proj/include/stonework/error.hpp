#ifndef STONEWORK_ERROR_HPP_
#define STONEWORK_ERROR_HPP_

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace stonework {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Domain errors. Witness-carrying errors keep the offending indices so a
  // caller can replay them against the operation that failed.

  class AssociativityViolation : public Error {
   public:
    AssociativityViolation(std::size_t x, std::size_t y, std::size_t z);
    std::array<std::size_t, 3> witness;
  };

  class IdentityViolation : public Error {
   public:
    explicit IdentityViolation(std::size_t x);
    std::size_t element;
  };

  class ResourceLimit : public Error {
   public:
    ResourceLimit(std::string const& what_, long double requested,
                  std::size_t bound);
    long double requested;
    std::size_t bound;
  };

  class DimensionMismatch : public Error {
   public:
    using Error::Error;
  };

  class CarrierMismatch : public Error {
   public:
    using Error::Error;
  };

  class ChainNotMonotone : public Error {
   public:
    explicit ChainNotMonotone(std::size_t level);
    std::size_t level;
  };

  class NotAnEquivalence : public Error {
   public:
    using Error::Error;
  };

  class InvalidMetric : public Error {
   public:
    using Error::Error;
  };

  class PreconditionUnverified : public Error {
   public:
    using Error::Error;
  };

  class NotLipschitz : public Error {
   public:
    NotLipschitz(std::size_t x, std::size_t y);
    std::size_t x, y;
  };

  class NoWitness : public Error {
   public:
    using Error::Error;
  };

  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  //! Malformed input document; line and column are 1-based.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column);
    std::size_t line, column;
  };

  class ConfigError : public Error {
   public:
    using Error::Error;
  };

}  // namespace stonework

#endif  // STONEWORK_ERROR_HPP_
