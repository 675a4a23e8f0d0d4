#pragma once

#include <stdexcept>
#include <string>

namespace loccat {

  // Base of every error thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed call, e.g. comparing words that are not parallel.
  class UsageError : public Error {
   public:
    using Error::Error;
  };

  // An input file could not be read or decoded.
  class ParseError : public Error {
   public:
    explicit ParseError(std::string const& msg, std::string position = {})
        : Error(position.empty() ? msg : position + ": " + msg),
          position_(std::move(position)) {}

    std::string const& position() const noexcept {
      return position_;
    }

   private:
    std::string position_;
  };

  // A hypothesis of an operation does not hold. `hypothesis` names it,
  // `witness` is the offending item in human readable form.
  class PreconditionError : public Error {
   public:
    PreconditionError(std::string hypothesis, std::string witness)
        : Error(hypothesis + " violated: " + witness),
          hypothesis_(std::move(hypothesis)),
          witness_(std::move(witness)) {}

    std::string const& hypothesis() const noexcept {
      return hypothesis_;
    }
    std::string const& witness() const noexcept {
      return witness_;
    }

   private:
    std::string hypothesis_;
    std::string witness_;
  };

  // A resource limit was exhausted before the question could be decided.
  class UndecidedError : public Error {
   public:
    UndecidedError(std::string const& what, std::string bound)
        : Error(what + " (bound exhausted: " + bound + ")"),
          bound_(std::move(bound)) {}

    std::string const& bound() const noexcept {
      return bound_;
    }

   private:
    std::string bound_;
  };

  // A proven statement failed to verify on a concrete instance. This always
  // indicates a defect in this library, never in the input.
  class TheoremViolation : public Error {
   public:
    using Error::Error;
  };

}  // namespace loccat
