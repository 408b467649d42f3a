#ifndef WEAKGEN_ERROR_HPP_
#define WEAKGEN_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace weakgen {

  enum class Errc {
    // syntax
    Syntax,
    UnknownLetter,
    BadShape,
    // validation
    HeightMismatch,
    NoAnchorMatch,
    EqualEntriesBadAnchors,
    AmbiguousSide,
    HeightTooSmall,
    NotAlternating,
    TripletNotAnchored,
    JunctionMismatch,
    KappaNotUnique,
    NotARiver,
    NotMountainRange,
    NotMountain,
    NotACanyon,
    NotIdempotent,
    NotAssociative,
    NotRegular,
    EmptySandwich,
    BadArgument,
    // resources
    CapExceeded,
    TooLarge,
    // bugs
    InternalInvariantViolation,
  };

  enum class ErrorCategory { Syntax, Validation, Resource, Internal };

  constexpr ErrorCategory category(Errc e) noexcept {
    switch (e) {
      case Errc::Syntax:
      case Errc::UnknownLetter:
      case Errc::BadShape: return ErrorCategory::Syntax;
      case Errc::CapExceeded:
      case Errc::TooLarge: return ErrorCategory::Resource;
      case Errc::InternalInvariantViolation: return ErrorCategory::Internal;
      default: return ErrorCategory::Validation;
    }
  }

  std::string_view to_string(Errc e) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(Errc code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    Errc code() const noexcept {
      return _code;
    }

   private:
    Errc _code;
  };

}  // namespace weakgen

#endif  // WEAKGEN_ERROR_HPP_
