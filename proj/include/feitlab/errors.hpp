#ifndef FEITLAB_ERRORS_HPP
#define FEITLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace feitlab {

// Base class for everything this library throws on contract violations.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeMismatch : Error { using Error::Error; };
struct ClosureExceedsCap : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct NotSubgroup : Error { using Error::Error; };
struct NotNormal : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct NotRational : Error { using Error::Error; };
struct LiftFailure : Error { using Error::Error; };
struct GroupMismatch : Error { using Error::Error; };
struct NotACharacter : Error { using Error::Error; };
struct NotSolvable : Error { using Error::Error; };
struct NotNormalizing : Error { using Error::Error; };
struct DecompositionFailure : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct DuplicateName : Error { using Error::Error; };

} // namespace feitlab

#endif
