#pragma once

#include <stdexcept>
#include <string>

namespace covers {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// perm / group
struct DegreeMismatch : Error { using Error::Error; };
struct NotTransitive : Error { using Error::Error; };
struct OrderExceedsBound : Error { using Error::Error; };

// census
struct Infeasible : Error { using Error::Error; };
struct VacuousSpec : Error { using Error::Error; };
struct BoundExceeded : Error { using Error::Error; };

// ffield
struct FieldMismatch : Error { using Error::Error; };

// ramify
struct BadLambda : Error { using Error::Error; };

// hurwitz
struct ProductNotOne : Error { using Error::Error; };
struct MarkedNotInverse : Error { using Error::Error; };
struct NotJointlyTransitive : Error { using Error::Error; };
struct CharacteristicMismatch : Error { using Error::Error; };
struct WildFlavor : Error { using Error::Error; };
struct GenericityPreconditionViolated : Error { using Error::Error; };

// frobenius
struct InseparableMap : Error { using Error::Error; };
struct NoSurvivingCandidate : Error { using Error::Error; };

// claims
struct UnknownClaim : Error { using Error::Error; };

// text formats
struct ParseError : Error { using Error::Error; };

} // namespace covers
