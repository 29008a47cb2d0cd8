#pragma once

#include <stdexcept>
#include <string>

namespace nerveforge {

// Base for every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionError : Error { using Error::Error; };
struct DegeneracyError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct IOError : Error { using Error::Error; };
struct PartitionError : Error { using Error::Error; };
struct BijectionError : Error { using Error::Error; };
struct NotATreeError : Error { using Error::Error; };
struct NotCaterpillarError : Error { using Error::Error; };
struct NotConvexPositionError : Error { using Error::Error; };
struct NotAlternatingError : Error { using Error::Error; };
struct NotGeneralPositionError : Error { using Error::Error; };
struct MissingTraceError : Error { using Error::Error; };
struct SupersetMismatchError : Error { using Error::Error; };
struct SeparationFailureError : Error { using Error::Error; };
struct TooFewPointsError : Error { using Error::Error; };
struct WrongCountError : Error { using Error::Error; };
struct InfeasibleSizeError : Error { using Error::Error; };
struct BudgetExceededError : Error { using Error::Error; };
struct NotFoundError : Error { using Error::Error; };
struct SubsetNotFoundError : Error {
    SubsetNotFoundError(const std::string& what, int attempted)
        : Error(what), attempted_size(attempted) {}
    int attempted_size;
};
struct RetriesExhaustedError : Error { using Error::Error; };
struct UnknownConfigError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
// A construction produced something its own verifier rejects. Always a bug.
struct VerificationError : Error { using Error::Error; };

}  // namespace nerveforge
