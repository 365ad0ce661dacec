#ifndef QDL_ERRORS_HPP
#define QDL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qdl {

// Every failure mode callers are expected to handle gets its own type so
// tests can match on it.  All of them are user/data errors except
// InternalError, which marks a broken invariant inside the library.

struct QdlError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadSum : QdlError { using QdlError::QdlError; };
struct ExceptionalPattern : QdlError { using QdlError::QdlError; };
struct BadMultiplicity : QdlError { using QdlError::QdlError; };
struct Reducible : QdlError { using QdlError::QdlError; };
struct AbelianInput : QdlError { using QdlError::QdlError; };
struct NotInCatalog : QdlError { using QdlError::QdlError; };
struct TieLengths : QdlError { using QdlError::QdlError; };
struct MoveUndefined : QdlError { using QdlError::QdlError; };
struct WinOverflow : QdlError { using QdlError::QdlError; };
struct InsufficientSteps : QdlError { using QdlError::QdlError; };
struct ParityAmbiguous : QdlError { using QdlError::QdlError; };
struct RankMismatch : QdlError { using QdlError::QdlError; };
struct PathNotOnSkeleton : QdlError { using QdlError::QdlError; };
struct Singular : QdlError { using QdlError::QdlError; };
struct InsufficientCheckpoints : QdlError { using QdlError::QdlError; };
struct StartOnOrbitOfDiscontinuity : QdlError { using QdlError::QdlError; };
struct InternalError : QdlError { using QdlError::QdlError; };

} // namespace qdl

#endif
