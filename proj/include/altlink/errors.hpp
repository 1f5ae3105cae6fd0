#pragma once

#include <stdexcept>
#include <string>

namespace altlink {

// Base class for every error the library raises on bad input or a failed
// internal invariant. CLI maps these to exit code 2 (input) or a nonzero
// status; tests catch the concrete types.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- input / parsing ---
struct SyntaxError : Error { using Error::Error; };
struct EmptyDiagram : Error { using Error::Error; };
struct ArcMultiplicityError : Error { using Error::Error; };
struct DisconnectedDiagram : Error { using Error::Error; };
struct OrientationInconsistency : Error { using Error::Error; };
struct EmbeddingError : Error { using Error::Error; };
struct ColoringError : Error { using Error::Error; };
struct UnknownEdge : Error { using Error::Error; };

// --- algebra ---
struct NotSymmetrizable : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct GradingNotInteger : Error { using Error::Error; };

// --- analysis ---
struct NotAlternative : Error { using Error::Error; };
struct InconsistentCensus : Error { using Error::Error; };
struct DegenerateMatrix : Error { using Error::Error; };
struct ParityError : Error { using Error::Error; };

// --- io ---
struct IOError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };

// A broken internal invariant; indicates a bug, not bad input.
struct InternalError : Error { using Error::Error; };

} // namespace altlink
