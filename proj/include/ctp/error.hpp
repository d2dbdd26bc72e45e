#ifndef CTP_ERROR_HPP
#define CTP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ctp {

/// Error categories surfaced by the library. Kept coarse on purpose: callers
/// branch on the code, humans read the message.
enum class ErrorCode {
    UnknownEdge,
    UnknownVertex,
    NotASeparator,
    NotBiconnected,
    InfeasibleRoadMap,
    IllegalMove,
    StrategyFault,
    NotCompleted,
    EmbeddingRequired,
    MissingAnnotations,
    TooManyConfigurations,
    TooLarge,
    DimensionMismatch,
    InvalidJ,
    NonConvergence,
    TooSmall,
    NotUnbalanced,
    IoError,
    UsageError,
};

inline const char* errorCodeName(ErrorCode c) {
    switch (c) {
        case ErrorCode::UnknownEdge: return "UnknownEdge";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::NotASeparator: return "NotASeparator";
        case ErrorCode::NotBiconnected: return "NotBiconnected";
        case ErrorCode::InfeasibleRoadMap: return "InfeasibleRoadMap";
        case ErrorCode::IllegalMove: return "IllegalMove";
        case ErrorCode::StrategyFault: return "StrategyFault";
        case ErrorCode::NotCompleted: return "NotCompleted";
        case ErrorCode::EmbeddingRequired: return "EmbeddingRequired";
        case ErrorCode::MissingAnnotations: return "MissingAnnotations";
        case ErrorCode::TooManyConfigurations: return "TooManyConfigurations";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidJ: return "InvalidJ";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::NotUnbalanced: return "NotUnbalanced";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::UsageError: return "UsageError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(errorCodeName(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace ctp

#endif  // CTP_ERROR_HPP
