#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace planar {

// Index types. All structural indices are dense 0-based ints; -1 means "none".
using DartId = int;
using VertexId = int;
using EdgeId = int;
using FaceId = int;

inline constexpr int kNone = -1;

enum class ErrorCode {
    NonInvolutiveOpposite,
    BrokenRotation,
    Disconnected,
    NonPlanarEuler,
    BaseNotOnBoundary,
    OuterFaceQueried,
    NotSpanning,
    NotAcyclic,
    NotATree,
    KTooSmall,
    LevelMismatch,
    IllegalMove,
    TooLargeForExactSearch,
    MapMismatch,
    InvalidPair,
    BadInput,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NonInvolutiveOpposite: return "NonInvolutiveOpposite";
        case ErrorCode::BrokenRotation: return "BrokenRotation";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::NonPlanarEuler: return "NonPlanarEuler";
        case ErrorCode::BaseNotOnBoundary: return "BaseNotOnBoundary";
        case ErrorCode::OuterFaceQueried: return "OuterFaceQueried";
        case ErrorCode::NotSpanning: return "NotSpanning";
        case ErrorCode::NotAcyclic: return "NotAcyclic";
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::KTooSmall: return "KTooSmall";
        case ErrorCode::LevelMismatch: return "LevelMismatch";
        case ErrorCode::IllegalMove: return "IllegalMove";
        case ErrorCode::TooLargeForExactSearch: return "TooLargeForExactSearch";
        case ErrorCode::MapMismatch: return "MapMismatch";
        case ErrorCode::InvalidPair: return "InvalidPair";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace planar
