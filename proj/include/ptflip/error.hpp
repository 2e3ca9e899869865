#pragma once

#include <stdexcept>
#include <string>

namespace ptflip {

enum class ErrorCode {
    InvalidInput,      // malformed or degenerate input (bad JSON, collinear points, ...)
    NotFlippable,      // hull edge or otherwise not a flip candidate
    NotExchangeable,   // merged face is not a two-bitangent pseudo-quadrilateral
    NotDeletable,      // merged face is not a pseudo-triangle
    NotInsertable,     // candidate diagonal does not split a face into pseudo-triangles
    LabelInUse,        // insertion label is not in the free pool
    ReplayError,       // trace replay hit an invalid step
    CapExceeded,       // oracle state-space or size cap exceeded
    PipelineError,     // a pipeline invariant failed (would falsify a lemma)
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidInput: return "invalid_input";
        case ErrorCode::NotFlippable: return "not_flippable";
        case ErrorCode::NotExchangeable: return "not_exchangeable";
        case ErrorCode::NotDeletable: return "not_deletable";
        case ErrorCode::NotInsertable: return "not_insertable";
        case ErrorCode::LabelInUse: return "label_in_use";
        case ErrorCode::ReplayError: return "replay_error";
        case ErrorCode::CapExceeded: return "cap_exceeded";
        case ErrorCode::PipelineError: return "pipeline_error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace ptflip
