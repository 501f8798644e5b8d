#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symshift {

enum class ErrorCode {
    EmptyWord,
    AlphabetMismatch,
    BadLength,
    BadAlphabet,
    Unlabeled,
    BadGraph,
    OrderTooSmall,
    EmptyShift,
    OverlapTooShort,
    NotInDomain,
    NotASelfmap,
    DensityUnknown,
    RuleConflict,
    RuleIncomplete,
    Parse,
    LimitExceeded,
};

/// Stable identifier used in diagnostics and structured output (e.g. "E_EMPTY_WORD").
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code), message_(message) {}

    ErrorCode code() const noexcept { return code_; }
    /// The message without the code prefix.
    const std::string &message() const noexcept { return message_; }

private:
    ErrorCode code_;
    std::string message_;
};

} // namespace symshift
