#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ineq {

enum class Errc {
    EmptySet,
    DisjointnessViolated,
    ContextMismatch,
    DimensionMismatch,
    OutOfRange,
    UnknownVariable,
    Syntax,
    InvalidPmf,
    InvalidGroup,
    NotInRegion,
    NotAchievable,
    Unbalanced,
    InvalidArgument,
    Internal,
};

const char* errc_name(Errc code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& expected);

    // Byte offset into the parsed text.
    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

} // namespace ineq
