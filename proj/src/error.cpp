#include "ineq/error.hpp"

namespace ineq {

const char* errc_name(Errc code)
{
    switch (code) {
    case Errc::EmptySet: return "EmptySet";
    case Errc::DisjointnessViolated: return "DisjointnessViolated";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::Syntax: return "SyntaxError";
    case Errc::InvalidPmf: return "InvalidPmf";
    case Errc::InvalidGroup: return "InvalidGroup";
    case Errc::NotInRegion: return "NotInRegion";
    case Errc::NotAchievable: return "NotAchievable";
    case Errc::Unbalanced: return "Unbalanced";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code)
{
}

SyntaxError::SyntaxError(std::size_t position, const std::string& expected)
    : Error(Errc::Syntax, "at offset " + std::to_string(position) + ": expected " + expected),
      position_(position), expected_(expected)
{
}

} // namespace ineq
