#ifndef LINKLESS_ERROR_HPP
#define LINKLESS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace linkless {

enum class ErrorKind {
    OutOfRange,
    NotAnEdge,
    EmptySet,
    CapacityExceeded,
    InvalidModel,
    NotATriangle,
    NotDegreeThree,
    NoCertificate,
    SearchExhausted,
    CoreRejected,
    ConstructionFalsified,
    PreconditionFailed,
    TheoremViolated,
    Parse,
};

auto to_string(ErrorKind kind) -> const char *;

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI) can map it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & message)
        : std::runtime_error(message), _kind(kind)
    {
    }

    auto kind() const noexcept -> ErrorKind { return _kind; }

private:
    ErrorKind _kind;
};

/// Malformed textual input. `offset` is the byte position of the first
/// offending character, or -1 when no single byte is to blame.
class ParseError : public Error {
public:
    ParseError(const std::string & message, long offset)
        : Error(ErrorKind::Parse, message), _offset(offset)
    {
    }

    auto offset() const noexcept -> long { return _offset; }

private:
    long _offset;
};

} // namespace linkless

#endif
