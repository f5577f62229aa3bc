#pragma once

#include <stdexcept>
#include <string>

namespace medico {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input. line/byte are 1-based; 0 means "not applicable".
struct ParseError : Error {
    ParseError(std::string msg, std::size_t line = 0, std::size_t byte = 0)
        : Error(format(msg, line, byte)), line(line), byte(byte) {}
    std::size_t line;
    std::size_t byte;

private:
    static std::string format(const std::string& msg, std::size_t line, std::size_t byte) {
        std::string s = msg;
        if (line) s += " (line " + std::to_string(line) + ")";
        if (byte) s += " (byte " + std::to_string(byte) + ")";
        return s;
    }
};

struct OrderTooLarge : ParseError {
    using ParseError::ParseError;
};

struct DifferentComponents : Error {
    using Error::Error;
};
struct Disconnected : Error {
    using Error::Error;
};
struct NotModular : Error {
    using Error::Error;
};
struct NotAnEdge : Error {
    using Error::Error;
};
struct UnknownPattern : Error {
    using Error::Error;
};
struct BoundExceeded : Error {
    using Error::Error;
};
struct NotC6 : Error {
    using Error::Error;
};
struct InvalidSpec : Error {
    using Error::Error;
};
struct ResampleCapExceeded : Error {
    using Error::Error;
};
// An enumeration was cut off by a cap and the caller needs the full list.
struct Incomplete : Error {
    using Error::Error;
};

}  // namespace medico
