#pragma once

#include <stdexcept>
#include <string>

namespace headmouse {

// Base class for every error this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accessory A (the head sensor) is not attached to its port.
struct AccessoryAbsent : Error {
    AccessoryAbsent() : Error("accessory A absent") {}
    explicit AccessoryAbsent(const std::string& msg) : Error(msg) {}
};

// A register burst had the wrong number of bytes.
struct WrongLength : Error {
    explicit WrongLength(const std::string& msg) : Error(msg) {}
};

// Accelerometer magnitude too small to observe gravity.
struct FreefallAmbiguous : Error {
    FreefallAmbiguous() : Error("accel magnitude too small to resolve tilt") {}
};

// A timestamp decreased between consecutive steps.
struct TimeWentBackwards : Error {
    explicit TimeWentBackwards(const std::string& msg) : Error(msg) {}
};

struct NotInitialized : Error {
    NotInitialized() : Error("controller not initialized") {}
};

// Malformed trace or config text.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct NonMonotonicTime : Error {
    explicit NonMonotonicTime(const std::string& msg) : Error(msg) {}
};

// A value fell outside its declared numeric range.
struct RangeError : Error {
    explicit RangeError(const std::string& msg) : Error(msg) {}
};

// Jitter window selects fewer than two path samples.
struct WindowEmpty : Error {
    explicit WindowEmpty(const std::string& msg) : Error(msg) {}
};

// Bad key or value in a config file.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// File could not be opened, read, or written.
struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// Controller error during replay, annotated with the offending row.
struct ReplayError : Error {
    ReplayError(std::size_t row, const std::string& msg)
        : Error("row " + std::to_string(row) + ": " + msg), row_index(row) {}
    std::size_t row_index;
};

}  // namespace headmouse
