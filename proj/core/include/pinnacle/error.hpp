#pragma once

#include <stdexcept>
#include <string>

namespace pinnacle {

// Base class for every error the library throws on bad input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact and modular values were combined in one expression.
class ModeMismatch : public Error {
public:
    ModeMismatch() : Error("arithmetic mode mismatch: exact and modular values combined") {}
};

// A brute-force enumeration was asked to run past its hard size limit.
class ScaleGuard : public Error {
public:
    using Error::Error;
};

}  // namespace pinnacle
