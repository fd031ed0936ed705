#pragma once

#include <stdexcept>
#include <string>

namespace ame {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotSquare : public Error {
public:
    using Error::Error;
};

class NotHermitian : public Error {
public:
    using Error::Error;
};

class NotUnitary : public Error {
public:
    using Error::Error;
};

// Raised when a state that should be positive semidefinite has an
// eigenvalue below the diagnostic threshold (see von_neumann_entropy).
class NotPSD : public Error {
public:
    using Error::Error;
};

class ParamOutOfRange : public Error {
public:
    using Error::Error;
};

class QubitOutOfRange : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class EmptySubset : public Error {
public:
    using Error::Error;
};

class MOutOfRange : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace ame
