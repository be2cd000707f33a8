#ifndef DETOUR_ERRORS_HPP
#define DETOUR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace detour {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad arguments or malformed input files.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

// Structurally invalid decomposition, certificate, or model.
class StructuralError : public Error {
public:
    explicit StructuralError(const std::string& what) : Error(what) {}
};

// A configured budget or size limit was exceeded.
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what) : Error(what) {}
};

// Path enumeration hit its count limit before finishing.
class EnumerationOverflow : public ResourceError {
public:
    explicit EnumerationOverflow(const std::string& what) : ResourceError(what) {}
};

// An internal cross-check failed; indicates a bug or an inconsistent oracle.
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& what) : Error(what) {}
};

} // namespace detour

#endif
