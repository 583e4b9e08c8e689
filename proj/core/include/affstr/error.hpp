#ifndef AFFSTR_ERROR_HPP
#define AFFSTR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace affstr {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad algebra data, malformed input files, inconsistent CLI arguments.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A mathematical invariant failed (non-integral solution, negative offset,
/// target outside the base set). Always indicates a bug or corrupt input.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Query outside the grade window a table or fan was built for.
class OutOfWindowError : public Error {
public:
    using Error::Error;
};

/// Step or memory budget exhausted.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace affstr

#endif
