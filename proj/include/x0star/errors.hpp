#pragma once

#include <stdexcept>
#include <string>

namespace x0star {

// Fixture files or orbit data needed for a computation are absent.
class MissingData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A fixture record violates the schema or one of the orbit invariants.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two independent computations disagree; signals a bug or corrupt data.
class Contradiction : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class InsufficientPrecision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace x0star
