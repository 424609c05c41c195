#pragma once

#include <stdexcept>
#include <string>

namespace arckit {

/// Malformed or out-of-contract input data (task files, grids, fixtures).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A model endpoint (live or replay) could not answer a request.
class EndpointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace arckit
