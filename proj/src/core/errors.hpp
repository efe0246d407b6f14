#pragma once

#include <stdexcept>

namespace edc {

// Request exceeds a configured size limit (materialization, verification work, ...).
class TooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A mandatory self-check failed (e.g. a clique witness whose pairwise
// distances are not what the construction promises).
class VerifyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace edc
