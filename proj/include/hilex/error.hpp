#pragma once

#include <stdexcept>
#include <string>

namespace hilex {

// Raised when a brute-force enumeration would exceed a configured cap.
class size_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an exact computation produces a value that the theory forbids
// (for instance a character value that does not reduce to a rational integer).
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace hilex
