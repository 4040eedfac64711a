#pragma once

#include <stdexcept>
#include <string>

namespace alphalab {

// Requested type, size or backend is outside what the engine can compute.
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (codec, words, type names, bundles).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal identity failed; indicates wrong data or a bug.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace alphalab
