#pragma once

#include <stdexcept>
#include <string>

namespace qaoa {

// Base of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (shapes, ranges, duplicate edges).
struct InvalidInput : Error {
    using Error::Error;
};

struct NotAnEdge : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct NotASimpleGraph : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct EdgeNotInHypergraph : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct NonUnitWeights : InvalidInput {
    using InvalidInput::InvalidInput;
};

// A configured size cap was exceeded. Never silently truncated.
struct CapExceeded : Error {
    using Error::Error;
};

struct FamilyTooLarge : CapExceeded {
    FamilyTooLarge(int dimension, int cap)
        : CapExceeded("enumeration dimension " + std::to_string(dimension) +
                      " exceeds cap " + std::to_string(cap)),
          dimension(dimension), cap(cap) {}
    int dimension;
    int cap;
};

struct TooManyQubits : CapExceeded {
    TooManyQubits(int n, int cap)
        : CapExceeded("qubit count " + std::to_string(n) + " exceeds oracle cap " +
                      std::to_string(cap)),
          n(n), cap(cap) {}
    int n;
    int cap;
};

struct TooManyPoints : CapExceeded {
    using CapExceeded::CapExceeded;
};

// Imaginary residue of a real-valued expectation above tolerance.
struct ComplexResidue : Error {
    using Error::Error;
};

}  // namespace qaoa
