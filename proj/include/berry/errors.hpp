#pragma once

#include <stdexcept>
#include <string>

namespace berry {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// argument outside its admissible range (angles, radii, counts, ...)
struct DomainError : Error {
    using Error::Error;
};

// operator/state dimension not supported by the operation
struct BadDimension : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct NotPSD : Error {
    using Error::Error;
};

struct NotNormalized : Error {
    using Error::Error;
};

// all amplitudes zero where a state is required
struct ZeroState : Error {
    using Error::Error;
};

struct BadSteps : Error {
    using Error::Error;
};

// consecutive path overlap too small for a well-defined phase
struct DegeneratePath : Error {
    using Error::Error;
};

// interference sum has vanishing modulus, phase undefined
struct ZeroVisibility : Error {
    using Error::Error;
};

} // namespace berry
