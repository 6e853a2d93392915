#pragma once

#include <stdexcept>
#include <string>

namespace kvl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

struct ArityError : Error {
    using Error::Error;
};

struct CapacityError : Error {
    using Error::Error;
};

struct CoprimeViolation : Error {
    using Error::Error;
};

struct PartitionError : Error {
    using Error::Error;
};

struct EmptySetError : Error {
    using Error::Error;
};

struct FormatError : Error {
    using Error::Error;
};

struct LengthError : Error {
    using Error::Error;
};

struct NonPrimeModulus : Error {
    using Error::Error;
};

} // namespace kvl
