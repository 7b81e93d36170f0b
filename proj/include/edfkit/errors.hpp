#pragma once

#include <stdexcept>
#include <string>

namespace edfkit {

// Base for all library errors so callers can catch edfkit failures as one class.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidGroup : Error {
    using Error::Error;
};
struct GroupMismatch : Error {
    using Error::Error;
};
struct NotCoprime : Error {
    using Error::Error;
};
struct InvalidInput : Error {
    using Error::Error;
};
struct NotPrime : Error {
    using Error::Error;
};
struct InvalidCyclotomy : Error {
    using Error::Error;
};
struct NotDisjoint : Error {
    using Error::Error;
};
struct Infeasible : Error {
    using Error::Error;
};
struct InvalidDelta : Error {
    using Error::Error;
};
struct PreconditionUnmet : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct CatalogCorrupt : Error {
    using Error::Error;
};

} // namespace edfkit
