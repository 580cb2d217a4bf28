#pragma once

#include <stdexcept>
#include <string>

namespace vecmatch {

/// Base of every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates a precondition (bounds, sizes, counts).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The template has zero intensity variance, so correlation is undefined everywhere.
class DegenerateTemplate : public Error {
public:
    using Error::Error;
};

/// Every candidate window was excluded (e.g. all windows constant under NCC).
class NoCandidate : public Error {
public:
    using Error::Error;
};

}  // namespace vecmatch
