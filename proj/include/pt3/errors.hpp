// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace pt3 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A density was queried outside (or on the boundary of) its open support.
class SupportError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The requested quantity does not exist (divergent moment or integral).
class DivergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An infinite series failed to converge within SeriesControl::max_terms.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline void require(bool condition, const std::string& what) {
    if (!condition) {
        throw DomainError(what);
    }
}

}  // namespace detail
}  // namespace pt3
