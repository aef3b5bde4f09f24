// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#pragma once

#include <stdexcept>
#include <string>

namespace simpleq {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed potential string, non-positive parameter, unreadable file.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Two fields/spectra that should share a grid do not.
class GridMismatch : public Error {
public:
    using Error::Error;
};

// A solve or quadrature produced something unusable (zero pivot, NaN, ...).
class NumericalFailure : public Error {
public:
    using Error::Error;
};

// Query outside the data range (curve inversion, fit windows).
class OutOfRange : public Error {
public:
    using Error::Error;
};

} // namespace simpleq
