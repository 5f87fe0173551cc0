// Copyright 2026 The latticeq Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace latticeq {

/// Base class for all recoverable latticeq errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mismatched vector/assignment lengths (e.g. wrong number of basis values).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A request exceeds a hard resource guard (table size, enumeration width).
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// A lattice spec violates its structural invariants. Carries the full
/// violation list so callers can report all problems at once.
class InvalidSpecError : public Error {
public:
    InvalidSpecError(const std::string& message, std::vector<std::string> violations)
        : Error(message), violations_(std::move(violations)) {}

    explicit InvalidSpecError(const std::string& message) : Error(message) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// Malformed input files, rational literals, or JSON documents.
class SpecParseError : public Error {
public:
    using Error::Error;
};

/// Malformed bitstrings or bit fields.
class FormatError : public Error {
public:
    using Error::Error;
};

/// A structurally valid call with an out-of-domain argument (e.g. bead count < 2).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// A call that breaks an operation's stated precondition, such as querying
/// self-avoidance of an invalid conformation. Programming error, not data.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace latticeq
