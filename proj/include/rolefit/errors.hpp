// Copyright (c) 2026 The rolefit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace rolefit {

/// Base class for all rolefit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Incompatible tensor/vector shapes.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Index outside its valid range (class ids, slot ids, coordinates).
class IndexError : public Error {
public:
    using Error::Error;
};

/// Invalid configuration value (ratios, fractions, hyperparameters).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Input data violates a declared schema (unknown role label, bad record).
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Malformed file content; carries a 1-based line number when known.
class FormatError : public Error {
public:
    FormatError(const std::string& msg, long line = -1)
        : Error(line >= 0 ? msg + " (line " + std::to_string(line) + ")" : msg), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

/// File could not be opened or read.
class IoError : public Error {
public:
    using Error::Error;
};

/// Non-finite values appeared during optimization.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// Statistic is undefined for the given input (n too small, zero variance).
class StatsError : public Error {
public:
    using Error::Error;
};

/// Evaluation cannot proceed (empty dataset, no qualifying groups).
class EvalError : public Error {
public:
    using Error::Error;
};

/// Unknown id passed to a generator/spec lookup.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Synthetic data generation could not satisfy its constraints.
class GenerationError : public Error {
public:
    using Error::Error;
};

/// Corrupt or incompatible checkpoint file.
class CheckpointError : public Error {
public:
    using Error::Error;
};

}  // namespace rolefit
