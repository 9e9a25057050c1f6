// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace mwlat {

/// Base class for all toolkit errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parameters outside the supported curve families (wrong prime class,
/// even exponent, divisibility condition failures, ...). The message names
/// the condition that failed.
class invalid_family_error : public error {
public:
    explicit invalid_family_error(const std::string& msg) : error(msg) {}
};

/// An equation solver found no solution where the family conditions
/// promised one.
class no_solution_error : public error {
public:
    explicit no_solution_error(const std::string& msg) : error(msg) {}
};

/// A constructed point failed its on-curve check.
class construction_error : public error {
public:
    explicit construction_error(const std::string& msg) : error(msg) {}
};

/// The generated point set spans less than the expected rank.
class rank_deficiency_error : public error {
public:
    explicit rank_deficiency_error(const std::string& msg) : error(msg) {}
};

/// Malformed input file or textual format.
class parse_error : public error {
public:
    explicit parse_error(const std::string& msg) : error(msg) {}
};

/// A curve failed the niceness conditions where a height was requested.
class not_nice_error : public error {
public:
    explicit not_nice_error(const std::string& msg) : error(msg) {}
};

/// Exact-arithmetic invariant violated (non-PSD Gram, singular system, ...).
class internal_error : public error {
public:
    explicit internal_error(const std::string& msg) : error(msg) {}
};

} // namespace mwlat
