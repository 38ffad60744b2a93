#pragma once

#include <stdexcept>
#include <string>

namespace swhist {

/// Invalid algorithm or estimator configuration (bad epsilon, window, constants).
struct config_error : std::invalid_argument {
    explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Query issued against a structure that has not ingested any item yet.
struct empty_error : std::logic_error {
    explicit empty_error(const std::string& what) : std::logic_error(what) {}
};

/// A desk-scale size cap was exceeded (exact oracles and exact estimators only).
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed stream or record input.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace swhist
