#pragma once

#include <stdexcept>
#include <string>

namespace lrw {

/// Malformed input text (edge lists, label files, ...).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid parameter combination (generator specs, walk parameters, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace lrw
