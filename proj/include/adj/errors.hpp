#pragma once

#include <stdexcept>
#include <string>

namespace adj {

// Bad input data: empty bags, malformed relations, values of the wrong type.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Bad wiring: unknown operator names, missing order/omega parameters.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace adj
