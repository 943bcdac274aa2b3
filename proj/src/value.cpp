#include "adj/value.hpp"

namespace adj {

std::string Value::to_string() const {
    if (is_number()) return rational_string(number());
    return symbol();
}

}  // namespace adj
