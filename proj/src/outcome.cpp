#include "adj/outcome.hpp"

namespace adj {

std::string Interval::to_string() const {
    return "[" + rational_string(lo) + ", " + rational_string(hi) + "]";
}

std::string Outcome::to_string() const {
    switch (kind_) {
        case Kind::Undefined:
            return "undefined";
        case Kind::Bottom:
            return "bottom";
        case Kind::Defined:
            break;
    }
    if (has_value()) return value().to_string();
    return interval().to_string();
}

bool operator<(const Outcome& a, const Outcome& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    if (a.kind_ != Outcome::Kind::Defined) return false;
    if (a.payload_->index() != b.payload_->index()) return a.payload_->index() < b.payload_->index();
    if (a.has_value()) return a.value() < b.value();
    return a.interval() < b.interval();
}

}  // namespace adj
