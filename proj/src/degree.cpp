#include "oreext/degree.hpp"

#include <stdexcept>

namespace oreext {

std::int64_t Degree::value() const {
    if (!value_) throw std::logic_error("degree of zero is -inf");
    return *value_;
}

std::string Degree::to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

} // namespace oreext
