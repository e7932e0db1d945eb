#pragma once

#include "oreext/algebra.hpp"

#include <string>
#include <string_view>

namespace oreext {

/// Flat key=value algebra description:
///
///   # Weyl algebra
///   field=Q
///   sigma_y=y
///   delta_y=1
///
/// sigma_y is required; delta_y defaults to 0 and field to Q.
struct AlgebraConfig {
    std::string field = "Q";
    std::string sigma_y;
    std::string delta_y = "0";

    AlgebraPtr build() const;
};

AlgebraConfig parse_algebra_config(std::string_view text);
AlgebraConfig load_algebra_config(const std::string& path);

} // namespace oreext
