#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace oreext {

/// Value of the degree function: an integer or the bottom element -inf.
class Degree {
public:
    constexpr Degree() = default;  // bottom
    constexpr Degree(std::int64_t v) : value_(v) {}

    static constexpr Degree bottom() { return Degree(); }

    constexpr bool is_bottom() const { return !value_.has_value(); }
    std::int64_t value() const;

    friend constexpr Degree operator+(Degree a, Degree b) {
        if (a.is_bottom() || b.is_bottom()) return bottom();
        return Degree(*a.value_ + *b.value_);
    }
    friend constexpr bool operator==(Degree a, Degree b) = default;
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
        if (a.is_bottom() || b.is_bottom())
            return static_cast<int>(!a.is_bottom()) <=> static_cast<int>(!b.is_bottom());
        return *a.value_ <=> *b.value_;
    }

    std::string to_string() const;

private:
    std::optional<std::int64_t> value_;
};

constexpr Degree max(Degree a, Degree b) { return a < b ? b : a; }

} // namespace oreext
