#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace maslovkit {

/// Exact half-integer arithmetic. Stored as twice the value so that all
/// index bookkeeping stays in integers.
class HalfInteger {
public:
    HalfInteger() = default;
    explicit constexpr HalfInteger(std::int64_t twice) : twice_(twice) {}

    static constexpr HalfInteger whole(std::int64_t k) { return HalfInteger(2 * k); }
    static constexpr HalfInteger half(std::int64_t k) { return HalfInteger(k); }

    constexpr std::int64_t twice_value() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double as_double() const { return 0.5 * static_cast<double>(twice_); }

    std::int64_t as_integer() const {
        if (!is_integer())
            throw std::logic_error("HalfInteger " + str() + " is not an integer");
        return twice_ / 2;
    }

    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
        return HalfInteger(a.twice_ + b.twice_);
    }
    friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
        return HalfInteger(a.twice_ - b.twice_);
    }
    friend constexpr HalfInteger operator-(HalfInteger a) { return HalfInteger(-a.twice_); }
    HalfInteger& operator+=(HalfInteger b) { twice_ += b.twice_; return *this; }
    HalfInteger& operator-=(HalfInteger b) { twice_ -= b.twice_; return *this; }
    friend constexpr bool operator==(HalfInteger a, HalfInteger b) = default;

    friend std::ostream& operator<<(std::ostream& os, HalfInteger h) { return os << h.str(); }

private:
    std::int64_t twice_ = 0;
};

}  // namespace maslovkit
