#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace dicrit::valuation {

/// An integer value or INFINITY (the value of zero).
class Value {
public:
    Value() = default;  // INFINITY
    Value(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

    static Value infinity() { return {}; }

    bool is_infinite() const { return !v_; }
    bool is_finite() const { return v_.has_value(); }
    /// Throws InvalidArgument on INFINITY.
    std::int64_t get() const;

    Value operator+(const Value& rhs) const;
    /// Finite right-hand side only.
    Value operator-(std::int64_t rhs) const;

    friend bool operator==(const Value& a, const Value& b) = default;
    friend std::strong_ordering operator<=>(const Value& a, const Value& b);

    std::string to_string() const;

private:
    std::optional<std::int64_t> v_;
};

inline Value min(const Value& a, const Value& b) { return b < a ? b : a; }

}  // namespace dicrit::valuation
