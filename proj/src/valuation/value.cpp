#include "dicrit/valuation/value.hpp"

#include "dicrit/error.hpp"

namespace dicrit::valuation {

std::int64_t Value::get() const
{
    if (!v_) fail(ErrorKind::invalid_argument, "value is INFINITY");
    return *v_;
}

Value Value::operator+(const Value& rhs) const
{
    if (!v_ || !rhs.v_) return infinity();
    return *v_ + *rhs.v_;
}

Value Value::operator-(std::int64_t rhs) const
{
    if (!v_) return infinity();
    return *v_ - rhs;
}

std::strong_ordering operator<=>(const Value& a, const Value& b)
{
    if (!a.v_ && !b.v_) return std::strong_ordering::equal;
    if (!a.v_) return std::strong_ordering::greater;
    if (!b.v_) return std::strong_ordering::less;
    return *a.v_ <=> *b.v_;
}

std::string Value::to_string() const
{
    return v_ ? std::to_string(*v_) : "INFINITY";
}

}  // namespace dicrit::valuation
