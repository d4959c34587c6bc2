#pragma once

#include "dicrit/algebra/field.hpp"

#include <cstdint>
#include <random>

namespace dicrit {

/// Seeded generator with a fixed draw rule, so results do not depend on the
/// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    /// Uniform-ish integer in [lo, hi] by reduction modulo the range.
    std::int64_t between(std::int64_t lo, std::int64_t hi)
    {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(g_() % span);
    }

    /// Nonzero scalar: from {-B..B}\{0} in characteristic 0, from F_q^* otherwise.
    algebra::Scalar nonzero(const algebra::FieldPtr& field, int bound = 10)
    {
        if (field->is_finite()) {
            std::uint64_t q = field->order();
            return algebra::Scalar::enumerate(field, 1 + g_() % (q - 1));
        }
        std::int64_t k = between(1, 2 * bound);
        return algebra::Scalar::from_int(field, k <= bound ? k : bound - k);
    }

    std::mt19937_64& engine() { return g_; }

private:
    std::mt19937_64 g_;
};

}  // namespace dicrit
