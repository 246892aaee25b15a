#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace chipfire {

using Vec = std::vector<std::int64_t>;
using Matrix = std::vector<Vec>;
using QVec = std::vector<mpq_class>;

// Chip counts per vertex.
using Divisor = Vec;
// Fire counts per vertex (negative entries borrow).
using FiringStrategy = Vec;

struct VecHash {
    std::size_t operator()(const Vec& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

std::int64_t dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
bool is_nonnegative(const Vec& v);
Vec unit_vector(std::size_t n, std::size_t i);

std::string to_string(const Vec& v);
std::string to_string(const QVec& v);

}  // namespace chipfire
