#include "chipfire/types.hpp"

#include <sstream>
#include <stdexcept>

namespace chipfire {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in addition");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in multiplication");
    return out;
}

std::int64_t dot(const Vec& a, const Vec& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

bool is_zero(const Vec& v) {
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

bool is_nonnegative(const Vec& v) {
    for (auto x : v)
        if (x < 0) return false;
    return true;
}

Vec unit_vector(std::size_t n, std::size_t i) {
    Vec e(n, 0);
    e[i] = 1;
    return e;
}

std::string to_string(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string to_string(const QVec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ')';
    return os.str();
}

}  // namespace chipfire
