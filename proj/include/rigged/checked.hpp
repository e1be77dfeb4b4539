#pragma once

#include <cstdint>
#include <stdexcept>

// All arithmetic in this library is exact signed 64-bit; anything that could
// plausibly overflow at scale (polynomial coefficients, cocharge exponents,
// enumeration counts) goes through these helpers and overflow is a hard error.

namespace rigged {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("int64 overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("int64 overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("int64 overflow in multiplication");
    return r;
}

} // namespace rigged
