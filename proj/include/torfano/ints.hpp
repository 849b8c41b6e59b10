#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace torfano {

using Int = std::int64_t;
using Int128 = __int128;

class OverflowError : public std::runtime_error {
  public:
    explicit OverflowError(const std::string& where)
        : std::runtime_error("integer overflow in " + where) {}
};

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("add");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("sub");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("mul");
    return r;
}

inline Int128 checked_add(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("add128");
    return r;
}

inline Int128 checked_sub(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("sub128");
    return r;
}

inline Int128 checked_mul(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("mul128");
    return r;
}

// Exact division; the callers rely on divisibility, so a nonzero remainder is a bug.
inline Int128 exact_div(Int128 a, Int128 b) {
    if (b == 0 || a % b != 0) throw std::logic_error("exact_div: not divisible");
    return a / b;
}

inline Int narrow(Int128 v) {
    if (v > Int128(INT64_MAX) || v < Int128(INT64_MIN)) throw OverflowError("narrow");
    return static_cast<Int>(v);
}

inline Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace torfano
