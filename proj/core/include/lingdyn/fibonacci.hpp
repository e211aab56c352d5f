#pragma once

#include "lingdyn/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace lingdyn::fibonacci {

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;
using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline Int128 checked_add(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit addition overflow");
    return r;
}

inline Int128 checked_mul(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit multiplication overflow");
    return r;
}

inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }

} // namespace detail

/// 2x2 integer matrix [[a, b], [c, d]]. With Int128 every product and sum
/// is overflow-checked; with BigInt arithmetic is exact and unbounded.
template <typename Int>
struct BasicIntMatrix2 {
    Int a{0}, b{0}, c{0}, d{0};

    friend bool operator==(const BasicIntMatrix2&, const BasicIntMatrix2&) = default;

    friend BasicIntMatrix2 operator*(const BasicIntMatrix2& x, const BasicIntMatrix2& y) {
        using detail::checked_add;
        using detail::checked_mul;
        return {checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c)),
                checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d)),
                checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c)),
                checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d))};
    }

    friend BasicIntMatrix2 operator+(const BasicIntMatrix2& x, const BasicIntMatrix2& y) {
        using detail::checked_add;
        return {checked_add(x.a, y.a), checked_add(x.b, y.b), checked_add(x.c, y.c),
                checked_add(x.d, y.d)};
    }

    friend BasicIntMatrix2 operator*(const Int& s, const BasicIntMatrix2& m) {
        using detail::checked_mul;
        return {checked_mul(s, m.a), checked_mul(s, m.b), checked_mul(s, m.c), checked_mul(s, m.d)};
    }

    Int determinant() const { return a * d - b * c; }

    static BasicIntMatrix2 identity() { return {1, 0, 0, 1}; }
};

using IntMatrix2 = BasicIntMatrix2<Int128>;
using BigIntMatrix2 = BasicIntMatrix2<BigInt>;

/// [[1,1],[1,0]], the matrix I/2 + sigma_3 + 2 sigma_1.
template <typename Int = Int128>
BasicIntMatrix2<Int> fib_matrix() {
    return {1, 1, 1, 0};
}

/// F^n by binary exponentiation; n >= 1. The running square is never
/// advanced past the highest set bit, so overflow is reported only when
/// F_{n+1} itself does not fit.
template <typename Int = Int128>
BasicIntMatrix2<Int> fib_pow(std::uint64_t n) {
    if (n == 0) throw DomainError("fib_pow: n must be >= 1");
    BasicIntMatrix2<Int> result = BasicIntMatrix2<Int>::identity();
    BasicIntMatrix2<Int> base = fib_matrix<Int>();
    for (;;) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n == 0) break;
        base = base * base;
    }
    return result;
}

/// F_n with F_0 = 0, read from entry (1,0) of F^n.
template <typename Int = Int128>
Int fib(std::uint64_t n) {
    if (n == 0) return Int{0};
    return fib_pow<Int>(n).c;
}

std::string to_string(Int128 v);
inline std::string to_string(const BigInt& v) { return v.str(); }

} // namespace lingdyn::fibonacci
