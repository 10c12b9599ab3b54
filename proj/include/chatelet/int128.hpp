#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chatelet {

using int128 = __int128;

// Checked arithmetic. All census-scale values fit in 128 bits with room to
// spare; anything that does not is a bug or a misuse, and must raise rather
// than wrap.
inline int128 checked_add(int128 x, int128 y) {
    int128 r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("int128 add overflow");
    return r;
}

inline int128 checked_sub(int128 x, int128 y) {
    int128 r;
    if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("int128 sub overflow");
    return r;
}

inline int128 checked_mul(int128 x, int128 y) {
    int128 r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("int128 mul overflow");
    return r;
}

inline int128 checked_neg(int128 x) { return checked_sub(0, x); }

inline int128 abs128(int128 x) { return x < 0 ? checked_neg(x) : x; }

// 2-adic valuation of a nonzero value.
inline int v2_128(int128 n) {
    if (n == 0) throw std::domain_error("v2 of zero");
    unsigned __int128 u = static_cast<unsigned __int128>(n < 0 ? checked_neg(n) : n);
    auto lo = static_cast<std::uint64_t>(u);
    if (lo != 0) return __builtin_ctzll(lo);
    auto hi = static_cast<std::uint64_t>(u >> 64);
    return 64 + __builtin_ctzll(hi);
}

inline int128 gcd128(int128 x, int128 y) {
    x = abs128(x);
    y = abs128(y);
    while (y != 0) {
        int128 t = x % y;
        x = y;
        y = t;
    }
    return x;
}

inline std::string to_string_128(int128 n) {
    if (n == 0) return "0";
    bool neg = n < 0;
    unsigned __int128 u = static_cast<unsigned __int128>(neg ? -n : n);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

// Residue in [0, m) for m > 0.
inline int128 mod_floor(int128 n, int128 m) {
    int128 r = n % m;
    return r < 0 ? r + m : r;
}

}  // namespace chatelet
