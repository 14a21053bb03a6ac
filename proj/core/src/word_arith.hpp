#pragma once

#include <cstdint>

// Word-sized modular arithmetic shared by the library internals. Any
// modulus below 2^64 is safe: products go through a 128-bit intermediate.

namespace ntdiv::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        exp >>= 1;
        if (exp) base = mulmod(base, base, m);
    }
    return r;
}

}  // namespace ntdiv::detail
