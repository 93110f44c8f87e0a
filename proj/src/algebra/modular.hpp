#pragma once

// Arithmetic modulo a 64-bit prime.

#include "vknot/algebra.hpp"

#include <cstdint>

namespace vknot::detail {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

struct PrimeField {
    u64 p = 0;
    u64 iota = 0; // square root of -1

    u64 add(u64 a, u64 b) const
    {
        u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
    u64 pow(u64 a, u64 e) const
    {
        u64 r = 1;
        for (; e; e >>= 1, a = mul(a, a))
            if (e & 1)
                r = mul(r, a);
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
    u64 from(Coeff c) const
    {
        if (c >= 0)
            return static_cast<u64>(c) % p;
        u64 m = static_cast<u64>(-(c + 1)) % p; // avoids negating INT64_MIN
        return sub(sub(0, m), 1);
    }
};

inline bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % q == 0)
            return n == q;
    PrimeField f{n, 0};
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = f.pow(a, d);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = f.mul(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

} // namespace vknot::detail
