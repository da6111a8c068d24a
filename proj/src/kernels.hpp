#pragma once

// Coefficient-ring kernels shared by the exact and modular series types.
// Internal to the library.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "mexq/parallel.hpp"

namespace mexq::detail {

using u128 = unsigned __int128;

struct ExactRing {
    using value_type = mpz_class;
    using acc_type = mpz_class;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(const value_type& v) const { return sgn(v) == 0; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type from_int(std::int64_t v) const { return mpz_class(static_cast<long>(v)); }

    acc_type acc_zero() const { return 0; }
    void addmul(acc_type& acc, const value_type& a, const value_type& b) const
    {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    value_type reduce(const acc_type& acc) const { return acc; }

    std::optional<value_type> unit_inverse(const value_type& a) const
    {
        if (a == 1 || a == -1)
            return a;
        return std::nullopt;
    }
};

struct ModRing {
    using value_type = std::uint64_t;
    using acc_type = u128;

    std::uint64_t m;

    value_type zero() const { return 0; }
    value_type one() const { return 1 % m; }
    bool is_zero(value_type v) const { return v == 0; }
    value_type add(value_type a, value_type b) const { return a >= m - b ? a - (m - b) : a + b; }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (m - b); }
    value_type neg(value_type a) const { return a == 0 ? 0 : m - a; }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<value_type>((static_cast<u128>(a) * b) % m);
    }
    value_type from_int(std::int64_t v) const
    {
        const auto sm = static_cast<std::int64_t>(m);
        std::int64_t r = v % sm;
        return static_cast<value_type>(r < 0 ? r + sm : r);
    }

    acc_type acc_zero() const { return 0; }
    void addmul(acc_type& acc, value_type a, value_type b) const
    {
        // Below 2^32 a product fits in 64 bits, and any realistic number of
        // them fits in the 128-bit accumulator without reduction.
        if (m <= (std::uint64_t{1} << 32))
            acc += static_cast<std::uint64_t>(a * b);
        else
            acc += (static_cast<u128>(a) * b) % m;
    }
    value_type reduce(acc_type acc) const { return static_cast<value_type>(acc % m); }

    std::optional<value_type> unit_inverse(value_type a) const
    {
        // extended Euclid on signed 128-bit
        __int128 r0 = static_cast<__int128>(m), r1 = a;
        __int128 s0 = 0, s1 = 1;
        while (r1 != 0) {
            const __int128 q = r0 / r1;
            const __int128 r2 = r0 - q * r1;
            r0 = r1;
            r1 = r2;
            const __int128 s2 = s0 - q * s1;
            s0 = s1;
            s1 = s2;
        }
        if (r0 != 1)
            return std::nullopt;
        __int128 inv = s0 % static_cast<__int128>(m);
        if (inv < 0)
            inv += m;
        return static_cast<value_type>(inv);
    }
};

template <class T>
std::vector<std::int64_t> support_of(std::span<const T> c, auto const& ring)
{
    std::vector<std::int64_t> s;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!ring.is_zero(c[i]))
            s.push_back(static_cast<std::int64_t>(i));
    return s;
}

// out[t] = sum_{i+j=t} a[i] b[j] for 0 <= t < len. Only the nonzero supports
// are visited. Output ranges are split across workers; each coefficient is
// accumulated by exactly one worker in a fixed order.
template <class Ring>
std::vector<typename Ring::value_type> convolve(std::span<const typename Ring::value_type> a,
                                                std::span<const typename Ring::value_type> b,
                                                std::int64_t len, const Ring& ring)
{
    using V = typename Ring::value_type;
    std::vector<V> out(static_cast<std::size_t>(std::max<std::int64_t>(len, 0)), ring.zero());
    if (len <= 0 || a.empty() || b.empty())
        return out;
    auto sa = support_of(a, ring);
    auto sb = support_of(b, ring);
    if (sa.size() > sb.size()) {
        std::swap(a, b);
        std::swap(sa, sb);
    }

    parallel_chunks(len, [&](std::int64_t lo, std::int64_t hi) {
        std::vector<typename Ring::acc_type> acc(static_cast<std::size_t>(hi - lo), ring.acc_zero());
        for (std::int64_t i : sa) {
            if (i >= hi)
                break;
            const std::int64_t jlo = std::max<std::int64_t>(lo - i, 0);
            const std::int64_t jhi = hi - i; // exclusive
            auto it = std::lower_bound(sb.begin(), sb.end(), jlo);
            const V& ai = a[static_cast<std::size_t>(i)];
            for (; it != sb.end() && *it < jhi; ++it)
                ring.addmul(acc[static_cast<std::size_t>(i + *it - lo)], ai, b[static_cast<std::size_t>(*it)]);
        }
        for (std::int64_t t = lo; t < hi; ++t)
            out[static_cast<std::size_t>(t)] = ring.reduce(acc[static_cast<std::size_t>(t - lo)]);
    });
    return out;
}

// Solves den * out = num for the first `len` coefficients, den[0] a unit
// with inverse `inv0`. Cost is O(len * |support(den)|).
template <class Ring>
std::vector<typename Ring::value_type> triangular_divide(std::span<const typename Ring::value_type> num,
                                                         std::span<const typename Ring::value_type> den,
                                                         typename Ring::value_type inv0, std::int64_t len,
                                                         const Ring& ring)
{
    using V = typename Ring::value_type;
    std::vector<V> out(static_cast<std::size_t>(std::max<std::int64_t>(len, 0)), ring.zero());
    std::vector<std::int64_t> sd;
    for (std::int64_t k : support_of(den, ring))
        if (k >= 1)
            sd.push_back(k);
    for (std::int64_t n = 0; n < len; ++n) {
        auto acc = ring.acc_zero();
        for (std::int64_t k : sd) {
            if (k > n)
                break;
            ring.addmul(acc, den[static_cast<std::size_t>(k)], out[static_cast<std::size_t>(n - k)]);
        }
        const V rhs = static_cast<std::size_t>(n) < num.size() ? num[static_cast<std::size_t>(n)] : ring.zero();
        out[static_cast<std::size_t>(n)] = ring.mul(ring.sub(rhs, ring.reduce(acc)), inv0);
    }
    return out;
}

// c <- c * (1 + factor * q^e), truncated to c.size() terms, in place.
template <class Ring>
void mul_binomial_in_place(std::vector<typename Ring::value_type>& c, typename Ring::value_type factor,
                           std::int64_t e, const Ring& ring)
{
    const auto len = static_cast<std::int64_t>(c.size());
    for (std::int64_t n = len - 1; n >= e; --n) {
        const auto& src = c[static_cast<std::size_t>(n - e)];
        if (!ring.is_zero(src))
            c[static_cast<std::size_t>(n)] = ring.add(c[static_cast<std::size_t>(n)], ring.mul(factor, src));
    }
}

} // namespace mexq::detail
