#include "mexq/numtheory.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "mexq/errors.hpp"

namespace mexq {

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::int64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    if (n < 1)
        throw InvalidArgument("divisors of non-positive " + std::to_string(n));
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d <= n / d; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int kronecker(std::int64_t a, std::int64_t n)
{
    // Cohen, A Course in Computational Algebraic Number Theory, Alg. 1.4.10.
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0)
        return 0;

    __int128 aa = a;
    __int128 b = n;
    int v = 0;
    while (b % 2 == 0) {
        ++v;
        b /= 2;
    }
    static constexpr int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1}; // (-1)^((x^2-1)/8)
    auto mod8 = [](__int128 x) { return static_cast<int>(((x % 8) + 8) % 8); };
    int k = (v % 2 == 0) ? 1 : tab2[mod8(aa)];
    if (b < 0) {
        b = -b;
        if (aa < 0)
            k = -k;
    }
    // b odd and positive now
    while (true) {
        if (aa == 0)
            return b > 1 ? 0 : k;
        v = 0;
        while (aa % 2 == 0) {
            ++v;
            aa /= 2;
        }
        if (v % 2 == 1)
            k *= tab2[mod8(b)];
        // reciprocity, with a's residue mod 4 taken in [0, 4)
        if ((aa % 4 + 4) % 4 == 3 && b % 4 == 3)
            k = -k;
        const __int128 r = aa < 0 ? -aa : aa;
        aa = b % r;
        b = r;
    }
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw InvalidArgument("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw InvalidArgument("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

std::int64_t checked_pow(std::int64_t base, int exp)
{
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i)
        r = checked_mul(r, base);
    return r;
}

std::vector<PentagonalTerm> pentagonal_terms(std::int64_t limit)
{
    std::vector<PentagonalTerm> out;
    if (limit < 0)
        return out;
    out.push_back({0, 1});
    for (std::int64_t k = 1;; ++k) {
        const std::int64_t lo = k * (3 * k - 1) / 2;
        if (lo > limit)
            break;
        const int s = (k % 2 == 0) ? 1 : -1;
        out.push_back({lo, s});
        const std::int64_t hi = k * (3 * k + 1) / 2;
        if (hi <= limit)
            out.push_back({hi, s});
    }
    return out;
}

} // namespace mexq
