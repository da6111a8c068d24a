#include "doctest.h"

#include <limits>
#include <vector>

#include <gmpxx.h>

#include "mexq/errors.hpp"
#include "mexq/numtheory.hpp"

using namespace mexq;

TEST_CASE("kronecker agrees with GMP")
{
    for (long a = -60; a <= 60; ++a)
        for (long n = -60; n <= 60; ++n) {
            mpz_class A(a), N(n);
            INFO("a=" << a << " n=" << n);
            CHECK(kronecker(a, n) == mpz_kronecker(A.get_mpz_t(), N.get_mpz_t()));
        }
}

TEST_CASE("kronecker with large arguments")
{
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t a : std::vector<std::int64_t>{-144, 1000000007, -999999999989, big, -big})
        for (std::int64_t n : std::vector<std::int64_t>{3, 1000000007, 999999999989, big, -big, std::int64_t{1} << 40}) {
            mpz_class A(static_cast<long>(a)), N(static_cast<long>(n));
            CHECK(kronecker(a, n) == mpz_kronecker(A.get_mpz_t(), N.get_mpz_t()));
        }
}

TEST_CASE("primes and divisors")
{
    std::vector<std::int64_t> small;
    for (std::int64_t n = -3; n < 40; ++n)
        if (is_prime(n))
            small.push_back(n);
    CHECK(small == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37});
    CHECK(is_prime(1000000007));
    CHECK_FALSE(is_prime(1000000007LL * 3));
    CHECK(divisors(144).size() == 15);
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
}

TEST_CASE("pentagonal terms")
{
    const auto t = pentagonal_terms(26);
    std::vector<std::int64_t> e;
    std::vector<int> s;
    for (const auto& x : t) {
        e.push_back(x.exponent);
        s.push_back(x.sign);
    }
    CHECK(e == std::vector<std::int64_t>{0, 1, 2, 5, 7, 12, 15, 22, 26});
    CHECK(s == std::vector<int>{1, -1, -1, 1, 1, -1, -1, 1, 1});
}

TEST_CASE("checked arithmetic")
{
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK(checked_mul(1 << 20, 1 << 20) == (1LL << 40));
    CHECK(checked_pow(5, 4) == 625);
    CHECK_THROWS_AS(checked_mul(big, 2), InvalidArgument);
    CHECK_THROWS_AS(checked_add(big, 1), InvalidArgument);
    CHECK_THROWS_AS(checked_pow(10, 19), InvalidArgument);
}
