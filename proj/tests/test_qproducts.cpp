#include "doctest.h"

#include "helpers.hpp"
#include "mexq/errors.hpp"
#include "mexq/partitions.hpp"
#include "mexq/qproducts.hpp"

using namespace mexq;

namespace {

// prod_{k>=0} (1 + s q^{a+kb}) through q^N by repeated binomial multiplication.
QSeries naive_pochhammer(int sign, std::int64_t a, std::int64_t b, std::int64_t N)
{
    QSeries acc = QSeries::one(N);
    for (std::int64_t e = a; e <= N; e += b) {
        std::vector<mpz_class> f(static_cast<std::size_t>(e + 1));
        f[0] = 1;
        f[static_cast<std::size_t>(e)] = sign > 0 ? -1 : 1;
        acc = acc * QSeries::polynomial(f, N);
    }
    return acc;
}

} // namespace

TEST_CASE("pochhammer products")
{
    CHECK(pochhammer({1, 1, 1}, 5) == QSeries::polynomial({1, -1, -1, 0, 0, 1}, 5));
    for (auto [s, a, b] : {std::tuple{1, 1, 1}, {-1, 1, 1}, {-1, 1, 2}, {1, 2, 2}, {-1, 3, 5}, {1, 4, 3}})
        CHECK(pochhammer({s, a, b}, 120) == naive_pochhammer(s, a, b, 120));
    CHECK_THROWS_AS(pochhammer({0, 1, 1}, 5), InvalidArgument);
    CHECK_THROWS_AS(pochhammer({1, 0, 1}, 5), InvalidArgument);
    CHECK_THROWS_AS(pochhammer({1, 1, 0}, 5), InvalidArgument);
    CHECK(pochhammer_mod({-1, 1, 2}, 200, 4) == series_reduce_mod(naive_pochhammer(-1, 1, 2, 200), 4));
}

TEST_CASE("pentagonal sum equals the product")
{
    const auto e = euler_pentagonal(12);
    CHECK(e == QSeries::polynomial({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}, 12));
    CHECK(e.nonzero_count() == 6);
    CHECK(euler_pentagonal(500) == naive_pochhammer(1, 1, 1, 500));
    CHECK(euler_pentagonal_mod(500, 2) == series_reduce_mod(euler_pentagonal(500), 2));
}

TEST_CASE("Euler identity (-q;q)(q;q) = (q^2;q^2)")
{
    const auto lhs = pochhammer({-1, 1, 1}, 500) * pochhammer({1, 1, 1}, 500);
    CHECK(lhs == pochhammer({1, 2, 2}, 500));
}

TEST_CASE("sigma_mex series")
{
    const auto s = sigma_mex_series(60);
    for (int n = 0; n <= 30; ++n)
        CHECK(s.coefficient(n) == sigma_mex_oracle(n));
    CHECK(s.coefficient(7) == 32);
    CHECK(sigma_mex_series(500) == sigma_mex_series_direct(500));
    for (std::uint64_t m : {2ULL, 4ULL, 16ULL, 1000003ULL, (1ULL << 61) - 1})
        CHECK(sigma_mex_series_mod(500, m) == series_reduce_mod(sigma_mex_series(500), static_cast<std::int64_t>(m)));
}

TEST_CASE("sigma_moex series")
{
    const auto s = sigma_moex_series(40);
    for (int n = 0; n <= 30; ++n)
        CHECK(s.coefficient(n) == sigma_moex_oracle(n));
    CHECK(s.prec() == 40);
    for (std::uint64_t m : {2ULL, 4ULL, 97ULL})
        CHECK(sigma_moex_series_mod(400, m) == series_reduce_mod(sigma_moex_series(400), static_cast<std::int64_t>(m)));
}

TEST_CASE("partition parity series")
{
    const auto par = partition_parity_series(2000);
    CHECK(par.modulus() == 2);
    const std::vector<std::uint64_t> head{1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 0};
    for (int n = 0; n <= 10; ++n)
        CHECK(par.coefficient(n) == head[static_cast<std::size_t>(n)]);
    const auto p = series_inverse(euler_pentagonal(2000));
    CHECK(par == series_reduce_mod(p, 2));
}

TEST_CASE("sigma_moex is congruent to p(n) mod 2")
{
    CHECK(sigma_moex_series_mod(2000, 2) == partition_parity_series(2000));
}
