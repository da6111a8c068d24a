#pragma once

// Shared test-only helpers: random series generators and small brute-force
// oracles that do not go through the library's fast paths.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "mexq/partitions.hpp"
#include "mexq/series.hpp"

namespace mexq::test {

inline QSeries random_series(std::mt19937_64& rng, std::int64_t prec, std::int64_t offset = 0, int bound = 50)
{
    std::uniform_int_distribution<int> dist(-bound, bound);
    std::vector<mpz_class> c(static_cast<std::size_t>(prec - offset + 1));
    for (auto& v : c)
        v = dist(rng);
    return QSeries(offset, prec, std::move(c));
}

// Constant term forced to +-1.
inline QSeries random_unit_series(std::mt19937_64& rng, std::int64_t prec)
{
    auto s = random_series(rng, prec);
    std::vector<mpz_class> c(s.coeffs().begin(), s.coeffs().end());
    c[0] = (rng() & 1) ? 1 : -1;
    return QSeries(0, prec, std::move(c));
}

// Schoolbook product of coefficient lists, no truncation logic shared with the library.
inline std::vector<mpz_class> naive_product(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                                            std::size_t len)
{
    std::vector<mpz_class> c(len);
    for (std::size_t i = 0; i < a.size() && i < len; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

// Number of partitions of n, counted by enumeration.
inline std::int64_t partition_count(int n)
{
    std::int64_t k = 0;
    for ([[maybe_unused]] const auto& p : enumerate_partitions(n))
        ++k;
    return k;
}

} // namespace mexq::test
