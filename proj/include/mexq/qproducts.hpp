#pragma once

#include <cstdint>

#include "mexq/series.hpp"

namespace mexq {

// (sign' q^a; q^b)_inf with sign' = -sign, i.e. prod_{k>=0} (1 - sign * q^{a+kb}).
// sign = +1 gives (q^a; q^b)_inf, sign = -1 gives (-q^a; q^b)_inf.
struct PochhammerSpec {
    int sign = 1;
    std::int64_t a = 1;
    std::int64_t b = 1;

    // InvalidArgument unless sign is +-1 and a, b >= 1.
    void validate() const;
};

// Direct product of every factor with exponent <= N, truncated to prec N.
QSeries pochhammer(const PochhammerSpec& spec, std::int64_t N);
ModQSeries pochhammer_mod(const PochhammerSpec& spec, std::int64_t N, std::uint64_t m);

// sum_n (-1)^n q^{n(3n-1)/2} through exponent N; O(sqrt N) nonzero terms.
QSeries euler_pentagonal(std::int64_t N);
ModQSeries euler_pentagonal_mod(std::int64_t N, std::uint64_t m);

// sigma_mex(0..N) as (q^2;q^2)^2 / (q;q)^2: pentagonal numerator and two
// sparse triangular divisions, O(N sqrt N) coefficient operations.
QSeries sigma_mex_series(std::int64_t N);
ModQSeries sigma_mex_series_mod(std::int64_t N, std::uint64_t m);
// (-q;q)^2 by direct product; the reference the quotient form is checked against.
QSeries sigma_mex_series_direct(std::int64_t N);

// sigma_moex(0..N) as (-q;q) * (-q;q^2)^2 by direct products.
QSeries sigma_moex_series(std::int64_t N);
ModQSeries sigma_moex_series_mod(std::int64_t N, std::uint64_t m);

// 1/(q;q) mod 2 (partition-number parity) by the pentagonal recurrence,
// one byte per coefficient.
ModQSeries partition_parity_series(std::int64_t N);

} // namespace mexq
