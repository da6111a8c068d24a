#include "mexq/qproducts.hpp"

#include <string>

#include "kernels.hpp"
#include "mexq/errors.hpp"
#include "mexq/numtheory.hpp"

namespace mexq {

namespace {

void check_prec(std::int64_t N)
{
    if (N < 0)
        throw InvalidArgument("precision must be >= 0, got " + std::to_string(N));
}

template <class Ring>
std::vector<typename Ring::value_type> pochhammer_coeffs(const PochhammerSpec& spec, std::int64_t N,
                                                         const Ring& ring)
{
    spec.validate();
    check_prec(N);
    std::vector<typename Ring::value_type> c(static_cast<std::size_t>(N + 1), ring.zero());
    c[0] = ring.one();
    const auto factor = ring.from_int(-spec.sign);
    for (std::int64_t e = spec.a; e <= N; e += spec.b)
        detail::mul_binomial_in_place(c, factor, e, ring);
    return c;
}

template <class Ring>
std::vector<typename Ring::value_type> pentagonal_coeffs(std::int64_t N, const Ring& ring)
{
    check_prec(N);
    std::vector<typename Ring::value_type> c(static_cast<std::size_t>(N + 1), ring.zero());
    for (const auto& t : pentagonal_terms(N))
        c[static_cast<std::size_t>(t.exponent)] = ring.from_int(t.sign);
    return c;
}

// (q^2;q^2)^2 / (q;q)^2 on coefficient vectors of length N+1.
template <class Ring>
std::vector<typename Ring::value_type> sigma_mex_coeffs(std::int64_t N, const Ring& ring)
{
    using V = typename Ring::value_type;
    const auto len = N + 1;
    const auto p1 = pentagonal_coeffs(N, ring);
    std::vector<V> p2(static_cast<std::size_t>(len), ring.zero());
    for (const auto& t : pentagonal_terms(N / 2))
        p2[static_cast<std::size_t>(2 * t.exponent)] = ring.from_int(t.sign);
    const std::span<const V> p2s(p2);
    const auto num = detail::convolve<Ring>(p2s, p2s, len, ring);
    const auto inv0 = *ring.unit_inverse(ring.one());
    const auto once = detail::triangular_divide<Ring>(num, p1, inv0, len, ring);
    return detail::triangular_divide<Ring>(once, p1, inv0, len, ring);
}

template <class Ring>
std::vector<typename Ring::value_type> sigma_moex_coeffs(std::int64_t N, const Ring& ring)
{
    using V = typename Ring::value_type;
    const auto len = N + 1;
    const auto distinct = pochhammer_coeffs(PochhammerSpec{-1, 1, 1}, N, ring);
    const auto odd = pochhammer_coeffs(PochhammerSpec{-1, 1, 2}, N, ring);
    const std::span<const V> odds(odd);
    const auto odd_sq = detail::convolve<Ring>(odds, odds, len, ring);
    return detail::convolve<Ring>(std::span<const V>(distinct), std::span<const V>(odd_sq), len, ring);
}

} // namespace

void PochhammerSpec::validate() const
{
    if (sign != 1 && sign != -1)
        throw InvalidArgument("Pochhammer sign must be +1 or -1");
    if (a < 1 || b < 1)
        throw InvalidArgument("Pochhammer exponents must satisfy a >= 1, b >= 1");
}

QSeries pochhammer(const PochhammerSpec& spec, std::int64_t N)
{
    return QSeries(0, N, pochhammer_coeffs(spec, N, detail::ExactRing{}));
}

ModQSeries pochhammer_mod(const PochhammerSpec& spec, std::int64_t N, std::uint64_t m)
{
    return ModQSeries(0, N, m, pochhammer_coeffs(spec, N, detail::ModRing{m}));
}

QSeries euler_pentagonal(std::int64_t N) { return QSeries(0, N, pentagonal_coeffs(N, detail::ExactRing{})); }

ModQSeries euler_pentagonal_mod(std::int64_t N, std::uint64_t m)
{
    return ModQSeries(0, N, m, pentagonal_coeffs(N, detail::ModRing{m}));
}

QSeries sigma_mex_series(std::int64_t N)
{
    check_prec(N);
    return QSeries(0, N, sigma_mex_coeffs(N, detail::ExactRing{}));
}

ModQSeries sigma_mex_series_mod(std::int64_t N, std::uint64_t m)
{
    check_prec(N);
    if (m < 2)
        throw BadModulus("modulus must be >= 2");
    return ModQSeries(0, N, m, sigma_mex_coeffs(N, detail::ModRing{m}));
}

QSeries sigma_mex_series_direct(std::int64_t N)
{
    const auto d = pochhammer(PochhammerSpec{-1, 1, 1}, N);
    return series_mul(d, d);
}

QSeries sigma_moex_series(std::int64_t N)
{
    check_prec(N);
    return QSeries(0, N, sigma_moex_coeffs(N, detail::ExactRing{}));
}

ModQSeries sigma_moex_series_mod(std::int64_t N, std::uint64_t m)
{
    check_prec(N);
    if (m < 2)
        throw BadModulus("modulus must be >= 2");
    return ModQSeries(0, N, m, sigma_moex_coeffs(N, detail::ModRing{m}));
}

ModQSeries partition_parity_series(std::int64_t N)
{
    check_prec(N);
    // p(n) = sum_{k>=1} (-1)^{k+1} p(n - g_k); signs vanish mod 2.
    std::vector<std::int64_t> g;
    for (const auto& t : pentagonal_terms(N))
        if (t.exponent > 0)
            g.push_back(t.exponent);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(N + 1), 0);
    bits[0] = 1;
    for (std::int64_t n = 1; n <= N; ++n) {
        std::uint8_t acc = 0;
        const std::uint8_t* row = bits.data() + n;
        for (std::int64_t e : g) {
            if (e > n)
                break;
            acc ^= *(row - e);
        }
        bits[static_cast<std::size_t>(n)] = acc;
    }
    return ModQSeries(0, N, 2, std::vector<std::uint64_t>(bits.begin(), bits.end()));
}

} // namespace mexq
