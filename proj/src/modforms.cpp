#include "mexq/modforms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "mexq/errors.hpp"
#include "mexq/numtheory.hpp"
#include "mexq/parallel.hpp"
#include "mexq/qproducts.hpp"

namespace mexq {

EtaQuotient::EtaQuotient(std::int64_t level, std::vector<EtaFactor> factors) : level_(level)
{
    if (level < 1)
        throw InvalidArgument("level must be >= 1, got " + std::to_string(level));
    std::map<std::int64_t, std::int64_t> merged;
    for (const auto& f : factors) {
        if (f.delta < 1 || level % f.delta != 0)
            throw InvalidArgument("delta " + std::to_string(f.delta) + " does not divide level "
                                  + std::to_string(level));
        merged[f.delta] = checked_add(merged[f.delta], f.r);
    }
    for (const auto& [delta, r] : merged)
        if (r != 0)
            factors_.push_back({delta, r});
}

std::int64_t EtaQuotient::exponent_sum() const
{
    std::int64_t s = 0;
    for (const auto& f : factors_)
        s = checked_add(s, f.r);
    return s;
}

std::int64_t EtaQuotient::delta_weighted_sum() const
{
    std::int64_t s = 0;
    for (const auto& f : factors_)
        s = checked_add(s, checked_mul(f.delta, f.r));
    return s;
}

std::int64_t EtaQuotient::dual_weighted_sum() const
{
    std::int64_t s = 0;
    for (const auto& f : factors_)
        s = checked_add(s, checked_mul(level_ / f.delta, f.r));
    return s;
}

EtaQuotient eta12_squared() { return EtaQuotient(144, {{12, 2}}); }

int KroneckerCharacter::operator()(std::int64_t d) const { return kronecker(discriminant_, d); }

QSeries eta_expansion(const EtaQuotient& eq, std::int64_t N)
{
    if (N < 0)
        throw InvalidArgument("precision must be >= 0");
    const std::int64_t s = eq.delta_weighted_sum();
    if (s % 24 != 0)
        throw FractionalExponent("sum delta*r = " + std::to_string(s) + " is not a multiple of 24");
    if (s < 0)
        throw InvalidArgument("expansion would start at negative exponent " + std::to_string(s / 24));
    const std::int64_t offset = s / 24;
    if (N < offset)
        return QSeries(offset, N, {});

    const std::int64_t inner = N - offset;
    QSeries acc = QSeries::one(inner);
    for (const auto& f : eq.factors()) {
        const auto pent = euler_pentagonal(inner / f.delta).dilated(f.delta).truncated(inner);
        for (std::int64_t i = 0; i < (f.r > 0 ? f.r : -f.r); ++i)
            acc = f.r > 0 ? series_mul(acc, pent) : series_divide(acc, pent);
    }
    return acc.shifted(offset);
}

WeightCharacter weight_and_character(const EtaQuotient& eq)
{
    const std::int64_t s = eq.exponent_sum();
    if (s % 2 != 0)
        throw HalfIntegralWeight("sum of exponents " + std::to_string(s) + " is odd");
    const std::int64_t weight = s / 2;
    std::int64_t d = (weight % 2 == 0) ? 1 : -1;
    for (const auto& f : eq.factors())
        d = checked_mul(d, f.r % 2 != 0 ? f.delta : checked_mul(f.delta, f.delta));
    return {weight, KroneckerCharacter(d)};
}

ModularityConditions modularity_conditions(const EtaQuotient& eq)
{
    return {eq.exponent_sum() % 2 == 0, eq.delta_weighted_sum() % 24 == 0, eq.dual_weighted_sum() % 24 == 0};
}

mpq_class cusp_order(const EtaQuotient& eq, const CuspLabel& cusp)
{
    const std::int64_t N = eq.level();
    if (cusp.d < 1 || N % cusp.d != 0 || cusp.c < 1 || std::gcd(cusp.c, cusp.d) != 1)
        throw InvalidArgument("invalid cusp " + std::to_string(cusp.c) + "/" + std::to_string(cusp.d)
                              + " for level " + std::to_string(N));
    if (!modularity_conditions(eq).all())
        throw InvalidArgument("eta quotient fails the modularity conditions");
    const std::int64_t d = cusp.d;
    mpq_class sum = 0;
    for (const auto& f : eq.factors()) {
        const std::int64_t g = std::gcd(d, f.delta);
        mpz_class num = mpz_class(static_cast<long>(g)) * g * static_cast<long>(f.r);
        mpz_class den = mpz_class(static_cast<long>(std::gcd(d, N / d))) * static_cast<long>(d)
                        * static_cast<long>(f.delta);
        sum += mpq_class(num, den);
    }
    sum.canonicalize();
    mpq_class order = mpq_class(mpz_class(static_cast<long>(N)), mpz_class(24)) * sum;
    order.canonicalize();
    return order;
}

std::vector<CuspOrder> cusp_order_table(const EtaQuotient& eq)
{
    std::vector<CuspOrder> out;
    for (std::int64_t d : divisors(eq.level()))
        out.push_back({CuspLabel{1, d}, cusp_order(eq, CuspLabel{1, d})});
    return out;
}

QSeries hecke_Tm(const QSeries& f, std::int64_t m, std::int64_t weight, const KroneckerCharacter& chi,
                 std::int64_t N)
{
    if (m < 2)
        throw InvalidArgument("Hecke index must be >= 2");
    if (weight < 1)
        throw InvalidArgument("weight must be >= 1 for integral Hecke action");
    if (N < 0)
        throw InvalidArgument("precision must be >= 0");
    if (f.prec() < checked_mul(m, N))
        throw InsufficientPrecision("f|T_" + std::to_string(m) + " through q^" + std::to_string(N) + " needs prec "
                                    + std::to_string(m * N) + ", have " + std::to_string(f.prec()));

    // chi(d) d^{weight-1} for every divisor d of m
    std::vector<std::pair<std::int64_t, mpz_class>> twists;
    for (std::int64_t d : divisors(m)) {
        const int c = chi(d);
        if (c == 0)
            continue;
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(weight - 1));
        twists.emplace_back(d, c * t);
    }

    std::vector<mpz_class> out(static_cast<std::size_t>(N + 1));
    parallel_chunks(N + 1, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t n = lo; n < hi; ++n) {
            mpz_class acc = 0;
            for (const auto& [d, t] : twists) {
                if (n % d != 0)
                    continue;
                const mpz_class a = f.value_at(n / d * (m / d));
                if (sgn(a) != 0)
                    acc += t * a;
            }
            out[static_cast<std::size_t>(n)] = std::move(acc);
        }
    });
    return QSeries(0, N, std::move(out));
}

namespace {

void check_lemma_prime(std::int64_t p)
{
    if (!is_prime(p))
        throw BadPrime(std::to_string(p) + " is not prime");
    if (p % 12 == 1)
        throw BadPrime(std::to_string(p) + " = 1 (mod 12)");
}

} // namespace

VerificationReport lemma22_verify(std::int64_t p, std::int64_t N)
{
    check_lemma_prime(p);
    if (N < 0)
        throw InvalidArgument("N must be >= 0");
    const std::int64_t need = checked_add(checked_mul(checked_mul(p, p), N), p * (p - 1));
    return lemma22_verify(eta_expansion(eta12_squared(), need), p, N);
}

VerificationReport lemma22_verify(const QSeries& a, std::int64_t p, std::int64_t N)
{
    check_lemma_prime(p);
    if (N < 0)
        throw InvalidArgument("N must be >= 0");
    const std::int64_t p2 = checked_mul(p, p);
    const std::int64_t need = checked_add(checked_mul(p2, N), p * (p - 1));
    if (a.prec() < need)
        throw InsufficientPrecision("identity check for p=" + std::to_string(p) + ", N=" + std::to_string(N)
                                    + " needs prec " + std::to_string(need) + ", have " + std::to_string(a.prec()));
    const int chi_p = weight_and_character(eta12_squared()).character(p);

    VerificationReport rep;
    rep.claim = "lemma22";
    rep.range_lo = 0;
    rep.range_hi = N;
    std::int64_t literal_failures = 0;
    std::int64_t literal_cases = 0;
    for (std::int64_t n = 0; n <= N; ++n) {
        for (std::int64_t r = 1; r < p; ++r) {
            ++rep.cases;
            const mpz_class v = a.value_at(p2 * n + p * r);
            if (sgn(v) != 0)
                rep.counterexamples.push_back({{{"n", n}, {"p", p}, {"r", r}}, "0", v.get_str()});
        }
        ++rep.cases;
        const mpz_class lhs = a.value_at(p2 * n) + chi_p * a.value_at(n);
        if (sgn(lhs) != 0)
            rep.counterexamples.push_back({{{"n", n}, {"p", p}}, "0", lhs.get_str()});

        if (n % p != 0) {
            for (std::int64_t r = 0; r < p; ++r) {
                ++literal_cases;
                if (sgn(a.value_at(p2 * n + p * r)) != 0)
                    ++literal_failures;
            }
        }
    }
    rep.details["chi(p)"] = std::to_string(chi_p);
    rep.details["literal_reading_cases"] = std::to_string(literal_cases);
    rep.details["literal_reading_failures"] = std::to_string(literal_failures);
    rep.notes.push_back("a(" + std::to_string(p2) + "n + " + std::to_string(p) + "r) = 0 for 1 <= r <= "
                        + std::to_string(p - 1));
    rep.notes.push_back("a(" + std::to_string(p2) + "n) + (" + std::to_string(chi_p) + ")*a(n) = 0");
    rep.notes.push_back("reading 'p does not divide n' with r = 0.." + std::to_string(p - 1) + ": "
                        + std::to_string(literal_failures) + " of " + std::to_string(literal_cases)
                        + " cases nonzero");
    return rep;
}

VerificationReport eigenform_verify(const QSeries& f, std::int64_t p, std::int64_t weight,
                                    const KroneckerCharacter& chi, std::int64_t N)
{
    if (f.value_at(1) != 1)
        throw InvalidArgument("form is not normalized: a(1) = " + f.value_at(1).get_str());
    const QSeries image = hecke_Tm(f, p, weight, chi, N);
    const mpz_class lambda = f.value_at(p);

    VerificationReport rep;
    rep.claim = "eigenform";
    rep.range_lo = 0;
    rep.range_hi = N;
    for (std::int64_t n = 0; n <= N; ++n) {
        ++rep.cases;
        const mpz_class expected = lambda * f.value_at(n);
        const mpz_class& actual = image.coefficient(n);
        if (actual != expected)
            rep.counterexamples.push_back({{{"n", n}, {"p", p}}, expected.get_str(), actual.get_str()});
    }
    rep.details["lambda"] = lambda.get_str();
    rep.notes.push_back("f|T_" + std::to_string(p) + " = (" + lambda.get_str() + ") f");
    return rep;
}

} // namespace mexq
