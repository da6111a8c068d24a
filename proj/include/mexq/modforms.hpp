#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mexq/report.hpp"
#include "mexq/series.hpp"

namespace mexq {

struct EtaFactor {
    std::int64_t delta;
    std::int64_t r;

    friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

// prod_{delta | N} eta(delta z)^{r_delta}.
class EtaQuotient {
public:
    // Repeated deltas are merged by adding exponents and zero exponents are
    // dropped. InvalidArgument if level < 1 or some delta does not divide it.
    EtaQuotient(std::int64_t level, std::vector<EtaFactor> factors);

    std::int64_t level() const noexcept { return level_; }
    // Sorted by delta, distinct, all r nonzero.
    const std::vector<EtaFactor>& factors() const noexcept { return factors_; }

    std::int64_t exponent_sum() const;   // sum r_delta = 2 * weight
    std::int64_t delta_weighted_sum() const; // sum delta * r_delta
    std::int64_t dual_weighted_sum() const;  // sum (N/delta) * r_delta

private:
    std::int64_t level_;
    std::vector<EtaFactor> factors_;
};

// eta(12z)^2 on Gamma_0(144).
EtaQuotient eta12_squared();

// d -> (D/d), the Kronecker symbol with fixed discriminant D.
class KroneckerCharacter {
public:
    explicit KroneckerCharacter(std::int64_t discriminant) : discriminant_(discriminant) {}
    std::int64_t discriminant() const noexcept { return discriminant_; }
    int operator()(std::int64_t d) const;

private:
    std::int64_t discriminant_;
};

// A cusp c/d of Gamma_0(N): d | N, gcd(c, d) = 1, c >= 1.
struct CuspLabel {
    std::int64_t c = 1;
    std::int64_t d = 1;
};

// q-expansion through exponent N. Offset is sum delta r_delta / 24; negative
// exponents divide by the pentagonal series. FractionalExponent when that sum
// is not a multiple of 24, InvalidArgument when it is negative.
QSeries eta_expansion(const EtaQuotient& eq, std::int64_t N);

struct WeightCharacter {
    std::int64_t weight;
    KroneckerCharacter character;
};

// weight = sum r / 2 and D = (-1)^weight prod delta^{e_delta}, with e_delta
// equal to 1 for odd r_delta and 2 for even r_delta. This differs from
// prod delta^{r_delta} by a rational square, so the symbol is the same.
// HalfIntegralWeight when sum r is odd.
WeightCharacter weight_and_character(const EtaQuotient& eq);

struct ModularityConditions {
    bool integral_weight;   // sum r_delta even
    bool delta_sum_ok;      // sum delta r_delta = 0 mod 24
    bool dual_sum_ok;       // sum (N/delta) r_delta = 0 mod 24
    bool all() const { return integral_weight && delta_sum_ok && dual_sum_ok; }
};

ModularityConditions modularity_conditions(const EtaQuotient& eq);

// Ligozat: (N/24) sum gcd(d,delta)^2 r_delta / (gcd(d,N/d) d delta), exact.
// InvalidArgument if the cusp label is invalid for the level or the quotient
// fails the modularity conditions.
mpq_class cusp_order(const EtaQuotient& eq, const CuspLabel& cusp);

struct CuspOrder {
    CuspLabel cusp;
    mpq_class order;
};
// One cusp 1/d per divisor d of the level.
std::vector<CuspOrder> cusp_order_table(const EtaQuotient& eq);

// f | T_m through exponent N:
//   b(n) = sum_{d | gcd(n, m)} chi(d) d^{weight-1} a(nm/d^2).
// InsufficientPrecision when f.prec() < m * N; InvalidArgument when m < 2 or
// weight < 1.
QSeries hecke_Tm(const QSeries& f, std::int64_t m, std::int64_t weight, const KroneckerCharacter& chi,
                 std::int64_t N);

// Vanishing and sign identities of eta(12z)^2 for a prime p != 1 (mod 12), n = 0..N:
//   a(p^2 n + p r) = 0 for 1 <= r <= p-1, and a(p^2 n) + chi(p) a(n) = 0,
// with chi the character of eta(12z)^2 (equal to (-1/p) for p >= 5).
// BadPrime when p is not prime or p = 1 (mod 12).
VerificationReport lemma22_verify(std::int64_t p, std::int64_t N);
// Same, against a caller-supplied expansion; InsufficientPrecision if it
// does not reach p^2 N + p(p-1).
VerificationReport lemma22_verify(const QSeries& expansion, std::int64_t p, std::int64_t N);

// Eigenvalue check for a normalized form: f|T_p = a(p) f for n <= N. Asserts
// a(1) = 1 (InvalidArgument otherwise).
VerificationReport eigenform_verify(const QSeries& f, std::int64_t p, std::int64_t weight,
                                    const KroneckerCharacter& chi, std::int64_t N);

} // namespace mexq
