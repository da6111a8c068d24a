#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>
#include "json.hpp"

namespace mexq {

// Truncated formal power series  sum_{n=offset}^{prec} c_n q^n  with exact
// integer coefficients. Coefficients at exponents above `prec` are unknown,
// not zero; exponents below `offset` are zero.
//
// Values are immutable after construction and may be shared between threads.
class QSeries {
public:
    // The zero series known through exponent `prec`.
    QSeries() = default;

    // Throws InvalidArgument if offset < 0 or coeffs.size() does not match
    // prec - offset + 1 (empty when prec < offset).
    QSeries(std::int64_t offset, std::int64_t prec, std::vector<mpz_class> coeffs);

    static QSeries zero(std::int64_t prec);
    static QSeries one(std::int64_t prec);
    // c_0 + c_1 q + ... truncated (or zero-padded) to `prec`.
    static QSeries polynomial(std::vector<mpz_class> coeffs, std::int64_t prec);

    std::int64_t offset() const noexcept { return offset_; }
    std::int64_t prec() const noexcept { return prec_; }
    std::span<const mpz_class> coeffs() const noexcept { return coeffs_; }
    bool empty() const noexcept { return coeffs_.empty(); }

    // Stored coefficient of q^n; OutOfPrecision unless offset <= n <= prec.
    const mpz_class& coefficient(std::int64_t n) const;
    // Like coefficient(), but exponents below the offset read as zero.
    mpz_class value_at(std::int64_t n) const;

    std::size_t nonzero_count() const;
    bool is_zero() const;

    // Lowers prec; asking for a larger prec throws InvalidArgument.
    QSeries truncated(std::int64_t prec) const;
    // Exact multiplication by q^k (k >= 0): offset and prec both move by k.
    QSeries shifted(std::int64_t k) const;
    // f(q) -> f(q^k), k >= 1. Precision scales to k*prec.
    QSeries dilated(std::int64_t k) const;
    // Raises the offset past leading zero coefficients.
    QSeries normalized() const;

    // Semantic equality: same prec and same coefficient at every exponent <= prec.
    friend bool operator==(const QSeries& a, const QSeries& b);

private:
    std::int64_t offset_ = 0;
    std::int64_t prec_ = -1;
    std::vector<mpz_class> coeffs_;
};

// Same shape as QSeries with coefficients reduced to canonical residues in
// [0, modulus). Supports moduli in [2, 2^63).
class ModQSeries {
public:
    ModQSeries() = default;
    ModQSeries(std::int64_t offset, std::int64_t prec, std::uint64_t modulus,
               std::vector<std::uint64_t> residues);

    static ModQSeries zero(std::int64_t prec, std::uint64_t modulus);
    static ModQSeries one(std::int64_t prec, std::uint64_t modulus);

    std::int64_t offset() const noexcept { return offset_; }
    std::int64_t prec() const noexcept { return prec_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    std::span<const std::uint64_t> coeffs() const noexcept { return coeffs_; }
    bool empty() const noexcept { return coeffs_.empty(); }

    std::uint64_t coefficient(std::int64_t n) const;
    std::uint64_t value_at(std::int64_t n) const;
    std::size_t nonzero_count() const;

    ModQSeries truncated(std::int64_t prec) const;
    ModQSeries shifted(std::int64_t k) const;

    friend bool operator==(const ModQSeries& a, const ModQSeries& b);

private:
    std::int64_t offset_ = 0;
    std::int64_t prec_ = -1;
    std::uint64_t modulus_ = 2;
    std::vector<std::uint64_t> coeffs_;
};

// Arithmetic. Results have offset = min (add) or sum (mul) of input offsets and
// prec no larger than the smallest input prec.
QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_sub(const QSeries& a, const QSeries& b);
QSeries series_neg(const QSeries& a);
QSeries series_scale(const QSeries& a, const mpz_class& c);
// Cauchy product. Iterates only the nonzero support of each operand, so a
// pentagonal-type operand with O(sqrt N) terms costs O(N sqrt N).
QSeries series_mul(const QSeries& a, const QSeries& b);
QSeries series_pow(const QSeries& a, std::int64_t e);
// Requires offset 0 and leading coefficient +-1 (NonUnitLeadingCoefficient).
QSeries series_inverse(const QSeries& a);
// num / den via the triangular recurrence; den as for series_inverse.
QSeries series_divide(const QSeries& num, const QSeries& den);

ModQSeries series_add(const ModQSeries& a, const ModQSeries& b);
ModQSeries series_sub(const ModQSeries& a, const ModQSeries& b);
ModQSeries series_mul(const ModQSeries& a, const ModQSeries& b);
ModQSeries series_pow(const ModQSeries& a, std::int64_t e);
// Leading coefficient must be a unit modulo m.
ModQSeries series_inverse(const ModQSeries& a);
ModQSeries series_divide(const ModQSeries& num, const ModQSeries& den);

// BadModulus when m < 2 (or, for the ModQSeries overload, when m does not
// divide the current modulus).
ModQSeries series_reduce_mod(const QSeries& a, std::int64_t m);
ModQSeries series_reduce_mod(const ModQSeries& a, std::int64_t m);

inline const mpz_class& coefficient(const QSeries& a, std::int64_t n) { return a.coefficient(n); }
inline std::uint64_t coefficient(const ModQSeries& a, std::int64_t n) { return a.coefficient(n); }

inline QSeries operator+(const QSeries& a, const QSeries& b) { return series_add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return series_sub(a, b); }
inline QSeries operator-(const QSeries& a) { return series_neg(a); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return series_mul(a, b); }
inline ModQSeries operator+(const ModQSeries& a, const ModQSeries& b) { return series_add(a, b); }
inline ModQSeries operator-(const ModQSeries& a, const ModQSeries& b) { return series_sub(a, b); }
inline ModQSeries operator*(const ModQSeries& a, const ModQSeries& b) { return series_mul(a, b); }

// {"offset": int, "prec": int, "coeffs": ["decimal", ...]}; the modular form
// adds "modulus". Parsing validates the same invariants as the constructors.
nlohmann::json to_json(const QSeries& a);
nlohmann::json to_json(const ModQSeries& a);
QSeries series_from_json(const nlohmann::json& j);
ModQSeries mod_series_from_json(const nlohmann::json& j);

// Human-readable rendering, e.g. "q - 2*q^13 - q^25 + O(q^26)".
std::string to_string(const QSeries& a);
std::string to_string(const ModQSeries& a);

} // namespace mexq
