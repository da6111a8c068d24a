#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mexq/report.hpp"
#include "mexq/series.hpp"

namespace mexq {

// Primes p_1..p_{k+1}, each >= 5 and = 5, 7, 11 (mod 12), defining the
// progressions
//   P n + P' p_{k+1} j + (P - 1)/12,   P' = (p_1...p_k)^2,  P = P' p_{k+1}^2,
// on which sigma_mex vanishes mod 4 for j != 0 (mod p_{k+1}).
class CongruenceFamily {
public:
    // BadPrime for any prime outside the allowed classes; InvalidArgument if empty.
    explicit CongruenceFamily(std::vector<std::int64_t> primes);

    const std::vector<std::int64_t>& primes() const noexcept { return primes_; }
    std::int64_t last_prime() const { return primes_.back(); }
    std::int64_t modulus() const noexcept { return modulus_; }   // P
    std::int64_t j_step() const noexcept { return j_step_; }     // P' p_{k+1}
    std::int64_t base() const noexcept { return base_; }         // (P - 1)/12

    // Argument for (n, j).
    std::int64_t argument(std::int64_t n, std::int64_t j) const;
    // The j values checked: one period 0..p_{k+1}^2 - 1 minus multiples of p_{k+1}.
    std::vector<std::int64_t> j_values() const;
    // Largest argument reached by verify_thm_families for n <= n_max.
    std::int64_t max_argument(std::int64_t n_max) const;

private:
    std::vector<std::int64_t> primes_;
    std::int64_t modulus_ = 1;
    std::int64_t j_step_ = 1;
    std::int64_t base_ = 0;
};

// p prime, p = i (mod 12) with i in {5, 7, 11}, k >= 1, and p | 12 delta + i:
//   sigma_mex(p^{k+1} n + p delta + (p i - 1)/12)
//     = f(p) sigma_mex(p^{k-1} n + (12 delta + i - p)/(12 p))  (mod 4).
struct MultiplicativeInstance {
    std::int64_t p;
    std::int64_t k;
    std::int64_t delta;

    // BadInstance when any constraint fails.
    void validate() const;
    std::int64_t residue() const { return p % 12; } // i
    std::int64_t lhs_argument(std::int64_t n) const;
    std::int64_t rhs_argument(std::int64_t n) const;
};

// -1 for p = 5 (mod 12), +1 for p = 7, 11 (mod 12); BadPrime otherwise.
int f_sign(std::int64_t p);

// The smallest `count` values of delta >= 0 with p | 12 delta + (p mod 12).
std::vector<std::int64_t> valid_deltas(std::int64_t p, std::int64_t count);

// delta with 12 delta + i = p^{2k-1}, the instance behind the corollary.
std::int64_t corollary_delta(std::int64_t p, std::int64_t k);

// (p^{2k}(12n + 1) - 1)/12.
std::int64_t corollary_argument(std::int64_t p, std::int64_t k, std::int64_t n);

// Each verifier has two forms: one reading a caller-supplied sigma_mex table
// whose modulus is a multiple of 4 (InsufficientPrecision if it is too
// short, BadModulus otherwise), and one that computes the table itself.
VerificationReport verify_thm_families(const CongruenceFamily& fam, std::int64_t n_max);
VerificationReport verify_thm_families(const CongruenceFamily& fam, std::int64_t n_max,
                                       const ModQSeries& sigma_mex);

VerificationReport verify_multiplicative(const MultiplicativeInstance& inst, std::int64_t n_max);
VerificationReport verify_multiplicative(const MultiplicativeInstance& inst, std::int64_t n_max,
                                         const ModQSeries& sigma_mex);

VerificationReport verify_corollary(std::int64_t p, std::int64_t k, std::int64_t n_max);
VerificationReport verify_corollary(std::int64_t p, std::int64_t k, std::int64_t n_max,
                                    const ModQSeries& sigma_mex);

// {n <= N : sigma_mex(n) odd}, increasing.
std::vector<std::int64_t> sigma_mex_parity_support(std::int64_t N);
// {0} u {j(3j +- 1) : j >= 1} within [0, N], increasing.
std::vector<std::int64_t> pentagonal_type_set(std::int64_t N);
// Checks the two sets agree and that sigma_mex(2n+1) is even.
VerificationReport verify_parity(std::int64_t N);

// For each 1 <= n <= N:
//   sum_{k>=0} s(n - k(3k-1)/2) + sum_{k>=1} s(n - k(3k+1)/2) = 0 (mod 2),
// s read from an even-modulus sigma_moex table (negative arguments are 0).
VerificationReport moex_recurrence_check(std::int64_t N, const ModQSeries& sigma_moex);
// Uses the product formula reduced mod 2.
VerificationReport moex_recurrence_check(std::int64_t N);

struct Witness {
    std::int64_t l;
    std::int64_t lo;
    std::int64_t hi;
    std::int64_t n;
    bool even; // parity of sigma_moex(n)
};

// Least n in [l, l(3l+1)/2] with sigma_moex(n) even; WitnessNotFound if none.
Witness witness_even_interval(std::int64_t l);
Witness witness_even_interval(std::int64_t l, const ModQSeries& parity);
// Least n in [2l-1, l(3l-1)/2] with sigma_moex(n) odd.
Witness witness_odd_interval(std::int64_t l);
Witness witness_odd_interval(std::int64_t l, const ModQSeries& parity);

// Runs both witness searches for l_min <= l <= l_max.
VerificationReport verify_witnesses(bool even, std::int64_t l_min, std::int64_t l_max);

// a_1 = start, a_k = a_{k-1}(3 a_{k-1} + sign)/2, every term <= limit plus the
// first term beyond it.
std::vector<std::int64_t> interval_chain(std::int64_t start, int sign, std::int64_t limit);

// floor(ln ln X), exact via integer thresholds; clamped at 0 for X < 3.
int floor_log_log(std::int64_t X);

struct ChainSummary {
    std::vector<std::int64_t> chain; // terms <= X
    std::int64_t nu;                 // number of terms <= X
    std::vector<Witness> witnesses;  // one per complete interval [a_{k-1}, a_k]
};

struct ParityCensus {
    std::int64_t X;
    std::int64_t even_count;
    std::int64_t odd_count;
    int lower_bound_floor; // floor(ln ln X)
    ChainSummary even_chain; // a_1 = 2
    ChainSummary odd_chain;  // a_1 = 5
};

ParityCensus parity_census(std::int64_t X);
ParityCensus parity_census(std::int64_t X, const ModQSeries& parity);
// even + odd = X and a witness for every complete interval of both chains.
VerificationReport verify_census(const ParityCensus& c);

struct DivisibilityCensus {
    std::int64_t X;
    int k;
    std::int64_t divisible; // #{1 <= n <= X : 2^k | sigma_mex(n)}
    mpq_class proportion;
};

// 1 <= k <= 4, X >= 1; computed on sigma_mex mod 16.
DivisibilityCensus divisibility_census(std::int64_t X, int k);
DivisibilityCensus divisibility_census(std::int64_t X, int k, const ModQSeries& sigma_mex_mod16);
VerificationReport report_divisibility(const DivisibilityCensus& c);

} // namespace mexq
