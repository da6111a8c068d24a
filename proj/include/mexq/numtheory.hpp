#pragma once

#include <cstdint>
#include <vector>

namespace mexq {

bool is_prime(std::int64_t n);

// Positive divisors of n >= 1 in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

// Kronecker symbol (a/n) for any integers a, n; extends the Jacobi symbol to
// even and negative n. Values in {-1, 0, 1}.
int kronecker(std::int64_t a, std::int64_t n);

// Overflow-checked arithmetic; throws InvalidArgument on overflow.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_pow(std::int64_t base, int exp);

// Generalized pentagonal numbers k(3k-1)/2 for k = 0, 1, -1, 2, -2, ... that
// are <= limit, paired with the sign (-1)^k. Sorted by exponent.
struct PentagonalTerm {
    std::int64_t exponent;
    int sign;
};
std::vector<PentagonalTerm> pentagonal_terms(std::int64_t limit);

} // namespace mexq
