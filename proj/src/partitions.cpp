#include "mexq/partitions.hpp"

#include <algorithm>
#include <string>

#include "mexq/errors.hpp"

namespace mexq {

namespace {

void check_range(int n)
{
    if (n < 0)
        throw InvalidArgument("partitions of negative n = " + std::to_string(n));
    if (n > kMaxEnumeratedN)
        throw RangeTooLarge("n = " + std::to_string(n) + " exceeds enumeration cap "
                            + std::to_string(kMaxEnumeratedN));
}

// Least k in start, start+step, ... that is not a part.
int least_missing(const Partition& p, int start, int step)
{
    std::vector<bool> present(static_cast<std::size_t>(p.n) + 2, false);
    for (int x : p.parts)
        present[static_cast<std::size_t>(x)] = true;
    int k = start;
    while (k <= p.n && present[static_cast<std::size_t>(k)])
        k += step;
    return k;
}

} // namespace

PartitionStream::PartitionStream(int n) : n_(n) { check_range(n); }

PartitionStream::iterator::iterator(int n) : done_(false)
{
    current_.n = n;
    if (n > 0)
        current_.parts = {n};
}

PartitionStream::iterator& PartitionStream::iterator::operator++()
{
    // Next partition in reverse-lex order: strip trailing 1s, decrement the
    // last part x > 1 and refill the remainder greedily with parts x - 1.
    auto& parts = current_.parts;
    int ones = 0;
    while (!parts.empty() && parts.back() == 1) {
        parts.pop_back();
        ++ones;
    }
    if (parts.empty()) {
        done_ = true;
        return *this;
    }
    const int x = --parts.back();
    int rest = ones + 1;
    while (rest >= x) {
        parts.push_back(x);
        rest -= x;
    }
    if (rest > 0)
        parts.push_back(rest);
    return *this;
}

int mex(const Partition& p) { return least_missing(p, 1, 1); }

int moex(const Partition& p) { return least_missing(p, 1, 2); }

mpz_class sigma_mex_oracle(int n)
{
    mpz_class total = 0;
    for (const auto& p : enumerate_partitions(n))
        total += mex(p);
    return total;
}

mpz_class sigma_moex_oracle(int n)
{
    mpz_class total = 0;
    for (const auto& p : enumerate_partitions(n))
        total += moex(p);
    return total;
}

} // namespace mexq
