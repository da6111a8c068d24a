#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include <gmpxx.h>

namespace mexq {

// Largest n accepted by the brute-force enumerators (p(60) = 966467).
inline constexpr int kMaxEnumeratedN = 60;

struct Partition {
    std::vector<int> parts; // non-increasing, all >= 1
    int n = 0;

    friend bool operator==(const Partition&, const Partition&) = default;
};

// Streams the partitions of n in reverse-lexicographic order, starting from
// {n} and ending at {1, ..., 1}. Only the current partition is held in memory.
class PartitionStream {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition*;
        using reference = const Partition&;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        bool operator==(std::default_sentinel_t) const { return done_; }

    private:
        friend class PartitionStream;
        explicit iterator(int n);
        Partition current_;
        bool done_ = true;
    };

    // RangeTooLarge when n > kMaxEnumeratedN; InvalidArgument when n < 0.
    explicit PartitionStream(int n);

    iterator begin() const { return iterator(n_); }
    std::default_sentinel_t end() const { return {}; }

private:
    int n_;
};

inline PartitionStream enumerate_partitions(int n) { return PartitionStream(n); }

// Smallest positive integer that is not a part.
int mex(const Partition& p);
// Smallest positive odd integer that is not a part.
int moex(const Partition& p);

mpz_class sigma_mex_oracle(int n);
mpz_class sigma_moex_oracle(int n);

} // namespace mexq
