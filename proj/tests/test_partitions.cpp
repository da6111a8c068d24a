#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "helpers.hpp"
#include "mexq/errors.hpp"
#include "mexq/partitions.hpp"
#include "mexq/qproducts.hpp"

using namespace mexq;

namespace {

Partition part(std::vector<int> parts)
{
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    return {std::move(parts), n};
}

} // namespace

TEST_CASE("enumeration order for n = 4")
{
    std::vector<std::vector<int>> got;
    for (const auto& p : enumerate_partitions(4))
        got.push_back(p.parts);
    CHECK(got == std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
}

TEST_CASE("n = 0 yields only the empty partition")
{
    std::vector<Partition> got;
    for (const auto& p : enumerate_partitions(0))
        got.push_back(p);
    REQUIRE(got.size() == 1);
    CHECK(got[0].parts.empty());
    CHECK(got[0].n == 0);
}

TEST_CASE("enumeration bounds")
{
    CHECK_THROWS_AS(PartitionStream{kMaxEnumeratedN + 1}, RangeTooLarge);
    CHECK_THROWS_AS(PartitionStream{-1}, InvalidArgument);
    CHECK_NOTHROW(PartitionStream{kMaxEnumeratedN});
}

TEST_CASE("every partition is valid and they are distinct")
{
    for (int n = 0; n <= 18; ++n) {
        std::set<std::vector<int>> seen;
        for (const auto& p : enumerate_partitions(n)) {
            CHECK(p.n == n);
            CHECK(std::accumulate(p.parts.begin(), p.parts.end(), 0) == n);
            CHECK(std::is_sorted(p.parts.rbegin(), p.parts.rend()));
            CHECK(std::all_of(p.parts.begin(), p.parts.end(), [](int x) { return x >= 1; }));
            CHECK(seen.insert(p.parts).second);
        }
    }
}

TEST_CASE("counts match the generating function")
{
    const auto p = series_inverse(euler_pentagonal(40));
    for (int n = 0; n <= 40; ++n)
        CHECK(p.coefficient(n) == mexq::test::partition_count(n));
    CHECK(mexq::test::partition_count(10) == 42);
}

TEST_CASE("mex and moex examples")
{
    CHECK(mex(part({})) == 1);
    CHECK(mex(part({3, 2})) == 1);
    CHECK(mex(part({3, 1})) == 2);
    CHECK(mex(part({4, 3, 2, 1})) == 5);
    CHECK(mex(part({2, 1, 1})) == 3);
    CHECK(moex(part({})) == 1);
    CHECK(moex(part({2, 2})) == 1);
    CHECK(moex(part({3, 1})) == 5);
    CHECK(moex(part({5, 3, 1})) == 7);
    CHECK(moex(part({5, 1})) == 3);
}

TEST_CASE("mex and moex invariants")
{
    for (int n = 0; n <= 16; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            const int a = mex(p);
            const int b = moex(p);
            const std::set<int> s(p.parts.begin(), p.parts.end());
            CHECK(a >= 1);
            CHECK(!s.count(a));
            for (int x = 1; x < a; ++x)
                CHECK(s.count(x));
            CHECK(b % 2 == 1);
            CHECK(!s.count(b));
            for (int x = 1; x < b; x += 2)
                CHECK(s.count(x));
            CHECK((a == 1) == !s.count(1));
            CHECK((b == 1) == !s.count(1));
        }
}

TEST_CASE("sigma oracles")
{
    const std::vector<int> mex_vals{1, 2, 3, 6, 9, 14, 22, 32};
    for (int n = 0; n < 8; ++n)
        CHECK(sigma_mex_oracle(n) == mex_vals[n]);
    const std::vector<int> moex_vals{1, 3, 4, 7, 13, 19, 29};
    for (int n = 0; n < 7; ++n)
        CHECK(sigma_moex_oracle(n) == moex_vals[n]);
    CHECK_THROWS_AS(sigma_mex_oracle(61), RangeTooLarge);
}
