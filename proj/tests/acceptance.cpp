// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mexq/congruences.hpp"
#include "mexq/errors.hpp"
#include "mexq/modforms.hpp"
#include "mexq/partitions.hpp"
#include "mexq/qproducts.hpp"

using namespace mexq;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    const char* id;
    const char* title;
    double limit_s; // 0 = no time limit
    std::function<void(Outcome&)> body;
};

void ac1(Outcome& o)
{
    const auto mex = sigma_mex_series(40);
    const auto moex = sigma_moex_series(40);
    for (int n = 0; n <= 40; ++n) {
        o.require(sigma_mex_oracle(n) == mex.coefficient(n), "sigma_mex mismatch at n=" + std::to_string(n));
        o.require(sigma_moex_oracle(n) == moex.coefficient(n), "sigma_moex mismatch at n=" + std::to_string(n));
    }
}

void ac2(Outcome& o)
{
    o.require(sigma_mex_oracle(4) == 9, "sigma_mex(4) != 9");
    o.require(sigma_mex_series(4).coefficient(4) == 9, "series sigma_mex(4) != 9");
    const std::vector<long> moex{1, 3, 4, 7, 13, 19, 29};
    const auto s = sigma_moex_series(6);
    for (int n = 0; n <= 6; ++n)
        o.require(s.coefficient(n) == moex[static_cast<std::size_t>(n)], "sigma_moex(" + std::to_string(n) + ")");
    const auto f = eta_expansion(eta12_squared(), 61);
    o.require(to_string(f) == "q - 2*q^13 - q^25 + 2*q^37 + q^49 + 2*q^61 + O(q^62)", "eta(12z)^2 head: " + to_string(f));
}

void ac3(Outcome& o)
{
    const auto eq = eta12_squared();
    o.require(eq.level() == 144, "level");
    o.require(modularity_conditions(eq).all(), "modularity conditions");
    const auto wc = weight_and_character(eq);
    o.require(wc.weight == 1, "weight");
    const KroneckerCharacter minus_one(-1);
    for (std::int64_t d = 5; d < 5000; ++d)
        if (d % 2 != 0 && d % 3 != 0)
            o.require(wc.character(d) == minus_one(d), "character at d=" + std::to_string(d));
    const auto table = cusp_order_table(eq);
    o.require(table.size() == 15, "divisor count of 144");
    for (const auto& row : table)
        o.require(row.order == 1, "cusp order at 1/" + std::to_string(row.cusp.d) + " = " + row.order.get_str());
}

void ac4(Outcome& o)
{
    const std::int64_t N = 10000;
    const auto wc = weight_and_character(eta12_squared());
    const auto f = eta_expansion(eta12_squared(), 23 * N);
    for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23}) {
        const auto r = eigenform_verify(f, p, wc.weight, wc.character, N);
        o.require(r.passed(), "eigenform fails at p=" + std::to_string(p));
    }
    const auto g = f.truncated(N);
    for (std::int64_t p : {5, 7, 11}) {
        const std::int64_t reach = (N - p * (p - 1)) / (p * p);
        const auto r = lemma22_verify(g, p, reach);
        o.require(r.passed(), "vanishing/sign identities fail at p=" + std::to_string(p));
        o.require(std::stoi(r.details.at("chi(p)")) == KroneckerCharacter(-1)(p), "chi(p) at p=" + std::to_string(p));
    }
}

void ac5(Outcome& o)
{
    const auto f = eta_expansion(eta12_squared(), 12 * 1000 + 1);
    const auto s = sigma_mex_series_mod(1000, 4);
    for (std::int64_t n = 0; n <= 1000; ++n) {
        mpz_class a = f.coefficient(12 * n + 1) % 4;
        if (a < 0)
            a += 4;
        o.require(a.get_ui() == s.coefficient(n), "a(12n+1) != sigma_mex(n) mod 4 at n=" + std::to_string(n));
    }
}

void ac6(Outcome& o)
{
    for (std::int64_t p : {5, 7, 11})
        o.require(verify_thm_families(CongruenceFamily({p}), 200).passed(), "family p=" + std::to_string(p));
    o.require(verify_thm_families(CongruenceFamily({5, 7}), 20).passed(), "family (5, 7)");
}

void ac7(Outcome& o)
{
    const auto s = sigma_mex_series_mod(121 * 100 + 10, 4);
    for (std::int64_t n = 0; n <= 100; ++n) {
        const auto v = s.coefficient(n);
        o.require((v + s.coefficient(25 * n + 2)) % 4 == 0, "-sigma(25n+2) at n=" + std::to_string(n));
        o.require(v == s.coefficient(49 * n + 4), "sigma(49n+4) at n=" + std::to_string(n));
        o.require(v == s.coefficient(121 * n + 10), "sigma(121n+10) at n=" + std::to_string(n));
    }
    for (std::int64_t p : {5, 7, 11})
        o.require(verify_corollary(p, 1, 100).passed(), "k=1 relation p=" + std::to_string(p));
    o.require(verify_corollary(5, 2, 20).passed(), "k=2 relation p=5");
}

void ac8(Outcome& o)
{
    const std::int64_t N = 10000;
    o.require(sigma_mex_parity_support(N) == pentagonal_type_set(N), "odd support != pentagonal-type set");
    const auto s = sigma_mex_series_mod(N, 2);
    for (std::int64_t n = 1; n <= N; n += 2)
        o.require(s.coefficient(n) == 0, "sigma_mex odd at " + std::to_string(n));
    o.require(verify_parity(N).passed(), "parity verifier");
}

ParityCensus& census_1e6()
{
    static ParityCensus c = parity_census(1000000);
    return c;
}

void ac9(Outcome& o)
{
    o.require(moex_recurrence_check(10000).passed(), "recurrence");
    o.require(verify_witnesses(true, 2, 200).passed(), "even witnesses");
    o.require(verify_witnesses(false, 2, 200).passed(), "odd witnesses");
    const auto& c = census_1e6();
    o.require(c.even_count + c.odd_count == c.X, "even + odd != X");
    o.require(verify_census(c).passed(), "census verifier");
}

void ac10(Outcome& o)
{
    const auto& c = census_1e6();
    const auto even = interval_chain(2, 1, c.X);
    const auto odd = interval_chain(5, -1, c.X);
    o.require(c.even_chain.chain == std::vector<std::int64_t>(even.begin(), even.end() - 1), "even chain");
    o.require(c.odd_chain.chain == std::vector<std::int64_t>(odd.begin(), odd.end() - 1), "odd chain");
    o.require(c.even_chain.witnesses.size() + 1 == c.even_chain.chain.size(), "one even witness per interval");
    o.require(c.odd_chain.witnesses.size() + 1 == c.odd_chain.chain.size(), "one odd witness per interval");
    for (const auto& w : c.even_chain.witnesses)
        o.require(w.even && w.lo <= w.n && w.n <= w.hi, "even witness outside its interval");
    for (const auto& w : c.odd_chain.witnesses)
        o.require(!w.even && w.lo <= w.n && w.n <= w.hi, "odd witness outside its interval");
    o.require(c.even_chain.nu >= c.lower_bound_floor && c.odd_chain.nu >= c.lower_bound_floor,
              "chain length below floor(log log X)");
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {"AC1", "oracle gate, n <= 40, exact", 30, ac1},
        {"AC2", "stated values of sigma_mex, sigma_moex, eta(12z)^2", 0, ac2},
        {"AC3", "eta(12z)^2 modular of weight 1, level 144, character (-1/d), cusp orders 1", 0, ac3},
        {"AC4", "Hecke eigenform p <= 23 to n = 10^4; vanishing/sign identities p = 5, 7, 11", 60, ac4},
        {"AC5", "a(12n+1) = sigma_mex(n) mod 4, n <= 1000", 0, ac5},
        {"AC6", "mod 4 vanishing families p = 5, 7, 11 (n <= 200) and (5, 7) (n <= 20)", 0, ac6},
        {"AC7", "multiplicative relations mod 4, n <= 100; k = 2 at p = 5, n <= 20", 0, ac7},
        {"AC8", "odd values of sigma_mex on the pentagonal-type set, N = 10^4", 0, ac8},
        {"AC9", "moex recurrence n <= 10^4, witnesses 2 <= l <= 200, census X = 10^6", 60, ac9},
        {"AC10", "interval chains and one witness per interval up to X = 10^6", 0, ac10},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && dt > c.limit_s) {
            if (o.ok)
                o.detail = "time limit exceeded";
            o.ok = false;
        }
        char timing[64];
        if (c.limit_s > 0)
            std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", dt, c.limit_s);
        else
            std::snprintf(timing, sizeof timing, "%.2f s", dt);
        std::printf("[%s] %-4s %s (%s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, timing,
                    o.ok ? "" : ": ", o.detail.c_str());
        std::fflush(stdout);
        failures += o.ok ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
