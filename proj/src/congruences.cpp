#include "mexq/congruences.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mexq/errors.hpp"
#include "mexq/numtheory.hpp"
#include "mexq/qproducts.hpp"

namespace mexq {

namespace {

bool allowed_class(std::int64_t p)
{
    const auto i = p % 12;
    return i == 5 || i == 7 || i == 11;
}

void check_table(const ModQSeries& t, std::uint64_t divisor, std::int64_t need, const std::string& what)
{
    if (t.modulus() % divisor != 0)
        throw BadModulus(what + " table modulus " + std::to_string(t.modulus()) + " is not a multiple of "
                         + std::to_string(divisor));
    if (t.prec() < need)
        throw InsufficientPrecision(what + " table reaches " + std::to_string(t.prec()) + ", need "
                                    + std::to_string(need));
}

std::uint64_t mod4(const ModQSeries& t, std::int64_t n) { return t.value_at(n) % 4; }

std::string residue4(std::int64_t v) { return std::to_string(((v % 4) + 4) % 4) + " (mod 4)"; }

std::string progression(std::int64_t a, std::int64_t b)
{
    const std::string head = (a == 1 ? "" : std::to_string(a)) + "n";
    return b == 0 ? head : head + " + " + std::to_string(b);
}

std::string join(const std::vector<std::int64_t>& v, const char* sep)
{
    std::string s;
    for (auto x : v) {
        if (!s.empty())
            s += sep;
        s += std::to_string(x);
    }
    return s;
}

} // namespace

// ---- vanishing families --------------------------------------------------

CongruenceFamily::CongruenceFamily(std::vector<std::int64_t> primes) : primes_(std::move(primes))
{
    if (primes_.empty())
        throw InvalidArgument("congruence family needs at least one prime");
    for (auto p : primes_) {
        if (!is_prime(p) || p < 5 || !allowed_class(p))
            throw BadPrime(std::to_string(p) + " is not a prime >= 5 with p = 5, 7, 11 (mod 12)");
        modulus_ = checked_mul(modulus_, checked_mul(p, p));
    }
    const std::int64_t q = primes_.back();
    j_step_ = modulus_ / q;
    base_ = (modulus_ - 1) / 12;
}

std::int64_t CongruenceFamily::argument(std::int64_t n, std::int64_t j) const
{
    return checked_add(checked_add(checked_mul(modulus_, n), checked_mul(j_step_, j)), base_);
}

std::vector<std::int64_t> CongruenceFamily::j_values() const
{
    const std::int64_t q = primes_.back();
    std::vector<std::int64_t> js;
    for (std::int64_t j = 0; j < q * q; ++j)
        if (j % q != 0)
            js.push_back(j);
    return js;
}

std::int64_t CongruenceFamily::max_argument(std::int64_t n_max) const
{
    const std::int64_t q = primes_.back();
    return argument(n_max, q * q - 1);
}

VerificationReport verify_thm_families(const CongruenceFamily& fam, std::int64_t n_max)
{
    if (n_max < 0)
        throw InvalidArgument("n_max must be >= 0");
    return verify_thm_families(fam, n_max, sigma_mex_series_mod(fam.max_argument(n_max), 4));
}

VerificationReport verify_thm_families(const CongruenceFamily& fam, std::int64_t n_max, const ModQSeries& s)
{
    if (n_max < 0)
        throw InvalidArgument("n_max must be >= 0");
    check_table(s, 4, fam.max_argument(n_max), "sigma_mex");
    VerificationReport rep;
    rep.claim = "thm1";
    rep.range_lo = 0;
    rep.range_hi = n_max;
    const auto js = fam.j_values();
    for (std::int64_t j : js) {
        for (std::int64_t n = 0; n <= n_max; ++n) {
            const std::int64_t arg = fam.argument(n, j);
            ++rep.cases;
            if (const auto v = mod4(s, arg); v != 0)
                rep.counterexamples.push_back(
                    {{{"arg", arg}, {"j", j}, {"n", n}}, "0 (mod 4)", std::to_string(v) + " (mod 4)"});
        }
        rep.notes.push_back("sigma_mex(" + progression(fam.modulus(), fam.argument(0, j)) + ") = 0 (mod 4)");
    }
    rep.details["primes"] = join(fam.primes(), ",");
    rep.details["modulus"] = std::to_string(fam.modulus());
    rep.details["j_count"] = std::to_string(js.size());
    return rep;
}

// ---- multiplicative formulas -----------------------------------------------

int f_sign(std::int64_t p)
{
    if (!is_prime(p) || !allowed_class(p))
        throw BadPrime(std::to_string(p) + " is not a prime = 5, 7, 11 (mod 12)");
    return p % 12 == 5 ? -1 : 1;
}

void MultiplicativeInstance::validate() const
{
    if (!is_prime(p) || !allowed_class(p))
        throw BadInstance("p = " + std::to_string(p) + " is not a prime = 5, 7, 11 (mod 12)");
    if (k < 1)
        throw BadInstance("k must be >= 1");
    if (delta < 0)
        throw BadInstance("delta must be >= 0");
    const auto i = residue();
    if ((12 * delta + i) % p != 0)
        throw BadInstance(std::to_string(p) + " does not divide 12*" + std::to_string(delta) + " + "
                          + std::to_string(i));
}

std::int64_t MultiplicativeInstance::lhs_argument(std::int64_t n) const
{
    const auto i = residue();
    return checked_add(checked_add(checked_mul(checked_pow(p, static_cast<int>(k + 1)), n), checked_mul(p, delta)),
                       (p * i - 1) / 12);
}

std::int64_t MultiplicativeInstance::rhs_argument(std::int64_t n) const
{
    const auto i = residue();
    return checked_add(checked_mul(checked_pow(p, static_cast<int>(k - 1)), n), (12 * delta + i - p) / (12 * p));
}

std::vector<std::int64_t> valid_deltas(std::int64_t p, std::int64_t count)
{
    f_sign(p);
    const auto i = p % 12;
    std::vector<std::int64_t> out;
    for (std::int64_t delta = 0; static_cast<std::int64_t>(out.size()) < count; ++delta)
        if ((12 * delta + i) % p == 0)
            out.push_back(delta);
    return out;
}

std::int64_t corollary_delta(std::int64_t p, std::int64_t k)
{
    f_sign(p);
    if (k < 1)
        throw InvalidArgument("k must be >= 1");
    return (checked_pow(p, static_cast<int>(2 * k - 1)) - p % 12) / 12;
}

std::int64_t corollary_argument(std::int64_t p, std::int64_t k, std::int64_t n)
{
    return (checked_mul(checked_pow(p, static_cast<int>(2 * k)), checked_add(checked_mul(12, n), 1)) - 1) / 12;
}

VerificationReport verify_multiplicative(const MultiplicativeInstance& inst, std::int64_t n_max)
{
    inst.validate();
    if (n_max < 0)
        throw InvalidArgument("n_max must be >= 0");
    return verify_multiplicative(inst, n_max, sigma_mex_series_mod(inst.lhs_argument(n_max), 4));
}

VerificationReport verify_multiplicative(const MultiplicativeInstance& inst, std::int64_t n_max,
                                         const ModQSeries& s)
{
    inst.validate();
    if (n_max < 0)
        throw InvalidArgument("n_max must be >= 0");
    check_table(s, 4, std::max(inst.lhs_argument(n_max), inst.rhs_argument(n_max)), "sigma_mex");
    const int f = f_sign(inst.p);
    VerificationReport rep;
    rep.claim = "thm2";
    rep.range_lo = 0;
    rep.range_hi = n_max;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const auto l = inst.lhs_argument(n);
        const auto r = inst.rhs_argument(n);
        ++rep.cases;
        const auto lhs = static_cast<std::int64_t>(mod4(s, l));
        const auto rhs = f * static_cast<std::int64_t>(mod4(s, r));
        if ((lhs - rhs) % 4 != 0)
            rep.counterexamples.push_back({{{"lhs_arg", l}, {"n", n}, {"rhs_arg", r}}, residue4(rhs), residue4(lhs)});
    }
    rep.details["f(p)"] = std::to_string(f);
    rep.details["p"] = std::to_string(inst.p);
    rep.details["k"] = std::to_string(inst.k);
    rep.details["delta"] = std::to_string(inst.delta);
    rep.notes.push_back("sigma_mex(" + progression(inst.lhs_argument(1) - inst.lhs_argument(0), inst.lhs_argument(0))
                        + ") = (" + std::to_string(f) + ") * sigma_mex("
                        + progression(inst.rhs_argument(1) - inst.rhs_argument(0), inst.rhs_argument(0))
                        + ") (mod 4)");
    return rep;
}

VerificationReport verify_corollary(std::int64_t p, std::int64_t k, std::int64_t n_max)
{
    f_sign(p);
    if (k < 1 || n_max < 0)
        throw InvalidArgument("need k >= 1 and n_max >= 0");
    return verify_corollary(p, k, n_max, sigma_mex_series_mod(corollary_argument(p, k, n_max), 4));
}

VerificationReport verify_corollary(std::int64_t p, std::int64_t k, std::int64_t n_max, const ModQSeries& s)
{
    const int f = f_sign(p);
    if (k < 1 || n_max < 0)
        throw InvalidArgument("need k >= 1 and n_max >= 0");
    check_table(s, 4, corollary_argument(p, k, n_max), "sigma_mex");
    const int fk = (k % 2 == 0) ? 1 : f;
    VerificationReport rep;
    rep.claim = "cor";
    rep.range_lo = 0;
    rep.range_hi = n_max;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const auto arg = corollary_argument(p, k, n);
        ++rep.cases;
        const auto lhs = static_cast<std::int64_t>(mod4(s, arg));
        const auto rhs = fk * static_cast<std::int64_t>(mod4(s, n));
        if ((lhs - rhs) % 4 != 0)
            rep.counterexamples.push_back({{{"arg", arg}, {"n", n}}, residue4(rhs), residue4(lhs)});
    }
    rep.details["f(p)^k"] = std::to_string(fk);
    rep.details["p"] = std::to_string(p);
    rep.details["k"] = std::to_string(k);
    const auto a0 = corollary_argument(p, k, 0);
    rep.notes.push_back("sigma_mex(" + progression(corollary_argument(p, k, 1) - a0, a0) + ") = ("
                        + std::to_string(fk) + ") * sigma_mex(n) (mod 4)");
    return rep;
}

// ---- parity of sigma_mex ---------------------------------------------------

std::vector<std::int64_t> sigma_mex_parity_support(std::int64_t N)
{
    const auto s = sigma_mex_series_mod(N, 2);
    std::vector<std::int64_t> out;
    for (std::int64_t n = 0; n <= N; ++n)
        if (s.coefficient(n) == 1)
            out.push_back(n);
    return out;
}

std::vector<std::int64_t> pentagonal_type_set(std::int64_t N)
{
    std::set<std::int64_t> s;
    if (N >= 0)
        s.insert(0);
    for (std::int64_t j = 1; j * (3 * j - 1) <= N; ++j) {
        s.insert(j * (3 * j - 1));
        if (j * (3 * j + 1) <= N)
            s.insert(j * (3 * j + 1));
    }
    return {s.begin(), s.end()};
}

VerificationReport verify_parity(std::int64_t N)
{
    if (N < 0)
        throw InvalidArgument("N must be >= 0");
    const auto s = sigma_mex_series_mod(N, 2);
    const auto expected = pentagonal_type_set(N);
    const std::set<std::int64_t> odd_expected(expected.begin(), expected.end());
    VerificationReport rep;
    rep.claim = "parity";
    rep.range_lo = 0;
    rep.range_hi = N;
    std::int64_t odd_args_checked = 0;
    for (std::int64_t n = 0; n <= N; ++n) {
        ++rep.cases;
        const bool odd = s.coefficient(n) == 1;
        const bool want = odd_expected.contains(n);
        if (odd != want)
            rep.counterexamples.push_back({{{"n", n}}, want ? "odd" : "even", odd ? "odd" : "even"});
        if (n % 2 == 1) {
            ++odd_args_checked;
            if (odd)
                rep.counterexamples.push_back({{{"n", n}}, "even (odd argument)", "odd"});
        }
    }
    rep.details["odd_positions"] = std::to_string(expected.size());
    rep.details["odd_arguments_checked"] = std::to_string(odd_args_checked);
    rep.notes.push_back("sigma_mex(n) odd iff n = 0 or n = j(3j +- 1)");
    rep.notes.push_back("sigma_mex(2n + 1) = 0 (mod 2)");
    return rep;
}

// ---- sigma_moex parity -----------------------------------------------------

VerificationReport moex_recurrence_check(std::int64_t N, const ModQSeries& s)
{
    if (N < 1)
        throw InvalidArgument("N must be >= 1");
    check_table(s, 2, N, "sigma_moex");
    const auto terms = pentagonal_terms(N);
    VerificationReport rep;
    rep.claim = "lemma31";
    rep.range_lo = 1;
    rep.range_hi = N;
    for (std::int64_t n = 1; n <= N; ++n) {
        ++rep.cases;
        std::uint64_t acc = 0;
        for (const auto& t : terms) {
            if (t.exponent > n)
                break;
            acc ^= s.value_at(n - t.exponent) & 1;
        }
        if (acc != 0)
            rep.counterexamples.push_back({{{"n", n}}, "0 (mod 2)", "1 (mod 2)"});
    }
    rep.notes.push_back("sum_k sigma_moex(n - k(3k-1)/2) + sum_k sigma_moex(n - k(3k+1)/2) = 0 (mod 2)");
    return rep;
}

VerificationReport moex_recurrence_check(std::int64_t N)
{
    if (N < 1)
        throw InvalidArgument("N must be >= 1");
    return moex_recurrence_check(N, sigma_moex_series_mod(N, 2));
}

namespace {

Witness find_witness(std::int64_t l, std::int64_t lo, std::int64_t hi, bool even, const ModQSeries& parity)
{
    check_table(parity, 2, hi, "sigma_moex parity");
    for (std::int64_t n = lo; n <= hi; ++n)
        if (((parity.value_at(n) & 1) == 0) == even)
            return {l, lo, hi, n, even};
    throw WitnessNotFound("no n in [" + std::to_string(lo) + ", " + std::to_string(hi) + "] with sigma_moex(n) "
                          + (even ? "even" : "odd"));
}

std::int64_t even_hi(std::int64_t l) { return checked_mul(l, checked_add(checked_mul(3, l), 1)) / 2; }
std::int64_t odd_hi(std::int64_t l) { return checked_mul(l, checked_add(checked_mul(3, l), -1)) / 2; }

void check_l(std::int64_t l)
{
    if (l < 2)
        throw InvalidArgument("l must be >= 2, got " + std::to_string(l));
}

} // namespace

Witness witness_even_interval(std::int64_t l, const ModQSeries& parity)
{
    check_l(l);
    return find_witness(l, l, even_hi(l), true, parity);
}

Witness witness_even_interval(std::int64_t l)
{
    check_l(l);
    return witness_even_interval(l, partition_parity_series(even_hi(l)));
}

Witness witness_odd_interval(std::int64_t l, const ModQSeries& parity)
{
    check_l(l);
    return find_witness(l, 2 * l - 1, odd_hi(l), false, parity);
}

Witness witness_odd_interval(std::int64_t l)
{
    check_l(l);
    return witness_odd_interval(l, partition_parity_series(odd_hi(l)));
}

VerificationReport verify_witnesses(bool even, std::int64_t l_min, std::int64_t l_max)
{
    check_l(l_min);
    if (l_max < l_min)
        throw InvalidArgument("empty l range");
    const auto parity = partition_parity_series(even ? even_hi(l_max) : odd_hi(l_max));
    VerificationReport rep;
    rep.claim = even ? "lemma32" : "lemma33";
    rep.range_lo = l_min;
    rep.range_hi = l_max;
    std::int64_t max_gap = 0;
    for (std::int64_t l = l_min; l <= l_max; ++l) {
        ++rep.cases;
        try {
            const auto w = even ? witness_even_interval(l, parity) : witness_odd_interval(l, parity);
            max_gap = std::max(max_gap, w.n - w.lo);
        } catch (const WitnessNotFound&) {
            const auto lo = even ? l : 2 * l - 1;
            const auto hi = even ? even_hi(l) : odd_hi(l);
            rep.counterexamples.push_back({{{"hi", hi}, {"l", l}, {"lo", lo}}, even ? "an even value" : "an odd value",
                                           "none"});
        }
    }
    rep.details["max_witness_offset"] = std::to_string(max_gap);
    rep.notes.push_back(even ? "some n in [l, l(3l+1)/2] has sigma_moex(n) even"
                             : "some n in [2l-1, l(3l-1)/2] has sigma_moex(n) odd");
    return rep;
}

// ---- censuses --------------------------------------------------------------

std::vector<std::int64_t> interval_chain(std::int64_t start, int sign, std::int64_t limit)
{
    std::vector<std::int64_t> out{start};
    while (out.back() <= limit) {
        const __int128 a = out.back();
        const __int128 next = a * (3 * a + sign) / 2;
        if (next > INT64_MAX)
            break;
        out.push_back(static_cast<std::int64_t>(next));
    }
    return out;
}

int floor_log_log(std::int64_t X)
{
    // ceil(e^(e^t)) for t = 1, 2, 3; e^(e^4) exceeds the int64 range.
    if (X >= 528491312)
        return 3;
    if (X >= 1619)
        return 2;
    if (X >= 16)
        return 1;
    return 0;
}

namespace {

ChainSummary summarize_chain(std::int64_t start, int sign, std::int64_t X, const ModQSeries& parity)
{
    ChainSummary c;
    for (auto a : interval_chain(start, sign, X))
        if (a <= X)
            c.chain.push_back(a);
    c.nu = static_cast<std::int64_t>(c.chain.size());
    for (std::size_t k = 1; k < c.chain.size(); ++k) {
        const auto l = c.chain[k - 1];
        c.witnesses.push_back(sign > 0 ? witness_even_interval(l, parity) : witness_odd_interval(l, parity));
    }
    return c;
}

} // namespace

ParityCensus parity_census(std::int64_t X, const ModQSeries& parity)
{
    if (X < 1)
        throw InvalidArgument("X must be >= 1");
    check_table(parity, 2, X, "sigma_moex parity");
    ParityCensus c{X, 0, 0, floor_log_log(X), {}, {}};
    for (std::int64_t n = 1; n <= X; ++n) {
        if (parity.value_at(n) & 1)
            ++c.odd_count;
        else
            ++c.even_count;
    }
    c.even_chain = summarize_chain(2, +1, X, parity);
    c.odd_chain = summarize_chain(5, -1, X, parity);
    return c;
}

ParityCensus parity_census(std::int64_t X)
{
    if (X < 1)
        throw InvalidArgument("X must be >= 1");
    return parity_census(X, partition_parity_series(X));
}

VerificationReport verify_census(const ParityCensus& c)
{
    VerificationReport rep;
    rep.claim = "census";
    rep.range_lo = 1;
    rep.range_hi = c.X;
    ++rep.cases;
    if (c.even_count + c.odd_count != c.X)
        rep.counterexamples.push_back({{{"X", c.X}}, std::to_string(c.X), std::to_string(c.even_count + c.odd_count)});
    for (const auto* chain : {&c.even_chain, &c.odd_chain}) {
        const bool even = chain == &c.even_chain;
        const auto intervals = std::max<std::int64_t>(chain->nu - 1, 0);
        rep.cases += intervals;
        if (static_cast<std::int64_t>(chain->witnesses.size()) != intervals)
            rep.counterexamples.push_back({{{"nu", chain->nu}}, std::to_string(intervals) + " witnesses",
                                           std::to_string(chain->witnesses.size())});
        for (const auto& w : chain->witnesses)
            if (w.even != even || w.n < w.lo || w.n > w.hi)
                rep.counterexamples.push_back({{{"l", w.l}, {"n", w.n}}, even ? "even witness" : "odd witness",
                                               "invalid"});
        const std::string tag = even ? "even" : "odd";
        std::vector<std::int64_t> ws;
        for (const auto& w : chain->witnesses)
            ws.push_back(w.n);
        rep.details[tag + "_chain"] = join(chain->chain, ",");
        rep.details[tag + "_nu"] = std::to_string(chain->nu);
        rep.details[tag + "_nu_half"] = std::to_string(chain->nu / 2);
        rep.details[tag + "_witnesses"] = join(ws, ",");
    }
    rep.details["even_count"] = std::to_string(c.even_count);
    rep.details["odd_count"] = std::to_string(c.odd_count);
    rep.details["floor_log_log_X"] = std::to_string(c.lower_bound_floor);
    rep.notes.push_back("counts of 1 <= n <= X by parity of sigma_moex(n); chains a_k = a_{k-1}(3a_{k-1} +- 1)/2");
    return rep;
}

DivisibilityCensus divisibility_census(std::int64_t X, int k, const ModQSeries& s)
{
    if (X < 1)
        throw InvalidArgument("X must be >= 1");
    if (k < 1 || k > 4)
        throw InvalidArgument("k must be in [1, 4]");
    const std::uint64_t mod = std::uint64_t{1} << k;
    check_table(s, mod, X, "sigma_mex");
    std::int64_t count = 0;
    for (std::int64_t n = 1; n <= X; ++n)
        if (s.value_at(n) % mod == 0)
            ++count;
    mpq_class prop(mpz_class(static_cast<long>(count)), mpz_class(static_cast<long>(X)));
    prop.canonicalize();
    return {X, k, count, prop};
}

DivisibilityCensus divisibility_census(std::int64_t X, int k)
{
    if (X < 1)
        throw InvalidArgument("X must be >= 1");
    return divisibility_census(X, k, sigma_mex_series_mod(X, 16));
}

VerificationReport report_divisibility(const DivisibilityCensus& c)
{
    VerificationReport rep;
    rep.claim = "divcensus";
    rep.range_lo = 1;
    rep.range_hi = c.X;
    rep.cases = c.X;
    rep.details["k"] = std::to_string(c.k);
    rep.details["divisible"] = std::to_string(c.divisible);
    rep.details["proportion"] = c.proportion.get_str();
    if (c.k == 1) {
        // odd positions in [1, X] are exactly the j(3j +- 1)
        const auto odd = static_cast<std::int64_t>(pentagonal_type_set(c.X).size()) - 1;
        rep.details["analytic_divisible"] = std::to_string(c.X - odd);
        if (c.X - odd != c.divisible)
            rep.counterexamples.push_back({{{"X", c.X}}, std::to_string(c.X - odd), std::to_string(c.divisible)});
    }
    rep.notes.push_back("#{1 <= n <= X : 2^" + std::to_string(c.k) + " | sigma_mex(n)} / X (empirical)");
    return rep;
}

} // namespace mexq
