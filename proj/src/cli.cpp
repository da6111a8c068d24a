#include "mexq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mexq/congruences.hpp"
#include "mexq/errors.hpp"
#include "mexq/modforms.hpp"
#include "mexq/numtheory.hpp"
#include "mexq/parallel.hpp"
#include "mexq/partitions.hpp"
#include "mexq/qproducts.hpp"

namespace mexq::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string format = "json";
    std::string out_path;
    unsigned threads = 1;

    // series
    std::string series_name;
    std::int64_t prec = 20;
    std::int64_t modulus = 0;
    int sign = 1;
    std::int64_t poch_a = 1;
    std::int64_t poch_b = 1;

    // oracle
    std::string stat = "sigma-mex";
    int oracle_n = 0;
    int oracle_n_max = 40;

    // modforms
    std::int64_t level = 144;
    std::vector<std::string> eta = {"12:2"};
    std::int64_t hecke_m = 2;
    bool check_eigen = false;

    // verify / census
    std::string claim;
    std::vector<std::int64_t> primes = {5};
    std::int64_t n_max = -1;
    std::int64_t p = 5;
    std::int64_t k = 1;
    std::int64_t delta = -1;
    std::int64_t l_min = 2;
    std::int64_t l_max = 200;
    std::int64_t X = 100000;
};

EtaQuotient parse_eta(std::int64_t level, const std::vector<std::string>& specs)
{
    std::vector<EtaFactor> factors;
    for (const auto& s : specs) {
        const auto colon = s.find(':');
        if (colon == std::string::npos)
            throw InvalidArgument("eta factor '" + s + "' is not delta:r");
        try {
            factors.push_back({std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1))});
        } catch (const std::logic_error&) {
            throw InvalidArgument("eta factor '" + s + "' is not delta:r");
        }
    }
    return EtaQuotient(level, std::move(factors));
}

template <class S>
std::string emit_series(const S& s, OutputFormat fmt)
{
    std::ostringstream os;
    switch (fmt) {
    case OutputFormat::json:
        os << to_json(s).dump() << "\n";
        break;
    case OutputFormat::csv:
        os << "n,coeff\n";
        for (std::int64_t n = s.offset(); n <= s.prec(); ++n) {
            const auto& c = s.coeffs()[static_cast<std::size_t>(n - s.offset())];
            if constexpr (std::is_same_v<S, QSeries>)
                os << n << "," << c.get_str() << "\n";
            else
                os << n << "," << c << "\n";
        }
        break;
    case OutputFormat::human:
        os << to_string(s) << "\n";
        break;
    }
    return os.str();
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool is_flat(const json& v)
{
    return std::none_of(v.begin(), v.end(), [](const json& x) { return x.is_structured(); });
}

// Indented "key: value" lines; flat arrays on one line.
void render_human(std::ostream& os, const json& j, int depth)
{
    const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
    auto line = [&](const std::string& key, const json& v) {
        if (v.is_object() || (v.is_array() && !is_flat(v))) {
            os << pad << key << ":\n";
            render_human(os, v, depth + 1);
        } else if (v.is_array()) {
            os << pad << key << ": ";
            for (std::size_t i = 0; i < v.size(); ++i)
                os << (i ? ", " : "") << scalar_text(v[i]);
            os << "\n";
        } else {
            os << pad << key << ": " << scalar_text(v) << "\n";
        }
    };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            line(k, v);
    } else {
        for (std::size_t i = 0; i < j.size(); ++i)
            line("[" + std::to_string(i) + "]", j[i]);
    }
}

std::string emit_json(const json& j, OutputFormat fmt)
{
    if (fmt == OutputFormat::csv)
        throw InvalidArgument("csv output is not available for this command");
    if (fmt == OutputFormat::json)
        return j.dump() + "\n";
    std::ostringstream os;
    render_human(os, j, 0);
    return os.str();
}

struct Result {
    std::string text;
    int code = kExitPass;
};

Result report_result(const VerificationReport& r, OutputFormat fmt)
{
    return {emit_report(r, fmt), r.passed() ? kExitPass : kExitCounterexample};
}

Result cmd_series(const Options& o, OutputFormat fmt)
{
    const auto N = o.prec;
    const bool mod = o.modulus != 0;
    if (mod && o.modulus < 2)
        throw BadModulus("--modulus must be >= 2");
    const auto m = static_cast<std::uint64_t>(o.modulus);
    const auto& name = o.series_name;
    if (name == "sigma-mex")
        return {mod ? emit_series(sigma_mex_series_mod(N, m), fmt) : emit_series(sigma_mex_series(N), fmt)};
    if (name == "sigma-moex")
        return {mod ? emit_series(sigma_moex_series_mod(N, m), fmt) : emit_series(sigma_moex_series(N), fmt)};
    if (name == "pentagonal")
        return {mod ? emit_series(euler_pentagonal_mod(N, m), fmt) : emit_series(euler_pentagonal(N), fmt)};
    if (name == "partition-parity") {
        if (mod && m != 2)
            throw BadModulus("partition-parity is only available mod 2");
        return {emit_series(partition_parity_series(N), fmt)};
    }
    if (name == "pochhammer") {
        const PochhammerSpec spec{o.sign, o.poch_a, o.poch_b};
        return {mod ? emit_series(pochhammer_mod(spec, N, m), fmt) : emit_series(pochhammer(spec, N), fmt)};
    }
    if (name == "eta") {
        const auto s = eta_expansion(parse_eta(o.level, o.eta), N);
        return {mod ? emit_series(series_reduce_mod(s, o.modulus), fmt) : emit_series(s, fmt)};
    }
    throw InvalidArgument("unknown series '" + name + "'");
}

Result cmd_oracle_compare(const Options& o, OutputFormat fmt)
{
    if (o.stat != "sigma-mex" && o.stat != "sigma-moex")
        throw InvalidArgument("--stat must be sigma-mex or sigma-moex");
    if (o.oracle_n_max < 0 || o.oracle_n_max > kMaxEnumeratedN)
        throw RangeTooLarge("--n-max must be in [0, " + std::to_string(kMaxEnumeratedN) + "]");
    const bool is_mex = o.stat == "sigma-mex";
    const auto series = is_mex ? sigma_mex_series(o.oracle_n_max) : sigma_moex_series(o.oracle_n_max);
    bool all_equal = true;
    json rows = json::array();
    std::ostringstream csv, human;
    csv << "n,oracle,series,equal\n";
    human << std::setw(4) << "n" << std::setw(24) << "oracle" << std::setw(24) << "series" << "  equal\n";
    for (int n = 0; n <= o.oracle_n_max; ++n) {
        const auto oracle = is_mex ? sigma_mex_oracle(n) : sigma_moex_oracle(n);
        const auto& value = series.coefficient(n);
        const bool eq = oracle == value;
        all_equal = all_equal && eq;
        rows.push_back({{"n", n}, {"oracle", oracle.get_str()}, {"series", value.get_str()}, {"equal", eq}});
        csv << n << "," << oracle.get_str() << "," << value.get_str() << "," << (eq ? "true" : "false") << "\n";
        human << std::setw(4) << n << std::setw(24) << oracle.get_str() << std::setw(24) << value.get_str()
              << "  " << (eq ? "yes" : "NO") << "\n";
    }
    const int code = all_equal ? kExitPass : kExitCounterexample;
    switch (fmt) {
    case OutputFormat::json:
        return {json{{"stat", o.stat}, {"rows", rows}, {"verdict", all_equal ? "pass" : "fail"}}.dump() + "\n", code};
    case OutputFormat::csv:
        return {csv.str(), code};
    case OutputFormat::human:
        return {human.str(), code};
    }
    return {};
}

Result cmd_oracle_value(const Options& o, OutputFormat fmt)
{
    if (o.stat != "sigma-mex" && o.stat != "sigma-moex")
        throw InvalidArgument("--stat must be sigma-mex or sigma-moex");
    const auto v = o.stat == "sigma-mex" ? sigma_mex_oracle(o.oracle_n) : sigma_moex_oracle(o.oracle_n);
    return {emit_json({{"stat", o.stat}, {"n", o.oracle_n}, {"value", v.get_str()}}, fmt)};
}

Result cmd_oracle_partitions(const Options& o, OutputFormat fmt)
{
    json rows = json::array();
    std::ostringstream csv;
    csv << "parts,mex,moex\n";
    for (const auto& p : enumerate_partitions(o.oracle_n)) {
        std::string parts;
        for (int x : p.parts)
            parts += (parts.empty() ? "" : "+") + std::to_string(x);
        rows.push_back({{"parts", p.parts}, {"mex", mex(p)}, {"moex", moex(p)}});
        csv << parts << "," << mex(p) << "," << moex(p) << "\n";
    }
    if (fmt == OutputFormat::csv)
        return {csv.str()};
    return {emit_json({{"n", o.oracle_n}, {"partitions", rows}}, fmt)};
}

json eta_check_json(const EtaQuotient& eq, bool& ok)
{
    const auto cond = modularity_conditions(eq);
    json factors = json::array();
    for (const auto& f : eq.factors())
        factors.push_back({f.delta, f.r});
    json j{{"level", eq.level()},
           {"factors", factors},
           {"conditions",
            {{"integral_weight", cond.integral_weight},
             {"delta_sum_mod24", cond.delta_sum_ok},
             {"dual_sum_mod24", cond.dual_sum_ok}}}};
    ok = cond.all();
    if (cond.integral_weight) {
        const auto wc = weight_and_character(eq);
        j["weight"] = wc.weight;
        j["discriminant"] = wc.character.discriminant();
    }
    if (cond.all()) {
        json cusps = json::array();
        bool holo = true;
        for (const auto& c : cusp_order_table(eq)) {
            holo = holo && sgn(c.order) >= 0;
            cusps.push_back({{"c", c.cusp.c}, {"d", c.cusp.d}, {"order", c.order.get_str()}});
        }
        j["cusps"] = cusps;
        j["holomorphic"] = holo;
        ok = ok && holo;
    }
    return j;
}

Result cmd_eta_check(const Options& o, OutputFormat fmt)
{
    bool ok = false;
    const auto j = eta_check_json(parse_eta(o.level, o.eta), ok);
    return {emit_json(j, fmt), ok ? kExitPass : kExitCounterexample};
}

Result cmd_hecke(const Options& o, OutputFormat fmt)
{
    const auto eq = parse_eta(o.level, o.eta);
    const auto wc = weight_and_character(eq);
    const auto f = eta_expansion(eq, checked_mul(o.hecke_m, o.prec));
    if (o.check_eigen)
        return report_result(eigenform_verify(f, o.hecke_m, wc.weight, wc.character, o.prec), fmt);
    return {emit_series(hecke_Tm(f, o.hecke_m, wc.weight, wc.character, o.prec), fmt)};
}

Result cmd_verify(const Options& o, OutputFormat fmt)
{
    const auto& c = o.claim;
    auto n_or = [&](std::int64_t dflt) { return o.n_max >= 0 ? o.n_max : dflt; };
    if (c == "thm1")
        return report_result(verify_thm_families(CongruenceFamily(o.primes), n_or(o.primes.size() > 1 ? 20 : 200)), fmt);
    if (c == "thm2") {
        const auto delta = o.delta >= 0 ? o.delta : corollary_delta(o.p, o.k);
        return report_result(verify_multiplicative(MultiplicativeInstance{o.p, o.k, delta}, n_or(100)), fmt);
    }
    if (c == "cor")
        return report_result(verify_corollary(o.p, o.k, n_or(100)), fmt);
    if (c == "parity")
        return report_result(verify_parity(n_or(10000)), fmt);
    if (c == "lemma31")
        return report_result(moex_recurrence_check(n_or(10000)), fmt);
    if (c == "lemma32" || c == "lemma33")
        return report_result(verify_witnesses(c == "lemma32", o.l_min, o.l_max), fmt);
    if (c == "census")
        return report_result(verify_census(parity_census(o.X)), fmt);
    if (c == "divcensus")
        return report_result(report_divisibility(divisibility_census(o.X, static_cast<int>(o.k))), fmt);
    if (c == "lemma22")
        return report_result(lemma22_verify(o.p, n_or(100)), fmt);
    throw InvalidArgument("unknown claim '" + c + "'");
}

json chain_json(const ChainSummary& c)
{
    json ws = json::array();
    for (const auto& w : c.witnesses)
        ws.push_back({{"l", w.l}, {"lo", w.lo}, {"hi", w.hi}, {"n", w.n}});
    return {{"chain", c.chain}, {"nu", c.nu}, {"witnesses", ws}};
}

Result cmd_census_parity(const Options& o, OutputFormat fmt)
{
    const auto c = parity_census(o.X);
    return {emit_json({{"X", c.X},
                       {"even_count", c.even_count},
                       {"odd_count", c.odd_count},
                       {"floor_log_log_X", c.lower_bound_floor},
                       {"even_chain", chain_json(c.even_chain)},
                       {"odd_chain", chain_json(c.odd_chain)}},
                      fmt)};
}

Result cmd_census_div(const Options& o, OutputFormat fmt)
{
    const auto c = divisibility_census(o.X, static_cast<int>(o.k));
    return {emit_json({{"X", c.X}, {"k", c.k}, {"divisible", c.divisible}, {"proportion", c.proportion.get_str()}},
                      fmt)};
}

void add_output_flags(CLI::App* sub, Options& o)
{
    sub->add_option("--format", o.format, "json | csv | human")->check(CLI::IsMember({"json", "csv", "human"}));
    sub->add_option("--out", o.out_path, "write output to this file instead of stdout");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"exact q-series engine and congruence verifier for sigma_mex / sigma_moex", "mexq"};
    app.require_subcommand(1);
    app.add_option("--threads", o.threads, "worker threads for convolution and Hecke kernels")
        ->check(CLI::Range(1u, 256u));

    std::function<Result(const Options&, OutputFormat)> handler;

    auto* series = app.add_subcommand("series", "emit a generating function");
    series->add_option("name", o.series_name, "sigma-mex | sigma-moex | pentagonal | partition-parity | pochhammer | eta")
        ->required();
    series->add_option("--prec", o.prec, "highest exponent")->check(CLI::NonNegativeNumber);
    series->add_option("--modulus", o.modulus, "reduce coefficients mod m");
    series->add_option("--sign", o.sign, "pochhammer: +1 for (q^a;q^b), -1 for (-q^a;q^b)");
    series->add_option("--a", o.poch_a, "pochhammer: first exponent");
    series->add_option("--b", o.poch_b, "pochhammer: step");
    series->add_option("--level", o.level, "eta: level N");
    series->add_option("--eta", o.eta, "eta: factor delta:r (repeatable)");
    add_output_flags(series, o);
    series->callback([&] { handler = cmd_series; });

    auto* oracle = app.add_subcommand("oracle", "brute-force partition oracle");
    oracle->require_subcommand(1);
    auto* compare = oracle->add_subcommand("compare", "oracle vs generating function table");
    compare->add_option("--stat", o.stat, "sigma-mex | sigma-moex");
    compare->add_option("--n-max", o.oracle_n_max, "largest n (<= 60)");
    add_output_flags(compare, o);
    compare->callback([&] { handler = cmd_oracle_compare; });
    auto* value = oracle->add_subcommand("value", "single oracle value");
    value->add_option("--stat", o.stat, "sigma-mex | sigma-moex");
    value->add_option("--n", o.oracle_n, "n (<= 60)")->required();
    add_output_flags(value, o);
    value->callback([&] { handler = cmd_oracle_value; });
    auto* parts = oracle->add_subcommand("partitions", "list partitions of n with mex and moex");
    parts->add_option("--n", o.oracle_n, "n (<= 60)")->required();
    add_output_flags(parts, o);
    parts->callback([&] { handler = cmd_oracle_partitions; });

    auto* modforms = app.add_subcommand("modforms", "eta quotients and Hecke operators");
    modforms->require_subcommand(1);
    auto add_eta_flags = [&](CLI::App* sub) {
        sub->add_option("--level", o.level, "level N (default 144)");
        sub->add_option("--eta", o.eta, "factor delta:r, repeatable (default 12:2)");
        add_output_flags(sub, o);
    };
    auto* expand = modforms->add_subcommand("eta-expand", "q-expansion of an eta quotient");
    add_eta_flags(expand);
    expand->add_option("--prec", o.prec, "highest exponent")->check(CLI::NonNegativeNumber);
    expand->callback([&] {
        handler = [](const Options& opt, OutputFormat fmt) {
            return Result{emit_series(eta_expansion(parse_eta(opt.level, opt.eta), opt.prec), fmt)};
        };
    });
    auto* check = modforms->add_subcommand("eta-check", "modularity conditions and cusp orders");
    add_eta_flags(check);
    check->callback([&] { handler = cmd_eta_check; });
    auto* hecke = modforms->add_subcommand("hecke", "apply T_m to an eta quotient");
    add_eta_flags(hecke);
    hecke->add_option("--m", o.hecke_m, "Hecke index m >= 2")->required();
    hecke->add_option("--prec", o.prec, "highest output exponent")->check(CLI::NonNegativeNumber);
    hecke->add_flag("--check-eigen", o.check_eigen, "verify f|T_m = a(m) f instead of printing f|T_m");
    hecke->callback([&] { handler = cmd_hecke; });
    auto* lemma = modforms->add_subcommand("lemma22", "vanishing and sign identities of eta(12z)^2 at p");
    lemma->add_option("--p", o.p, "prime, not 1 mod 12")->required();
    lemma->add_option("--n-max", o.n_max, "largest n (default 100)");
    add_output_flags(lemma, o);
    lemma->callback([&] {
        handler = [](const Options& opt, OutputFormat fmt) {
            return report_result(lemma22_verify(opt.p, opt.n_max >= 0 ? opt.n_max : 100), fmt);
        };
    });

    auto* verify = app.add_subcommand("verify", "check a congruence or distribution claim over a finite range");
    verify->add_option("--claim", o.claim, "thm1 | thm2 | cor | parity | lemma31 | lemma32 | lemma33 | census | divcensus | lemma22")
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "cor", "parity", "lemma31", "lemma32", "lemma33", "census",
                               "divcensus", "lemma22"}));
    verify->add_option("--primes", o.primes, "thm1: p_1 ... p_{k+1}")->delimiter(',');
    verify->add_option("--n-max", o.n_max, "largest n checked");
    verify->add_option("--p", o.p, "prime for thm2 / cor / lemma22");
    verify->add_option("--k", o.k, "exponent k (thm2, cor) or power of 2 (divcensus)");
    verify->add_option("--delta", o.delta, "thm2: delta (default: 12 delta + i = p^(2k-1))");
    verify->add_option("--l-min", o.l_min, "lemma32/33: smallest l");
    verify->add_option("--l-max", o.l_max, "lemma32/33: largest l");
    verify->add_option("--X", o.X, "census bound");
    add_output_flags(verify, o);
    verify->callback([&] { handler = cmd_verify; });

    auto* census = app.add_subcommand("census", "parity and divisibility counts");
    census->require_subcommand(1);
    auto* cpar = census->add_subcommand("parity", "sigma_moex parity counts and interval chains");
    cpar->add_option("--X", o.X, "bound");
    add_output_flags(cpar, o);
    cpar->callback([&] { handler = cmd_census_parity; });
    auto* cdiv = census->add_subcommand("div", "proportion of n <= X with 2^k | sigma_mex(n)");
    cdiv->add_option("--X", o.X, "bound");
    cdiv->add_option("--k", o.k, "power of two, 1..4");
    add_output_flags(cdiv, o);
    cdiv->callback([&] { handler = cmd_census_div; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }
    if (!handler) {
        err << app.help();
        return kExitUsage;
    }

    set_thread_count(o.threads);
    Result result;
    try {
        result = handler(o, parse_format(o.format));
    } catch (const WitnessNotFound& e) {
        err << e.what() << "\n";
        return kExitCounterexample;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (o.out_path.empty()) {
        out << result.text;
    } else {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot open " << o.out_path << "\n";
            return kExitUsage;
        }
        f << result.text;
    }
    return result.code;
}

} // namespace mexq::cli
