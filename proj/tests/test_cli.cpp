#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mexq/cli.hpp"

using mexq::cli::kExitCounterexample;
using mexq::cli::kExitPass;
using mexq::cli::kExitUsage;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = mexq::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("series output")
{
    const auto r = run({"series", "sigma-moex", "--prec", "6", "--format", "csv"});
    CHECK(r.code == kExitPass);
    CHECK(r.out == "n,coeff\n0,1\n1,3\n2,4\n3,7\n4,13\n5,19\n6,29\n");
    const auto j = run({"series", "sigma-mex", "--prec", "4", "--format", "json"});
    CHECK(j.code == kExitPass);
    const auto js = nlohmann::json::parse(j.out);
    CHECK(js["coeffs"] == nlohmann::json::array({"1", "2", "3", "6", "9"}));
    const auto m = run({"series", "sigma-mex", "--prec", "4", "--modulus", "4", "--format", "json"});
    CHECK(nlohmann::json::parse(m.out)["coeffs"] == nlohmann::json::array({"1", "2", "3", "2", "1"}));
    const auto e = run({"series", "eta", "--level", "144", "--eta", "12:2", "--prec", "61", "--format", "human"});
    CHECK(e.out.find("q - 2*q^13 - q^25 + 2*q^37 + q^49 + 2*q^61") != std::string::npos);
}

TEST_CASE("oracle commands")
{
    const auto c = run({"oracle", "compare", "--stat", "sigma-mex", "--n-max", "40", "--format", "csv"});
    CHECK(c.code == kExitPass);
    const auto v = run({"oracle", "value", "--stat", "sigma-mex", "--n", "4", "--format", "json"});
    CHECK(v.code == kExitPass);
    CHECK(v.out.find("9") != std::string::npos);
    CHECK(run({"oracle", "value", "--stat", "sigma-mex", "--n", "61"}).code == kExitUsage);
}

TEST_CASE("verify exit codes")
{
    const auto r = run({"verify", "--claim", "thm1", "--primes", "5", "--n-max", "200", "--format", "json"});
    CHECK(r.code == kExitPass);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "pass");
    CHECK(j["claim"] == "thm1");
    CHECK(j["range"] == nlohmann::json::array({0, 200}));
    CHECK(run({"verify", "--claim", "thm1", "--primes", "5,7", "--n-max", "20"}).code == kExitPass);
    CHECK(run({"verify", "--claim", "thm2", "--p", "5", "--k", "1", "--n-max", "100"}).code == kExitPass);
    CHECK(run({"verify", "--claim", "cor", "--p", "5", "--k", "2", "--n-max", "20"}).code == kExitPass);
    CHECK(run({"verify", "--claim", "parity", "--n-max", "2000"}).code == kExitPass);
    CHECK(run({"verify", "--claim", "lemma31", "--n-max", "2000"}).code == kExitPass);
    CHECK(run({"verify", "--claim", "lemma32", "--l-min", "2", "--l-max", "50"}).code == kExitPass);
    CHECK(run({"verify", "--claim", "lemma33", "--l-min", "2", "--l-max", "50"}).code == kExitPass);
    CHECK(run({"verify", "--claim", "census", "--X", "10000"}).code == kExitPass);
    CHECK(run({"verify", "--claim", "divcensus", "--X", "1000", "--k", "1"}).code == kExitPass);
    CHECK(run({"verify", "--claim", "lemma22", "--p", "7", "--n-max", "50"}).code == kExitPass);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"verify", "--claim", "nope"}).code == kExitUsage);
    CHECK(run({"verify", "--claim", "thm1", "--primes", "13"}).code == kExitUsage);
    CHECK(run({"verify", "--claim", "thm2", "--p", "5", "--k", "1", "--delta", "1"}).code == kExitUsage);
    CHECK(run({"series", "sigma-mex", "--prec", "10", "--modulus", "1"}).code == kExitUsage);
    CHECK(run({"series", "sigma-mex", "--prec", "10", "--format", "xml"}).code == kExitUsage);
    CHECK(run({"modforms", "hecke", "--m", "1", "--prec", "10"}).code == kExitUsage);
    CHECK(run({"modforms", "lemma22", "--p", "13"}).code == kExitUsage);
    CHECK(run({"census", "div", "--X", "100", "--k", "9"}).code == kExitUsage);
}

TEST_CASE("help exits 0")
{
    const auto r = run({"--help"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("modular form commands")
{
    const auto c = run({"modforms", "eta-check", "--format", "json"});
    CHECK(c.code == kExitPass);
    const auto bad = run({"modforms", "eta-check", "--level", "1", "--eta", "1:2"});
    CHECK(bad.code == kExitCounterexample);
    CHECK(run({"modforms", "hecke", "--m", "13", "--prec", "200", "--check-eigen"}).code == kExitPass);
    CHECK(run({"modforms", "lemma22", "--p", "5", "--n-max", "50"}).code == kExitPass);
}

TEST_CASE("census commands")
{
    const auto p = run({"census", "parity", "--X", "10000", "--format", "json"});
    CHECK(p.code == kExitPass);
    const auto j = nlohmann::json::parse(p.out);
    CHECK(j["even_count"].get<long>() + j["odd_count"].get<long>() == 10000);
    CHECK(j["even_chain"]["chain"] == nlohmann::json::array({2, 7, 77, 8932}));
    CHECK(j["floor_log_log_X"] == 2);
    const auto d = run({"census", "div", "--X", "30", "--k", "1", "--format", "json"});
    CHECK(d.code == kExitPass);
    CHECK(nlohmann::json::parse(d.out)["proportion"] == "4/5");
}

TEST_CASE("output is independent of thread count and can go to a file")
{
    const auto a = run({"verify", "--claim", "thm1", "--primes", "7", "--n-max", "100", "--format", "csv"});
    const auto b = run({"--threads", "4", "verify", "--claim", "thm1", "--primes", "7", "--n-max", "100",
                        "--format", "csv"});
    CHECK(a.out == b.out);
    const std::string path = "cli_test_out.json";
    const auto f = run({"verify", "--claim", "parity", "--n-max", "500", "--out", path});
    CHECK(f.code == kExitPass);
    CHECK(f.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(nlohmann::json::parse(ss.str())["claim"] == "parity");
    std::remove(path.c_str());
}
