#include "mexq/report.hpp"

#include <sstream>

#include "mexq/errors.hpp"

namespace mexq {

OutputFormat parse_format(const std::string& name)
{
    if (name == "json")
        return OutputFormat::json;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "human")
        return OutputFormat::human;
    throw InvalidArgument("unknown format '" + name + "'");
}

nlohmann::json to_json(const VerificationReport& r)
{
    nlohmann::json ces = nlohmann::json::array();
    for (const auto& c : r.counterexamples)
        ces.push_back({{"input", c.input}, {"expected", c.expected}, {"actual", c.actual}});
    return {
        {"claim", r.claim},
        {"range", {r.range_lo, r.range_hi}},
        {"cases", r.cases},
        {"counterexamples", std::move(ces)},
        {"details", r.details},
        {"notes", r.notes},
        {"verdict", r.verdict()},
    };
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string join_input(const std::map<std::string, std::int64_t>& in, const char* sep, const char* eq)
{
    std::string s;
    for (const auto& [k, v] : in) {
        if (!s.empty())
            s += sep;
        s += k + eq + std::to_string(v);
    }
    return s;
}

} // namespace

std::string emit_report(const VerificationReport& r, OutputFormat fmt)
{
    std::ostringstream os;
    switch (fmt) {
    case OutputFormat::json:
        os << to_json(r).dump(2) << "\n";
        break;
    case OutputFormat::csv: {
        os << "claim,verdict,range_lo,range_hi,cases,input,expected,actual\n";
        const std::string head = csv_field(r.claim) + "," + r.verdict() + "," + std::to_string(r.range_lo) + ","
                                 + std::to_string(r.range_hi) + "," + std::to_string(r.cases) + ",";
        if (r.counterexamples.empty())
            os << head << ",,\n";
        for (const auto& c : r.counterexamples)
            os << head << csv_field(join_input(c.input, ";", "=")) << "," << csv_field(c.expected) << ","
               << csv_field(c.actual) << "\n";
        break;
    }
    case OutputFormat::human:
        os << r.claim << ": " << (r.passed() ? "PASS" : "FAIL") << "  (" << r.cases << " cases, range "
           << r.range_lo << ".." << r.range_hi << ")\n";
        for (const auto& n : r.notes)
            os << "  " << n << "\n";
        for (const auto& [k, v] : r.details)
            os << "  " << k << " = " << v << "\n";
        for (const auto& c : r.counterexamples)
            os << "  counterexample " << join_input(c.input, ", ", "=") << ": expected " << c.expected
               << ", got " << c.actual << "\n";
        break;
    }
    return os.str();
}

} // namespace mexq
