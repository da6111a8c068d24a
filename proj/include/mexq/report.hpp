#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace mexq {

struct Counterexample {
    std::map<std::string, std::int64_t> input; // named parameters of the failing case
    std::string expected;
    std::string actual;
};

// Outcome of checking one claim over a finite range.
struct VerificationReport {
    std::string claim;
    std::int64_t range_lo = 0;
    std::int64_t range_hi = 0;
    std::int64_t cases = 0;
    std::vector<Counterexample> counterexamples;
    // Extra findings keyed by name (census counts, progressions, ...).
    std::map<std::string, std::string> details;
    std::vector<std::string> notes;

    bool passed() const { return counterexamples.empty(); }
    std::string verdict() const { return passed() ? "pass" : "fail"; }
};

enum class OutputFormat { json, csv, human };

OutputFormat parse_format(const std::string& name);

nlohmann::json to_json(const VerificationReport& r);

// Canonical serialization: JSON uses sorted keys. CSV header is
//   claim,verdict,range_lo,range_hi,cases,input,expected,actual
// with one row per counterexample (or a single row with empty trailing fields
// when the claim passed); `input` is k=v pairs joined by ';'.
std::string emit_report(const VerificationReport& r, OutputFormat fmt);

} // namespace mexq
