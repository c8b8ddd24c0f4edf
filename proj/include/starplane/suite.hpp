// The identity regression suite: every printed identity in scope is encoded
// as an entry with an equation id. Entries where the independent brute-force
// oracle contradicts the printed value report status "paper-erratum" and
// carry both values; the oracle value is binding.
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace starplane {

enum class SuiteStatus { Pass, Fail, PaperErratum };

const char* suite_status_name(SuiteStatus s);

struct SuiteResult {
    std::string id;           // e.g. "eq59.7"
    std::string description;
    SuiteStatus status = SuiteStatus::Fail;
    std::string engine_value;
    std::string paper_value;
    std::string difference;
    std::string note;
};

struct SuiteSummary {
    int passed = 0;
    int failed = 0;
    int errata = 0;
    bool ok() const { return failed == 0; }
};

// Runs every entry whose id or description contains `filter` (empty = all),
// in declaration order. Deterministic output.
std::vector<SuiteResult> run_suite(const std::string& filter = "");

SuiteSummary summarize(const std::vector<SuiteResult>& results);

size_t suite_size();

}  // namespace starplane
