#pragma once
#include <string>
#include <vector>

namespace fragcode {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string details;
};

// Runs one acceptance criterion (1..11). All tolerances are pinned inside.
CriterionResult run_criterion(int id);

// Suite names: discrepancy {1,2,3}, lemmas {4,5,7,10,11},
// roundtrip {6,8}, robust {9}.
std::vector<int> suite_criteria(const std::string& suite);
std::vector<CriterionResult> run_suite(const std::string& suite);
std::vector<CriterionResult> run_all();

// "[PASS] 03 name: details" style line.
std::string format_result(const CriterionResult& r);

} // namespace fragcode
