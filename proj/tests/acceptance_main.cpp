// Runs every acceptance criterion and prints one pass/fail line each.
#include <cstdio>

#include "fragcode/acceptance.hpp"

int main() {
    bool allPass = true;
    for (const auto& r : fragcode::run_all()) {
        std::puts(fragcode::format_result(r).c_str());
        allPass = allPass && r.pass;
    }
    return allPass ? 0 : 1;
}
