#pragma once
#include <string>
#include <vector>

namespace fragcode {

enum class PayloadVariant { D2Minus2, D2Minus4 };

// Achievable-rate report. kReal/rateReal use real-valued logarithms in the
// index-width term (the tables' convention); kInt/rateInt use the integer
// digit widths the codec actually spends.
struct RateReport {
    int q = 2;
    long long M = 0, h = 0;
    long long d = 0, m = 0;       // 2D
    long long a = 0, b = 0;       // 3D
    double kReal = 0.0;
    long long kInt = 0;
    double rateReal = 0.0;
    double rateInt = 0.0;
    double boundSphere = 0.0;     // delta = 0
    double boundLLL = 0.0;        // delta = 0, n = default codeword side, exponent 1.5
};

RateReport rate_2d(int q, long long M, long long h, PayloadVariant variant);
RateReport rate_3d(int q, long long M, long long h);

// (M - log_q sum_{i<=delta} C(M,i)(q-1)^i) / M with exact big-integer binomials.
double sphere_packing_bound(int q, long long M, long long delta);

// (M - 2 log_q(M^e * n) - log_q sum_{i<=delta} C(M,i)(q-1)^i) / M, clamped at 0.
// exponent e is 1.5 or 1.25.
double lll_existence_bound(int q, long long n, long long M, long long delta, double exponent);

// Published (M, h) input columns of the three parameter tables.
struct TableInput {
    long long M = 0, h = 0;
};
const std::vector<TableInput>& table_inputs(int which);  // which in {1, 2, 3}

// Regenerates a table from its (M, h) inputs alone. Table 1 uses the d^2-2
// payload variant, table 2 uses d^2-4, table 3 is the 3D code.
std::vector<RateReport> table_rows(int which);
std::string emit_table(int which, bool csv);

} // namespace fragcode
