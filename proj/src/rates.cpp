// Achievable-rate reports, packing bounds, and the built-in parameter tables.
#include "fragcode/rates.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>

#include "fragcode/codec2d.hpp"
#include "fragcode/codec3d.hpp"
#include "fragcode/errors.hpp"

namespace fragcode {
namespace {

using boost::multiprecision::cpp_int;

// log2 of a positive big integer through its top 53 bits.
double log2_big(const cpp_int& v) {
    const unsigned bits = boost::multiprecision::msb(v);
    if (bits <= 52) return std::log2(v.convert_to<double>());
    const unsigned shift = bits - 52;
    return std::log2(cpp_int(v >> shift).convert_to<double>()) + (double)shift;
}

// log_q of the substitution-ball mass sum_{i<=delta} C(M,i)(q-1)^i. The
// binomials are summed exactly; only the final logarithm is floating point.
double log_q_ball(int q, long long M, long long delta) {
    cpp_int sum = 1;
    cpp_int term = 1;
    for (long long i = 1; i <= delta; ++i) {
        term *= M - i + 1;
        term /= i;
        term *= q - 1;
        sum += term;
    }
    return log2_big(sum) / std::log2((double)q);
}

void check_bound_args(int q, long long M, long long delta) {
    if (q < 2) throw ParamError("alphabet size must be at least 2");
    if (M < 1) throw ParamError("message length must be positive");
    if (delta < 0 || delta > M)
        throw ParamError("flip budget must lie in [0, message length]");
}

void fill_bounds(RateReport& r, long long n) {
    r.boundSphere = sphere_packing_bound(r.q, r.M, 0);
    r.boundLLL = lll_existence_bound(r.q, n, r.M, 0, 1.5);
}

} // namespace

RateReport rate_2d(int q, long long M, long long h, PayloadVariant variant) {
    const CodeParams2D p = derive_params_2d(q, M, h);
    const long long payload =
        p.d * p.d - (variant == PayloadVariant::D2Minus2 ? 2 : 4);
    const long long parts = p.mPrime - 1;
    RateReport r;
    r.q = q;
    r.M = M;
    r.h = h;
    r.d = p.d;
    r.m = p.m;
    r.kReal = (double)parts *
              ((double)payload - std::log2((double)parts) / std::log2((double)q));
    r.kInt = parts * (payload - p.idxWidth);
    r.rateReal = r.kReal / (double)M;
    r.rateInt = (double)r.kInt / (double)M;
    fill_bounds(r, p.n);
    return r;
}

RateReport rate_3d(int q, long long M, long long h) {
    const CodeParams3D p = derive_params_3d(q, M, h);
    const long long parts = p.colorCount - 1;
    RateReport r;
    r.q = q;
    r.M = M;
    r.h = h;
    r.d = p.d;
    r.a = p.a;
    r.b = p.b;
    r.kReal = (double)parts *
              ((double)p.R - std::log2((double)parts) / std::log2((double)q));
    r.kInt = p.k;
    r.rateReal = r.kReal / (double)M;
    r.rateInt = (double)r.kInt / (double)M;
    fill_bounds(r, p.n);
    return r;
}

double sphere_packing_bound(int q, long long M, long long delta) {
    check_bound_args(q, M, delta);
    return ((double)M - log_q_ball(q, M, delta)) / (double)M;
}

double lll_existence_bound(int q, long long n, long long M, long long delta,
                           double exponent) {
    check_bound_args(q, M, delta);
    if (n < 1) throw ParamError("codeword side must be positive");
    const double logQ = std::log2((double)q);
    const double indexCost =
        2.0 * (exponent * std::log2((double)M) + std::log2((double)n)) / logQ;
    const double value =
        ((double)M - indexCost - log_q_ball(q, M, delta)) / (double)M;
    return value < 0.0 ? 0.0 : value;
}

const std::vector<TableInput>& table_inputs(int which) {
    static const std::vector<TableInput> one = {
        {1024, 14},    {2048, 14},    {8192, 26},     {16384, 11},
        {65536, 14},   {262144, 155}, {1048576, 68},  {4194304, 626}};
    static const std::vector<TableInput> two = {
        {100045, 41},   {1000825, 131},   {9973111, 104},
        {99053215, 116}, {971469531, 182}};
    static const std::vector<TableInput> three = {
        {209935, 11},  {425124, 14},  {752267, 17},
        {1836159, 23}, {2639780, 26}, {5082084, 14}};
    switch (which) {
        case 1: return one;
        case 2: return two;
        case 3: return three;
        default: throw ParamError("table number must be 1, 2, or 3");
    }
}

std::vector<RateReport> table_rows(int which) {
    std::vector<RateReport> rows;
    for (const auto& in : table_inputs(which)) {
        if (which == 1)
            rows.push_back(rate_2d(2, in.M, in.h, PayloadVariant::D2Minus2));
        else if (which == 2)
            rows.push_back(rate_2d(2, in.M, in.h, PayloadVariant::D2Minus4));
        else
            rows.push_back(rate_3d(2, in.M, in.h));
    }
    return rows;
}

std::string emit_table(int which, bool csv) {
    const auto rows = table_rows(which);
    const bool cuboid = which == 3;
    std::ostringstream out;
    out << std::fixed << std::setprecision(cuboid ? 9 : 6);
    if (csv) {
        out << (cuboid ? "M,h,d,a,b,rate" : "M,h,d,m,rate") << '\n';
        for (const auto& r : rows) {
            out << r.M << ',' << r.h << ',' << r.d << ',';
            if (cuboid)
                out << r.a << ',' << r.b << ',';
            else
                out << r.m << ',';
            out << r.rateReal << '\n';
        }
        return out.str();
    }
    out << std::setw(11) << "M" << std::setw(6) << "h" << std::setw(5) << "d";
    if (cuboid)
        out << std::setw(5) << "a" << std::setw(5) << "b";
    else
        out << std::setw(7) << "m";
    out << std::setw(13) << "rate" << '\n';
    for (const auto& r : rows) {
        out << std::setw(11) << r.M << std::setw(6) << r.h << std::setw(5) << r.d;
        if (cuboid)
            out << std::setw(5) << r.a << std::setw(5) << r.b;
        else
            out << std::setw(7) << r.m;
        out << std::setw(13) << r.rateReal << '\n';
    }
    return out.str();
}

} // namespace fragcode
