// Self-contained acceptance checks with pinned tolerances and instance sizes.
#include "fragcode/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>
#include <vector>

#include "fragcode/channel.hpp"
#include "fragcode/codec2d.hpp"
#include "fragcode/codec3d.hpp"
#include "fragcode/discrepancy.hpp"
#include "fragcode/errors.hpp"
#include "fragcode/grid.hpp"
#include "fragcode/message.hpp"
#include "fragcode/rates.hpp"
#include "fragcode/robust.hpp"

namespace fragcode {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Message random_bits(long long len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> bit(0, 1);
    Message msg(static_cast<std::size_t>(len));
    for (auto& s : msg) s = static_cast<std::uint8_t>(bit(rng));
    return msg;
}

BitGrid2D flip_cell(const BitGrid2D& g, int r, int c) {
    std::vector<std::uint8_t> cells = g.cells();
    cells[static_cast<std::size_t>(r) * g.cols() + c] ^= 1;
    return BitGrid2D(g.rows(), g.cols(), g.q(), std::move(cells));
}

struct Check {
    bool pass = true;
    std::string details;
};

std::string with_time(const std::string& base, double secs) {
    std::ostringstream out;
    out << base << " in " << std::fixed << std::setprecision(1) << secs << "s";
    return out.str();
}

Check c1_empty_rect_bounds() {
    const auto t0 = Clock::now();
    bool pass = true;
    long long sets = 0;
    long long minSlack = std::numeric_limits<long long>::max();
    for (int w : {2, 4, 8, 16, 32, 64}) {
        const auto probe = [&](const PointSet2D& ps) {
            const long long slack = 4LL * w - largest_empty_rect(ps).area;
            minSlack = std::min(minSlack, slack);
            if (slack <= 0) pass = false;
            ++sets;
        };
        probe(vdc_set(w));
        for (int i : {0, 1, w / 2, w - 1})
            for (int j : {0, 1, w / 2, w - 1}) probe(vdc_shifted(w, i, j));
        if (w <= 16)
            for (int z : {2 * w, 4 * w})
                for (int s = 0; s < w; ++s) probe(vdc_tiled(w, z, s));
    }
    const double secs = seconds_since(t0);
    pass = pass && secs < 30.0;
    std::ostringstream d;
    d << sets << " point sets, every empty rectangle below 4w (min slack "
      << minSlack << ")";
    return {pass, with_time(d.str(), secs)};
}

Check c2_shift_partitions() {
    bool pass = true;
    for (int w : {2, 4, 8, 16, 32, 64}) {
        std::set<Point2> all;
        std::size_t total = 0;
        for (int i = 0; i < w; ++i) {
            const auto s = vdc_shifted(w, i, 0);
            total += s.points.size();
            all.insert(s.points.begin(), s.points.end());
        }
        if (total != static_cast<std::size_t>(w) * w || all.size() != total)
            pass = false;
    }
    const std::vector<std::pair<int, int>> boxes = {{1, 3}, {2, 9}, {4, 9}, {16, 27}};
    for (auto [w1, w3] : boxes) {
        std::set<Point3> all;
        std::size_t total = 0;
        for (int d1 = 0; d1 < w1; ++d1)
            for (int d2 = 0; d2 < w3; ++d2) {
                const auto s = hh_shifted(w1, w3, d1, d2);
                total += s.points.size();
                all.insert(s.points.begin(), s.points.end());
            }
        if (total != static_cast<std::size_t>(w1) * w1 * w3 || all.size() != total)
            pass = false;
    }
    return {pass, "6 square grids and 4 scaled boxes partitioned exactly"};
}

Check c3_empty_box_bound() {
    const auto t0 = Clock::now();
    bool pass = true;
    long long worst = 0;
    for (int d1 : {0, 1})
        for (int d2 : {0, 1}) {
            const long long vol =
                largest_empty_box(hh_shifted_cells(32, 27, d1, d2)).volume;
            worst = std::max(worst, vol);
            if (vol > 20736) pass = false;
        }
    pass = pass && worst < 27648;
    const double secs = seconds_since(t0);
    pass = pass && secs < 60.0;
    std::ostringstream d;
    d << "largest empty box " << worst
      << " <= 20736 over 4 shifts, well under the 27648-cell box";
    return {pass, with_time(d.str(), secs)};
}

Check c4_coloring_equals_tiled_sets() {
    bool pass = true;
    long long classes = 0;
    struct Inst {
        long long M, h;
    };
    // unit sides d=3 with color budgets mPrime = 2, 4, 8
    for (Inst inst : {Inst{319, 8}, Inst{583, 8}, Inst{1111, 8}}) {
        const CodeParams2D base = derive_params_2d(2, inst.M, inst.h);
        for (long long mult : {1, 2, 4}) {
            const long long units = base.mPrime * mult;
            const CodeParams2D p =
                derive_params_2d(2, units * base.d, inst.M, inst.h);
            for (int r = 0; r < p.mPrime; ++r) {
                const PointSet2D expect = vdc_tiled(static_cast<int>(p.mPrime),
                                                    static_cast<int>(units), r);
                std::vector<Point2> got;
                for (long long i = 0; i < units; ++i)
                    for (long long j = 0; j < units; ++j)
                        if (color(p, i, j) == r)
                            got.push_back({static_cast<int>(i), static_cast<int>(j)});
                std::sort(got.begin(), got.end());
                if (got != expect.points) pass = false;
                ++classes;
            }
        }
    }
    std::ostringstream d;
    d << classes << " color classes equal their tiled point sets";
    return {pass, d.str()};
}

Check c5_zero_square_uniqueness() {
    bool pass = true;
    long long zeros = 0;
    struct Inst {
        long long M, h;
    };
    // unit sides 3, 4, 5
    for (Inst inst : {Inst{319, 8}, Inst{1065, 11}, Inst{1691, 14}}) {
        const CodeParams2D p = derive_params_2d(2, inst.M, inst.h);
        const long long units = p.n / p.d;
        for (int seed = 0; seed < 100; ++seed) {
            const BitGrid2D cw =
                encode2d(p, random_bits(p.k, 100 * inst.M + seed));
            const PrefixSum2D sums(cw);
            long long found = 0;
            for (long long r = 0; r + p.d <= p.n; ++r)
                for (long long c = 0; c + p.d <= p.n; ++c) {
                    if (sums.window_weight(static_cast<int>(r), static_cast<int>(c),
                                           static_cast<int>(p.d),
                                           static_cast<int>(p.d)) != 0)
                        continue;
                    ++found;
                    if (r % p.d != 0 || c % p.d != 0 ||
                        color(p, r / p.d, c / p.d) != 0)
                        pass = false;
                }
            if (found != units * units / p.mPrime) pass = false;
            zeros += found;
        }
    }
    std::ostringstream d;
    d << zeros
      << " all-zero windows across 300 seeded codewords, all at color-0 units";
    return {pass, d.str()};
}

Check c6_full_crop_round_trip() {
    const auto t0 = Clock::now();
    const CodeParams2D p = derive_params_2d(2, 319, 8);
    const Message msg = random_bits(p.k, 20260818);
    const BitGrid2D cw = encode2d(p, msg);
    long long crops = 0, failures = 0;
    for (const CropSpec& cs : enumerate_legal_crops(p.n, p.M, p.h)) {
        ++crops;
        try {
            if (decode2d(p, crop2d(cw, cs.top, cs.left, cs.a, cs.b)) != msg)
                ++failures;
        } catch (const std::exception&) {
            ++failures;
        }
    }
    const double secs = seconds_since(t0);
    const bool pass = failures == 0 && crops > 0 && secs < 300.0;
    std::ostringstream d;
    d << crops << " legal crops of the 24x24 codeword decoded, " << failures
      << " failures";
    return {pass, with_time(d.str(), secs)};
}

struct Row2D {
    long long M, h, d, m;
    double rate;
};

struct Row3D {
    long long M, h, d, a, b;
    double rate;
};

Check c7_table_reproduction() {
    const std::vector<Row2D> table1 = {
        {1024, 14, 5, 8, 0.022461},       {2048, 14, 5, 16, 0.031370},
        {8192, 26, 9, 16, 0.028350},      {16384, 11, 4, 256, 0.030849},
        {65536, 14, 5, 512, 0.031028},    {262144, 155, 52, 16, 0.030904},
        {1048576, 68, 23, 256, 0.031304}, {4194304, 626, 209, 16, 0.031241},
    };
    const std::vector<Row2D> table2 = {
        {100045, 41, 14, 128, 0.057958},     {1000825, 131, 44, 128, 0.059689},
        {9973111, 104, 35, 2048, 0.062100},  {99053215, 116, 39, 16384, 0.062219},
        {971469531, 182, 61, 65536, 0.062448},
    };
    const std::vector<Row3D> table3 = {
        {209935, 11, 4, 16, 27, 0.004203745},  {425124, 14, 5, 16, 27, 0.004515184},
        {752267, 17, 6, 16, 27, 0.004608089},  {1836159, 23, 8, 16, 27, 0.004628419},
        {2639780, 26, 9, 16, 27, 0.004616867}, {5082084, 14, 5, 64, 81, 0.004621950},
    };
    bool pass = true;
    long long rows = 0;
    const auto got1 = table_rows(1);
    const auto got2 = table_rows(2);
    const auto got3 = table_rows(3);
    if (got1.size() != table1.size() || got2.size() != table2.size() ||
        got3.size() != table3.size())
        pass = false;
    for (std::size_t i = 0; pass && i < table1.size(); ++i, ++rows) {
        const auto& e = table1[i];
        const auto& r = got1[i];
        if (r.M != e.M || r.h != e.h || r.d != e.d || r.m != e.m ||
            std::abs(r.rateReal - e.rate) > 1e-6)
            pass = false;
    }
    for (std::size_t i = 0; pass && i < table2.size(); ++i, ++rows) {
        const auto& e = table2[i];
        const auto& r = got2[i];
        if (r.M != e.M || r.h != e.h || r.d != e.d || r.m != e.m ||
            std::abs(r.rateReal - e.rate) > 1e-6)
            pass = false;
    }
    for (std::size_t i = 0; pass && i < table3.size(); ++i, ++rows) {
        const auto& e = table3[i];
        const auto& r = got3[i];
        if (r.M != e.M || r.h != e.h || r.d != e.d || r.a != e.a || r.b != e.b ||
            std::abs(r.rateReal - e.rate) > 1e-8)
            pass = false;
    }
    std::ostringstream d;
    d << rows << " of 19 rows match published dims exactly and rates within "
         "1e-6 (2D) / 1e-8 (3D)";
    return {pass, d.str()};
}

Check c8_seeded_3d_round_trip() {
    const auto t0 = Clock::now();
    const CodeParams3D p = derive_params_3d(2, 14144, 8);
    // a fragment only 8 deep can never reach the volume floor here
    bool pass = !is_legal_3d(8, 24, 27, p.M, p.h) &&
                !is_legal_3d(24, 24, 8, p.M, p.h);
    std::vector<std::tuple<int, int, int, int, int, int>> crops;
    bool extreme = false;
    for (int sx = static_cast<int>(p.h); sx <= p.n; ++sx)
        for (int sy = static_cast<int>(p.h); sy <= p.n; ++sy)
            for (int sz = static_cast<int>(p.h); sz <= p.nPrime; ++sz) {
                if (!is_legal_3d(sx, sy, sz, p.M, p.h)) continue;
                if (sx == 24 && sy == 23 && sz == 26) extreme = true;
                for (int x0 = 0; x0 + sx <= p.n; ++x0)
                    for (int y0 = 0; y0 + sy <= p.n; ++y0)
                        for (int z0 = 0; z0 + sz <= p.nPrime; ++z0)
                            crops.push_back({x0, y0, z0, sx, sy, sz});
            }
    long long trials = 0, failures = 0;
    for (int seed = 0; seed < 10; ++seed) {
        const Message msg = random_bits(p.k, 5000 + seed);
        const BitGrid3D cw = encode3d(p, msg);
        for (auto [x0, y0, z0, sx, sy, sz] : crops) {
            ++trials;
            try {
                if (decode3d(p, crop3d(cw, x0, y0, z0, sx, sy, sz)) != msg)
                    ++failures;
            } catch (const std::exception&) {
                ++failures;
            }
        }
        if (seed == 0) {
            bool rejected = false;
            try {
                decode3d(p, crop3d(cw, 0, 0, 0, 8, 24, 27));
            } catch (const DecodeError&) {
                rejected = true;
            }
            pass = pass && rejected;
        }
    }
    pass = pass && failures == 0 && trials >= 200 && extreme;
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << trials << " seeded legal crops decoded (incl. 24x23x26), " << failures
      << " failures; 8-deep slabs are sub-volume and rejected";
    return {pass, with_time(d.str(), secs)};
}

Check c9_robust_decoding() {
    bool pass = true;
    // (a) exhaustive single-substitution recovery for the sliced codec
    long long subs = 0;
    const std::vector<std::pair<long long, long long>> sliced = {{2, 16}, {3, 25}};
    for (auto [Q, L] : sliced) {
        const RepetitionSlicedCodec codec(Q, L, 1);
        const long long k = codec.info().k;
        for (int seed = 0; seed < 25; ++seed) {
            const Message msg = random_bits(k, 77 * Q + seed);
            const auto slices = codec.encode(msg);
            for (std::size_t s = 0; s < slices.size(); ++s)
                for (long long t = 0; t < L; ++t) {
                    auto mutated = slices;
                    mutated[s][static_cast<std::size_t>(t)] ^= 1;
                    ++subs;
                    if (codec.decode(mutated) != msg) pass = false;
                }
        }
    }
    // (b) exhaustive single-flip sweep: alignment lands on a color-0 unit
    const RobustParams p1 = validate_params_robust(derive_params_2d(2, 1691, 14), 1);
    const Message msg1 = random_bits(p1.k, 31337);
    const BitGrid2D cw1 = encode_robust(p1, msg1);
    const int top = 1, left = 2, side = 42;
    long long flips = 0;
    for (int r = 0; r < cw1.rows(); ++r)
        for (int c = 0; c < cw1.cols(); ++c) {
            const BitGrid2D frag = crop2d(flip_cell(cw1, r, c), top, left, side, side);
            const auto [zr, zc] = find_min_weight_square(frag, static_cast<int>(p1.base.d));
            const long long gr = top + zr, gc = left + zc;
            if (gr % p1.base.d != 0 || gc % p1.base.d != 0 ||
                color(p1.base, gr / p1.base.d, gc / p1.base.d) != 0)
                pass = false;
            if (decode_robust(p1, frag) != msg1) pass = false;
            ++flips;
        }
    // (c) seeded adversarial double flips at 2*delta < d
    const RobustParams p2 = validate_params_robust(derive_params_2d(2, 2461, 17), 2);
    const std::vector<CropSpec> spots = {
        {0, 0, 50, 50}, {3, 5, 52, 48}, {11, 7, 49, 51}, {40, 41, 55, 45}};
    long long trials = 0, failures = 0;
    for (auto strat : {FlipBudget::Strategy::ZeroUnit, FlipBudget::Strategy::Borders})
        for (int s = 0; s < 550; ++s) {
            const Message msg = random_bits(p2.k, 9000 + s);
            const BitGrid2D cw = encode_robust(p2, msg);
            const CropSpec cs = spots[static_cast<std::size_t>(s) % spots.size()];
            FlipBudget fb;
            fb.delta = 2;
            fb.strategy = strat;
            fb.seed = 1234 + static_cast<std::uint64_t>(s);
            fb.d = static_cast<int>(p2.base.d);
            const auto [flipped, positions] =
                inject_flips(crop2d(cw, cs.top, cs.left, cs.a, cs.b), fb);
            ++trials;
            try {
                if (decode_robust(p2, flipped) != msg) ++failures;
            } catch (const std::exception&) {
                ++failures;
            }
        }
    pass = pass && failures == 0 && trials >= 1000 && 2 * p2.delta < p2.base.d;
    std::ostringstream d;
    d << subs << " single substitutions, " << flips << " aligned single flips, "
      << trials << " adversarial double flips, " << failures << " failures";
    return {pass, d.str()};
}

Check c10_packing_and_existence_bounds() {
    bool pass = true;
    for (long long M : {8LL, 319LL, 1024LL, 14144LL, 4194304LL})
        if (sphere_packing_bound(2, M, 0) != 1.0) pass = false;
    double prev = 0.0;
    for (int t = 10; t <= 20; ++t) {
        const double b = lll_existence_bound(2, 1LL << t, 1LL << t, 0, 1.5);
        if (!(b > prev)) pass = false;
        prev = b;
    }
    if (!(prev >= 0.99)) pass = false;
    long long rows = 0;
    for (int which : {1, 2})
        for (const auto& row : table_rows(which)) {
            if (row.boundSphere != 1.0 || row.rateReal > row.boundSphere)
                pass = false;
            ++rows;
        }
    std::ostringstream d;
    d << "sphere bound exact at delta=0; existence bound reaches "
      << std::setprecision(6) << prev << " at t=20; " << rows
      << " table rates below the bound";
    return {pass, d.str()};
}

Check c11_product_inequality() {
    bool pass = true;
    long long checks = 0;
    for (long long d = 1; d <= 64; ++d)
        for (int p = 1; p <= 12; ++p)
            for (int i = 1; i <= p; ++i) {
                const long long lhs = (((1LL << i) + 1) * d + d - 1) *
                                      (((1LL << (p + 1 - i)) + 1) * d + d - 1);
                const long long rhs =
                    (4 * d - 1) * (((1LL << p) + 1) * d + d - 1);
                ++checks;
                if (lhs > rhs) pass = false;
            }
    std::ostringstream d;
    d << checks << " split-factor products within the dyadic bound";
    return {pass, d.str()};
}

struct Criterion {
    int id;
    const char* name;
    Check (*fn)();
};

const Criterion kCriteria[] = {
    {1, "empty-rectangle bounds", c1_empty_rect_bounds},
    {2, "shift partitions", c2_shift_partitions},
    {3, "empty-box bound", c3_empty_box_bound},
    {4, "coloring equals tiled point sets", c4_coloring_equals_tiled_sets},
    {5, "zero-square uniqueness", c5_zero_square_uniqueness},
    {6, "2d full-crop round trip", c6_full_crop_round_trip},
    {7, "rate table reproduction", c7_table_reproduction},
    {8, "3d seeded-crop round trip", c8_seeded_3d_round_trip},
    {9, "robust decoding under flips", c9_robust_decoding},
    {10, "packing and existence bounds", c10_packing_and_existence_bounds},
    {11, "product inequality", c11_product_inequality},
};

} // namespace

CriterionResult run_criterion(int id) {
    for (const auto& c : kCriteria) {
        if (c.id != id) continue;
        CriterionResult r;
        r.id = c.id;
        r.name = c.name;
        try {
            const Check chk = c.fn();
            r.pass = chk.pass;
            r.details = chk.details;
        } catch (const std::exception& e) {
            r.pass = false;
            r.details = std::string("exception: ") + e.what();
        }
        return r;
    }
    throw ParamError("criterion id must be in [1, 11]");
}

std::vector<int> suite_criteria(const std::string& suite) {
    if (suite == "discrepancy") return {1, 2, 3};
    if (suite == "lemmas") return {4, 5, 7, 10, 11};
    if (suite == "roundtrip") return {6, 8};
    if (suite == "robust") return {9};
    if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    throw ParamError("unknown suite " + suite);
}

std::vector<CriterionResult> run_suite(const std::string& suite) {
    std::vector<CriterionResult> out;
    for (int id : suite_criteria(suite)) out.push_back(run_criterion(id));
    return out;
}

std::vector<CriterionResult> run_all() { return run_suite("all"); }

std::string format_result(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << std::setfill('0')
        << r.id << ' ' << r.name << ": " << r.details;
    return out.str();
}

} // namespace fragcode
