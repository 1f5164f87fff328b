#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "fragcode/codec2d.hpp"
#include "fragcode/discrepancy.hpp"

using namespace fragcode;

namespace {

Message random_message(const CodeParams2D& p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, p.q - 1);
    Message msg(static_cast<std::size_t>(p.k));
    for (auto& s : msg) s = static_cast<std::uint8_t>(dist(rng));
    return msg;
}

long long grid_weight(const BitGrid2D& g) {
    long long w = 0;
    for (auto c : g.cells())
        if (c != 0) ++w;
    return w;
}

} // namespace

TEST_CASE("parameter derivation matches published rows") {
    CodeParams2D p1 = derive_params_2d(2, 1024, 14);
    CHECK(p1.d == 5);
    CHECK(p1.m == 8);
    CHECK(p1.mPrime == 2);
    CHECK(p1.n == 40);
    CHECK(p1.R == 21);
    CHECK(p1.idxWidth == 0);
    CHECK(p1.k == 21);

    CodeParams2D p2 = derive_params_2d(2, 16384, 11);
    CHECK(p2.d == 4);
    CHECK(p2.m == 256);
    CHECK(p2.mPrime == 64);
    CHECK(p2.idxWidth == 6);
    CHECK(p2.k == 63 * (12 - 6));

    CodeParams2D p3 = derive_params_2d(2, 65536, 14);
    CHECK(p3.d == 5);
    CHECK(p3.m == 512);
    CHECK(p3.idxWidth == 7);
    CHECK(p3.k == 127 * (21 - 7));

    // tight instance: M equals the feasibility product exactly
    CodeParams2D p4 = derive_params_2d(2, 319, 8);
    CHECK(p4.d == 3);
    CHECK(p4.m == 8);
    CHECK(p4.n == 24);
    CHECK(p4.mPrime == 2);
    CHECK(p4.R == 5);
    CHECK(p4.idxWidth == 0);
    CHECK(p4.k == 5);
}

TEST_CASE("parameter derivation rejects infeasible inputs") {
    CHECK_THROWS_AS(derive_params_2d(2, 318, 8), ParamError);    // m would be 4
    CHECK_THROWS_AS(derive_params_2d(2, 1000000, 7), ParamError); // d would be 2
    CHECK_THROWS_AS(derive_params_2d(1, 319, 8), ParamError);
    CHECK_THROWS_AS(derive_params_2d(2, 0, 8), ParamError);

    // index digits in base 3 cannot address 3 parts whose top index is 10_3
    CHECK_THROWS_AS(derive_params_2d(3, 583, 8), ParamError);
    // base 4 can: one digit addresses indices 1..3
    CodeParams2D q4 = derive_params_2d(4, 583, 8);
    CHECK(q4.mPrime == 4);
    CHECK(q4.idxWidth == 1);
    CHECK(q4.k == 3 * (5 - 1));
}

TEST_CASE("custom codeword side must tile units and colors") {
    CodeParams2D p = derive_params_2d(2, 48, 319, 8);
    CHECK(p.n == 48);
    CHECK_NOTHROW(derive_params_2d(2, 30, 319, 8));      // 30/3 = 10, 10 even
    CHECK_THROWS_AS(derive_params_2d(2, 25, 319, 8), ParamError);  // 3 does not divide
    CHECK_THROWS_AS(derive_params_2d(2, 21, 319, 8), ParamError);  // 7 units, odd

    CodeParams2D w = derive_params_2d(2, 1691, 14);  // d=5, m=16, mPrime=4
    CHECK(w.m == 16);
    CHECK(w.n == 80);
    CHECK_NOTHROW(derive_params_2d(2, 100, 1691, 14));
    CHECK_THROWS_AS(derive_params_2d(2, 90, 1691, 14), ParamError);  // 18 units, not mult of 4
    CHECK_THROWS_AS(derive_params_2d(2, 92, 1691, 14), ParamError);  // not unit-aligned
}

TEST_CASE("coloring function frozen values and adjacency") {
    CodeParams2D p = derive_params_2d(2, 1691, 14);  // mPrime = 4
    CHECK(color(p, 0, 0) == 0);
    CHECK(color(p, 1, 2) == 0);  // reversed(1) = 2
    CHECK(color(p, 2, 3) == 2);  // reversed(2) = 1
    CHECK(color(p, 3, 3) == 0);  // reversed(3) = 3

    long long units = p.n / p.d;
    for (long long i = 0; i < units; ++i)
        for (long long j = 0; j < units; ++j) {
            int c = color(p, i, j);
            CHECK(c >= 0);
            CHECK(c < p.mPrime);
            if (i + 1 < units) CHECK(color(p, i + 1, j) != c);
            if (j + 1 < units) CHECK(color(p, i, j + 1) != c);
        }

    CHECK_THROWS_AS(color(p, -1, 0), ParamError);
    CHECK_THROWS_AS(color(p, 0, units), ParamError);
}

TEST_CASE("color classes equal tiled point sets") {
    // mPrime 2, 4, 8 with unit counts mPrime, 2 mPrime, 4 mPrime
    struct Inst { long long M, h; };
    for (Inst inst : {Inst{319, 8}, Inst{583, 8}, Inst{1111, 8}}) {
        CodeParams2D base = derive_params_2d(2, inst.M, inst.h);
        for (long long mult : {1, 2, 4}) {
            long long units = base.mPrime * mult;
            CodeParams2D p = derive_params_2d(2, units * base.d, inst.M, inst.h);
            for (int r = 0; r < p.mPrime; ++r) {
                PointSet2D expect = vdc_tiled(static_cast<int>(p.mPrime),
                                              static_cast<int>(units), r);
                std::vector<Point2> got;
                for (long long i = 0; i < units; ++i)
                    for (long long j = 0; j < units; ++j)
                        if (color(p, i, j) == r)
                            got.push_back({static_cast<int>(i), static_cast<int>(j)});
                std::sort(got.begin(), got.end());
                CHECK(got == expect.points);
            }
        }
    }
}

TEST_CASE("message split carries part indices") {
    CodeParams2D tight = derive_params_2d(2, 319, 8);  // single part, no index
    Message msg = random_message(tight, 1);
    auto parts = split_message(tight, msg);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0] == msg);
    CHECK(join_message(tight, parts) == msg);

    CodeParams2D wide = derive_params_2d(2, 1691, 14);  // mPrime=4, R=21, idxWidth=2
    CHECK(wide.idxWidth == 2);
    CHECK(wide.k == 57);
    Message msg2 = random_message(wide, 2);
    auto parts2 = split_message(wide, msg2);
    REQUIRE(parts2.size() == 3);
    for (auto& part : parts2) CHECK(part.size() == 21);
    CHECK(parts2[2][19] == 1);  // part 3 index suffix 11
    CHECK(parts2[2][20] == 1);
    std::set<Message> distinct(parts2.begin(), parts2.end());
    CHECK(distinct.size() == 3);

    auto shuffled = parts2;
    std::rotate(shuffled.begin(), shuffled.begin() + 1, shuffled.end());
    CHECK(join_message(wide, shuffled) == msg2);

    CHECK_THROWS_AS(split_message(wide, Message(56)), ParamError);
}

TEST_CASE("unit packing") {
    CodeParams2D p = derive_params_2d(2, 319, 8);  // d=3
    BitGrid2D zeroPayload = pack_unit(p, Message(5, 0));
    CHECK(zeroPayload == BitGrid2D(3, 3, 2, {1, 0, 1, 0, 0, 0, 1, 0, 1}));

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Message payload(5);
        for (auto& s : payload) s = rng() % 2;
        BitGrid2D unit = pack_unit(p, payload);
        long long pw = std::count_if(payload.begin(), payload.end(),
                                     [](std::uint8_t v) { return v != 0; });
        CHECK(grid_weight(unit) == pw + 4);
        CHECK(unpack_unit(p, unit) == payload);
    }

    CHECK_THROWS_AS(pack_unit(p, Message(4, 0)), ParamError);
    CodeParams2D p5 = derive_params_2d(2, 931, 14);  // d=5
    BitGrid2D u5 = pack_unit(p5, Message(21, 0));
    CHECK(u5.at(0, 0) == 1);
    CHECK(u5.at(0, 4) == 1);
    CHECK(u5.at(4, 0) == 1);
    CHECK(u5.at(4, 4) == 1);
    CHECK(grid_weight(u5) == 4);
}

TEST_CASE("encode2d structure") {
    CodeParams2D p = derive_params_2d(2, 583, 8);  // d=3, mPrime=4, n=48
    Message msg = random_message(p, 3);
    BitGrid2D cw = encode2d(p, msg);
    CHECK(cw.rows() == p.n);
    CHECK(cw.cols() == p.n);

    auto parts = split_message(p, msg);
    long long units = p.n / p.d;
    for (long long i = 0; i < units; ++i)
        for (long long j = 0; j < units; ++j) {
            BitGrid2D unit = crop2d(cw, static_cast<int>(i * p.d), static_cast<int>(j * p.d),
                                    static_cast<int>(p.d), static_cast<int>(p.d));
            int c = color(p, i, j);
            if (c == 0) {
                CHECK(grid_weight(unit) == 0);
            } else {
                CHECK(unit == pack_unit(p, parts[static_cast<std::size_t>(c - 1)]));
            }
        }

    CHECK_THROWS_AS(encode2d(p, Message(p.k + 1, 0)), ParamError);
}

TEST_CASE("zero squares appear only at color-0 units") {
    // d = 3, 4, 5 desk instances plus one multi-color d=3 instance
    struct Inst { long long M, h; };
    for (Inst inst : {Inst{319, 8}, Inst{583, 8}, Inst{585, 11}, Inst{931, 14}}) {
        CodeParams2D p = derive_params_2d(2, inst.M, inst.h);
        int d = static_cast<int>(p.d);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Message msg = random_message(p, 100 + seed);
            BitGrid2D cw = encode2d(p, msg);
            PrefixSum2D sums(cw);
            for (int top = 0; top + d <= cw.rows(); ++top)
                for (int left = 0; left + d <= cw.cols(); ++left) {
                    if (sums.window_weight(top, left, d, d) != 0) continue;
                    REQUIRE(top % d == 0);
                    REQUIRE(left % d == 0);
                    REQUIRE(color(p, top / d, left / d) == 0);
                }
        }
    }
}

TEST_CASE("find_zero_square") {
    BitGrid2D zeros(3, 3, 2);
    CHECK(find_zero_square(zeros, 3) == std::pair<int, int>(0, 0));

    BitGrid2D ones(4, 4, 2, std::vector<std::uint8_t>(16, 1));
    CHECK_THROWS_AS(find_zero_square(ones, 3), DecodeError);

    // zero block at (1,1) inside a dirty border
    std::vector<std::uint8_t> cells(25, 0);
    for (int i = 0; i < 5; ++i) cells[static_cast<std::size_t>(i)] = 1;  // first row ones
    for (int r = 1; r < 5; ++r) cells[static_cast<std::size_t>(r) * 5] = 1;  // first col ones
    BitGrid2D dirty(5, 5, 2, cells);
    CHECK(find_zero_square(dirty, 3) == std::pair<int, int>(1, 1));

    CHECK_THROWS_AS(find_zero_square(zeros, 4), DecodeError);  // window exceeds fragment
}

TEST_CASE("round trip on the whole codeword and simple crops") {
    for (auto [M, h] : std::vector<std::pair<long long, long long>>{
             {319, 8}, {583, 8}, {1691, 14}}) {
        CodeParams2D p = derive_params_2d(2, M, h);
        Message msg = random_message(p, 17);
        BitGrid2D cw = encode2d(p, msg);
        CHECK(decode2d(p, cw) == msg);

        // a legal crop not aligned with the unit grid
        int n = static_cast<int>(p.n);
        BitGrid2D frag = crop2d(cw, 1, 2, n - 2, n - 3);
        CHECK(decode2d(p, frag) == msg);
    }
}

TEST_CASE("round trip over every legal crop of the tight instance") {
    CodeParams2D p = derive_params_2d(2, 319, 8);
    Message msg = random_message(p, 23);
    BitGrid2D cw = encode2d(p, msg);
    int n = static_cast<int>(p.n);
    long long tried = 0;
    for (int a = static_cast<int>(p.h); a <= n; ++a)
        for (int b = static_cast<int>(p.h); b <= n; ++b) {
            if (1LL * a * b < p.M) continue;
            for (int top = 0; top + a <= n; ++top)
                for (int left = 0; left + b <= n; ++left) {
                    BitGrid2D frag = crop2d(cw, top, left, a, b);
                    REQUIRE(decode2d(p, frag) == msg);
                    ++tried;
                }
        }
    CHECK(tried > 1000);
}

TEST_CASE("decode rejects illegal fragments") {
    CodeParams2D p = derive_params_2d(2, 319, 8);
    Message msg = random_message(p, 29);
    BitGrid2D cw = encode2d(p, msg);
    CHECK_THROWS_AS(decode2d(p, crop2d(cw, 0, 0, 7, 24)), DecodeError);   // side below h
    CHECK_THROWS_AS(decode2d(p, crop2d(cw, 0, 0, 13, 24)), DecodeError);  // area below M
    BitGrid2D onesFrag(24, 24, 2, std::vector<std::uint8_t>(576, 1));
    CHECK_THROWS_AS(decode2d(p, onesFrag), DecodeError);                  // no zero square
}

TEST_CASE("unit grid witness frozen cases") {
    CodeParams2D p = derive_params_2d(2, 1691, 14);  // d=5, m=16
    // narrow a forces the (1, m) split
    CHECK(check_unit_grid_lemma(p, 14, 1691) == std::pair<long long, long long>(1, 16));
    // long a with minimal b forces the transpose
    CHECK(check_unit_grid_lemma(p, 1691, 14) == std::pair<long long, long long>(16, 1));
    // square-ish dims pick a dyadic split
    auto [x, y] = check_unit_grid_lemma(p, 42, 42);
    CHECK(x * y == 16);
    CHECK(x == 4);
    CHECK(y == 4);

    CHECK_THROWS_AS(check_unit_grid_lemma(p, 13, 100000), ParamError);  // below h
    CHECK_THROWS_AS(check_unit_grid_lemma(p, 40, 42), ParamError);      // area below M
}

TEST_CASE("unit grid witness postconditions over minimal legal dims") {
    for (auto [M, h] : std::vector<std::pair<long long, long long>>{
             {319, 8}, {583, 8}, {1691, 14}, {1024, 14}}) {
        CodeParams2D p = derive_params_2d(2, M, h);
        for (long long a = p.h; a <= (p.m + 3) * p.d; ++a) {
            long long bMin = std::max(p.h, (p.M + a - 1) / a);
            for (long long b : {bMin, bMin + 1, bMin + 100}) {
                auto [x, y] = check_unit_grid_lemma(p, a, b);
                CHECK(x * y == p.m);
                CHECK(a >= (x + 2) * p.d - 1);
                CHECK(b >= (y + 2) * p.d - 1);
            }
        }
    }
}

TEST_CASE("every witness-sized unit grid contains all colors") {
    // colors are periodic in both axes, so anchors range over one period
    for (auto [M, h] : std::vector<std::pair<long long, long long>>{
             {319, 8}, {583, 8}, {1111, 8}}) {
        CodeParams2D p = derive_params_2d(2, M, h);
        for (long long x = 1; x <= p.m; x *= 2) {
            long long y = p.m / x;
            for (long long i0 = 0; i0 < p.mPrime; ++i0)
                for (long long j0 = 0; j0 < p.mPrime; ++j0) {
                    std::set<int> seen;
                    for (long long i = 0; i <= x; ++i)
                        for (long long j = 0; j <= y; ++j)
                            seen.insert(color(p, (i0 + i) % p.mPrime, (j0 + j) % p.mPrime));
                    CHECK(seen.size() == static_cast<std::size_t>(p.mPrime));
                }
        }
    }
}

TEST_CASE("product inequality behind the dyadic witness split") {
    for (long long d = 1; d <= 64; ++d)
        for (long long pexp = 1; pexp <= 12; ++pexp)
            for (long long i = 1; i <= pexp; ++i) {
                long long lhs = ((1LL << i) + 2) * d - 1;
                long long rhs = ((1LL << (pexp + 1 - i)) + 2) * d - 1;
                long long cap = (4 * d - 1) * (((1LL << pexp) + 2) * d - 1);
                CHECK(lhs * rhs <= cap);
            }
}
