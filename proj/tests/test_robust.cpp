#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "fragcode/robust.hpp"

using namespace fragcode;

namespace {

Message random_bits(long long len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Message msg(static_cast<std::size_t>(len));
    for (auto& b : msg) b = rng() % 2;
    return msg;
}

BitGrid2D flip_cells(const BitGrid2D& g, const std::vector<std::pair<int, int>>& pos) {
    std::vector<std::uint8_t> cells = g.cells();
    for (auto [r, c] : pos) {
        std::size_t idx = static_cast<std::size_t>(r) * g.cols() + c;
        cells[idx] ^= 1;
    }
    return BitGrid2D(g.rows(), g.cols(), g.q(), std::move(cells));
}

RobustParams small_robust() {
    // d=5, m=16, n=80; three slices of nine bits each
    return validate_params_robust(derive_params_2d(2, 1691, 14), 1);
}

} // namespace

TEST_CASE("repetition codec parameters") {
    SlicedCodecInfo a = RepetitionSlicedCodec(2, 16, 1).info();
    CHECK(a.Q == 2);
    CHECK(a.L == 16);
    CHECK(a.K == 1);
    CHECK(a.k == 8);  // floor(2*(16-3)/3)

    CHECK(RepetitionSlicedCodec(3, 25, 1).info().k == 19);  // floor(3*(25-6)/3)
    CHECK(RepetitionSlicedCodec(3, 9, 1).info().k == 3);
    CHECK(RepetitionSlicedCodec(3, 16, 2).info().k == 3);   // floor(3*(16-10)/5)
    CHECK(RepetitionSlicedCodec(3, 10, 0).info().k == 24);  // plain indexed split

    CHECK_THROWS_AS(RepetitionSlicedCodec(1, 4, 1), ParamError);   // k would be 0
    CHECK_THROWS_AS(RepetitionSlicedCodec(2, 3, 1), ParamError);   // index fills the slice
    CHECK_THROWS_AS(RepetitionSlicedCodec(0, 16, 1), ParamError);
    CHECK_THROWS_AS(RepetitionSlicedCodec(2, 16, -1), ParamError);
}

TEST_CASE("repetition codec frozen slices") {
    RepetitionSlicedCodec codec(2, 16, 1);
    Message msg = {1, 0, 1, 1, 0, 0, 1, 0};
    std::vector<Message> slices = codec.encode(msg);
    REQUIRE(slices.size() == 2);
    // index bit triple, then message bits in triples; the fifth message bit
    // straddles the slice boundary; two zero pad bits close the stream
    CHECK(slices[0] == Message{0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0});
    CHECK(slices[1] == Message{1, 1, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0});
    CHECK(codec.decode(slices) == msg);
    CHECK_THROWS_AS(codec.encode(Message(7, 0)), ParamError);
}

TEST_CASE("repetition codec round trips with shuffled slices") {
    for (auto [Q, L, K] : std::vector<std::tuple<long long, long long, long long>>{
             {2, 16, 1}, {3, 25, 1}, {3, 16, 2}, {3, 10, 0}, {4, 12, 0}}) {
        RepetitionSlicedCodec codec(Q, L, K);
        long long k = codec.info().k;
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            Message msg = random_bits(k, 90 + seed);
            std::vector<Message> slices = codec.encode(msg);
            REQUIRE(static_cast<long long>(slices.size()) == Q);
            for (const auto& s : slices) CHECK(static_cast<long long>(s.size()) == L);
            for (std::size_t i = 0; i < slices.size(); ++i)
                for (std::size_t j = i + 1; j < slices.size(); ++j) CHECK(slices[i] != slices[j]);
            std::mt19937_64 rng(seed);
            std::shuffle(slices.begin(), slices.end(), rng);
            CHECK(codec.decode(slices) == msg);
        }
    }
}

TEST_CASE("repetition codec corrects every single substitution") {
    for (auto [Q, L] : std::vector<std::pair<long long, long long>>{{2, 16}, {3, 25}}) {
        RepetitionSlicedCodec codec(Q, L, 1);
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            Message msg = random_bits(codec.info().k, 700 + seed);
            std::vector<Message> clean = codec.encode(msg);
            for (std::size_t s = 0; s < clean.size(); ++s)
                for (long long b = 0; b < L; ++b) {
                    std::vector<Message> dirty = clean;
                    dirty[s][static_cast<std::size_t>(b)] ^= 1;
                    REQUIRE(codec.decode(dirty) == msg);
                }
        }
    }
}

TEST_CASE("repetition codec beyond-budget controls") {
    RepetitionSlicedCodec codec(2, 16, 1);
    Message msg = {1, 0, 1, 1, 0, 0, 1, 0};
    std::vector<Message> slices = codec.encode(msg);

    // two flips on the first message bit's three copies invert that bit
    std::vector<Message> dirty = slices;
    dirty[0][3] ^= 1;
    dirty[0][4] ^= 1;
    Message expect = msg;
    expect[0] ^= 1;
    CHECK(codec.decode(dirty) == expect);

    // forcing two slices onto the same index is detected
    dirty = slices;
    dirty[1][0] = 0;
    dirty[1][1] = 0;
    dirty[1][2] = 0;
    CHECK_THROWS_AS(codec.decode(dirty), DecodeError);

    // an index pushed out of range is detected
    RepetitionSlicedCodec three(3, 25, 1);
    std::vector<Message> s3 = three.encode(random_bits(three.info().k, 4));
    s3[2][3] = 1;  // second index bit group of slice "10"
    s3[2][4] = 1;
    CHECK_THROWS_AS(three.decode(s3), DecodeError);

    CHECK_THROWS_AS(codec.decode(std::vector<Message>{slices[0]}), ParamError);
    std::vector<Message> shortSlice = slices;
    shortSlice[0].pop_back();
    CHECK_THROWS_AS(codec.decode(shortSlice), ParamError);
}

TEST_CASE("robust parameter validation") {
    RobustParams p = small_robust();
    CHECK(p.Q == 3);
    CHECK(p.L == 9);
    CHECK(p.K == 1);
    CHECK(p.k == 3);
    CHECK(p.base.d == 5);
    CHECK(p.base.mPrime == 4);

    RobustParams wide = validate_params_robust(derive_params_2d(2, 5635, 26), 1);
    CHECK(wide.base.d == 9);
    CHECK(wide.Q == 3);
    CHECK(wide.L == 49);
    CHECK(wide.k == 43);

    RobustParams two = validate_params_robust(derive_params_2d(2, 2461, 17), 2);
    CHECK(two.base.d == 6);
    CHECK(two.L == 16);
    CHECK(two.k == 3);

    RobustParams noiseless = validate_params_robust(derive_params_2d(2, 1691, 14), 0);
    CHECK(noiseless.K == 0);
    CHECK(noiseless.k == 21);  // Q*(L - idxWidth)

    CHECK_THROWS_AS(validate_params_robust(derive_params_2d(2, 1691, 14), 3), ParamError);
    CHECK_THROWS_AS(validate_params_robust(derive_params_2d(2, 1691, 14), -1), ParamError);
    CHECK_THROWS_AS(validate_params_robust(derive_params_2d(4, 583, 8), 1), ParamError);
    // d=3 leaves a one-bit slice, below the index overhead
    CHECK_THROWS_AS(validate_params_robust(derive_params_2d(2, 319, 8), 1), ParamError);
}

TEST_CASE("optimal profile feasibility") {
    CHECK_FALSE(optimal_profile_feasible(3, 49, 1));  // needs about 64.63 bits
    CHECK(optimal_profile_feasible(3, 100, 1));
    CHECK(optimal_profile_feasible(2, 64, 1));        // needs about 55.34 bits
    CHECK_FALSE(optimal_profile_feasible(2, 55, 1));
    CHECK(optimal_profile_feasible(4, 10, 0));        // K=0 needs exactly 8
    CHECK_FALSE(optimal_profile_feasible(4, 7, 0));
}

TEST_CASE("robust encoding structure") {
    RobustParams p = small_robust();
    Message msg = random_bits(p.k, 31);
    BitGrid2D cw = encode_robust(p, msg);
    CHECK(cw.rows() == 80);
    CHECK(cw.cols() == 80);

    int d = static_cast<int>(p.base.d);
    std::vector<Message> seen;
    for (long long i = 0; i < p.base.n / d; ++i)
        for (long long j = 0; j < p.base.n / d; ++j) {
            BitGrid2D unit = crop2d(cw, static_cast<int>(i) * d, static_cast<int>(j) * d, d, d);
            long long w = 0;
            for (auto cell : unit.cells()) w += cell;
            if (color(p.base, i, j) == 0) {
                CHECK(w == 0);
                continue;
            }
            CHECK(w >= 4 * d - 4);
            for (int r = 0; r < d; ++r) {
                CHECK(unit.at(r, 0) == 1);
                CHECK(unit.at(r, d - 1) == 1);
                CHECK(unit.at(0, r) == 1);
                CHECK(unit.at(d - 1, r) == 1);
            }
            Message interior;
            for (int r = 1; r < d - 1; ++r)
                for (int c = 1; c < d - 1; ++c) interior.push_back(unit.at(r, c));
            if (std::find(seen.begin(), seen.end(), interior) == seen.end())
                seen.push_back(interior);
        }
    // the distinct non-zero units carry exactly the sorted slices
    std::vector<Message> slices = ref_encode(p, msg);
    std::sort(slices.begin(), slices.end());
    std::sort(seen.begin(), seen.end());
    CHECK(seen == slices);

    CHECK_THROWS_AS(encode_robust(p, Message(p.k + 1, 0)), ParamError);
}

TEST_CASE("minimum weight window selection") {
    // all ones except a 5x5 zero block at (3, 2)
    std::vector<std::uint8_t> cells(10 * 10, 1);
    for (int r = 3; r < 8; ++r)
        for (int c = 2; c < 7; ++c) cells[static_cast<std::size_t>(r) * 10 + c] = 0;
    BitGrid2D g(10, 10, 2, cells);
    CHECK(find_min_weight_square(g, 5) == std::pair<int, int>(3, 2));

    BitGrid2D dirty = flip_cells(g, {{5, 4}});
    CHECK(find_min_weight_square(dirty, 5) == std::pair<int, int>(3, 2));

    // two zero blocks tie at weight zero; the scan-order first wins
    std::vector<std::uint8_t> twin(12 * 12, 1);
    for (int r = 6; r < 11; ++r)
        for (int c = 1; c < 6; ++c) twin[static_cast<std::size_t>(r) * 12 + c] = 0;
    for (int r = 2; r < 7; ++r)
        for (int c = 7; c < 12; ++c) twin[static_cast<std::size_t>(r) * 12 + c] = 0;
    CHECK(find_min_weight_square(BitGrid2D(12, 12, 2, twin), 5) == std::pair<int, int>(2, 7));

    CHECK_THROWS_AS(find_min_weight_square(BitGrid2D(4, 10, 2), 5), DecodeError);
    CHECK_THROWS_AS(find_min_weight_square(g, 0), ParamError);
}

TEST_CASE("alignment survives budgeted flips") {
    RobustParams p = small_robust();
    Message msg = random_bits(p.k, 8);
    BitGrid2D cw = encode_robust(p, msg);
    int d = static_cast<int>(p.base.d);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        std::mt19937_64 rng(3000 + seed);
        int r = static_cast<int>(rng() % 80), c = static_cast<int>(rng() % 80);
        BitGrid2D dirty = flip_cells(cw, {{r, c}});
        auto [top, left] = find_min_weight_square(dirty, d);
        REQUIRE(top % d == 0);
        REQUIRE(left % d == 0);
        REQUIRE(color(p.base, top / d, left / d) == 0);
    }
}

TEST_CASE("robust round trip without flips") {
    RobustParams p = small_robust();
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Message msg = random_bits(p.k, 2000 + seed);
        BitGrid2D cw = encode_robust(p, msg);
        CHECK(decode_robust(p, cw) == msg);
        std::mt19937_64 rng(seed);
        for (int trial = 0; trial < 6; ++trial) {
            int a = 42 + static_cast<int>(rng() % 30);
            int b = std::max<int>(14, static_cast<int>((p.base.M + a - 1) / a));
            b += static_cast<int>(rng() % (81 - b));
            if (1LL * a * b < p.base.M) continue;
            int top = static_cast<int>(rng() % (80 - a + 1));
            int left = static_cast<int>(rng() % (80 - b + 1));
            REQUIRE(decode_robust(p, crop2d(cw, top, left, a, b)) == msg);
        }
    }
}

TEST_CASE("robust round trip under every single flip") {
    RobustParams p = small_robust();
    Message msg = random_bits(p.k, 555);
    BitGrid2D cw = encode_robust(p, msg);
    BitGrid2D frag = crop2d(cw, 1, 2, 42, 42);  // fixed unaligned legal crop
    for (int r = 0; r < 42; ++r)
        for (int c = 0; c < 42; ++c) {
            BitGrid2D dirty = flip_cells(frag, {{r, c}});
            REQUIRE(decode_robust(p, dirty) == msg);
        }
}

TEST_CASE("robust round trip under sampled double flips") {
    RobustParams p = validate_params_robust(derive_params_2d(2, 2461, 17), 2);
    Message msg = random_bits(p.k, 808);
    BitGrid2D cw = encode_robust(p, msg);
    BitGrid2D frag = crop2d(cw, 3, 7, 50, 50);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        std::mt19937_64 rng(4000 + seed);
        int r1 = static_cast<int>(rng() % 50), c1 = static_cast<int>(rng() % 50);
        int r2 = static_cast<int>(rng() % 50), c2 = static_cast<int>(rng() % 50);
        if (r1 == r2 && c1 == c2) continue;
        BitGrid2D dirty = flip_cells(frag, {{r1, c1}, {r2, c2}});
        REQUIRE(decode_robust(p, dirty) == msg);
    }
    // both flips in one zero unit, and both on one info unit's border
    REQUIRE(color(p.base, 1, 2) == 0);
    CHECK(decode_robust(p, flip_cells(frag, {{3, 5}, {4, 6}})) == msg);
    REQUIRE(color(p.base, 1, 3) != 0);
    CHECK(decode_robust(p, flip_cells(frag, {{3, 11}, {3, 12}})) == msg);
}

TEST_CASE("robust decode rejections") {
    RobustParams p = small_robust();
    BitGrid2D ones(50, 50, 2, std::vector<std::uint8_t>(2500, 1));
    CHECK_THROWS_AS(decode_robust(p, ones), DecodeError);
    CHECK_THROWS_AS(decode_robust(p, BitGrid2D(13, 80, 2)), DecodeError);
    CHECK_THROWS_AS(decode_robust(p, BitGrid2D(20, 20, 2)), DecodeError);  // area below M
}
