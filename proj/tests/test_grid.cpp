#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "fragcode/grid.hpp"
#include "fragcode/message.hpp"

using namespace fragcode;

namespace {

BitGrid2D random_grid2d(int rows, int cols, int q, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, q - 1);
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(rows) * cols);
    for (auto& c : cells) c = static_cast<std::uint8_t>(dist(rng));
    return BitGrid2D(rows, cols, q, std::move(cells));
}

BitGrid3D random_grid3d(int x, int y, int z, int q, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, q - 1);
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(x) * y * z);
    for (auto& c : cells) c = static_cast<std::uint8_t>(dist(rng));
    return BitGrid3D(x, y, z, q, std::move(cells));
}

long long naive_weight2d(const BitGrid2D& g, int top, int left, int height, int width) {
    long long w = 0;
    for (int r = top; r < top + height; ++r)
        for (int c = left; c < left + width; ++c)
            if (g.at(r, c) != 0) ++w;
    return w;
}

std::filesystem::path tmp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("grid construction validates cells and dims") {
    CHECK_THROWS_AS(BitGrid2D(0, 4, 2), ParamError);
    CHECK_THROWS_AS(BitGrid2D(4, 0, 2), ParamError);
    CHECK_THROWS_AS(BitGrid2D(4, 4, 1), ParamError);
    CHECK_THROWS_AS(BitGrid2D(2, 2, 2, {0, 1, 2, 0}), ParamError);  // cell >= q
    CHECK_THROWS_AS(BitGrid2D(2, 2, 2, {0, 1, 1}), ParamError);     // wrong length
    CHECK_THROWS_AS(BitGrid3D(2, 0, 2, 2), ParamError);

    BitGrid2D g(3, 5, 2);
    CHECK(g.rows() == 3);
    CHECK(g.cols() == 5);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 5; ++c) CHECK(g.at(r, c) == 0);
    CHECK_THROWS_AS(g.at(3, 0), std::out_of_range);
    CHECK_THROWS_AS(g.at(0, -1), std::out_of_range);
}

TEST_CASE("crop2d basic cases") {
    // 3x3 identity pattern
    BitGrid2D g(3, 3, 2, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK(crop2d(g, 0, 0, 3, 3) == g);

    BitGrid2D corner = crop2d(g, 0, 0, 1, 1);
    CHECK(corner.at(0, 0) == 1);

    BitGrid2D lower = crop2d(g, 1, 1, 2, 2);
    CHECK(lower == BitGrid2D(2, 2, 2, {1, 0, 0, 1}));

    CHECK_THROWS_AS(crop2d(g, 2, 2, 2, 2), std::out_of_range);
    CHECK_THROWS_AS(crop2d(g, -1, 0, 2, 2), std::out_of_range);
    CHECK_THROWS_AS(crop2d(g, 0, 0, 0, 2), std::out_of_range);
}

TEST_CASE("crop composition") {
    BitGrid2D g = random_grid2d(12, 11, 3, 7);
    BitGrid2D once = crop2d(crop2d(g, 2, 3, 8, 7), 1, 2, 5, 4);
    BitGrid2D direct = crop2d(g, 3, 5, 5, 4);
    CHECK(once == direct);
}

TEST_CASE("crop3d") {
    BitGrid3D g = random_grid3d(5, 6, 7, 2, 11);
    CHECK(crop3d(g, 0, 0, 0, 5, 6, 7) == g);
    BitGrid3D sub = crop3d(g, 1, 2, 3, 3, 2, 4);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 4; ++z) CHECK(sub.at(x, y, z) == g.at(x + 1, y + 2, z + 3));
    CHECK_THROWS_AS(crop3d(g, 3, 0, 0, 3, 1, 1), std::out_of_range);
}

TEST_CASE("window weight equals naive summation") {
    BitGrid2D z(6, 6, 2);
    PrefixSum2D pz(z);
    CHECK(window_weight2d(pz, 0, 0, 6, 6) == 0);
    CHECK(window_weight2d(pz, 2, 3, 2, 2) == 0);

    BitGrid2D ones(4, 4, 2, std::vector<std::uint8_t>(16, 1));
    PrefixSum2D pones(ones);
    CHECK(window_weight2d(pones, 1, 1, 2, 2) == 4);

    BitGrid2D g = random_grid2d(8, 8, 2, 99);
    PrefixSum2D p(g);
    for (int top = 0; top < 6; ++top)
        for (int left = 0; left < 6; ++left)
            CHECK(window_weight2d(p, top, left, 3, 3) == naive_weight2d(g, top, left, 3, 3));

    CHECK_THROWS_AS(window_weight2d(p, 6, 6, 3, 3), std::out_of_range);
}

TEST_CASE("window weight randomized cross-check, q > 2 counts nonzero") {
    std::mt19937_64 rng(5);
    BitGrid2D g = random_grid2d(17, 13, 4, 21);
    PrefixSum2D p(g);
    for (int trial = 0; trial < 200; ++trial) {
        int h = 1 + static_cast<int>(rng() % 17);
        int w = 1 + static_cast<int>(rng() % 13);
        int top = static_cast<int>(rng() % (17 - h + 1));
        int left = static_cast<int>(rng() % (13 - w + 1));
        CHECK(window_weight2d(p, top, left, h, w) == naive_weight2d(g, top, left, h, w));
    }
}

TEST_CASE("3D window weight") {
    BitGrid3D g = random_grid3d(6, 5, 7, 2, 31);
    PrefixSum3D p(g);
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        int sx = 1 + static_cast<int>(rng() % 6);
        int sy = 1 + static_cast<int>(rng() % 5);
        int sz = 1 + static_cast<int>(rng() % 7);
        int x0 = static_cast<int>(rng() % (6 - sx + 1));
        int y0 = static_cast<int>(rng() % (5 - sy + 1));
        int z0 = static_cast<int>(rng() % (7 - sz + 1));
        long long naive = 0;
        for (int x = x0; x < x0 + sx; ++x)
            for (int y = y0; y < y0 + sy; ++y)
                for (int z = z0; z < z0 + sz; ++z)
                    if (g.at(x, y, z) != 0) ++naive;
        CHECK(window_weight3d(p, x0, y0, z0, sx, sy, sz) == naive);
    }
}

TEST_CASE("2D file round trip over q in {2,3,4}") {
    for (int q : {2, 3, 4}) {
        BitGrid2D g = random_grid2d(9, 14, q, 1000 + q);
        auto path = tmp_file("fragcode_test_grid2d.bin");
        write_grid2d(g, path.string());
        BitGrid2D back = read_grid2d(path.string());
        CHECK(back == g);
        std::filesystem::remove(path);
    }
}

TEST_CASE("2D file size is header plus padded rows for q=2") {
    BitGrid2D g = random_grid2d(24, 24, 2, 77);
    auto path = tmp_file("fragcode_test_grid2d_size.bin");
    write_grid2d(g, path.string());
    std::string header = "FC2D 2 24 24\n";
    CHECK(std::filesystem::file_size(path) == header.size() + 24 * 3);  // ceil(24/8) = 3
    std::filesystem::remove(path);
}

TEST_CASE("3D file round trip over q in {2,3,4}") {
    for (int q : {2, 3, 4}) {
        BitGrid3D g = random_grid3d(4, 5, 6, q, 2000 + q);
        auto path = tmp_file("fragcode_test_grid3d.bin");
        write_grid3d(g, path.string());
        BitGrid3D back = read_grid3d(path.string());
        CHECK(back == g);
        std::filesystem::remove(path);
    }
}

TEST_CASE("malformed grid files are rejected") {
    auto path = tmp_file("fragcode_test_bad.bin");

    { std::ofstream f(path); f << "FC2D 2 0 5\n"; }
    CHECK_THROWS_AS(read_grid2d(path.string()), FormatError);

    { std::ofstream f(path); f << "FC2D 2 4 4\n"; }  // truncated payload
    CHECK_THROWS_AS(read_grid2d(path.string()), FormatError);

    { std::ofstream f(path); f << "FC9X 2 4 4\n"; }
    CHECK_THROWS_AS(read_grid2d(path.string()), FormatError);

    { std::ofstream f(path); f << "FC2D 3 2 2\n"; f.put(3); f.put(0); f.put(0); f.put(0); }
    CHECK_THROWS_AS(read_grid2d(path.string()), FormatError);  // symbol >= q

    { std::ofstream f(path); f << "FC2D 2 2000000000 2000000000\n"; }
    CHECK_THROWS_AS(read_grid2d(path.string()), FormatError);  // dimension overflow

    CHECK_THROWS_AS(read_grid2d("/nonexistent/fragcode"), FormatError);
    std::filesystem::remove(path);
}

TEST_CASE("hex message round trip") {
    Message bits = {1, 0, 1, 1, 0};
    std::string hex = msg_to_hex(2, bits);
    CHECK(hex == "5:b0");  // 10110 padded to 10110000 = 0xb0
    CHECK(msg_from_hex(2, hex) == bits);

    Message syms = {0, 3, 2, 15};
    std::string hex16 = msg_to_hex(16, syms);
    CHECK(hex16 == "4:032f");
    CHECK(msg_from_hex(16, hex16) == syms);

    Message trits = {0, 2, 1};
    CHECK(msg_from_hex(3, msg_to_hex(3, trits)) == trits);

    CHECK_THROWS_AS(msg_from_hex(2, "5:zz"), FormatError);
    CHECK_THROWS_AS(msg_from_hex(2, "nolen"), FormatError);
    CHECK_THROWS_AS(msg_from_hex(3, "1:4"), FormatError);  // symbol >= q
    CHECK_THROWS_AS(msg_from_hex(2, "9:b0"), FormatError); // length exceeds digits
}

TEST_CASE("indexed split and join") {
    // 3 parts, partLen 7, idxWidth 2: segments of 5, suffix = index in binary.
    Message msg(15);
    for (std::size_t i = 0; i < msg.size(); ++i) msg[i] = (i * 3 + 1) % 2;
    auto parts = split_indexed(2, 3, 7, 2, msg);
    REQUIRE(parts.size() == 3);
    for (auto& part : parts) CHECK(part.size() == 7);
    CHECK(parts[0][5] == 0);  // index 1 = 01
    CHECK(parts[0][6] == 1);
    CHECK(parts[2][5] == 1);  // index 3 = 11
    CHECK(parts[2][6] == 1);

    auto shuffled = parts;
    std::swap(shuffled[0], shuffled[2]);
    CHECK(join_indexed(2, 3, 7, 2, shuffled) == msg);

    // Single part, zero-width index: identity.
    Message single = {1, 0, 1};
    auto sp = split_indexed(2, 1, 3, 0, single);
    REQUIRE(sp.size() == 1);
    CHECK(sp[0] == single);
    CHECK(join_indexed(2, 1, 3, 0, sp) == single);

    CHECK_THROWS_AS(split_indexed(2, 3, 7, 2, Message(14)), ParamError);
}
