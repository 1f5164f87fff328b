#pragma once
#include <utility>
#include <vector>

#include "fragcode/grid.hpp"
#include "fragcode/message.hpp"

namespace fragcode {

// Derived system parameters for the 2D code. Invariants:
//   d = largest integer with h >= 3d-1, d >= 3
//   m = largest power of two with M >= (4d-1)((m+1)d+d-1), m >= 8
//   mPrime = m/4; R = d^2-4; k = (mPrime-1)(R-idxWidth) >= 1
//   d | n and mPrime | (n/d)
struct CodeParams2D {
    int q = 2;
    long long n = 0;        // codeword side
    long long M = 0;        // minimum fragment area
    long long h = 0;        // minimum fragment side
    long long d = 0;        // unit side
    long long m = 0;        // color budget (power of two)
    long long mPrime = 0;   // number of colors, m/4
    long long R = 0;        // payload symbols per unit
    long long idxWidth = 0; // index suffix width in base-q digits
    long long k = 0;        // message length
};

// (d, m) derivation shared with the rate tables; throws ParamError when
// m < 8 would result.
std::pair<long long, long long> derive_dm_2d(int q, long long M, long long h);

CodeParams2D derive_params_2d(int q, long long M, long long h);  // n = d*m
CodeParams2D derive_params_2d(int q, long long n, long long M, long long h);

// Unit color, (j - bit_reverse(i mod mPrime)) mod mPrime. Adjacent units
// never share a color.
int color(const CodeParams2D& p, long long i, long long j);

// Message <-> indexed part strings of length R (see split_indexed).
std::vector<Message> split_message(const CodeParams2D& p, const Message& msg);
Message join_message(const CodeParams2D& p, const std::vector<Message>& parts);

// d x d unit with the four corner cells set to 1 and the payload laid out
// row-major over the remaining cells.
BitGrid2D pack_unit(const CodeParams2D& p, const Message& payload);
Message unpack_unit(const CodeParams2D& p, const BitGrid2D& unit);

BitGrid2D encode2d(const CodeParams2D& p, const Message& msg);

// Lexicographically first all-zero d x d window; throws DecodeError when none.
std::pair<int, int> find_zero_square(const BitGrid2D& frag, int d);

// Recovers the message from any legal fragment (no positional metadata).
Message decode2d(const CodeParams2D& p, const BitGrid2D& frag);

// Constructive witness (x, y) with x*y == m such that any legal a x b fragment
// contains an (x+1) x (y+1) grid of complete units, i.e. a >= (x+2)d-1 and
// b >= (y+2)d-1. Throws ParamError on illegal dims.
std::pair<long long, long long> check_unit_grid_lemma(const CodeParams2D& p,
                                                      long long a, long long b);

} // namespace fragcode
