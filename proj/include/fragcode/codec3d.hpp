#pragma once
#include <tuple>
#include <vector>

#include "fragcode/grid.hpp"
#include "fragcode/message.hpp"

namespace fragcode {

// Derived system parameters for the 3D code. Invariants:
//   d = largest integer with h >= 3d-1, d >= 3
//   c = largest integer (>= 3) with M >= (3d-1)^2((ab+1)d+d-1),
//       where a = 2^c and b = smallest power of three >= a
//   colorCount = ab/24 = (a/8)(b/3) >= 2; R = d^3-8
//   k = (colorCount-1)(R-idxWidth) >= 1
//   ad | n and bd | nPrime
struct CodeParams3D {
    int q = 2;
    long long n = 0, nPrime = 0;  // codeword extents (n x n x nPrime)
    long long M = 0;              // minimum fragment volume
    long long h = 0;              // minimum fragment side
    long long d = 0;              // unit side
    long long c = 0;              // dyadic exponent, a = 2^c
    long long a = 0, b = 0;
    long long colorCount = 0;
    long long R = 0;              // payload symbols per unit
    long long idxWidth = 0;
    long long k = 0;
};

// (d, a, b) derivation shared with the rate tables.
std::tuple<long long, long long, long long> derive_dab_3d(int q, long long M, long long h);

CodeParams3D derive_params_3d(int q, long long M, long long h);  // n = a*d, nPrime = b*d
CodeParams3D derive_params_3d(int q, long long M, long long h, long long n, long long nPrime);

// Unit color: reduce (i, j, l) modulo the (a/8, a/8, b/3) small grid, find the
// unique shift pair (d1, d2) whose shifted point set contains it, and return
// d1*(b/3) + d2. Classes partition the unit grid.
int color3d(const CodeParams3D& p, long long i, long long j, long long l);

std::vector<Message> split_message3d(const CodeParams3D& p, const Message& msg);
Message join_message3d(const CodeParams3D& p, const std::vector<Message>& parts);

// d x d x d unit with the eight corner cells set to 1 and the payload laid out
// in the fixed linearization over the remaining cells.
BitGrid3D pack_unit3d(const CodeParams3D& p, const Message& payload);
Message unpack_unit3d(const CodeParams3D& p, const BitGrid3D& unit);

BitGrid3D encode3d(const CodeParams3D& p, const Message& msg);

// Recovers the message from any legal fragment. Alignment candidates are the
// distinct residues (mod d) of all-zero d-cube positions, tried in
// lexicographic order; a candidate is accepted only if every complete unit is
// all-zero or corner-marked and the part indices are exactly 1..colorCount-1.
Message decode3d(const CodeParams3D& p, const BitGrid3D& frag);

// Constructive witness (x, y, z) with x*y*z == ab such that the fragment
// contains an (x+1) x (y+1) x (z+1) grid of complete units. Searches divisor
// triples; throws DecodeError when no witness exists for the given dims and
// ParamError when the dims are illegal.
std::tuple<long long, long long, long long> check_unit_grid_lemma_3d(
    const CodeParams3D& p, long long alpha, long long beta, long long gamma);

} // namespace fragcode
