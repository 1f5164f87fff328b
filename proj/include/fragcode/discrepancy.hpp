#pragma once
#include <cstdint>
#include <vector>

#include "fragcode/errors.hpp"
#include "fragcode/rational.hpp"

namespace fragcode {

struct Point2 {
    int x = 0, y = 0;
    auto operator<=>(const Point2&) const = default;
};

struct Point3 {
    int x = 0, y = 0, z = 0;
    auto operator<=>(const Point3&) const = default;
};

// Finite integer point set inside [0, boundW) x [0, boundH); sorted, no duplicates.
struct PointSet2D {
    int boundW = 0, boundH = 0;
    std::vector<Point2> points;
};

// Finite integer point set inside [0, boundX) x [0, boundY) x [0, boundZ).
struct PointSet3D {
    int boundX = 0, boundY = 0, boundZ = 0;
    std::vector<Point3> points;
};

// Digit reversal of z within c bits; involutive on [0, 2^c).
long long bit_reverse(long long z, int c);

// Base-p digit reversal past the radix point, as an exact rational in [0, 1).
Rational radical_inverse(long long z, long long p);

// { (k, bit_reverse(k)) : k in [0, w) } for w a power of two.
PointSet2D vdc_set(int w);

// Cyclic shift of vdc_set by i along y and j along x. Out-of-range shifts are
// reduced mod w unless strict, in which case they are rejected.
PointSet2D vdc_shifted(int w, int i, int j, bool strict = false);

// vdc_set copies tiled over the (z/w)^2 grid, then cyclically shifted by
// `shift` in y (mod z). Requires w | z and 0 <= shift < w.
PointSet2D vdc_tiled(int w, int z, int shift);

// { (k, w1*radical_inverse(k,2), w3*radical_inverse(k,3)) : k in [0, w1) }.
// Requires every scaled coordinate to be an integer.
PointSet3D hh_set(int w1, int w3);

// Same construction with each scaled coordinate mapped to its containing
// integer cell (floor); defined for every (power-of-two w1, w3 >= 1).
PointSet3D hh_set_cells(int w1, int w3);

PointSet3D hh_shifted(int w1, int w3, int d1, int d2);
PointSet3D hh_shifted_cells(int w1, int w3, int d1, int d2);

// hh_set_cells copies tiled over a v1 x v1 x v2 box (w1 | v1, w3 | v2), then
// cyclically shifted by (d1, d2) in (y, z). Requires 0 <= d1 < w1, 0 <= d2 < w3.
PointSet3D hh_tiled(int w1, int w3, int v1, int v2, int d1, int d2);

struct RectWitness {
    long long area = 0;
    int x = 0, y = 0, w = 0, h = 0;  // one maximizing empty rectangle
};

struct BoxWitness {
    long long volume = 0;
    int x = 0, y = 0, z = 0, sx = 0, sy = 0, sz = 0;
};

// Exact maximum empty axis-parallel rectangle area over integer cell ranges,
// by enumeration of all O(W^2 H^2) rectangles with prefix-sum emptiness tests.
// Bounds are limited to 256 per axis.
RectWitness largest_empty_rect(const PointSet2D& ps);

// 3D analog; total bounding-box cell count limited to 2^20.
BoxWitness largest_empty_box(const PointSet3D& ps);

// Sorted "x y [z]" lines, one point per line, for golden-file comparisons.
std::string to_text(const PointSet2D& ps);
std::string to_text(const PointSet3D& ps);

} // namespace fragcode
