#include "fragcode/discrepancy.hpp"

#include <algorithm>
#include <sstream>

#include "fragcode/grid.hpp"

namespace fragcode {

namespace {

bool is_power_of(long long v, long long base) {
    if (v < 1) return false;
    while (v % base == 0) v /= base;
    return v == 1;
}

int log2_exact(long long w) {
    int c = 0;
    while ((1LL << c) < w) ++c;
    if ((1LL << c) != w) throw ParamError("not a power of two");
    return c;
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

void sort_points(PointSet2D& ps) { std::sort(ps.points.begin(), ps.points.end()); }
void sort_points(PointSet3D& ps) { std::sort(ps.points.begin(), ps.points.end()); }

// 0/1 occupancy grid for the oracle prefix sums; x maps to rows, y to columns.
BitGrid2D occupancy(const PointSet2D& ps) {
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(ps.boundW) * ps.boundH, 0);
    for (auto& p : ps.points) {
        if (p.x < 0 || p.x >= ps.boundW || p.y < 0 || p.y >= ps.boundH)
            throw ParamError("point outside bounding box");
        cells[static_cast<std::size_t>(p.x) * ps.boundH + p.y] = 1;
    }
    return BitGrid2D(ps.boundW, ps.boundH, 2, std::move(cells));
}

BitGrid3D occupancy(const PointSet3D& ps) {
    std::vector<std::uint8_t> cells(
        static_cast<std::size_t>(ps.boundX) * ps.boundY * ps.boundZ, 0);
    for (auto& p : ps.points) {
        if (p.x < 0 || p.x >= ps.boundX || p.y < 0 || p.y >= ps.boundY || p.z < 0 ||
            p.z >= ps.boundZ)
            throw ParamError("point outside bounding box");
        cells[(static_cast<std::size_t>(p.x) * ps.boundY + p.y) * ps.boundZ + p.z] = 1;
    }
    return BitGrid3D(ps.boundX, ps.boundY, ps.boundZ, 2, std::move(cells));
}

} // namespace

long long bit_reverse(long long z, int c) {
    if (c < 0 || c > 62) throw ParamError("bit width out of range");
    if (z < 0 || z >= (1LL << c)) throw ParamError("value out of range for bit width");
    long long r = 0;
    for (int i = 0; i < c; ++i)
        if (z & (1LL << i)) r |= 1LL << (c - 1 - i);
    return r;
}

Rational radical_inverse(long long z, long long p) {
    if (z < 0) throw ParamError("value must be nonnegative");
    if (!is_prime(p)) throw ParamError("base must be prime");
    Rational acc(0, 1);
    Rational scale(1, p);
    while (z > 0) {
        acc = acc + Rational(z % p, 1) * scale;
        scale = scale * Rational(1, p);
        z /= p;
    }
    return acc;
}

PointSet2D vdc_set(int w) {
    int c = log2_exact(w);
    PointSet2D ps{w, w, {}};
    ps.points.reserve(static_cast<std::size_t>(w));
    for (long long k = 0; k < w; ++k)
        ps.points.push_back({static_cast<int>(k), static_cast<int>(bit_reverse(k, c))});
    sort_points(ps);
    return ps;
}

PointSet2D vdc_shifted(int w, int i, int j, bool strict) {
    if (strict && (i < 0 || i >= w || j < 0 || j >= w))
        throw ParamError("shift out of range");
    int c = log2_exact(w);
    auto norm = [w](int v) { return ((v % w) + w) % w; };
    i = norm(i);
    j = norm(j);
    PointSet2D ps{w, w, {}};
    ps.points.reserve(static_cast<std::size_t>(w));
    for (long long k = 0; k < w; ++k)
        ps.points.push_back({static_cast<int>((k + j) % w),
                             static_cast<int>((bit_reverse(k, c) + i) % w)});
    sort_points(ps);
    return ps;
}

PointSet2D vdc_tiled(int w, int z, int shift) {
    int c = log2_exact(w);
    if (z < w || z % w != 0) throw ParamError("tile extent must be a positive multiple of w");
    if (shift < 0 || shift >= w) throw ParamError("shift out of range");
    PointSet2D ps{z, z, {}};
    ps.points.reserve(static_cast<std::size_t>(z) * z / w);
    for (int tx = 0; tx < z / w; ++tx)
        for (int ty = 0; ty < z / w; ++ty)
            for (long long k = 0; k < w; ++k) {
                int x = tx * w + static_cast<int>(k);
                int y = ty * w + static_cast<int>(bit_reverse(k, c));
                ps.points.push_back({x, static_cast<int>((y + shift) % z)});
            }
    sort_points(ps);
    return ps;
}

namespace {

PointSet3D hh_points(int w1, int w3, bool requireIntegral) {
    log2_exact(w1);
    if (w3 < 1) throw ParamError("w3 must be positive");
    if (requireIntegral && !is_power_of(w3, 3)) throw ParamError("w3 must be a power of three");
    PointSet3D ps{w1, w1, w3, {}};
    ps.points.reserve(static_cast<std::size_t>(w1));
    for (long long k = 0; k < w1; ++k) {
        Rational ry = w1 * radical_inverse(k, 2);
        Rational rz = w3 * radical_inverse(k, 3);
        if (requireIntegral && !(ry.is_integer() && rz.is_integer()))
            throw ParamError("scaled coordinates are not integral for this (w1, w3)");
        ps.points.push_back({static_cast<int>(k), static_cast<int>(ry.floor_val()),
                             static_cast<int>(rz.floor_val())});
    }
    sort_points(ps);
    return ps;
}

PointSet3D hh_shift_apply(PointSet3D ps, int d1, int d2) {
    if (d1 < 0 || d1 >= ps.boundY || d2 < 0 || d2 >= ps.boundZ)
        throw ParamError("shift out of range");
    for (auto& p : ps.points) {
        p.y = (p.y + d1) % ps.boundY;
        p.z = (p.z + d2) % ps.boundZ;
    }
    sort_points(ps);
    return ps;
}

} // namespace

PointSet3D hh_set(int w1, int w3) { return hh_points(w1, w3, true); }

PointSet3D hh_set_cells(int w1, int w3) { return hh_points(w1, w3, false); }

PointSet3D hh_shifted(int w1, int w3, int d1, int d2) {
    return hh_shift_apply(hh_set(w1, w3), d1, d2);
}

PointSet3D hh_shifted_cells(int w1, int w3, int d1, int d2) {
    return hh_shift_apply(hh_set_cells(w1, w3), d1, d2);
}

PointSet3D hh_tiled(int w1, int w3, int v1, int v2, int d1, int d2) {
    PointSet3D base = hh_set_cells(w1, w3);
    if (v1 < w1 || v1 % w1 != 0 || v2 < w3 || v2 % w3 != 0)
        throw ParamError("tile extents must be positive multiples of (w1, w3)");
    if (d1 < 0 || d1 >= w1 || d2 < 0 || d2 >= w3) throw ParamError("shift out of range");
    PointSet3D ps{v1, v1, v2, {}};
    ps.points.reserve(static_cast<std::size_t>(v1) * v1 / w1 * (v2 / w3));
    for (int tx = 0; tx < v1 / w1; ++tx)
        for (int ty = 0; ty < v1 / w1; ++ty)
            for (int tz = 0; tz < v2 / w3; ++tz)
                for (auto& p : base.points) {
                    int x = tx * w1 + p.x;
                    int y = ty * w1 + p.y;
                    int z = tz * w3 + p.z;
                    ps.points.push_back(
                        {x, (y + d1) % v1, (z + d2) % v2});
                }
    sort_points(ps);
    return ps;
}

RectWitness largest_empty_rect(const PointSet2D& ps) {
    if (ps.boundW < 1 || ps.boundH < 1) throw ParamError("empty bounding box");
    if (ps.boundW > 256 || ps.boundH > 256) throw ParamError("bounds exceed oracle limit");
    PrefixSum2D sums(occupancy(ps));
    RectWitness best;
    for (int x = 0; x < ps.boundW; ++x)
        for (int w = 1; x + w <= ps.boundW; ++w)
            for (int y = 0; y < ps.boundH; ++y)
                for (int h = 1; y + h <= ps.boundH; ++h) {
                    // growing h keeps any hit inside, so stop at the first one
                    if (sums.window_weight(x, y, w, h) != 0) break;
                    long long area = 1LL * w * h;
                    if (area > best.area) best = {area, x, y, w, h};
                }
    return best;
}

BoxWitness largest_empty_box(const PointSet3D& ps) {
    if (ps.boundX < 1 || ps.boundY < 1 || ps.boundZ < 1) throw ParamError("empty bounding box");
    long long cellCount = 1LL * ps.boundX * ps.boundY * ps.boundZ;
    if (cellCount > (1LL << 20)) throw ParamError("bounds exceed oracle limit");
    PrefixSum3D sums(occupancy(ps));
    BoxWitness best;
    for (int x = 0; x < ps.boundX; ++x)
        for (int sx = 1; x + sx <= ps.boundX; ++sx)
            for (int y = 0; y < ps.boundY; ++y)
                for (int sy = 1; y + sy <= ps.boundY; ++sy)
                    for (int z = 0; z < ps.boundZ; ++z)
                        for (int sz = 1; z + sz <= ps.boundZ; ++sz) {
                            if (sums.window_weight(x, y, z, sx, sy, sz) != 0) break;
                            long long vol = 1LL * sx * sy * sz;
                            if (vol > best.volume) best = {vol, x, y, z, sx, sy, sz};
                        }
    return best;
}

std::string to_text(const PointSet2D& ps) {
    std::ostringstream out;
    for (auto& p : ps.points) out << p.x << ' ' << p.y << '\n';
    return out.str();
}

std::string to_text(const PointSet3D& ps) {
    std::ostringstream out;
    for (auto& p : ps.points) out << p.x << ' ' << p.y << ' ' << p.z << '\n';
    return out.str();
}

} // namespace fragcode
