#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "fragcode/errors.hpp"

namespace fragcode {

// Dense row-major 2D array of symbols in [0, q). Immutable after construction.
class BitGrid2D {
public:
    BitGrid2D(int rows, int cols, int q);  // zero-filled
    BitGrid2D(int rows, int cols, int q, std::vector<std::uint8_t> cells);

    int rows() const { return m_rows; }
    int cols() const { return m_cols; }
    int q() const { return m_q; }
    std::uint8_t at(int r, int c) const {
        check_range(r, c);
        return m_cells[static_cast<std::size_t>(r) * m_cols + c];
    }
    const std::vector<std::uint8_t>& cells() const { return m_cells; }

    bool operator==(const BitGrid2D&) const = default;

private:
    void check_range(int r, int c) const;
    int m_rows, m_cols, m_q;
    std::vector<std::uint8_t> m_cells;
};

// Dense 3D array, x-major then y then z: index(x,y,z) = (x*dimY + y)*dimZ + z.
class BitGrid3D {
public:
    BitGrid3D(int dimX, int dimY, int dimZ, int q);  // zero-filled
    BitGrid3D(int dimX, int dimY, int dimZ, int q, std::vector<std::uint8_t> cells);

    int dimX() const { return m_x; }
    int dimY() const { return m_y; }
    int dimZ() const { return m_z; }
    int q() const { return m_q; }
    std::uint8_t at(int x, int y, int z) const {
        check_range(x, y, z);
        return m_cells[(static_cast<std::size_t>(x) * m_y + y) * m_z + z];
    }
    const std::vector<std::uint8_t>& cells() const { return m_cells; }

    bool operator==(const BitGrid3D&) const = default;

private:
    void check_range(int x, int y, int z) const;
    int m_x, m_y, m_z, m_q;
    std::vector<std::uint8_t> m_cells;
};

// Inclusive cumulative count of nonzero cells; O(1) window weight queries.
class PrefixSum2D {
public:
    explicit PrefixSum2D(const BitGrid2D& g);
    int rows() const { return m_rows; }
    int cols() const { return m_cols; }
    // Number of nonzero cells in the window; equals naive summation.
    long long window_weight(int top, int left, int height, int width) const;

private:
    int m_rows, m_cols;
    std::vector<long long> m_sum;  // (rows+1) x (cols+1)
};

class PrefixSum3D {
public:
    explicit PrefixSum3D(const BitGrid3D& g);
    int dimX() const { return m_x; }
    int dimY() const { return m_y; }
    int dimZ() const { return m_z; }
    long long window_weight(int x0, int y0, int z0, int sx, int sy, int sz) const;

private:
    int m_x, m_y, m_z;
    std::vector<long long> m_sum;  // (x+1)(y+1)(z+1)
};

// Sub-grid with all positional metadata discarded. Out-of-bounds crops are rejected.
BitGrid2D crop2d(const BitGrid2D& g, int top, int left, int height, int width);
BitGrid3D crop3d(const BitGrid3D& g, int x0, int y0, int z0, int sx, int sy, int sz);

long long window_weight2d(const PrefixSum2D& p, int top, int left, int height, int width);
long long window_weight3d(const PrefixSum3D& p, int x0, int y0, int z0, int sx, int sy, int sz);

// File formats (see README): "FC2D <q> <rows> <cols>\n" with q=2 rows bit-packed
// MSB-first and padded per row, q>2 one byte per symbol; "FC3D <q> <x> <y> <z>\n"
// with q=2 packed as one contiguous bit stream, final byte padded.
BitGrid2D read_grid2d(const std::string& path);
void write_grid2d(const BitGrid2D& g, const std::string& path);
BitGrid3D read_grid3d(const std::string& path);
void write_grid3d(const BitGrid3D& g, const std::string& path);

} // namespace fragcode
