#include "fragcode/grid.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fragcode {

namespace {

constexpr long long kMaxCells = 1LL << 31;

void check_dims2(long long rows, long long cols, int q) {
    if (rows < 1 || cols < 1) throw ParamError("grid dimensions must be positive");
    if (q < 2 || q > 256) throw ParamError("alphabet size must be in [2, 256]");
    if (rows * cols > kMaxCells) throw ParamError("grid too large");
}

void check_dims3(long long x, long long y, long long z, int q) {
    if (x < 1 || y < 1 || z < 1) throw ParamError("grid dimensions must be positive");
    if (q < 2 || q > 256) throw ParamError("alphabet size must be in [2, 256]");
    if (x * y > kMaxCells || x * y * z > kMaxCells) throw ParamError("grid too large");
}

void check_cells(const std::vector<std::uint8_t>& cells, std::size_t expected, int q) {
    if (cells.size() != expected) throw ParamError("cell array length does not match dimensions");
    for (std::uint8_t c : cells)
        if (c >= q) throw ParamError("cell value exceeds alphabet");
}

} // namespace

BitGrid2D::BitGrid2D(int rows, int cols, int q)
    : m_rows(rows), m_cols(cols), m_q(q) {
    check_dims2(rows, cols, q);
    m_cells.assign(static_cast<std::size_t>(rows) * cols, 0);
}

BitGrid2D::BitGrid2D(int rows, int cols, int q, std::vector<std::uint8_t> cells)
    : m_rows(rows), m_cols(cols), m_q(q), m_cells(std::move(cells)) {
    check_dims2(rows, cols, q);
    check_cells(m_cells, static_cast<std::size_t>(rows) * cols, q);
}

void BitGrid2D::check_range(int r, int c) const {
    if (r < 0 || r >= m_rows || c < 0 || c >= m_cols)
        throw std::out_of_range("grid cell index out of range");
}

BitGrid3D::BitGrid3D(int dimX, int dimY, int dimZ, int q)
    : m_x(dimX), m_y(dimY), m_z(dimZ), m_q(q) {
    check_dims3(dimX, dimY, dimZ, q);
    m_cells.assign(static_cast<std::size_t>(dimX) * dimY * dimZ, 0);
}

BitGrid3D::BitGrid3D(int dimX, int dimY, int dimZ, int q, std::vector<std::uint8_t> cells)
    : m_x(dimX), m_y(dimY), m_z(dimZ), m_q(q), m_cells(std::move(cells)) {
    check_dims3(dimX, dimY, dimZ, q);
    check_cells(m_cells, static_cast<std::size_t>(dimX) * dimY * dimZ, q);
}

void BitGrid3D::check_range(int x, int y, int z) const {
    if (x < 0 || x >= m_x || y < 0 || y >= m_y || z < 0 || z >= m_z)
        throw std::out_of_range("grid cell index out of range");
}

PrefixSum2D::PrefixSum2D(const BitGrid2D& g) : m_rows(g.rows()), m_cols(g.cols()) {
    m_sum.assign(static_cast<std::size_t>(m_rows + 1) * (m_cols + 1), 0);
    const auto stride = static_cast<std::size_t>(m_cols + 1);
    for (int r = 0; r < m_rows; ++r)
        for (int c = 0; c < m_cols; ++c) {
            long long v = g.cells()[static_cast<std::size_t>(r) * m_cols + c] != 0 ? 1 : 0;
            m_sum[(r + 1) * stride + (c + 1)] =
                v + m_sum[r * stride + (c + 1)] + m_sum[(r + 1) * stride + c] -
                m_sum[r * stride + c];
        }
}

long long PrefixSum2D::window_weight(int top, int left, int height, int width) const {
    if (top < 0 || left < 0 || height < 0 || width < 0 || top + height > m_rows ||
        left + width > m_cols)
        throw std::out_of_range("window out of range");
    const auto stride = static_cast<std::size_t>(m_cols + 1);
    return m_sum[(top + height) * stride + (left + width)] -
           m_sum[top * stride + (left + width)] - m_sum[(top + height) * stride + left] +
           m_sum[top * stride + left];
}

PrefixSum3D::PrefixSum3D(const BitGrid3D& g) : m_x(g.dimX()), m_y(g.dimY()), m_z(g.dimZ()) {
    const std::size_t sy = m_z + 1;
    const std::size_t sx = static_cast<std::size_t>(m_y + 1) * sy;
    m_sum.assign(static_cast<std::size_t>(m_x + 1) * sx, 0);
    auto S = [&](int x, int y, int z) -> long long& { return m_sum[x * sx + y * sy + z]; };
    for (int x = 0; x < m_x; ++x)
        for (int y = 0; y < m_y; ++y)
            for (int z = 0; z < m_z; ++z) {
                long long v =
                    g.cells()[(static_cast<std::size_t>(x) * m_y + y) * m_z + z] != 0 ? 1 : 0;
                S(x + 1, y + 1, z + 1) = v + S(x, y + 1, z + 1) + S(x + 1, y, z + 1) +
                                         S(x + 1, y + 1, z) - S(x, y, z + 1) -
                                         S(x, y + 1, z) - S(x + 1, y, z) + S(x, y, z);
            }
}

long long PrefixSum3D::window_weight(int x0, int y0, int z0, int sx, int sy, int sz) const {
    if (x0 < 0 || y0 < 0 || z0 < 0 || sx < 0 || sy < 0 || sz < 0 || x0 + sx > m_x ||
        y0 + sy > m_y || z0 + sz > m_z)
        throw std::out_of_range("window out of range");
    const std::size_t strideY = m_z + 1;
    const std::size_t strideX = static_cast<std::size_t>(m_y + 1) * strideY;
    auto S = [&](int x, int y, int z) { return m_sum[x * strideX + y * strideY + z]; };
    int x1 = x0 + sx, y1 = y0 + sy, z1 = z0 + sz;
    return S(x1, y1, z1) - S(x0, y1, z1) - S(x1, y0, z1) - S(x1, y1, z0) + S(x0, y0, z1) +
           S(x0, y1, z0) + S(x1, y0, z0) - S(x0, y0, z0);
}

BitGrid2D crop2d(const BitGrid2D& g, int top, int left, int height, int width) {
    if (top < 0 || left < 0 || height < 1 || width < 1 || top + height > g.rows() ||
        left + width > g.cols())
        throw std::out_of_range("crop out of range");
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(height) * width);
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c)
            cells[static_cast<std::size_t>(r) * width + c] = g.at(top + r, left + c);
    return BitGrid2D(height, width, g.q(), std::move(cells));
}

BitGrid3D crop3d(const BitGrid3D& g, int x0, int y0, int z0, int sx, int sy, int sz) {
    if (x0 < 0 || y0 < 0 || z0 < 0 || sx < 1 || sy < 1 || sz < 1 || x0 + sx > g.dimX() ||
        y0 + sy > g.dimY() || z0 + sz > g.dimZ())
        throw std::out_of_range("crop out of range");
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(sx) * sy * sz);
    for (int x = 0; x < sx; ++x)
        for (int y = 0; y < sy; ++y)
            for (int z = 0; z < sz; ++z)
                cells[(static_cast<std::size_t>(x) * sy + y) * sz + z] =
                    g.at(x0 + x, y0 + y, z0 + z);
    return BitGrid3D(sx, sy, sz, g.q(), std::move(cells));
}

long long window_weight2d(const PrefixSum2D& p, int top, int left, int height, int width) {
    return p.window_weight(top, left, height, width);
}

long long window_weight3d(const PrefixSum3D& p, int x0, int y0, int z0, int sx, int sy,
                          int sz) {
    return p.window_weight(x0, y0, z0, sx, sy, sz);
}

namespace {

// Reads the ASCII header line and `count` integer fields after the magic word.
std::vector<long long> parse_header(std::istream& in, const std::string& magic,
                                    std::size_t count) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("missing header line");
    std::istringstream hs(line);
    std::string word;
    hs >> word;
    if (word != magic) throw FormatError("bad magic, expected " + magic);
    std::vector<long long> fields(count);
    for (auto& f : fields)
        if (!(hs >> f)) throw FormatError("incomplete header");
    std::string extra;
    if (hs >> extra) throw FormatError("trailing header fields");
    return fields;
}

std::vector<std::uint8_t> read_payload(std::istream& in, std::size_t bytes) {
    std::vector<std::uint8_t> buf(bytes);
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(bytes));
    if (static_cast<std::size_t>(in.gcount()) != bytes) throw FormatError("truncated payload");
    char probe;
    if (in.read(&probe, 1)) throw FormatError("trailing data after payload");
    return buf;
}

// q=2 payloads pack bits MSB-first; `chunk` symbols per packed run (a row for 2D,
// the whole stream for 3D), each run padded to a byte boundary.
std::vector<std::uint8_t> pack_bits(const std::vector<std::uint8_t>& cells, std::size_t chunk) {
    std::vector<std::uint8_t> out;
    out.reserve((cells.size() / chunk) * ((chunk + 7) / 8));
    for (std::size_t start = 0; start < cells.size(); start += chunk) {
        std::uint8_t cur = 0;
        int nbits = 0;
        for (std::size_t i = start; i < start + chunk; ++i) {
            cur = static_cast<std::uint8_t>((cur << 1) | (cells[i] & 1));
            if (++nbits == 8) {
                out.push_back(cur);
                cur = 0;
                nbits = 0;
            }
        }
        if (nbits > 0) out.push_back(static_cast<std::uint8_t>(cur << (8 - nbits)));
    }
    return out;
}

std::vector<std::uint8_t> unpack_bits(const std::vector<std::uint8_t>& bytes,
                                      std::size_t total, std::size_t chunk) {
    std::vector<std::uint8_t> cells;
    cells.reserve(total);
    std::size_t bytesPerChunk = (chunk + 7) / 8;
    for (std::size_t start = 0, runIdx = 0; start < total; start += chunk, ++runIdx) {
        for (std::size_t i = 0; i < chunk; ++i) {
            std::size_t byteIdx = runIdx * bytesPerChunk + i / 8;
            cells.push_back((bytes[byteIdx] >> (7 - i % 8)) & 1);
        }
    }
    return cells;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open " + path + " for writing");
    return out;
}

} // namespace

BitGrid2D read_grid2d(const std::string& path) {
    auto in = open_input(path);
    auto f = parse_header(in, "FC2D", 3);
    long long q = f[0], rows = f[1], cols = f[2];
    if (q < 2 || q > 256 || rows < 1 || cols < 1 || rows > kMaxCells || cols > kMaxCells ||
        rows * cols > kMaxCells)
        throw FormatError("unsupported grid dimensions");
    std::size_t total = static_cast<std::size_t>(rows * cols);
    std::vector<std::uint8_t> cells;
    if (q == 2) {
        std::size_t bytes = static_cast<std::size_t>(rows) * ((cols + 7) / 8);
        cells = unpack_bits(read_payload(in, bytes), total, static_cast<std::size_t>(cols));
    } else {
        cells = read_payload(in, total);
        for (auto c : cells)
            if (c >= q) throw FormatError("symbol exceeds alphabet");
    }
    return BitGrid2D(static_cast<int>(rows), static_cast<int>(cols), static_cast<int>(q),
                     std::move(cells));
}

void write_grid2d(const BitGrid2D& g, const std::string& path) {
    auto out = open_output(path);
    out << "FC2D " << g.q() << ' ' << g.rows() << ' ' << g.cols() << '\n';
    std::vector<std::uint8_t> payload =
        g.q() == 2 ? pack_bits(g.cells(), static_cast<std::size_t>(g.cols())) : g.cells();
    out.write(reinterpret_cast<const char*>(payload.data()),
              static_cast<std::streamsize>(payload.size()));
    if (!out) throw FormatError("write failed for " + path);
}

BitGrid3D read_grid3d(const std::string& path) {
    auto in = open_input(path);
    auto f = parse_header(in, "FC3D", 4);
    long long q = f[0], x = f[1], y = f[2], z = f[3];
    if (q < 2 || q > 256 || x < 1 || y < 1 || z < 1 || x > kMaxCells || y > kMaxCells ||
        z > kMaxCells || x * y > kMaxCells || x * y * z > kMaxCells)
        throw FormatError("unsupported grid dimensions");
    std::size_t total = static_cast<std::size_t>(x * y * z);
    std::vector<std::uint8_t> cells;
    if (q == 2) {
        cells = unpack_bits(read_payload(in, (total + 7) / 8), total, total);
    } else {
        cells = read_payload(in, total);
        for (auto c : cells)
            if (c >= q) throw FormatError("symbol exceeds alphabet");
    }
    return BitGrid3D(static_cast<int>(x), static_cast<int>(y), static_cast<int>(z),
                     static_cast<int>(q), std::move(cells));
}

void write_grid3d(const BitGrid3D& g, const std::string& path) {
    auto out = open_output(path);
    out << "FC3D " << g.q() << ' ' << g.dimX() << ' ' << g.dimY() << ' ' << g.dimZ() << '\n';
    std::vector<std::uint8_t> payload =
        g.q() == 2 ? pack_bits(g.cells(), g.cells().size()) : g.cells();
    out.write(reinterpret_cast<const char*>(payload.data()),
              static_cast<std::streamsize>(payload.size()));
    if (!out) throw FormatError("write failed for " + path);
}

} // namespace fragcode
