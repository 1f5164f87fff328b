#include "fragcode/codec2d.hpp"

#include <optional>

#include "fragcode/discrepancy.hpp"

namespace fragcode {

namespace {

using int128 = __int128;

int log2_exponent(long long v) {
    int e = 0;
    while ((1LL << e) < v) ++e;
    return e;
}

// Feasibility product (4d-1)((m+1)d+d-1) without overflow.
int128 area_floor(long long d, long long m) {
    return int128(4 * d - 1) * ((m + 2) * d - 1);
}

// Smallest digit count with q^w >= parts; gate: widths must also reach the
// top 1-based index `parts` itself unless there is a single unindexed part.
long long index_width(int q, long long parts) {
    long long w = 0;
    int128 cap = 1;
    while (cap < parts) {
        cap *= q;
        ++w;
    }
    if (parts > 1 && cap == parts)
        throw ParamError("index width cannot address all part indices for this alphabet");
    return w;
}

} // namespace

std::pair<long long, long long> derive_dm_2d(int q, long long M, long long h) {
    if (q < 2 || q > 256) throw ParamError("alphabet size must be in [2, 256]");
    if (M < 1) throw ParamError("fragment area bound must be positive");
    if (h < 2) throw ParamError("fragment side bound must be at least 2");
    long long d = (h + 1) / 3;
    if (d < 3) throw ParamError("fragment side bound too small: unit side would be below 3");
    if (int128(M) < area_floor(d, 8))
        throw ParamError("fragment area bound too small: color budget would be below 8");
    long long m = 8;
    while (int128(M) >= area_floor(d, 2 * m)) m *= 2;
    return {d, m};
}

CodeParams2D derive_params_2d(int q, long long M, long long h) {
    auto [d, m] = derive_dm_2d(q, M, h);
    return derive_params_2d(q, d * m, M, h);
}

CodeParams2D derive_params_2d(int q, long long n, long long M, long long h) {
    auto [d, m] = derive_dm_2d(q, M, h);
    CodeParams2D p;
    p.q = q;
    p.n = n;
    p.M = M;
    p.h = h;
    p.d = d;
    p.m = m;
    p.mPrime = m / 4;
    p.R = d * d - 4;
    if (n < 1 || n % d != 0) throw ParamError("codeword side must be a multiple of the unit side");
    if ((n / d) % p.mPrime != 0)
        throw ParamError("unit count per side must be a multiple of the color count");
    p.idxWidth = index_width(q, p.mPrime - 1);
    p.k = (p.mPrime - 1) * (p.R - p.idxWidth);
    if (p.k < 1) throw ParamError("message length would be below 1");
    return p;
}

int color(const CodeParams2D& p, long long i, long long j) {
    long long units = p.n / p.d;
    if (i < 0 || i >= units || j < 0 || j >= units)
        throw ParamError("unit index out of range");
    int c = log2_exponent(p.mPrime);
    long long f = bit_reverse(i % p.mPrime, c);
    long long r = (j - f) % p.mPrime;
    if (r < 0) r += p.mPrime;
    return static_cast<int>(r);
}

std::vector<Message> split_message(const CodeParams2D& p, const Message& msg) {
    return split_indexed(p.q, p.mPrime - 1, p.R, p.idxWidth, msg);
}

Message join_message(const CodeParams2D& p, const std::vector<Message>& parts) {
    return join_indexed(p.q, p.mPrime - 1, p.R, p.idxWidth, parts);
}

namespace {

bool is_corner2d(long long d, long long r, long long c) {
    return (r == 0 || r == d - 1) && (c == 0 || c == d - 1);
}

} // namespace

BitGrid2D pack_unit(const CodeParams2D& p, const Message& payload) {
    long long d = p.d;
    if (d < 3) throw ParamError("unit side must be at least 3");
    if (static_cast<long long>(payload.size()) != p.R)
        throw ParamError("payload length must equal the unit capacity");
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(d * d), 0);
    std::size_t next = 0;
    for (long long r = 0; r < d; ++r)
        for (long long c = 0; c < d; ++c) {
            std::size_t idx = static_cast<std::size_t>(r * d + c);
            if (is_corner2d(d, r, c)) {
                cells[idx] = 1;
            } else {
                std::uint8_t s = payload[next++];
                if (s >= p.q) throw ParamError("payload symbol exceeds alphabet");
                cells[idx] = s;
            }
        }
    return BitGrid2D(static_cast<int>(d), static_cast<int>(d), p.q, std::move(cells));
}

Message unpack_unit(const CodeParams2D& p, const BitGrid2D& unit) {
    long long d = p.d;
    if (unit.rows() != d || unit.cols() != d || unit.q() != p.q)
        throw ParamError("unit grid has wrong shape");
    Message payload;
    payload.reserve(static_cast<std::size_t>(p.R));
    for (long long r = 0; r < d; ++r)
        for (long long c = 0; c < d; ++c) {
            std::uint8_t v = unit.at(static_cast<int>(r), static_cast<int>(c));
            if (is_corner2d(d, r, c)) {
                if (v != 1) throw DecodeError("unit corner marker missing");
            } else {
                payload.push_back(v);
            }
        }
    return payload;
}

BitGrid2D encode2d(const CodeParams2D& p, const Message& msg) {
    std::vector<Message> parts = split_message(p, msg);
    std::vector<BitGrid2D> packed;
    packed.reserve(parts.size());
    for (const auto& part : parts) packed.push_back(pack_unit(p, part));

    long long units = p.n / p.d;
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(p.n * p.n), 0);
    for (long long i = 0; i < units; ++i)
        for (long long j = 0; j < units; ++j) {
            int c = color(p, i, j);
            if (c == 0) continue;
            const BitGrid2D& unit = packed[static_cast<std::size_t>(c - 1)];
            for (long long r = 0; r < p.d; ++r)
                for (long long col = 0; col < p.d; ++col)
                    cells[static_cast<std::size_t>((i * p.d + r) * p.n + j * p.d + col)] =
                        unit.at(static_cast<int>(r), static_cast<int>(col));
        }
    return BitGrid2D(static_cast<int>(p.n), static_cast<int>(p.n), p.q, std::move(cells));
}

std::pair<int, int> find_zero_square(const BitGrid2D& frag, int d) {
    if (d < 1) throw ParamError("window side must be positive");
    if (frag.rows() < d || frag.cols() < d)
        throw DecodeError("fragment smaller than the scan window");
    PrefixSum2D sums(frag);
    for (int top = 0; top + d <= frag.rows(); ++top)
        for (int left = 0; left + d <= frag.cols(); ++left)
            if (sums.window_weight(top, left, d, d) == 0) return {top, left};
    throw DecodeError("no all-zero window: fragment illegal or corrupted");
}

namespace {

// Reads the 1-based part index from a payload's suffix digits.
long long part_index(const CodeParams2D& p, const Message& payload) {
    if (p.idxWidth == 0) return 1;
    long long idx = 0;
    for (long long i = p.R - p.idxWidth; i < p.R; ++i)
        idx = idx * p.q + payload[static_cast<std::size_t>(i)];
    return idx;
}

} // namespace

Message decode2d(const CodeParams2D& p, const BitGrid2D& frag) {
    if (frag.q() != p.q) throw ParamError("fragment alphabet does not match the code");
    long long rows = frag.rows(), cols = frag.cols();
    if (rows < p.h || cols < p.h || int128(rows) * cols < p.M)
        throw DecodeError("fragment is not legal for these parameters");

    auto [zt, zl] = find_zero_square(frag, static_cast<int>(p.d));
    int d = static_cast<int>(p.d);
    int offR = zt % d, offC = zl % d;

    long long partCount = p.mPrime - 1;
    std::vector<std::optional<Message>> found(static_cast<std::size_t>(partCount));
    for (int top = offR; top + d <= rows; top += d)
        for (int left = offC; left + d <= cols; left += d) {
            BitGrid2D unit = crop2d(frag, top, left, d, d);
            bool zero = true;
            for (auto cell : unit.cells())
                if (cell != 0) { zero = false; break; }
            if (zero) continue;
            Message payload = unpack_unit(p, unit);
            long long idx = part_index(p, payload);
            if (idx < 1 || idx > partCount)
                throw DecodeError("part index out of range: fragment corrupted");
            auto& slot = found[static_cast<std::size_t>(idx - 1)];
            if (slot.has_value()) {
                if (*slot != payload)
                    throw DecodeError("conflicting units share a part index: fragment corrupted");
            } else {
                slot = std::move(payload);
            }
        }

    std::vector<Message> parts;
    parts.reserve(static_cast<std::size_t>(partCount));
    for (auto& slot : found) {
        if (!slot.has_value())
            throw DecodeError("missing part: fragment illegal or corrupted");
        parts.push_back(std::move(*slot));
    }
    return join_message(p, parts);
}

std::pair<long long, long long> check_unit_grid_lemma(const CodeParams2D& p, long long a,
                                                      long long b) {
    if (a < p.h || b < p.h || int128(a) * b < p.M)
        throw ParamError("fragment dims are not legal for these parameters");
    long long d = p.d, m = p.m;
    int pexp = log2_exponent(m);
    auto need = [d](long long x) { return (x + 2) * d - 1; };

    long long x, y;
    if (a >= need(m)) {
        x = m;
        y = 1;
    } else if (a >= need(2)) {
        int j = 1;
        while (j + 1 < pexp && a >= need(1LL << (j + 1))) ++j;
        x = 1LL << j;
        y = 1LL << (pexp - j);
    } else {
        x = 1;
        y = m;
    }
    if (a < need(x) || b < need(y))
        throw ParamError("unit grid witness postcondition failed");
    return {x, y};
}

} // namespace fragcode
