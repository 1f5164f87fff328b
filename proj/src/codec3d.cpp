#include "fragcode/codec3d.hpp"

#include <optional>
#include <set>
#include <tuple>

#include "fragcode/discrepancy.hpp"

namespace fragcode {

namespace {

using int128 = __int128;

int log2_exponent(long long v) {
    int e = 0;
    while ((1LL << e) < v) ++e;
    return e;
}

// Feasibility product (3d-1)^2((ab+1)d+d-1) without overflow.
int128 volume_floor(long long d, int128 ab) {
    return int128(3 * d - 1) * (3 * d - 1) * (ab * d + 2 * d - 1);
}

// Smallest digit count whose capacity reaches the top 1-based index, which is
// colorCount-1; capacity q^w >= colorCount always leaves that index addressable.
long long index_width_3d(int q, long long colorCount) {
    long long w = 0;
    int128 cap = 1;
    while (cap < colorCount) {
        cap *= q;
        ++w;
    }
    return w;
}

} // namespace

std::tuple<long long, long long, long long> derive_dab_3d(int q, long long M, long long h) {
    if (q < 2 || q > 256) throw ParamError("alphabet size must be in [2, 256]");
    if (M < 1) throw ParamError("fragment volume bound must be positive");
    if (h < 2) throw ParamError("fragment side bound must be at least 2");
    long long d = (h + 1) / 3;
    if (d < 3) throw ParamError("fragment side bound too small: unit side would be below 3");
    if (int128(M) < volume_floor(d, 72))
        throw ParamError("fragment volume bound too small: dyadic exponent would be below 3");
    long long a = 8, b = 9;
    for (;;) {
        long long a2 = a * 2, b2 = b;
        while (b2 < a2) b2 *= 3;
        if (int128(M) < volume_floor(d, int128(a2) * b2)) break;
        a = a2;
        b = b2;
    }
    return {d, a, b};
}

CodeParams3D derive_params_3d(int q, long long M, long long h) {
    auto [d, a, b] = derive_dab_3d(q, M, h);
    return derive_params_3d(q, M, h, a * d, b * d);
}

CodeParams3D derive_params_3d(int q, long long M, long long h, long long n, long long nPrime) {
    auto [d, a, b] = derive_dab_3d(q, M, h);
    CodeParams3D p;
    p.q = q;
    p.M = M;
    p.h = h;
    p.d = d;
    p.a = a;
    p.b = b;
    p.c = log2_exponent(a);
    if (n < 1 || n % (a * d) != 0)
        throw ParamError("codeword x and y extent must be a multiple of a*d");
    if (nPrime < 1 || nPrime % (b * d) != 0)
        throw ParamError("codeword z extent must be a multiple of b*d");
    p.n = n;
    p.nPrime = nPrime;
    p.colorCount = (a / 8) * (b / 3);
    if (p.colorCount < 2) throw ParamError("color count must be at least 2");
    p.R = d * d * d - 8;
    p.idxWidth = index_width_3d(q, p.colorCount);
    p.k = (p.colorCount - 1) * (p.R - p.idxWidth);
    if (p.k < 1) throw ParamError("message length would be below 1");
    return p;
}

int color3d(const CodeParams3D& p, long long i, long long j, long long l) {
    long long unitsXY = p.n / p.d, unitsZ = p.nPrime / p.d;
    if (i < 0 || i >= unitsXY || j < 0 || j >= unitsXY || l < 0 || l >= unitsZ)
        throw ParamError("unit index out of range");
    long long w1 = p.a / 8, w3 = p.b / 3;
    long long ii = i % w1;
    long long base1 = bit_reverse(ii, log2_exponent(w1));
    long long d1 = (j % w1 - base1) % w1;
    if (d1 < 0) d1 += w1;
    long long base3 = (w3 * radical_inverse(ii, 3)).floor_val();
    long long d2 = (l % w3 - base3) % w3;
    if (d2 < 0) d2 += w3;
    return static_cast<int>(d1 * w3 + d2);
}

std::vector<Message> split_message3d(const CodeParams3D& p, const Message& msg) {
    return split_indexed(p.q, p.colorCount - 1, p.R, p.idxWidth, msg);
}

Message join_message3d(const CodeParams3D& p, const std::vector<Message>& parts) {
    return join_indexed(p.q, p.colorCount - 1, p.R, p.idxWidth, parts);
}

namespace {

bool is_corner3d(long long d, long long x, long long y, long long z) {
    return (x == 0 || x == d - 1) && (y == 0 || y == d - 1) && (z == 0 || z == d - 1);
}

} // namespace

BitGrid3D pack_unit3d(const CodeParams3D& p, const Message& payload) {
    long long d = p.d;
    if (d < 3) throw ParamError("unit side must be at least 3");
    if (static_cast<long long>(payload.size()) != p.R)
        throw ParamError("payload length must equal the unit capacity");
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(d * d * d), 0);
    std::size_t next = 0;
    for (long long x = 0; x < d; ++x)
        for (long long y = 0; y < d; ++y)
            for (long long z = 0; z < d; ++z) {
                std::size_t idx = static_cast<std::size_t>((x * d + y) * d + z);
                if (is_corner3d(d, x, y, z)) {
                    cells[idx] = 1;
                } else {
                    std::uint8_t s = payload[next++];
                    if (s >= p.q) throw ParamError("payload symbol exceeds alphabet");
                    cells[idx] = s;
                }
            }
    int di = static_cast<int>(d);
    return BitGrid3D(di, di, di, p.q, std::move(cells));
}

Message unpack_unit3d(const CodeParams3D& p, const BitGrid3D& unit) {
    long long d = p.d;
    if (unit.dimX() != d || unit.dimY() != d || unit.dimZ() != d || unit.q() != p.q)
        throw ParamError("unit grid has wrong shape");
    Message payload;
    payload.reserve(static_cast<std::size_t>(p.R));
    for (long long x = 0; x < d; ++x)
        for (long long y = 0; y < d; ++y)
            for (long long z = 0; z < d; ++z) {
                std::uint8_t v =
                    unit.at(static_cast<int>(x), static_cast<int>(y), static_cast<int>(z));
                if (is_corner3d(d, x, y, z)) {
                    if (v != 1) throw DecodeError("unit corner marker missing");
                } else {
                    payload.push_back(v);
                }
            }
    return payload;
}

BitGrid3D encode3d(const CodeParams3D& p, const Message& msg) {
    std::vector<Message> parts = split_message3d(p, msg);
    std::vector<BitGrid3D> packed;
    packed.reserve(parts.size());
    for (const auto& part : parts) packed.push_back(pack_unit3d(p, part));

    long long unitsXY = p.n / p.d, unitsZ = p.nPrime / p.d;
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(p.n * p.n * p.nPrime), 0);
    for (long long i = 0; i < unitsXY; ++i)
        for (long long j = 0; j < unitsXY; ++j)
            for (long long l = 0; l < unitsZ; ++l) {
                int c = color3d(p, i, j, l);
                if (c == 0) continue;
                const BitGrid3D& unit = packed[static_cast<std::size_t>(c - 1)];
                for (long long x = 0; x < p.d; ++x)
                    for (long long y = 0; y < p.d; ++y)
                        for (long long z = 0; z < p.d; ++z)
                            cells[static_cast<std::size_t>(
                                ((i * p.d + x) * p.n + j * p.d + y) * p.nPrime + l * p.d + z)] =
                                unit.at(static_cast<int>(x), static_cast<int>(y),
                                        static_cast<int>(z));
            }
    return BitGrid3D(static_cast<int>(p.n), static_cast<int>(p.n), static_cast<int>(p.nPrime),
                     p.q, std::move(cells));
}

namespace {

// Reads the 1-based part index from a payload's suffix digits.
long long part_index_3d(const CodeParams3D& p, const Message& payload) {
    if (p.idxWidth == 0) return 1;
    long long idx = 0;
    for (long long i = p.R - p.idxWidth; i < p.R; ++i)
        idx = idx * p.q + payload[static_cast<std::size_t>(i)];
    return idx;
}

// Decodes assuming the unit grid starts at residue (rx, ry, rz); empty when
// the fragment is inconsistent with that alignment.
std::optional<Message> try_alignment_3d(const CodeParams3D& p, const BitGrid3D& frag,
                                        const PrefixSum3D& sums, int rx, int ry, int rz) {
    int d = static_cast<int>(p.d);
    long long partCount = p.colorCount - 1;
    std::vector<std::optional<Message>> found(static_cast<std::size_t>(partCount));
    for (int x = rx; x + d <= frag.dimX(); x += d)
        for (int y = ry; y + d <= frag.dimY(); y += d)
            for (int z = rz; z + d <= frag.dimZ(); z += d) {
                if (sums.window_weight(x, y, z, d, d, d) == 0) continue;
                Message payload;
                try {
                    payload = unpack_unit3d(p, crop3d(frag, x, y, z, d, d, d));
                } catch (const DecodeError&) {
                    return std::nullopt;
                }
                long long idx = part_index_3d(p, payload);
                if (idx < 1 || idx > partCount) return std::nullopt;
                auto& slot = found[static_cast<std::size_t>(idx - 1)];
                if (slot.has_value()) {
                    if (*slot != payload) return std::nullopt;
                } else {
                    slot = std::move(payload);
                }
            }
    std::vector<Message> parts;
    parts.reserve(static_cast<std::size_t>(partCount));
    for (auto& slot : found) {
        if (!slot.has_value()) return std::nullopt;
        parts.push_back(std::move(*slot));
    }
    return join_message3d(p, parts);
}

} // namespace

Message decode3d(const CodeParams3D& p, const BitGrid3D& frag) {
    if (frag.q() != p.q) throw ParamError("fragment alphabet does not match the code");
    long long sx = frag.dimX(), sy = frag.dimY(), sz = frag.dimZ();
    if (sx < p.h || sy < p.h || sz < p.h || int128(sx) * sy * sz < p.M)
        throw DecodeError("fragment is not legal for these parameters");

    int d = static_cast<int>(p.d);
    PrefixSum3D sums(frag);
    std::set<std::tuple<int, int, int>> residues;
    for (int x = 0; x + d <= sx; ++x)
        for (int y = 0; y + d <= sy; ++y)
            for (int z = 0; z + d <= sz; ++z)
                if (sums.window_weight(x, y, z, d, d, d) == 0)
                    residues.insert({x % d, y % d, z % d});
    if (residues.empty()) throw DecodeError("no all-zero cube: fragment illegal or corrupted");

    for (const auto& [rx, ry, rz] : residues) {
        auto msg = try_alignment_3d(p, frag, sums, rx, ry, rz);
        if (msg.has_value()) return *msg;
    }
    throw DecodeError("no alignment yields a consistent set of parts");
}

std::tuple<long long, long long, long long> check_unit_grid_lemma_3d(const CodeParams3D& p,
                                                                     long long alpha,
                                                                     long long beta,
                                                                     long long gamma) {
    if (alpha < p.h || beta < p.h || gamma < p.h || int128(alpha) * beta * gamma < p.M)
        throw ParamError("fragment dims are not legal for these parameters");
    long long d = p.d, ab = p.a * p.b;
    auto need = [d](long long v) { return (v + 2) * d - 1; };
    for (long long x = 1; x <= ab; ++x) {
        if (ab % x != 0 || need(x) > alpha) continue;
        long long rest = ab / x;
        for (long long y = 1; y <= rest; ++y) {
            if (rest % y != 0 || need(y) > beta) continue;
            long long z = rest / y;
            if (need(z) <= gamma) return {x, y, z};
        }
    }
    throw DecodeError("no unit grid witness for these dimensions");
}

} // namespace fragcode
