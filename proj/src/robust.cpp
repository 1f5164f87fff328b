#include "fragcode/robust.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace fragcode {

namespace {

// ceil(log2(max(Q, 2))): bits needed for the 0-based slice indices.
long long sliced_index_width(long long Q) {
    long long target = std::max<long long>(Q, 2);
    long long w = 0, cap = 1;
    while (cap < target) {
        cap *= 2;
        ++w;
    }
    return w;
}

long long majority(const Message& bits, std::size_t start, long long rep) {
    long long ones = 0;
    for (long long r = 0; r < rep; ++r) ones += bits[start + static_cast<std::size_t>(r)];
    return ones > rep / 2 ? 1 : 0;
}

} // namespace

RepetitionSlicedCodec::RepetitionSlicedCodec(long long Q, long long L, long long K)
    : m_Q(Q), m_L(L), m_K(K) {
    if (Q < 1) throw ParamError("slice count must be at least 1");
    if (L < 1) throw ParamError("slice length must be at least 1");
    if (K < 0) throw ParamError("substitution budget must be nonnegative");
    m_idxWidth = sliced_index_width(Q);
    long long rep = 2 * K + 1;
    if (m_idxWidth * rep >= L) throw ParamError("slice too short for the repeated index prefix");
    m_k = Q * (L - m_idxWidth * rep) / rep;
    if (m_k < 1) throw ParamError("message length would be below 1");
}

SlicedCodecInfo RepetitionSlicedCodec::info() const { return {m_Q, m_L, m_K, m_k}; }

std::vector<Message> RepetitionSlicedCodec::encode(const Message& msg) const {
    if (static_cast<long long>(msg.size()) != m_k)
        throw ParamError("message length does not match the codec capacity");
    for (auto b : msg)
        if (b > 1) throw ParamError("message symbol exceeds alphabet");

    long long rep = 2 * m_K + 1;
    long long payLen = m_L - m_idxWidth * rep;
    Message stream(static_cast<std::size_t>(m_Q * payLen), 0);
    for (long long i = 0; i < m_k; ++i)
        for (long long r = 0; r < rep; ++r)
            stream[static_cast<std::size_t>(i * rep + r)] = msg[static_cast<std::size_t>(i)];

    std::vector<Message> slices;
    slices.reserve(static_cast<std::size_t>(m_Q));
    for (long long s = 0; s < m_Q; ++s) {
        Message slice(static_cast<std::size_t>(m_L), 0);
        for (long long t = 0; t < m_idxWidth; ++t) {
            std::uint8_t bit = static_cast<std::uint8_t>((s >> (m_idxWidth - 1 - t)) & 1);
            for (long long r = 0; r < rep; ++r)
                slice[static_cast<std::size_t>(t * rep + r)] = bit;
        }
        for (long long i = 0; i < payLen; ++i)
            slice[static_cast<std::size_t>(m_idxWidth * rep + i)] =
                stream[static_cast<std::size_t>(s * payLen + i)];
        slices.push_back(std::move(slice));
    }
    return slices;
}

Message RepetitionSlicedCodec::decode(const std::vector<Message>& slices) const {
    if (static_cast<long long>(slices.size()) != m_Q)
        throw ParamError("slice count does not match the codec");
    for (const auto& s : slices) {
        if (static_cast<long long>(s.size()) != m_L)
            throw ParamError("slice length does not match the codec");
        for (auto b : s)
            if (b > 1) throw ParamError("slice symbol exceeds alphabet");
    }

    long long rep = 2 * m_K + 1;
    std::vector<const Message*> byIndex(static_cast<std::size_t>(m_Q), nullptr);
    for (const auto& s : slices) {
        long long idx = 0;
        for (long long t = 0; t < m_idxWidth; ++t)
            idx = idx * 2 + majority(s, static_cast<std::size_t>(t * rep), rep);
        if (idx < 0 || idx >= m_Q)
            throw DecodeError("corruption exceeds budget: slice index out of range");
        auto& slot = byIndex[static_cast<std::size_t>(idx)];
        if (slot != nullptr)
            throw DecodeError("corruption exceeds budget: two slices share an index");
        slot = &s;
    }

    long long payLen = m_L - m_idxWidth * rep;
    Message stream;
    stream.reserve(static_cast<std::size_t>(m_Q * payLen));
    for (const Message* s : byIndex)
        stream.insert(stream.end(), s->begin() + static_cast<std::ptrdiff_t>(m_idxWidth * rep),
                      s->end());

    Message msg(static_cast<std::size_t>(m_k));
    for (long long i = 0; i < m_k; ++i)
        msg[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(majority(stream, static_cast<std::size_t>(i * rep), rep));
    return msg;
}

RobustParams validate_params_robust(const CodeParams2D& base, long long delta) {
    if (base.q != 2) throw ParamError("flip resilience requires a binary alphabet");
    if (delta < 0) throw ParamError("flip budget must be nonnegative");
    if (2 * delta >= base.d)
        throw ParamError("flip budget too large: alignment needs 2*delta < d");
    RobustParams p;
    p.base = base;
    p.delta = delta;
    p.Q = base.mPrime - 1;
    p.L = base.d * base.d - (4 * base.d - 4);
    p.K = delta;
    p.k = RepetitionSlicedCodec(p.Q, p.L, p.K).info().k;
    return p;
}

bool optimal_profile_feasible(long long Q, long long L, long long K) {
    if (Q < 1 || L < 1 || K < 0) throw ParamError("profile arguments out of range");
    double lp = 3.0 * std::log2(static_cast<double>(Q)) + 4.0 * K * K + 2.0;
    double total = lp + 4.0 * K * lp;
    if (K > 0) total += 2.0 * K * std::log2(4.0 * K * lp);
    return total <= static_cast<double>(L);
}

std::vector<Message> ref_encode(const RobustParams& p, const Message& msg) {
    return RepetitionSlicedCodec(p.Q, p.L, p.K).encode(msg);
}

Message ref_decode(const RobustParams& p, const std::vector<Message>& slices) {
    return RepetitionSlicedCodec(p.Q, p.L, p.K).decode(slices);
}

namespace {

// d x d unit: full 1-border, slice bits row-major in the interior.
BitGrid2D pack_bordered(long long d, int q, const Message& slice) {
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(d * d), 1);
    std::size_t next = 0;
    for (long long r = 1; r < d - 1; ++r)
        for (long long c = 1; c < d - 1; ++c) cells[static_cast<std::size_t>(r * d + c)] = slice[next++];
    return BitGrid2D(static_cast<int>(d), static_cast<int>(d), q, std::move(cells));
}

} // namespace

BitGrid2D encode_robust(const RobustParams& p, const Message& msg) {
    std::vector<Message> slices = ref_encode(p, msg);
    std::sort(slices.begin(), slices.end());

    std::vector<BitGrid2D> packed;
    packed.reserve(slices.size());
    for (const auto& s : slices) packed.push_back(pack_bordered(p.base.d, p.base.q, s));

    long long d = p.base.d, n = p.base.n;
    long long units = n / d;
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(n * n), 0);
    for (long long i = 0; i < units; ++i)
        for (long long j = 0; j < units; ++j) {
            int c = color(p.base, i, j);
            if (c == 0) continue;
            const BitGrid2D& unit = packed[static_cast<std::size_t>(c - 1)];
            for (long long r = 0; r < d; ++r)
                for (long long col = 0; col < d; ++col)
                    cells[static_cast<std::size_t>((i * d + r) * n + j * d + col)] =
                        unit.at(static_cast<int>(r), static_cast<int>(col));
        }
    return BitGrid2D(static_cast<int>(n), static_cast<int>(n), p.base.q, std::move(cells));
}

std::pair<int, int> find_min_weight_square(const BitGrid2D& frag, int d) {
    if (d < 1) throw ParamError("window side must be positive");
    if (frag.rows() < d || frag.cols() < d)
        throw DecodeError("fragment smaller than the scan window");
    PrefixSum2D sums(frag);
    long long best = std::numeric_limits<long long>::max();
    int bestTop = 0, bestLeft = 0;
    for (int top = 0; top + d <= frag.rows(); ++top)
        for (int left = 0; left + d <= frag.cols(); ++left) {
            long long w = sums.window_weight(top, left, d, d);
            if (w < best) {
                best = w;
                bestTop = top;
                bestLeft = left;
            }
        }
    return {bestTop, bestLeft};
}

Message decode_robust(const RobustParams& p, const BitGrid2D& frag) {
    if (frag.q() != p.base.q) throw ParamError("fragment alphabet does not match the code");
    long long rows = frag.rows(), cols = frag.cols();
    if (rows < p.base.h || cols < p.base.h || rows * cols < p.base.M)
        throw DecodeError("fragment is not legal for these parameters");

    int d = static_cast<int>(p.base.d);
    auto [mt, ml] = find_min_weight_square(frag, d);
    int offR = mt % d, offC = ml % d;

    long long idxWidth = sliced_index_width(p.Q), rep = 2 * p.K + 1;
    PrefixSum2D sums(frag);
    std::vector<std::optional<Message>> bySlice(static_cast<std::size_t>(p.Q));
    for (int top = offR; top + d <= rows; top += d)
        for (int left = offC; left + d <= cols; left += d) {
            // at most delta flips anywhere keep zero-class and info units apart
            if (sums.window_weight(top, left, d, d) <= 2LL * d - 2) continue;
            Message interior;
            interior.reserve(static_cast<std::size_t>(p.L));
            for (int r = 1; r < d - 1; ++r)
                for (int c = 1; c < d - 1; ++c) interior.push_back(frag.at(top + r, left + c));
            long long idx = 0;
            for (long long t = 0; t < idxWidth; ++t)
                idx = idx * 2 + majority(interior, static_cast<std::size_t>(t * rep), rep);
            if (idx < 0 || idx >= p.Q) continue;
            auto& slot = bySlice[static_cast<std::size_t>(idx)];
            if (!slot.has_value()) slot = std::move(interior);
        }

    std::vector<Message> slices;
    slices.reserve(static_cast<std::size_t>(p.Q));
    for (auto& slot : bySlice) {
        if (!slot.has_value())
            throw DecodeError("illegal fragment: fewer slice indices than slices");
        slices.push_back(std::move(*slot));
    }
    return ref_decode(p, slices);
}

} // namespace fragcode
