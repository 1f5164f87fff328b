#pragma once
#include <memory>
#include <utility>
#include <vector>

#include "fragcode/codec2d.hpp"
#include "fragcode/grid.hpp"
#include "fragcode/message.hpp"

namespace fragcode {

// Bit-flip resilient variant over the 2D code (q == 2 only).
//   Q = mPrime-1 slices, L = d^2-(4d-4) payload bits per slice, K = delta.
//   Alignment safety requires 2*delta < d.
struct RobustParams {
    CodeParams2D base;
    long long delta = 0;
    long long Q = 0, L = 0, K = 0;
    long long k = 0;  // message length of the shipped sliced codec
};

struct SlicedCodecInfo {
    long long Q = 0, L = 0, K = 0, k = 0;
};

// Encodes a message into an unordered set of Q distinct length-L binary strings
// and decodes it back from any version corrupted by at most K substitutions in
// total across the strings.
class SlicedCodec {
public:
    virtual ~SlicedCodec() = default;
    virtual SlicedCodecInfo info() const = 0;
    virtual std::vector<Message> encode(const Message& msg) const = 0;
    virtual Message decode(const std::vector<Message>& slices) const = 0;
};

// Reference implementation: each slice carries its index with every index bit
// repeated 2K+1 times, followed by a share of the message bits, each also
// repeated 2K+1 times (repetitions may straddle slice boundaries); decoding is
// majority vote per repeated group. k = floor(Q*(L - idxWidth*(2K+1))/(2K+1)).
class RepetitionSlicedCodec : public SlicedCodec {
public:
    RepetitionSlicedCodec(long long Q, long long L, long long K);

    SlicedCodecInfo info() const override;
    std::vector<Message> encode(const Message& msg) const override;
    Message decode(const std::vector<Message>& slices) const override;

private:
    long long m_Q, m_L, m_K, m_idxWidth, m_k;
};

// Checks q == 2, 2*delta < d, L > 0 and the shipped codec's feasibility.
RobustParams validate_params_robust(const CodeParams2D& base, long long delta);

// Real-valued feasibility predicate of the optimal-codec interface profile:
// L' = 3*log2(Q) + 4K^2 + 2 and L' + 4K*L' + 2K*log2(4K*L') <= L.
bool optimal_profile_feasible(long long Q, long long L, long long K);

// Convenience wrappers over the shipped codec.
std::vector<Message> ref_encode(const RobustParams& p, const Message& msg);
Message ref_decode(const RobustParams& p, const std::vector<Message>& slices);

// Units of color 1..Q carry the lexicographically sorted slices, each packed
// with a full 1-border and the slice bits row-major in the interior; color-0
// units are all-zero.
BitGrid2D encode_robust(const RobustParams& p, const Message& msg);

// Minimum-Hamming-weight d x d window, lexicographic tie-break. Under at most
// delta flips with 2*delta < d this aligns with a color-0 unit.
std::pair<int, int> find_min_weight_square(const BitGrid2D& frag, int d);

Message decode_robust(const RobustParams& p, const BitGrid2D& frag);

} // namespace fragcode
