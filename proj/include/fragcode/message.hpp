#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "fragcode/errors.hpp"

namespace fragcode {

// Message symbols over [0, q).
using Message = std::vector<std::uint8_t>;

// Hex form carries an explicit length field: "<len>:<hexdigits>".
// q == 2 packs 4 symbols per digit MSB-first; 2 < q <= 16 uses one digit per symbol.
std::string msg_to_hex(int q, const Message& symbols);
Message msg_from_hex(int q, const std::string& text);

// Splits msg into `parts` segments of length partLen - idxWidth each and appends the
// 1-based part index as idxWidth base-q digits, most significant first. Invertible;
// outputs are pairwise distinct (via the index suffix) for parts >= 2.
std::vector<Message> split_indexed(int q, long long parts, long long partLen,
                                   long long idxWidth, const Message& msg);

// Inverse of split_indexed; accepts the parts in any order.
Message join_indexed(int q, long long parts, long long partLen, long long idxWidth,
                     const std::vector<Message>& pieces);

} // namespace fragcode
