#include "fragcode/message.hpp"

#include <algorithm>
#include <charconv>

namespace fragcode {

namespace {

int hex_digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw FormatError("invalid hex digit");
}

char hex_digit_char(int v) { return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10); }

void check_q(int q) {
    if (q < 2 || q > 16) throw FormatError("hex message form supports alphabets up to 16");
}

} // namespace

std::string msg_to_hex(int q, const Message& symbols) {
    check_q(q);
    for (auto s : symbols)
        if (s >= q) throw FormatError("symbol exceeds alphabet");
    std::string out = std::to_string(symbols.size()) + ":";
    if (q == 2) {
        for (std::size_t i = 0; i < symbols.size(); i += 4) {
            int v = 0;
            for (std::size_t j = 0; j < 4; ++j)
                v = (v << 1) | (i + j < symbols.size() ? symbols[i + j] : 0);
            out += hex_digit_char(v);
        }
    } else {
        for (auto s : symbols) out += hex_digit_char(s);
    }
    return out;
}

Message msg_from_hex(int q, const std::string& text) {
    check_q(q);
    auto colon = text.find(':');
    if (colon == std::string::npos) throw FormatError("missing length field");
    std::size_t len = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + colon, len);
    if (ec != std::errc() || ptr != text.data() + colon)
        throw FormatError("invalid length field");
    std::string digits = text.substr(colon + 1);
    Message out;
    out.reserve(len);
    if (q == 2) {
        if (digits.size() != (len + 3) / 4) throw FormatError("digit count does not match length");
        for (std::size_t i = 0; i < len; ++i) {
            int v = hex_digit_value(digits[i / 4]);
            out.push_back(static_cast<std::uint8_t>((v >> (3 - i % 4)) & 1));
        }
        // padding bits past the message must be zero
        for (std::size_t i = len; i < digits.size() * 4; ++i)
            if ((hex_digit_value(digits[i / 4]) >> (3 - i % 4)) & 1)
                throw FormatError("nonzero padding bits");
    } else {
        if (digits.size() != len) throw FormatError("digit count does not match length");
        for (char c : digits) {
            int v = hex_digit_value(c);
            if (v >= q) throw FormatError("symbol exceeds alphabet");
            out.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return out;
}

std::vector<Message> split_indexed(int q, long long parts, long long partLen,
                                   long long idxWidth, const Message& msg) {
    if (q < 2) throw ParamError("alphabet size must be at least 2");
    if (parts < 1 || partLen < 0 || idxWidth < 0 || idxWidth > partLen)
        throw ParamError("invalid split geometry");
    long long segLen = partLen - idxWidth;
    if (static_cast<long long>(msg.size()) != parts * segLen)
        throw ParamError("message length does not match parts * segment length");
    // idxWidth base-q digits must address every 1-based index up to `parts`;
    // a single part may omit the index entirely.
    long long capacity = 1;
    for (long long i = 0; i < idxWidth && capacity <= parts; ++i) capacity *= q;
    bool singleUnindexed = parts == 1 && idxWidth == 0;
    if (!singleUnindexed && capacity <= parts)
        throw ParamError("index width cannot address all parts");
    std::vector<Message> out;
    out.reserve(static_cast<std::size_t>(parts));
    for (long long p = 0; p < parts; ++p) {
        Message part(msg.begin() + static_cast<std::ptrdiff_t>(p * segLen),
                     msg.begin() + static_cast<std::ptrdiff_t>((p + 1) * segLen));
        long long index = p + 1;
        Message suffix(static_cast<std::size_t>(idxWidth), 0);
        for (long long i = idxWidth - 1; i >= 0; --i) {
            suffix[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(index % q);
            index /= q;
        }
        if (!singleUnindexed && index != 0)
            throw ParamError("index width cannot address all parts");
        part.insert(part.end(), suffix.begin(), suffix.end());
        out.push_back(std::move(part));
    }
    return out;
}

Message join_indexed(int q, long long parts, long long partLen, long long idxWidth,
                     const std::vector<Message>& pieces) {
    if (q < 2) throw ParamError("alphabet size must be at least 2");
    if (parts < 1 || partLen < 0 || idxWidth < 0 || idxWidth > partLen)
        throw ParamError("invalid split geometry");
    if (static_cast<long long>(pieces.size()) != parts)
        throw ParamError("wrong number of parts");
    long long segLen = partLen - idxWidth;
    std::vector<const Message*> byIndex(static_cast<std::size_t>(parts), nullptr);
    for (const auto& piece : pieces) {
        if (static_cast<long long>(piece.size()) != partLen)
            throw ParamError("part has wrong length");
        long long index = 0;
        for (long long i = 0; i < idxWidth; ++i) {
            std::uint8_t digit = piece[static_cast<std::size_t>(segLen + i)];
            if (digit >= q) throw ParamError("index digit exceeds alphabet");
            index = index * q + digit;
        }
        if (idxWidth == 0) index = 1;  // single unindexed part
        if (index < 1 || index > parts) throw ParamError("part index out of range");
        if (byIndex[static_cast<std::size_t>(index - 1)] != nullptr)
            throw ParamError("duplicate part index");
        byIndex[static_cast<std::size_t>(index - 1)] = &piece;
    }
    Message msg;
    msg.reserve(static_cast<std::size_t>(parts * segLen));
    for (const Message* piece : byIndex) {
        if (piece == nullptr) throw ParamError("missing part index");
        msg.insert(msg.end(), piece->begin(), piece->begin() + static_cast<std::ptrdiff_t>(segLen));
    }
    return msg;
}

} // namespace fragcode
