#include "qsha/sha256.hpp"

#include <bit>
#include <cstring>

#include "qsha/detail/sha256_rounds.hpp"
#include "qsha/errors.hpp"

namespace qsha::sha256 {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

} // namespace

std::string Digest::hex() const {
    std::string out(64, '0');
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        out[2 * i] = kHexDigits[bytes[i] >> 4];
        out[2 * i + 1] = kHexDigits[bytes[i] & 0xf];
    }
    return out;
}

Digest Digest::from_hex(std::string_view hex) {
    if (hex.size() != 64) {
        throw parse_error("digest hex must be exactly 64 digits, got " +
                          std::to_string(hex.size()));
    }
    Digest d;
    for (std::size_t i = 0; i < d.bytes.size(); ++i) {
        const int hi = hex_nibble(hex[2 * i]);
        const int lo = hex_nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) {
            throw parse_error("invalid hex digit in digest at position " + std::to_string(2 * i));
        }
        d.bytes[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return d;
}

HashState initial_state() {
    return HashState{{0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a, 0x510e527f, 0x9b05688c,
                      0x1f83d9ab, 0x5be0cd19}};
}

std::vector<MessageBlock> pad_message(std::span<const std::uint8_t> message) {
    if (message.size() >= (1ull << 61)) {
        throw contract_violation("message too long: bit length must fit 64 bits");
    }
    const std::uint64_t bit_len = static_cast<std::uint64_t>(message.size()) * 8;
    const std::size_t total = ((message.size() + 8) / 64 + 1) * 64;

    std::vector<MessageBlock> blocks(total / 64);
    for (std::size_t i = 0; i < message.size(); ++i) {
        blocks[i / 64].bytes[i % 64] = message[i];
    }
    blocks[message.size() / 64].bytes[message.size() % 64] = 0x80;
    for (int i = 0; i < 8; ++i) {
        blocks.back().bytes[56 + i] = static_cast<std::uint8_t>(bit_len >> (56 - 8 * i));
    }
    return blocks;
}

std::array<Word32, 8> encrypt(const HashState& plaintext, const MessageBlock& key_block) {
    return detail::encrypt_rounds(plaintext, key_block,
                                  [](Word32 a, Word32 b) { return a ^ b; });
}

HashState compress(const HashState& prev, const MessageBlock& block) {
    const auto enc = encrypt(prev, block);
    HashState next;
    for (int i = 0; i < 8; ++i) {
        next.words[i] = prev.words[i] + enc[i];
    }
    return next;
}

Digest to_digest(const HashState& state) {
    Digest d;
    for (int i = 0; i < 8; ++i) {
        d.bytes[4 * i] = static_cast<std::uint8_t>(state.words[i] >> 24);
        d.bytes[4 * i + 1] = static_cast<std::uint8_t>(state.words[i] >> 16);
        d.bytes[4 * i + 2] = static_cast<std::uint8_t>(state.words[i] >> 8);
        d.bytes[4 * i + 3] = static_cast<std::uint8_t>(state.words[i]);
    }
    return d;
}

Digest hash(std::span<const std::uint8_t> message) {
    HashState state = initial_state();
    for (const MessageBlock& block : pad_message(message)) {
        state = compress(state, block);
    }
    return to_digest(state);
}

Digest hash(std::string_view message) { return hash(as_bytes(message)); }

int leading_zero_bits(const Digest& digest) {
    int bits = 0;
    for (std::uint8_t byte : digest.bytes) {
        if (byte == 0) {
            bits += 8;
            continue;
        }
        bits += std::countl_zero(byte);
        break;
    }
    return bits;
}

int hamming_distance(const Digest& a, const Digest& b) {
    int bits = 0;
    for (std::size_t i = 0; i < a.bytes.size(); ++i) {
        bits += std::popcount(static_cast<unsigned>(a.bytes[i] ^ b.bytes[i]));
    }
    return bits;
}

} // namespace qsha::sha256
