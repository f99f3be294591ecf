#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsha::sha256 {

using Word32 = std::uint32_t;

// The eight chained 32-bit words H_0..H_7.
struct HashState {
    std::array<Word32, 8> words{};
    bool operator==(const HashState&) const = default;
};

// One padded 512-bit message block.
struct MessageBlock {
    std::array<std::uint8_t, 64> bytes{};
    bool operator==(const MessageBlock&) const = default;
};

struct Digest {
    std::array<std::uint8_t, 32> bytes{};

    std::string hex() const; // 64 lowercase hex digits
    static Digest from_hex(std::string_view hex);

    bool operator==(const Digest&) const = default;
};

// Initial chaining value (first 32 bits of the fractional parts of the
// square roots of the first eight primes).
HashState initial_state();

// Appends the 0x80 marker, zero padding and the 64-bit big-endian bit
// length. Output is one block per 64 bytes. Messages of 2^61 bytes or more
// are rejected.
std::vector<MessageBlock> pad_message(std::span<const std::uint8_t> message);

// The 64-round block cipher E keyed by the block's message schedule: the
// working registers a..h after the last round, before any feed-forward.
std::array<Word32, 8> encrypt(const HashState& plaintext, const MessageBlock& key_block);

// One Davies-Meyer step: encrypt() then word-wise addition modulo 2^32 of
// the incoming state.
HashState compress(const HashState& prev, const MessageBlock& block);

// Big-endian word serialization of a chaining state.
Digest to_digest(const HashState& state);

Digest hash(std::span<const std::uint8_t> message);
Digest hash(std::string_view message); // the text's bytes, no terminator

// Number of leading zero bits, scanning from the first byte's MSB.
int leading_zero_bits(const Digest& digest);

// Bits set in a XOR b, summed over all 256 digest bits.
int hamming_distance(const Digest& a, const Digest& b);

inline std::span<const std::uint8_t> as_bytes(std::string_view text) {
    return {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()};
}

} // namespace qsha::sha256
