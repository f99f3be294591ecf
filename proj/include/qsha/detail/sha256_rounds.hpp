#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "qsha/sha256.hpp"

namespace qsha::sha256::detail {

inline constexpr std::array<Word32, 64> kRoundConstants = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
    0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
    0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
    0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
    0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
    0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
    0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
    0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
    0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
    0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
    0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2,
};

// The 64-round cipher with every word-level XOR routed through `x`. The
// classical path instantiates with the native operator; the hybrid
// orchestrator instantiates with its windowed backend delegate. Rotations,
// AND/NOT logic and modular additions stay native.
template <class Xor>
std::array<Word32, 8> encrypt_rounds(const HashState& plaintext, const MessageBlock& key_block,
                                     Xor&& x) {
    const auto rotr = [](Word32 v, int n) { return std::rotr(v, n); };

    std::array<Word32, 64> w{};
    for (int t = 0; t < 16; ++t) {
        w[t] = (Word32(key_block.bytes[4 * t]) << 24) | (Word32(key_block.bytes[4 * t + 1]) << 16) |
               (Word32(key_block.bytes[4 * t + 2]) << 8) | Word32(key_block.bytes[4 * t + 3]);
    }
    for (int t = 16; t < 64; ++t) {
        const Word32 s0 = x(x(rotr(w[t - 15], 7), rotr(w[t - 15], 18)), w[t - 15] >> 3);
        const Word32 s1 = x(x(rotr(w[t - 2], 17), rotr(w[t - 2], 19)), w[t - 2] >> 10);
        w[t] = s1 + w[t - 7] + s0 + w[t - 16];
    }

    Word32 a = plaintext.words[0], b = plaintext.words[1], c = plaintext.words[2],
           d = plaintext.words[3], e = plaintext.words[4], f = plaintext.words[5],
           g = plaintext.words[6], h = plaintext.words[7];

    for (int t = 0; t < 64; ++t) {
        const Word32 big_s1 = x(x(rotr(e, 6), rotr(e, 11)), rotr(e, 25));
        const Word32 ch = x(e & f, ~e & g);
        const Word32 t1 = h + big_s1 + ch + kRoundConstants[t] + w[t];
        const Word32 big_s0 = x(x(rotr(a, 2), rotr(a, 13)), rotr(a, 22));
        const Word32 maj = x(x(a & b, a & c), b & c);
        const Word32 t2 = big_s0 + maj;
        h = g;
        g = f;
        f = e;
        e = d + t1;
        d = c;
        c = b;
        b = a;
        a = t1 + t2;
    }

    return {a, b, c, d, e, f, g, h};
}

} // namespace qsha::sha256::detail
